"""Subconstituent (Terwilliger) algebra contexts and their identity checks.

A TerwContext fixes a distance-regular graph and a base vertex x and holds
exact matrices for everything the algebra is built from: distance matrices
A_i, primitive idempotents E_i, dual idempotents E_i* (0/1 diagonal
indicators of the distance spheres around x), and dual distance matrices
A_i* with (A_i*)_yy = |X| (E_i)_{x,y}.  All defining identities are verified
exactly at construction; the check_* functions re-run them (and more) as
named checks for reporting.

The hypercube fast path builds E_i from the self-dual eigenmatrix formula
E_i = |X|^(-1) sum_j q_i(j) A_j; the general path builds spectral projectors
prod_{j != i} (A - theta_j I) / (theta_i - theta_j) and requires all
adjacency eigenvalues to be rational (they are then integers).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from ._intops import exact_matmul, exact_mul_elementwise
from .checks import Check
from .closure import AlgebraBasis, closure
from .echelon import EchelonSpan
from .graphs import DistanceData, Graph, distance_matrix, hypercube, is_distance_regular
from .hypercube import HypercubeParams, permissible
from .linalg import RationalMatrix, inverse, min_poly, poly_eval_matrix
from .polys import RationalPoly


class VerificationError(Exception):
    """An exact identity that must hold failed to hold."""


@dataclass(frozen=True)
class TerwContext:
    """All exact matrices attached to one (graph, base vertex) pair."""

    graph: Graph
    dist: DistanceData
    x: int
    d: int
    n: int
    is_hypercube: bool
    A: RationalMatrix
    A_dist: tuple[RationalMatrix, ...]
    E: tuple[RationalMatrix, ...]
    E_star: tuple[RationalMatrix, ...]
    A_star: tuple[RationalMatrix, ...]
    valencies: tuple[int, ...]
    dual_valencies: tuple[int, ...]
    theta: tuple[Fraction, ...]
    theta_star: tuple[Fraction, ...]
    P: tuple[tuple[Fraction, ...], ...]
    Q: tuple[tuple[Fraction, ...], ...]
    p_table: np.ndarray
    krein: tuple[tuple[tuple[Fraction, ...], ...], ...]
    spheres: tuple[np.ndarray, ...]
    params: HypercubeParams | None

    @property
    def dual_adjacency(self) -> RationalMatrix:
        """A* = A_1*, or the zero matrix in the degenerate diameter-0 case."""
        if self.d >= 1:
            return self.A_star[1]
        return RationalMatrix.zeros(self.n, self.n)

    def generators(self) -> list[RationalMatrix]:
        """The algebra generators: adjacency and dual adjacency."""
        return [self.A, self.dual_adjacency]

    def algebra_basis(self) -> AlgebraBasis:
        return closure(self.generators())

    def distance_or_zero(self, i: int) -> RationalMatrix:
        if 0 <= i <= self.d:
            return self.A_dist[i]
        return RationalMatrix.zeros(self.n, self.n)


def _distance_profile(m: RationalMatrix, dist: np.ndarray, diameter: int):
    """Value of a distance-class-constant matrix on each class.

    Raises:
        VerificationError: if the matrix is not constant on some class.
    """
    prof = []
    for a in range(diameter + 1):
        vals = m.num[dist == a]
        first = int(vals[0])
        if not bool((vals == first).all()):
            raise VerificationError(f"matrix not constant on distance class {a}")
        prof.append(Fraction(first, m.den))
    return prof


def _compute_krein(E: Sequence[RationalMatrix], dist: np.ndarray, d: int):
    """Solve E_i o E_j = |X|^(-1) sum_h krein[h][i][j] E_h exactly."""
    n = E[0].nrows
    prof_E = [_distance_profile(E[h], dist, d) for h in range(d + 1)]
    # System matrix: column h is E_h's distance profile.
    sys_rows = [[prof_E[h][a] for h in range(d + 1)] for a in range(d + 1)]
    inv_sys = inverse(RationalMatrix.from_rows(sys_rows))
    krein = [[[Fraction(0)] * (d + 1) for _ in range(d + 1)] for _ in range(d + 1)]
    for i in range(d + 1):
        for j in range(d + 1):
            had = E[i].hadamard(E[j])
            prof = _distance_profile(had, dist, d)
            rhs = RationalMatrix.from_rows([[v] for v in prof])
            coeffs = inv_sys @ rhs
            for h in range(d + 1):
                krein[h][i][j] = coeffs[h, 0] * n
    return tuple(tuple(tuple(row) for row in layer) for layer in krein)


def _verify_construction(ctx: TerwContext):
    """Exact checks of every defining identity; raises on failure."""
    failures = [c for c in check_section_identities(ctx) if not c.passed]
    if failures:
        raise VerificationError(
            "construction identities failed: "
            + "; ".join(f"{c.name} ({c.witness})" for c in failures)
        )


def _assemble(
    graph: Graph,
    dd: DistanceData,
    x: int,
    E: list[RationalMatrix],
    P: list[list[Fraction]],
    Q: list[list[Fraction]],
    p_table: np.ndarray,
    params: HypercubeParams | None,
    is_cube: bool,
) -> TerwContext:
    d = dd.diameter
    n = graph.n
    A_dist = tuple(distance_matrix(graph, dd, i) for i in range(d + 1))
    A = A_dist[1] if d >= 1 else RationalMatrix.zeros(n, n)
    spheres = tuple(np.nonzero(dd.dist[x] == i)[0] for i in range(d + 1))

    E_star = []
    for i in range(d + 1):
        diag = (dd.dist[x] == i).astype(np.int64)
        E_star.append(RationalMatrix(np.diag(diag), 1, _canonical=True))

    A_star = []
    for i in range(d + 1):
        # (A_i*)_yy = |X| (E_i)_{x,y}, taken from the actual E_i row.
        row = E[i].num[x]
        diag_vals = [Fraction(int(v) * n, E[i].den) for v in row]
        A_star.append(RationalMatrix.diagonal(diag_vals))

    valencies = tuple(int(len(s)) for s in spheres)
    dual_valencies = []
    for i in range(d + 1):
        t = E[i].trace()
        if t.denominator != 1:
            raise VerificationError(f"rank of idempotent E_{i} is not an integer: {t}")
        dual_valencies.append(int(t))

    theta = tuple(P[i][1] if d >= 1 else Fraction(0) for i in range(d + 1))
    theta_star = tuple(Q[i][1] if d >= 1 else Fraction(0) for i in range(d + 1))

    krein = _compute_krein(E, dd.dist, d)

    ctx = TerwContext(
        graph=graph,
        dist=dd,
        x=x,
        d=d,
        n=n,
        is_hypercube=is_cube,
        A=A,
        A_dist=A_dist,
        E=tuple(E),
        E_star=tuple(E_star),
        A_star=tuple(A_star),
        valencies=valencies,
        dual_valencies=tuple(dual_valencies),
        theta=theta,
        theta_star=theta_star,
        P=tuple(tuple(row) for row in P),
        Q=tuple(tuple(row) for row in Q),
        p_table=p_table,
        krein=krein,
        spheres=spheres,
        params=params,
    )
    _verify_construction(ctx)
    return ctx


def build_hypercube_context(d: int, x: int = 0) -> TerwContext:
    """Context for the d-dimensional hypercube with base vertex x."""
    g = hypercube(d)
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range for {g.n} vertices")
    dd = DistanceData.compute(g)
    params = HypercubeParams.build(d)
    n = g.n
    A_dist_num = [(dd.dist == i).astype(np.int64) for i in range(d + 1)]

    # Self-dual eigenmatrix formula: E_i = |X|^(-1) sum_j q_i(j) A_j with
    # q_i(j) = p_i(j) = P[j][i], which is an integer for hypercubes.
    P = [list(row) for row in params.P]
    E = []
    for i in range(d + 1):
        acc = np.zeros((n, n), dtype=np.int64)
        for j in range(d + 1):
            q = P[j][i]
            if q.denominator != 1:
                raise VerificationError(f"eigenmatrix entry {q} is not an integer")
            acc = acc + int(q) * A_dist_num[j]  # |entries| <= 2^d, safe
        E.append(RationalMatrix(acc, n))
    return _assemble(g, dd, x, E, P, P, params.p_table, params, True)


def build_context(g: Graph, x: int = 0, dd: DistanceData | None = None) -> TerwContext:
    """Context for a general distance-regular graph with rational spectrum.

    Raises:
        ValueError: if the graph is not distance-regular (witness included)
            or has an irrational adjacency eigenvalue.
    """
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range for {g.n} vertices")
    if dd is None:
        dd = DistanceData.compute(g)
    ok, result = is_distance_regular(g, dd)
    if not ok:
        h, i, j, pair_a, count_a, pair_b, count_b = result
        raise ValueError(
            f"graph is not distance-regular: (h,i,j)=({h},{i},{j}) gives "
            f"{count_a} for pair {pair_a} but {count_b} for pair {pair_b}"
        )
    p_table = result
    d = dd.diameter
    n = g.n
    A = distance_matrix(g, dd, 1) if d >= 1 else RationalMatrix.zeros(n, n)

    mp = min_poly(A)
    valency_bound = max(len(nb) for nb in g.neighbors)
    roots = [t for t in range(-valency_bound, valency_bound + 1) if mp.eval_scalar(t) == 0]
    q = mp
    for r in roots:
        q, rem = q.deflate(r)
        if rem != 0:
            raise ValueError("minimal polynomial deflation failed")
    if q.degree != 0:
        raise ValueError(
            "adjacency matrix has an irrational eigenvalue: minimal polynomial "
            f"{mp} does not split over the integers"
        )
    theta = sorted(roots, reverse=True)
    if len(theta) != d + 1:
        raise ValueError(
            f"expected {d + 1} distinct eigenvalues, found {len(theta)}"
        )

    ident = RationalMatrix.identity(n)
    E = []
    for i, th_i in enumerate(theta):
        proj = ident
        for j, th_j in enumerate(theta):
            if j == i:
                continue
            proj = proj @ (A - ident * th_j) * Fraction(1, th_i - th_j)
        E.append(proj)

    # P[i][j] = p_j(i), read off from A_j E_i = p_j(i) E_i and fully verified.
    P: list[list[Fraction]] = [[Fraction(0)] * (d + 1) for _ in range(d + 1)]
    A_dist = [distance_matrix(g, dd, j) for j in range(d + 1)]
    for i in range(d + 1):
        pos = np.argwhere(E[i].num)[0]
        u, v = int(pos[0]), int(pos[1])
        for j in range(d + 1):
            prod = A_dist[j] @ E[i]
            coeff = prod[u, v] / E[i][u, v]
            if prod != E[i] * coeff:
                raise VerificationError(
                    f"A_{j} E_{i} is not a scalar multiple of E_{i}"
                )
            P[i][j] = coeff
    Qm = inverse(RationalMatrix.from_rows(P)) * n
    Q = Qm.dense_rows()
    return _assemble(g, dd, x, E, P, Q, p_table, None, False)


# -- named identity checks -------------------------------------------------


def check_section_identities(ctx: TerwContext) -> list[Check]:
    """The fundamental identities of both Bose-Mesner algebras, exactly."""
    checks = []
    n = ctx.n
    d = ctx.d
    ident = RationalMatrix.identity(n)

    acc = RationalMatrix.zeros(n, n)
    for Ai in ctx.A_dist:
        acc = acc + Ai
    checks.append(Check("distance_matrices_partition", acc == RationalMatrix.ones(n, n)))
    checks.append(Check("distance_zero_is_identity", ctx.A_dist[0] == ident))

    esum = RationalMatrix.zeros(n, n)
    for Ei in ctx.E:
        esum = esum + Ei
    checks.append(Check("idempotents_sum_to_identity", esum == ident))

    ortho = True
    witness = None
    for i in range(d + 1):
        for j in range(d + 1):
            expect = ctx.E[i] if i == j else RationalMatrix.zeros(n, n)
            if ctx.E[i] @ ctx.E[j] != expect:
                ortho = False
                witness = f"E_{i} E_{j}"
                break
        if not ortho:
            break
    checks.append(Check("idempotents_orthogonal", ortho, witness))

    spec = RationalMatrix.zeros(n, n)
    for i in range(d + 1):
        spec = spec + ctx.E[i] * ctx.theta[i]
    checks.append(Check("adjacency_spectral_decomposition", spec == ctx.A))

    checks.append(
        Check("rank_one_idempotent_is_all_ones", ctx.E[0] == RationalMatrix.ones(n, n) * Fraction(1, n))
    )

    Pm = RationalMatrix.from_rows([list(r) for r in ctx.P])
    Qm = RationalMatrix.from_rows([list(r) for r in ctx.Q])
    checks.append(
        Check(
            "eigenmatrices_inverse_pair",
            Pm @ (Qm * Fraction(1, n)) == RationalMatrix.identity(d + 1),
        )
    )

    dsum = RationalMatrix.zeros(n, n)
    for Ei in ctx.E_star:
        dsum = dsum + Ei
    checks.append(Check("dual_idempotents_sum_to_identity", dsum == ident))

    dual_ortho = True
    witness = None
    for i in range(d + 1):
        for j in range(d + 1):
            expect = ctx.E_star[i] if i == j else RationalMatrix.zeros(n, n)
            if ctx.E_star[i] @ ctx.E_star[j] != expect:
                dual_ortho = False
                witness = f"E*_{i} E*_{j}"
                break
        if not dual_ortho:
            break
    checks.append(Check("dual_idempotents_orthogonal", dual_ortho, witness))

    dual_diag_ok = True
    witness = None
    for i in range(d + 1):
        expect = RationalMatrix.diagonal(
            [Fraction(int(v) * n, ctx.E[i].den) for v in ctx.E[i].num[ctx.x]]
        )
        if ctx.A_star[i] != expect:
            dual_diag_ok = False
            witness = f"A*_{i}"
            break
    checks.append(Check("dual_distance_diagonal_from_idempotent_row", dual_diag_ok, witness))

    dspec = RationalMatrix.zeros(n, n)
    for i in range(d + 1):
        dspec = dspec + ctx.E_star[i] * ctx.theta_star[i]
    checks.append(
        Check("dual_adjacency_spectral_decomposition", dspec == ctx.dual_adjacency)
    )

    # Krein expansion of every Hadamard product, re-verified at matrix level.
    krein_ok = True
    witness = None
    for i in range(d + 1):
        for j in range(d + 1):
            acc = RationalMatrix.zeros(n, n)
            for h in range(d + 1):
                acc = acc + ctx.E[h] * (ctx.krein[h][i][j] * Fraction(1, n))
            if ctx.E[i].hadamard(ctx.E[j]) != acc:
                krein_ok = False
                witness = f"E_{i} o E_{j}"
                break
        if not krein_ok:
            break
    checks.append(Check("krein_expansion_of_hadamard_products", krein_ok, witness))
    return checks


@dataclass(frozen=True)
class TripleProductReport:
    """Agreement of triple-product vanishing with the parameter tables."""

    d: int
    total: int
    mismatches: tuple[tuple, ...]

    @property
    def passed(self) -> bool:
        return not self.mismatches


def check_triple_products(ctx: TerwContext) -> TripleProductReport:
    """Zero-ness of E_h* A_i E_j* and E_h A_i* E_j over all triples.

    For every (h, i, j) the vanishing of both products must agree with
    p^h_{ij} = 0, with the Krein parameter being 0, and (for hypercubes)
    with (h, i, j) being outside the permissible set.
    """
    d = ctx.d
    dist = ctx.dist.dist
    mismatches = []
    for h in range(d + 1):
        sph_h = ctx.spheres[h]
        for i in range(d + 1):
            # E_h A_i* scales the columns of E_h by the dual diagonal.
            diag = ctx.A_star[i].num.diagonal()
            left = exact_mul_elementwise(ctx.E[h].num, diag[None, :])
            for j in range(d + 1):
                sph_j = ctx.spheres[j]
                primal_zero = not bool(
                    (dist[np.ix_(sph_h, sph_j)] == i).any()
                )
                dual_zero = not bool(np.any(exact_matmul(left, ctx.E[j].num)))
                p_zero = int(ctx.p_table[h, i, j]) == 0
                krein_zero = ctx.krein[h][i][j] == 0
                flags = [primal_zero, dual_zero, p_zero, krein_zero]
                if ctx.is_hypercube:
                    flags.append(not permissible(d, h, i, j))
                if any(f != flags[0] for f in flags):
                    mismatches.append((h, i, j, tuple(flags)))
    return TripleProductReport(d, (d + 1) ** 3, tuple(mismatches))


def triple_span_dim(ctx: TerwContext) -> int:
    """Dimension of span{E_h* A_i E_j*} over all (d+1)^3 triples."""
    n = ctx.n
    span = EchelonSpan(n * n)
    for h in range(ctx.d + 1):
        rows = ctx.spheres[h]
        for i in range(ctx.d + 1):
            Ai = ctx.A_dist[i].num
            for j in range(ctx.d + 1):
                cols = ctx.spheres[j]
                block = np.zeros((n, n), dtype=np.int64)
                sub = np.ix_(rows, cols)
                block[sub] = Ai[sub]
                span.add(block.ravel())
    return span.dim


def check_krein_self_dual(ctx: TerwContext) -> Check:
    """Hypercube self-duality: the Krein table equals the p-table."""
    d = ctx.d
    for h in range(d + 1):
        for i in range(d + 1):
            for j in range(d + 1):
                if ctx.krein[h][i][j] != int(ctx.p_table[h, i, j]):
                    return Check(
                        "krein_table_equals_intersection_table",
                        False,
                        f"(h,i,j)=({h},{i},{j}): "
                        f"{ctx.krein[h][i][j]} vs {int(ctx.p_table[h, i, j])}",
                    )
    return Check("krein_table_equals_intersection_table", True)


def check_polynomial_images(ctx: TerwContext) -> list[Check]:
    """Polynomial layer at matrix level, on a hypercube context.

    F_i(A) = A_i and F_i(A*) = A_i* for 0 <= i <= d+1 (index d+1 gives the
    zero matrix), and the common minimal polynomial of A and A* is the
    spectrum polynomial.
    """
    if ctx.params is None:
        raise ValueError("polynomial images are defined for hypercube contexts")
    checks = []
    fs = ctx.params.F
    a_ok = True
    witness = None
    for i, f in enumerate(fs):
        if poly_eval_matrix(f, ctx.A) != ctx.distance_or_zero(i):
            a_ok = False
            witness = f"F_{i}(A)"
            break
    checks.append(Check("krawtchouk_images_of_adjacency", a_ok, witness))

    astar = ctx.dual_adjacency
    dual_ok = True
    witness = None
    for i, f in enumerate(fs):
        expect = ctx.A_star[i] if i <= ctx.d else RationalMatrix.zeros(ctx.n, ctx.n)
        if poly_eval_matrix(f, astar) != expect:
            dual_ok = False
            witness = f"F_{i}(A*)"
            break
    checks.append(Check("krawtchouk_images_of_dual_adjacency", dual_ok, witness))

    phi = ctx.params.phi
    mp_a = min_poly(ctx.A)
    mp_astar = min_poly(astar)
    checks.append(
        Check(
            "minimal_polynomial_of_adjacency",
            mp_a == phi,
            None if mp_a == phi else f"{mp_a} != {phi}",
        )
    )
    checks.append(
        Check(
            "minimal_polynomial_of_dual_adjacency",
            mp_astar == phi,
            None if mp_astar == phi else f"{mp_astar} != {phi}",
        )
    )
    return checks


def check_relator_images(ctx: TerwContext) -> list[Check]:
    """The two relator identities for d >= 2: the diameter-(d-2) spectrum
    polynomial evaluated at A (resp. A*) annihilates I - E_0 - E_d (resp.
    I - E_0* - E_d*)."""
    if ctx.params is None:
        raise ValueError("relator images are defined for hypercube contexts")
    if ctx.d < 2:
        raise ValueError("relator images require d >= 2")
    from .hypercube import spectrum_poly

    n = ctx.n
    ident = RationalMatrix.identity(n)
    phi_small = spectrum_poly(ctx.d - 2)
    mid = ident - ctx.E[0] - ctx.E[ctx.d]
    mid_star = ident - ctx.E_star[0] - ctx.E_star[ctx.d]
    primal = poly_eval_matrix(phi_small, ctx.A) @ mid
    dual = poly_eval_matrix(phi_small, ctx.dual_adjacency) @ mid_star
    return [
        Check("relator_annihilates_middle_idempotents", primal.is_zero()),
        Check("dual_relator_annihilates_middle_dual_idempotents", dual.is_zero()),
    ]
