"""Orchestration of the full verification run and one-off report builders.

run_verification drives, for every diameter in range, the construction of
the algebra context, all named identity checks, the closure dimension, the
primary idempotent suite, and the block decomposition, then attaches the
range-wide polynomial and enumeration checks.

Cross-diameter facts (dimension and block multiset of the cube two
diameters down) are precomputed sequentially; the remaining per-diameter
work is pure and runs in a thread pool when requested.  The assembled
report depends only on the computed facts, so its bytes are identical for
every thread count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .checks import Check
from .closure import AlgebraBasis
from .graphs import Graph, is_distance_regular
from .hypercube import (
    check_permissible_equivalence,
    check_shift_lemma_down,
    check_shift_lemma_up,
    permissible_set,
)
from .idempotent import verify_u0
from .poly_identities import verify_phi_factorial, verify_phi_images
from .report import DiameterRecord, VerificationReport
from .subconstituent import (
    TerwContext,
    build_context,
    build_hypercube_context,
    check_krein_self_dual,
    check_polynomial_images,
    check_relator_images,
    check_section_identities,
    check_triple_products,
    triple_span_dim,
)
from .wedderburn import (
    SPLIT,
    BlockDecomposition,
    complement_algebra,
    decompose,
)

PHI_IMAGE_MAX_D = 32
PHI_FACTORIAL_MAX_D = 32
SHIFT_LEMMA_MAX_D = 16
PERMISSIBLE_MAX_D = 8


def expected_dimension(d: int) -> int:
    """sum of (d+1-2r)^2 over 0 <= r <= floor(d/2)."""
    return sum((d + 1 - 2 * r) ** 2 for r in range(d // 2 + 1))


def expected_blocks(d: int) -> tuple[int, ...]:
    return tuple(d + 1 - 2 * r for r in range(d // 2 + 1))


@dataclass(frozen=True)
class _Prepared:
    """Sequentially precomputed artifacts for one diameter."""

    ctx: TerwContext
    basis: AlgebraBasis
    dec: BlockDecomposition


def _prepare(d: int, vertex: int) -> _Prepared:
    ctx = build_hypercube_context(d, vertex % (1 << d) if d else 0)
    basis = ctx.algebra_basis()
    dec = decompose(basis, ctx.generators())
    return _Prepared(ctx, basis, dec)


def _fraction_json(f: Fraction):
    if f.denominator == 1:
        return int(f)
    return f"{f.numerator}/{f.denominator}"


def _diameter_record(
    prep: _Prepared,
    dim_smaller: int | None,
    blocks_smaller: tuple[int, ...] | None,
) -> DiameterRecord:
    ctx = prep.ctx
    basis = prep.basis
    dec = prep.dec
    d = ctx.d
    checks: list[Check] = list(check_section_identities(ctx))

    ok, table = is_distance_regular(ctx.graph, ctx.dist)
    brute_ok = bool(ok) and (table == ctx.p_table).all()
    checks.append(
        Check(
            "intersection_numbers_match_brute_force",
            bool(brute_ok),
            None if brute_ok else "closed form disagrees with counted table",
        )
    )

    tp = check_triple_products(ctx)
    witness = None
    if tp.mismatches:
        h, i, j, flags = tp.mismatches[0]
        witness = f"(h,i,j)=({h},{i},{j}) flags={flags}"
    checks.append(Check("triple_products_match_parameter_zeros", tp.passed, witness))

    checks.append(check_krein_self_dual(ctx))
    checks.extend(check_polynomial_images(ctx))
    if d >= 2:
        checks.extend(check_relator_images(ctx))

    exp_dim = expected_dimension(d)
    checks.append(
        Check(
            "closure_dimension_matches_formula",
            basis.dim == exp_dim,
            None if basis.dim == exp_dim else f"{basis.dim} != {exp_dim}",
        )
    )

    u0rep = verify_u0(ctx, basis, dim_smaller=dim_smaller)
    checks.append(Check("u0_formulas_agree", u0rep.formulas_agree))
    checks.append(Check("u0_idempotent", u0rep.idempotent))
    checks.append(Check("u0_central_in_algebra", u0rep.central))
    checks.append(
        Check(
            "u0_rank_is_diameter_plus_one",
            u0rep.rank_U0 == d + 1,
            None if u0rep.rank_U0 == d + 1 else f"rank {u0rep.rank_U0}",
        )
    )
    checks.append(
        Check(
            "u0_ideal_dimension_is_square_of_rank",
            u0rep.dim_T_u0 == (d + 1) ** 2,
            None if u0rep.dim_T_u0 == (d + 1) ** 2 else f"dim {u0rep.dim_T_u0}",
        )
    )
    checks.append(Check("u0_absorbs_extremal_idempotents", u0rep.absorbs_all))
    checks.append(
        Check("u0_identity_iff_diameter_at_most_one", u0rep.is_identity == (d <= 1))
    )
    if d >= 2:
        checks.append(
            Check(
                "dimension_peel_to_smaller_cube",
                u0rep.peel_identity,
                None
                if u0rep.peel_identity
                else f"{basis.dim} - {(d + 1) ** 2} != {dim_smaller}",
            )
        )

    if dec.status == SPLIT:
        center_ok = dec.center_dim == d // 2 + 1
        checks.append(
            Check(
                "center_dimension_expected",
                center_ok,
                None if center_ok else f"center dim {dec.center_dim}",
            )
        )
        blocks_ok = dec.multiset == expected_blocks(d)
        checks.append(
            Check(
                "block_multiset_expected",
                blocks_ok,
                None if blocks_ok else f"blocks {dec.multiset}",
            )
        )
        squares = sum(n * n for n in dec.block_sizes)
        checks.append(
            Check(
                "block_squares_sum_to_dimension",
                squares == basis.dim,
                None if squares == basis.dim else f"{squares} != {basis.dim}",
            )
        )
        divisible = all(
            r % n == 0 for n, r in zip(dec.block_sizes, dec.block_ranks)
        )
        checks.append(Check("block_sizes_divide_idempotent_ranks", divisible))
    else:
        checks.append(
            Check(
                "block_decomposition_split",
                False,
                f"probe minimal polynomial {dec.probe_min_poly}",
            )
        )

    if d >= 2:
        corner = complement_algebra(ctx, basis, u0rep.U0)
        comp_dim_ok = corner.dim == basis.dim - (d + 1) ** 2
        checks.append(
            Check(
                "complement_dimension_matches_peel",
                comp_dim_ok,
                None if comp_dim_ok else f"complement dim {corner.dim}",
            )
        )
        dec_corner = decompose(corner.matrices, corner.generators, corner.identity)
        comp_ok = (
            dec_corner.status == SPLIT
            and blocks_smaller is not None
            and dec_corner.multiset == blocks_smaller
        )
        checks.append(
            Check(
                "complement_blocks_match_smaller_cube",
                bool(comp_ok),
                None
                if comp_ok
                else f"complement {dec_corner.blocks_json()} vs {blocks_smaller}",
            )
        )

    return DiameterRecord(
        d=d,
        vertex=ctx.x,
        dim_T=basis.dim,
        expected_dim=exp_dim,
        triple_span_dim=triple_span_dim(ctx),
        u0=u0rep.as_dict(),
        blocks=dec.blocks_json(),
        checks=tuple(checks),
    )


def global_checks() -> tuple[Check, ...]:
    """Range-wide enumeration and polynomial checks, independent of max_d."""
    checks = []
    perm_ok = True
    witness = None
    for d in range(1, PERMISSIBLE_MAX_D + 1):
        ok, bad = check_permissible_equivalence(d)
        if not ok:
            perm_ok = False
            witness = f"d={d} triple {bad}"
            break
    checks.append(
        Check("permissible_triples_match_nonzero_intersection_numbers", perm_ok, witness)
    )

    img_ok = True
    witness = None
    for d in range(2, PHI_IMAGE_MAX_D + 1):
        rep = verify_phi_images(d)
        if not rep.passed:
            img_ok = False
            witness = f"d={d} indices {rep.failing_indices()}"
            break
    checks.append(Check("krawtchouk_descent_identities", img_ok, witness))

    checks.append(
        Check(
            "spectrum_polynomial_factorial_identity",
            verify_phi_factorial(PHI_FACTORIAL_MAX_D),
        )
    )

    down_ok = True
    up_ok = True
    down_witness = None
    up_witness = None
    for d in range(2, SHIFT_LEMMA_MAX_D + 1):
        ok, bad = check_shift_lemma_down(d)
        if not ok and down_ok:
            down_ok = False
            down_witness = f"d={d} triple {bad}"
        ok, bad = check_shift_lemma_up(d)
        if not ok and up_ok:
            up_ok = False
            up_witness = f"d={d} triple {bad}"
    checks.append(Check("excluded_triple_shift_down", down_ok, down_witness))
    checks.append(Check("excluded_triple_shift_up", up_ok, up_witness))
    return tuple(checks)


def run_verification(max_d: int, vertex: int = 0, threads: int = 1) -> VerificationReport:
    """Full verification for d = 1..max_d plus the range-wide checks."""
    if not 1 <= max_d <= 8:
        raise ValueError("max_d must be between 1 and 8")
    if threads < 1:
        raise ValueError("threads must be positive")
    prepared = {d: _prepare(d, vertex) for d in range(0, max_d + 1)}
    dims = {d: p.basis.dim for d, p in prepared.items()}
    blocks = {
        d: p.dec.multiset if p.dec.status == SPLIT else None
        for d, p in prepared.items()
    }

    def job(d: int) -> DiameterRecord:
        return _diameter_record(
            prepared[d],
            dims.get(d - 2),
            blocks.get(d - 2),
        )

    ds = list(range(1, max_d + 1))
    if threads == 1:
        records = [job(d) for d in ds]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(job, ds))
    return VerificationReport(
        version=__version__,
        results=tuple(records),
        global_checks=global_checks(),
    )


# -- one-off report builders for the CLI -----------------------------------


def _table3_json(table) -> list:
    return [[[int(v) for v in row] for row in layer] for layer in table]


def _krein_json(krein) -> list:
    return [
        [[_fraction_json(v) for v in row] for row in layer] for layer in krein
    ]


def _matrix2_json(rows) -> list:
    return [[_fraction_json(v) for v in row] for row in rows]


def build_parameter_report(d: int, vertex: int = 0) -> dict:
    """Parameter tables, dimension, u0 summary, and blocks for one cube."""
    prep = _prepare(d, vertex)
    ctx = prep.ctx
    u0rep = verify_u0(ctx, prep.basis)
    return {
        "d": d,
        "vertex": ctx.x,
        "num_vertices": ctx.n,
        "eigenvalues": [int(t) for t in ctx.theta],
        "dual_eigenvalues": [int(t) for t in ctx.theta_star],
        "valencies": list(ctx.valencies),
        "dual_valencies": list(ctx.dual_valencies),
        "p_table": _table3_json(ctx.p_table),
        "krein_table": _krein_json(ctx.krein),
        "P": _matrix2_json(ctx.P),
        "Q": _matrix2_json(ctx.Q),
        "permissible_set": [list(t) for t in permissible_set(d)],
        "dim_T": prep.basis.dim,
        "expected_dim": expected_dimension(d),
        "triple_span_dim": triple_span_dim(ctx),
        "u0": u0rep.as_dict(),
        "u0_is_identity": u0rep.is_identity,
        "blocks": prep.dec.blocks_json(),
    }


def build_graph_report(g: Graph, vertex: int = 0) -> tuple[dict, bool]:
    """Distance-regular graph report plus an overall pass flag.

    The triple-product check runs against the graph's own parameter
    tables; Krein entries may be proper fractions here.
    """
    ctx = build_context(g, vertex)
    basis = ctx.algebra_basis()
    tp = check_triple_products(ctx)
    section = check_section_identities(ctx)
    all_ok = tp.passed and all(c.passed for c in section)
    data = {
        "num_vertices": ctx.n,
        "diameter": ctx.d,
        "vertex": ctx.x,
        "distance_regular": True,
        "eigenvalues": [_fraction_json(t) for t in ctx.theta],
        "valencies": list(ctx.valencies),
        "dual_valencies": list(ctx.dual_valencies),
        "p_table": _table3_json(ctx.p_table),
        "krein_table": _krein_json(ctx.krein),
        "P": _matrix2_json(ctx.P),
        "Q": _matrix2_json(ctx.Q),
        "dim_T": basis.dim,
        "triple_span_dim": triple_span_dim(ctx),
        "checks": [c.as_dict() for c in section]
        + [
            {
                "name": "triple_products_match_parameter_zeros",
                "pass": tp.passed,
            }
        ],
    }
    return data, all_ok
