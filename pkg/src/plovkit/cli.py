"""Command line front end: enumeration, matrix construction, rank sweeps,
module verification, growth reports.

Exit codes: 0 all checks pass, 1 some check failed, 2 invalid input,
3 positive-entropy input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .abelian_dynamics import (
    PositiveEntropyError,
    conjugate_model,
    degree_sequence,
    intersection_number,
    jordan_model,
    model_from_json,
    monomial_intersections,
    nilpotent_data,
    plov,
    positivity_sequence,
    pullback,
    random_unimodular,
    reduce_model,
)
from .exact_linalg import Matrix, Poly, binomial_poly, det, matmul, polydet, rank
from .incidence import build_matrix
from .lefschetz import (
    build_Y,
    prop_midpoint_equality,
    symfun_lefschetz_matrix,
    unimodality_report,
    verify_bracket,
    verify_full_rank,
    verify_hard_lefschetz,
)
from .partitions import count_partitions, enumerate_partitions
from .report import Report, canonical_json

DEFAULT_CEILING = 40

PINNED_436 = ((1, 1, 0, 0, 0), (1, 0, 1, 1, 0), (0, 1, 0, 2, 0), (0, 0, 0, 2, 1))
PINNED_437 = ((1, 1, 0, 0), (0, 2, 0, 0), (2, 0, 1, 0), (0, 1, 1, 1), (0, 0, 0, 3))


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _check_ceiling(k: int, d: int, ceiling: int) -> None:
    if k * d > ceiling:
        raise ValueError(
            f"dk = {k * d} exceeds the safety ceiling {ceiling}; raise it with --ceiling"
        )


def _load_model(args):
    if getattr(args, "jordan", None):
        try:
            r0, d0, m0 = (int(v) for v in args.jordan.split(","))
        except ValueError as exc:
            raise ValueError(f"--jordan expects r0,d0,m0 integers: {exc}") from exc
        return jordan_model(r0, d0, m0)
    if getattr(args, "matrix", None):
        with open(args.matrix, encoding="utf-8") as fh:
            try:
                obj = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ValueError(f"bad model JSON: {exc}") from exc
        return model_from_json(obj)
    raise ValueError("give a model with --jordan r0,d0,m0 or --matrix FILE")


# ---------------------------------------------------------------------------
# Simple subcommands
# ---------------------------------------------------------------------------

def cmd_partition(args) -> int:
    if args.k < 1 or args.d < 1 or args.n < 0:
        raise ValueError("need k >= 1, d >= 1, n >= 0")
    if args.action == "count":
        _emit(str(count_partitions(args.k, args.d, args.n)), args.out)
        return 0
    items = enumerate_partitions(args.k, args.d, args.n)
    if args.format == "json":
        _emit(canonical_json([[str(p) for p in lam.parts] for lam in items]), args.out)
    else:
        _emit("\n".join(",".join(str(p) for p in lam.parts) for lam in items) or "", args.out)
    return 0


def cmd_matrix(args) -> int:
    inc = build_matrix(args.k, args.d, args.n)
    if args.format == "json":
        payload = {
            "k": str(args.k),
            "d": str(args.d),
            "n": str(args.n),
            "rows": [[str(p) for p in lam.parts] for lam in inc.row_labels],
            "cols": [[str(p) for p in lam.parts] for lam in inc.col_labels],
            "entries": [[str(v) for v in row] for row in inc.entries],
        }
        _emit(canonical_json(payload), args.out)
    elif args.format == "csv":
        _emit("\n".join(",".join(str(v) for v in row) for row in inc.entries), args.out)
    else:
        width = max((len(str(v)) for row in inc.entries for v in row), default=1)
        lines = [
            f"levels {args.n - 1} -> {args.n}:  rows {inc.rows} x cols {inc.cols}"
        ]
        for lam, row in zip(inc.row_labels, inc.entries):
            cells = " ".join(f"{v:>{width}}" for v in row)
            lines.append(f"{str(lam):>14}  [{cells}]")
        lines.append("columns: " + " ".join(str(lam) for lam in inc.col_labels))
        _emit("\n".join(lines), args.out)
    return 0


def cmd_rank(args) -> int:
    inc = build_matrix(args.k, args.d, args.n)
    _emit(str(rank(inc.matrix())), args.out)
    return 0


def cmd_lefschetz(args) -> int:
    _check_ceiling(args.k, args.d, args.ceiling)
    started = time.time()
    report = Report(__version__, _config_echo(args))
    table = verify_full_rank(args.k, args.d)
    for row in table.rows:
        report.add(
            f"rank_level_{row.n}",
            "incidence matrix has full rank matching the case split",
            row.ok,
            rank=row.rank, expected=row.expected, rows=row.rows, cols=row.cols,
        )
    if args.hard:
        for n in range(args.d * args.k // 2):
            verdict = verify_hard_lefschetz(args.k, args.d, n)
            report.add(
                f"window_{n}",
                "mirror window product of incidence matrices is invertible",
                verdict.invertible,
                size=verdict.size, determinant=verdict.determinant,
            )
    if args.brackets:
        br = verify_bracket(args.k, args.d)
        report.add(
            "sl2_brackets",
            "commutator identities hold gradewise as exact matrices",
            br.ok,
            failures=list(br.failures),
        )
    if args.symfun:
        ok = all(
            _matrix_eq(
                symfun_lefschetz_matrix(args.k, args.d, n),
                build_matrix(args.k, args.d, n).transpose_matrix(),
            )
            for n in range(1, args.d * args.k + 1)
        )
        report.add(
            "symfun_realization",
            "hyperplane multiplication on weighted monomial bases equals the "
            "transposed incidence matrix",
            ok,
        )
    report.timing_seconds = time.time() - started
    _emit_report(report, args)
    return 0 if report.ok else 1


def _matrix_eq(a: Matrix, b: Matrix) -> bool:
    # Entrywise comparison; tolerates int entries on one side, Fraction on the other.
    return (
        a.rows == b.rows
        and a.cols == b.cols
        and all(
            a.data[i][j] == b.data[i][j]
            for i in range(a.rows)
            for j in range(a.cols)
        )
    )


def cmd_plov(args) -> int:
    model = reduce_model(_load_model(args))
    data = nilpotent_data(model)
    result = plov(model)
    if args.format == "json":
        payload = {
            "plov": str(result.plov),
            "gkdim": str(result.gkdim),
            "k": str(data.k),
            "leading_coefficient": str(result.leading_coefficient),
            "iterate": str(model.iterate),
            "jordan_sizes": [str(s) for s in data.jordan_sizes],
        }
        _emit(canonical_json(payload), args.out)
    else:
        _emit(f"plov={result.plov} gkdim={result.gkdim} k={data.k}", args.out)
    return 0


def cmd_degrees(args) -> int:
    model = reduce_model(_load_model(args))
    lines = []
    payload = []
    for i in range(model.d + 1):
        poly, exponent = degree_sequence(model, i)
        lines.append(f"deg_{i}: exponent={exponent} poly={poly}")
        payload.append({"i": str(i), "exponent": str(exponent), "poly": str(poly)})
    if args.format == "json":
        _emit(canonical_json(payload), args.out)
    else:
        _emit("\n".join(lines), args.out)
    return 0


# ---------------------------------------------------------------------------
# verify-all
# ---------------------------------------------------------------------------

def _kd_pairs(dk_max: int):
    return [
        (k, d)
        for k in range(1, dk_max + 1)
        for d in range(1, dk_max // k + 1)
    ]


def _sweep_cell(cell):
    """Rank + window sweep for one (k, d); runs in a worker process."""
    k, d = cell
    table = verify_full_rank(k, d)
    windows_ok = True
    for n in range(d * k // 2):
        if not verify_hard_lefschetz(k, d, n).invertible:
            windows_ok = False
            break
    return k, d, table.ok, windows_ok


def _admissible_triples(d_max: int):
    out = []
    for d in range(1, d_max + 1):
        for d0 in range(1, d + 1):
            for m0 in range(1, d // d0 + 1):
                r0 = d - m0 * d0
                if 0 <= r0 < d0:
                    out.append((r0, d0, m0))
    return sorted(set(out))


def cmd_verify_all(args) -> int:
    started = time.time()
    report = Report(__version__, _config_echo(args))
    rng = random.Random(args.seed)

    report.add(
        "pinned_matrices",
        "the two displayed 4x3 incidence matrices match entry for entry, have "
        "rank 4, and their product is invertible",
        build_matrix(4, 3, 6).entries == PINNED_436
        and build_matrix(4, 3, 7).entries == PINNED_437
        and rank(build_matrix(4, 3, 6).matrix()) == 4
        and rank(build_matrix(4, 3, 7).matrix()) == 4
        and det(matmul(build_matrix(4, 3, 6).matrix(), build_matrix(4, 3, 7).matrix())) != 0,
    )

    pairs = _kd_pairs(args.dk_max)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            cells = list(pool.map(_sweep_cell, pairs))
    else:
        cells = [_sweep_cell(c) for c in pairs]
    bad = [(k, d) for (k, d, rk_ok, win_ok) in cells if not (rk_ok and win_ok)]
    report.add(
        "rank_window_sweep",
        "every incidence matrix has full rank per the case split and every "
        "mirror window product is invertible",
        not bad,
        pairs=len(pairs), dk_max=args.dk_max, failing=[list(p) for p in bad],
    )

    bracket_bad = []
    for k, d in _kd_pairs(args.dk_bracket):
        br = verify_bracket(k, d)
        ok = br.ok and all(
            build_matrix(k, d, n).transpose_matrix() == build_Y(k, d, n)
            for n in range(1, d * k + 1)
        )
        if not ok:
            bracket_bad.append((k, d))
    report.add(
        "sl2_consistency",
        "lowering matrices equal transposed incidence matrices and all "
        "commutator identities hold",
        not bracket_bad,
        dk_max=args.dk_bracket, failing=[list(p) for p in bracket_bad],
    )

    symfun_bad = []
    for k, d in _kd_pairs(args.dk_symfun):
        for n in range(1, d * k + 1):
            if not _matrix_eq(
                symfun_lefschetz_matrix(k, d, n),
                build_matrix(k, d, n).transpose_matrix(),
            ):
                symfun_bad.append((k, d, n))
    report.add(
        "symfun_realization",
        "hyperplane multiplication on weighted monomial bases equals the "
        "transposed incidence matrix",
        not symfun_bad,
        dk_max=args.dk_symfun, failing=[list(p) for p in symfun_bad],
    )

    unimodal_bad = [
        (k, d) for k, d in _kd_pairs(args.dk_max) if not unimodality_report(k, d).ok
    ]
    report.add(
        "unimodality",
        "partition counts rise to the midpoint and fall after it, consistently "
        "with the rank table",
        not unimodal_bad,
        failing=[list(p) for p in unimodal_bad],
    )

    couples_ok = (
        all(prop_midpoint_equality(2, d) for d in range(3, 14, 2))
        and all(not prop_midpoint_equality(2, d) for d in range(2, 13, 2))
        and all(
            prop_midpoint_equality(k, d)
            for k, d in [(6, 5), (6, 7), (6, 9), (6, 11), (6, 13), (10, 7)]
        )
    )
    report.add(
        "midpoint_couples",
        "midpoint counts agree exactly for the improvement couples and "
        "disagree off them",
        couples_ok,
    )

    plov_bad = []
    for r0, d0, m0 in _admissible_triples(args.d_max):
        value = plov(jordan_model(r0, d0, m0)).plov
        if value != m0 * d0 * d0 + r0 * r0:
            plov_bad.append((r0, d0, m0, value))
    report.add(
        "plov_block_models",
        "plov of the block models equals m0*d0^2 + r0^2",
        not plov_bad,
        d_max=args.d_max, failing=[list(p) for p in plov_bad],
    )

    jordan_bad = []
    for r0, d0, m0 in _admissible_triples(min(args.d_max, 4)):
        model = jordan_model(r0, d0, m0)
        k = nilpotent_data(model).k
        if k != 2 * d0 - 2:
            jordan_bad.append((r0, d0, m0, k))
        for _ in range(args.conjugates):
            s = random_unimodular(model.d, rng)
            kk = nilpotent_data(conjugate_model(model, s)).k
            if kk != k or kk > 2 * model.d - 2:
                jordan_bad.append((r0, d0, m0, kk))
                break
    report.add(
        "jordan_exponents",
        "nilpotency exponent is 2*d0 - 2 for block models and at most 2d - 2 "
        "on random unimodular conjugates",
        not jordan_bad,
        conjugates=args.conjugates, failing=[list(p) for p in jordan_bad],
    )

    vanish_bad = []
    positivity_bad = []
    degree_bad = []
    for r0, d0, m0 in _admissible_triples(min(args.d_max, 4)):
        model = jordan_model(r0, d0, m0)
        data = nilpotent_data(model)
        try:
            monomial_intersections(model)
        except ArithmeticError:
            vanish_bad.append((r0, d0, m0))
        if data.k > 0:
            seq = positivity_sequence(model, samples=args.samples, seed=args.seed)
            if not seq.ok:
                positivity_bad.append((r0, d0, m0, list(seq.failures)))
        for i in range(model.d + 1):
            poly, exponent = degree_sequence(model, i)
            if i == 1 and (exponent != data.k or poly.leading_coefficient() <= 0):
                degree_bad.append((r0, d0, m0, i))
            if exponent > 2 * (model.d - 1) * min(i, model.d - i):
                degree_bad.append((r0, d0, m0, i))
    report.add(
        "monomial_vanishing",
        "monomial intersection numbers vanish past the midpoint",
        not vanish_bad,
        failing=[list(p) for p in vanish_bad],
    )
    report.add(
        "positivity_sequences",
        "maximal exponent sequences exist with sum below d, sampled "
        "positivity, and exact vanishing",
        not positivity_bad,
        seed=args.seed, failing=[list(p[:3]) for p in positivity_bad],
    )
    report.add(
        "degree_growth",
        "the first degree sequence grows with exponent k and every degree "
        "exponent obeys the min bound",
        not degree_bad,
        failing=[list(p) for p in degree_bad],
    )

    prop_ok = _property_suite(rng)
    report.add(
        "property_suites",
        "partition symmetry and recurrence, intersection multilinearity and "
        "pullback invariance, polynomial determinants versus evaluation",
        prop_ok,
        seed=args.seed,
    )

    report.timing_seconds = time.time() - started
    _emit_report(report, args)
    return 0 if report.ok else 1


def _property_suite(rng: random.Random) -> bool:
    for k, d in [(3, 4), (5, 2), (2, 7)]:
        dk = d * k
        for n in range(dk + 1):
            if count_partitions(k, d, n) != count_partitions(k, d, dk - n):
                return False
            if count_partitions(k, d, n) != count_partitions(d, k, n):
                return False
            if count_partitions(k, d, n) != (
                count_partitions(k, d - 1, n) + count_partitions(k - 1, d, n - d)
            ):
                return False
    for d in (2, 3, 4):
        classes = []
        for _ in range(d):
            r = Matrix.from_rows([[rng.randint(-2, 2) for _ in range(d)] for _ in range(d)])
            classes.append((r + r.transpose()))
        a = random_unimodular(d, rng)
        before = intersection_number(classes)
        after = intersection_number([pullback(a, c) for c in classes])
        if before != after:
            return False
        m0 = classes[0]
        scaled = intersection_number([m0.scale(3)] + classes[1:])
        if scaled != 3 * before:
            return False
    from .exact_linalg import PolyMatrix

    pm = PolyMatrix.from_rows([
        [Poly.from_coeffs([0, 1]), Poly.constant(1)],
        [Poly.constant(1), Poly.from_coeffs([0, 1])],
    ])
    p = polydet(pm)
    for x in range(-5, 5):
        if p(x) != det(pm.evaluate(x)):
            return False
    if binomial_poly(0)(7) != 7 or binomial_poly(1)(7) != 21:
        return False
    return True


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def _config_echo(args) -> dict:
    skip = {"func"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _emit_report(report: Report, args) -> None:
    if args.format == "json":
        _emit(report.to_json(), args.out)
    else:
        _emit("\n".join(report.summary_lines()), args.out)


def _add_common(sub, fmt=("text", "json"), default_fmt="text"):
    sub.add_argument("--format", choices=fmt, default=default_fmt)
    sub.add_argument("--out", metavar="FILE", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plovkit",
        description="Exact verification of restricted-partition linear algebra "
        "and slow-dynamics growth on powers of an elliptic curve.",
    )
    parser.add_argument("--version", action="version", version=f"plovkit {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("partition", help="enumerate or count restricted partitions")
    p.add_argument("action", choices=["list", "count"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_partition)

    p = subs.add_parser("matrix", help="build one weighted incidence matrix")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_common(p, fmt=("text", "csv", "json"))
    p.set_defaults(func=cmd_matrix)

    p = subs.add_parser("rank", help="exact rank of one incidence matrix")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_rank)

    lef = subs.add_parser("lefschetz", help="verify the rank theorem for one (k, d)")
    lef_subs = lef.add_subparsers(dest="action", required=True)
    p = lef_subs.add_parser("verify")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--hard", action="store_true", help="also certify window products")
    p.add_argument("--brackets", action="store_true", help="also check commutators")
    p.add_argument("--symfun", action="store_true", help="also check the symmetric-function model")
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
    _add_common(p, default_fmt="json")
    p.set_defaults(func=cmd_lefschetz)

    p = subs.add_parser("plov", help="polynomial volume growth of a model")
    p.add_argument("--jordan", metavar="R0,D0,M0", default=None)
    p.add_argument("--matrix", metavar="FILE", default=None)
    _add_common(p)
    p.set_defaults(func=cmd_plov)

    p = subs.add_parser("degrees", help="degree-sequence polynomials of a model")
    p.add_argument("--jordan", metavar="R0,D0,M0", default=None)
    p.add_argument("--matrix", metavar="FILE", default=None)
    _add_common(p)
    p.set_defaults(func=cmd_degrees)

    p = subs.add_parser("verify-all", help="run the full verification suite")
    p.add_argument("--dk-max", type=int, default=24, dest="dk_max")
    p.add_argument("--dk-bracket", type=int, default=16, dest="dk_bracket")
    p.add_argument("--dk-symfun", type=int, default=12, dest="dk_symfun")
    p.add_argument("--d-max", type=int, default=5, dest="d_max")
    p.add_argument("--conjugates", type=int, default=25)
    p.add_argument("--samples", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
    _add_common(p)
    p.set_defaults(func=cmd_verify_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "dk_max", None) is not None and hasattr(args, "ceiling"):
        if args.dk_max > args.ceiling:
            print(
                f"error: --dk-max {args.dk_max} exceeds the safety ceiling "
                f"{args.ceiling}",
                file=sys.stderr,
            )
            return 2
    try:
        return args.func(args)
    except PositiveEntropyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
