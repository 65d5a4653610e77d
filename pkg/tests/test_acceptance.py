"""Acceptance suite: every exit criterion, at its stated tolerance.

Each criterion is one test that prints a single pass/fail line. All numeric
comparisons are exact (zero tolerance); the stated runtime budgets are
enforced with wall-clock assertions.

Run with:  pytest tests/test_acceptance.py -v -s
"""

import json
import random
import time

from plovkit.abelian_dynamics import (
    conjugate_model,
    degree_sequence,
    intersection_number,
    jordan_model,
    monomial_intersections,
    nilpotent_data,
    plov,
    positivity_sequence,
    pullback,
    random_unimodular,
)
from plovkit.exact_linalg import Matrix, Poly, PolyMatrix, det, matmul, polydet, rank
from plovkit.incidence import build_matrix
from plovkit.lefschetz import (
    build_Y,
    h_eigenvalues,
    prop_midpoint_equality,
    symfun_lefschetz_matrix,
    unimodality_report,
    verify_bracket,
    verify_full_rank,
    verify_hard_lefschetz,
)
from plovkit.partitions import count_partitions, enumerate_partitions, gaussian_binomial

A_436 = ((1, 1, 0, 0, 0), (1, 0, 1, 1, 0), (0, 1, 0, 2, 0), (0, 0, 0, 2, 1))
A_437 = ((1, 1, 0, 0), (0, 2, 0, 0), (2, 0, 1, 0), (0, 1, 1, 1), (0, 0, 0, 3))


def kd_pairs(dk_max):
    return [(k, d) for k in range(1, dk_max + 1) for d in range(1, dk_max // k + 1)]


def admissible_triples(d_max):
    out = []
    for d in range(1, d_max + 1):
        for d0 in range(1, d + 1):
            for m0 in range(1, d // d0 + 1):
                r0 = d - m0 * d0
                if 0 <= r0 < d0:
                    out.append((r0, d0, m0))
    return sorted(set(out))


def report(number, ok, detail=""):
    tag = "PASS" if ok else "FAIL"
    suffix = f"  ({detail})" if detail else ""
    print(f"criterion {number:2d}: {tag}{suffix}")
    assert ok, f"criterion {number} failed: {detail}"


def test_criterion_01_pinned_matrices():
    start = time.monotonic()
    ok = (
        build_matrix(4, 3, 6).entries == A_436
        and build_matrix(4, 3, 7).entries == A_437
        and rank(build_matrix(4, 3, 6).matrix()) == 4
        and rank(build_matrix(4, 3, 7).matrix()) == 4
        and det(matmul(build_matrix(4, 3, 6).matrix(), build_matrix(4, 3, 7).matrix()))
        != 0
    )
    elapsed = time.monotonic() - start
    report(1, ok and elapsed < 1.0, f"bit-exact matrices, {elapsed:.3f}s < 1s")


def test_criterion_02_rank_theorem_sweep():
    start = time.monotonic()
    failures = []
    for k, d in kd_pairs(24):
        table = verify_full_rank(k, d)
        if not table.ok:
            failures.append((k, d, "rank"))
        for n in range(d * k // 2):
            if not verify_hard_lefschetz(k, d, n).invertible:
                failures.append((k, d, n))
                break
    elapsed = time.monotonic() - start
    report(
        2,
        not failures and elapsed < 180.0,
        f"{len(kd_pairs(24))} pairs, exact ranks and window products, "
        f"{elapsed:.1f}s < 180s",
    )


def test_criterion_03_sl2_consistency():
    failures = []
    for k, d in kd_pairs(16):
        for n in range(1, d * k + 1):
            if build_Y(k, d, n) != build_matrix(k, d, n).transpose_matrix():
                failures.append((k, d, n, "transpose"))
        for n in range(d * k + 1):
            expected = d * k - 2 * n
            for lam, value in zip(
                enumerate_partitions(k, d, n), h_eigenvalues(k, d, n)
            ):
                exps = lam.exponents_ascending()
                if value != sum(e * (k - 2 * i) for i, e in enumerate(exps)):
                    failures.append((k, d, n, "eigenvalue formula"))
                if value != expected:
                    failures.append((k, d, n, "grading"))
        if not verify_bracket(k, d).ok:
            failures.append((k, d, "brackets"))
    report(3, not failures, "lowering = transpose, eigenvalues, brackets, dk <= 16")


def test_criterion_04_symfun_realization():
    failures = []
    for k, d in kd_pairs(12):
        for n in range(1, d * k + 1):
            sym = symfun_lefschetz_matrix(k, d, n)
            ref = build_matrix(k, d, n).transpose_matrix()
            if not all(
                sym.data[i][j] == ref.data[i][j]
                for i in range(sym.rows)
                for j in range(sym.cols)
            ):
                failures.append((k, d, n))
    report(4, not failures, "weighted monomial multiplication = transpose, dk <= 12")


def test_criterion_05_unimodality():
    failures = []
    for k, d in kd_pairs(24):
        rep = unimodality_report(k, d)
        if not (rep.unimodal and rep.midpoint_consistent and rep.rank_derivation_ok):
            failures.append((k, d))
    report(5, not failures, "counts unimodal with midpoint turn, dk <= 24")


def test_criterion_06_midpoint_couples():
    ok = True
    for d in range(3, 14, 2):
        ok = ok and prop_midpoint_equality(2, d)
        ok = ok and count_partitions(2, d, d - 1) == (d + 1) // 2
        ok = ok and count_partitions(2, d, d) == (d + 1) // 2
    for k, d in [(6, 5), (6, 7), (6, 9), (6, 11), (6, 13), (10, 7)]:
        ok = ok and prop_midpoint_equality(k, d)
    for d in range(2, 13, 2):
        ok = ok and not prop_midpoint_equality(2, d)
    report(6, ok, "equality on the improvement couples, failure off them")


def test_criterion_07_plov_values():
    start = time.monotonic()
    failures = []
    for r0, d0, m0 in admissible_triples(5):
        value = plov(jordan_model(r0, d0, m0)).plov
        if value != m0 * d0 * d0 + r0 * r0:
            failures.append((r0, d0, m0, value))
    have = {plov(jordan_model(*t)).plov for t in [(0, 2, 1), (0, 3, 1), (1, 4, 1)]}
    elapsed = time.monotonic() - start
    report(
        7,
        not failures and have == {4, 9, 17} and elapsed < 60.0,
        f"plov = m0*d0^2 + r0^2 for all d <= 5 incl. 4, 9, 17; {elapsed:.1f}s < 60s",
    )


def test_criterion_08_jordan_exponents():
    failures = []
    for r0, d0, m0 in admissible_triples(5):
        model = jordan_model(r0, d0, m0)
        if nilpotent_data(model).k != 2 * d0 - 2:
            failures.append((r0, d0, m0))
    rng = random.Random(2024)
    for d in range(1, 5):
        bases = [t for t in admissible_triples(d) if t[1] * t[2] + t[0] == d]
        for idx in range(100):
            base = jordan_model(*bases[idx % len(bases)])
            model = conjugate_model(base, random_unimodular(d, rng))
            k = nilpotent_data(model).k
            if k > 2 * d - 2 or k != nilpotent_data(base).k:
                failures.append((d, idx))
    report(8, not failures, "k = 2*d0 - 2; k <= 2d - 2 on 100 conjugates per d <= 4")


def test_criterion_09_vanishing_claim():
    failures = []
    for r0, d0, m0 in admissible_triples(4):
        model = jordan_model(r0, d0, m0)
        k = nilpotent_data(model).k
        vmap = monomial_intersections(model, check_vanishing=False)
        for lam, value in vmap.items():
            if 2 * lam.n > model.d * k and value != 0:
                failures.append((r0, d0, m0, lam.parts))
    report(9, not failures, "exhaustive monomial scan vanishes past the midpoint, d <= 4")


def test_criterion_10_positivity_sequences():
    failures = []
    for r0, d0, m0 in admissible_triples(4):
        model = jordan_model(r0, d0, m0)
        if nilpotent_data(model).k == 0:
            continue
        seq = positivity_sequence(model, samples=4, seed=0)
        if not seq.ok:
            failures.append((r0, d0, m0, seq.failures))
        if sum(seq.t_values) >= model.d or seq.r > model.d - 1:
            failures.append((r0, d0, m0, "sum/r bound"))
    report(
        10,
        not failures,
        "t-sequences exist, sum < d, sampled positivity, exact vanishing, r <= d-1",
    )


def test_criterion_11_degree_growth():
    failures = []
    for r0, d0, m0 in admissible_triples(4):
        model = jordan_model(r0, d0, m0)
        k = nilpotent_data(model).k
        for i in range(model.d + 1):
            poly, exponent = degree_sequence(model, i)
            if exponent % 2 != 0 or poly.leading_coefficient() <= 0:
                failures.append((r0, d0, m0, i, "parity"))
            if i == 1 and exponent != k:
                failures.append((r0, d0, m0, i, "first degree"))
            if exponent > 2 * (model.d - 1) * min(i, model.d - i):
                failures.append((r0, d0, m0, i, "exponent bound"))
    # One larger instance: the five-dimensional block model of the remark.
    poly5, exp5 = degree_sequence(jordan_model(1, 4, 1), 1)
    if exp5 != 6 or poly5.leading_coefficient() <= 0:
        failures.append((1, 4, 1, 1, "five-dimensional first degree"))
    report(11, not failures, "deg_1 grows with even exponent k; min bound for all i")


def test_criterion_12_property_suites(tmp_path):
    failures = []

    for k, d in [(3, 4), (4, 3), (2, 7), (5, 2)]:
        dk = d * k
        for n in range(dk + 1):
            if count_partitions(k, d, n) != count_partitions(k, d, dk - n):
                failures.append(("symmetry", k, d, n))
            if count_partitions(k, d, n) != count_partitions(d, k, n):
                failures.append(("kd-symmetry", k, d, n))
            if count_partitions(k, d, n) != count_partitions(k, d - 1, n) + (
                count_partitions(k - 1, d, n - d)
            ):
                failures.append(("recurrence", k, d, n))
        if gaussian_binomial(k, d) != [count_partitions(k, d, n) for n in range(dk + 1)]:
            failures.append(("gaussian", k, d))

    rng = random.Random(99)
    for d in (2, 3, 4):
        for _ in range(8):
            classes = []
            for _ in range(d):
                raw = Matrix.from_rows(
                    [[rng.randint(-3, 3) for _ in range(d)] for _ in range(d)]
                )
                classes.append(raw + raw.transpose())
            a = random_unimodular(d, rng)
            if intersection_number([pullback(a, c) for c in classes]) != (
                intersection_number(classes)
            ):
                failures.append(("projection", d))
            scaled = intersection_number([classes[0].scale(7)] + classes[1:])
            if scaled != 7 * intersection_number(classes):
                failures.append(("multilinearity", d))

    for size in (2, 3):
        pm = PolyMatrix.from_rows([
            [Poly.from_coeffs([rng.randint(-2, 2) for _ in range(3)]) for _ in range(size)]
            for _ in range(size)
        ])
        p = polydet(pm)
        for x in range(-4, 5):
            if p(x) != det(pm.evaluate(x)):
                failures.append(("polydet", size, x))

    from plovkit.cli import main

    out_file = tmp_path / "determinism.json"
    args = [
        "verify-all", "--dk-max", "6", "--dk-bracket", "4", "--dk-symfun", "4",
        "--d-max", "2", "--conjugates", "3", "--seed", "7", "--format", "json",
        "--out", str(out_file),
    ]
    payloads = []
    for _ in range(2):
        if main(list(args)) != 0:
            failures.append(("report-exit",))
        payload = json.loads(out_file.read_text())
        payload.pop("timing_seconds")
        payloads.append(payload)
    if payloads[0] != payloads[1]:
        failures.append(("determinism",))

    report(12, not failures, "oracle, invariance, homomorphism, determinism suites")
