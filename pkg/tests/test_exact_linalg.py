"""Exact rank, determinant, products, and polynomial determinants.

Determinants carry an independent cofactor-expansion oracle; polynomial
determinants are cross-checked through the evaluation homomorphism.
"""

import random
from fractions import Fraction
from math import comb

import pytest

from plovkit.exact_linalg import (
    Matrix,
    Poly,
    PolyMatrix,
    binomial_poly,
    chain_product,
    charpoly,
    choose_poly,
    det,
    inverse,
    matmul,
    matrix_power,
    polydet,
    rank,
)
from plovkit.incidence import build_matrix


def cofactor_det(rows):
    """Oracle: recursive cofactor expansion."""
    m = len(rows)
    if m == 1:
        return rows[0][0]
    total = 0
    for j in range(m):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def test_rank_pinned():
    assert rank(build_matrix(4, 3, 6).matrix()) == 4
    assert rank(Matrix.zero(3, 5)) == 0
    for m in (1, 2, 5):
        assert rank(Matrix.identity(m)) == m


def test_det_basics():
    assert det(Matrix.identity(4)) == 1
    assert det(Matrix.from_rows([[2, 0], [0, 3]])) == 6
    with pytest.raises(ValueError):
        det(Matrix.zero(2, 3))


def test_det_of_pinned_product_against_cofactor_oracle():
    prod = matmul(build_matrix(4, 3, 6).matrix(), build_matrix(4, 3, 7).matrix())
    value = det(prod)
    assert value == cofactor_det([list(r) for r in prod.data])
    assert value == -70
    assert value != 0


def test_det_with_rational_entries():
    m = Matrix.from_rows([[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 5), Fraction(1, 7)]])
    assert det(m) == Fraction(1, 14) - Fraction(1, 15)


def test_matmul_identity_and_mismatch():
    a = build_matrix(4, 3, 6).matrix()
    assert matmul(a, Matrix.identity(5)) == a
    with pytest.raises(ValueError):
        matmul(a, Matrix.identity(4))


def test_chain_product_pinned_window():
    mats = [build_matrix(2, 2, n).matrix() for n in range(1, 5)]
    prod = chain_product(mats)
    assert prod.data == ((6,),)
    prod43 = chain_product(
        [build_matrix(4, 3, 6).matrix(), build_matrix(4, 3, 7).matrix()]
    )
    assert prod43.rows == prod43.cols == 4
    assert det(prod43) != 0


def test_chain_product_rank_bound():
    rng = random.Random(5)
    for _ in range(20):
        mats = []
        dims = [rng.randint(1, 4) for _ in range(4)]
        for a, b in zip(dims, dims[1:]):
            mats.append(Matrix.from_rows(
                [[rng.randint(-2, 2) for _ in range(b)] for _ in range(a)]
            ))
        prod = chain_product(mats)
        assert rank(prod) <= min(rank(m) for m in mats)


def gaussian_rank_oracle(rows):
    """Oracle: plain Gauss-Jordan over Fraction."""
    work = [[Fraction(v) for v in r] for r in rows]
    r = 0
    for c in range(len(work[0]) if work else 0):
        piv = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c] / work[r][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        r += 1
    return r


def test_rank_and_det_fuzz_against_oracles():
    rng = random.Random(17)
    for _ in range(80):
        nr, nc = rng.randint(1, 5), rng.randint(1, 5)
        rows = [
            [rng.choice([0, 0, 1, -1, 2, -2, 3]) for _ in range(nc)]
            for _ in range(nr)
        ]
        m = Matrix.from_rows(rows)
        assert rank(m) == gaussian_rank_oracle(rows)
        if nr == nc:
            assert det(m) == cofactor_det(rows)


def test_rank_fuzz_with_rational_entries():
    rng = random.Random(23)
    for _ in range(30):
        n = rng.randint(1, 4)
        rows = [
            [Fraction(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(n + 1)]
            for _ in range(n)
        ]
        assert rank(Matrix.from_rows(rows)) == gaussian_rank_oracle(rows)


def test_rank_transpose_and_permutation_invariance():
    rng = random.Random(11)
    for _ in range(30):
        rows = [[rng.randint(-3, 3) for _ in range(rng.randint(1, 5))]]
        width = len(rows[0])
        for _ in range(rng.randint(0, 4)):
            rows.append([rng.randint(-3, 3) for _ in range(width)])
        m = Matrix.from_rows(rows)
        assert rank(m) == rank(m.transpose())
        shuffled = list(rows)
        rng.shuffle(shuffled)
        assert rank(Matrix.from_rows(shuffled)) == rank(m)


def test_binomial_poly_pinned():
    assert binomial_poly(0).coeffs == (Fraction(0), Fraction(1))
    p1 = binomial_poly(1)
    assert p1.coeffs == (Fraction(0), Fraction(-1, 2), Fraction(1, 2))
    p3 = binomial_poly(3)
    assert p3.degree == 4
    assert p3.leading_coefficient() == Fraction(1, 24)
    for n in range(-6, 12):
        if n >= 0:
            assert p3(n) == comb(n, 4)
        assert binomial_poly(0)(n) == n


def test_choose_poly_matches_comb():
    for j in range(6):
        p = choose_poly(j)
        assert p.degree == j
        for n in range(0, 12):
            assert p(n) == comb(n, j)


def test_poly_zero_degree_marker():
    z = Poly.zero()
    assert z.degree is None
    assert z.is_zero()
    with pytest.raises(ValueError):
        z.leading_coefficient()
    assert (Poly.constant(3) - Poly.constant(3)).degree is None


def test_poly_arithmetic_round_trip():
    p = Poly.from_coeffs([1, 2, 3])
    q = Poly.from_coeffs([0, -1])
    assert (p * q)(5) == p(5) * q(5)
    assert (p + q)(7) == p(7) + q(7)
    assert (p - p).is_zero()


def test_polydet_pinned():
    n = Poly.x()
    one = Poly.constant(1)
    diag = PolyMatrix.from_rows([[n, Poly.zero()], [Poly.zero(), n]])
    assert polydet(diag).coeffs == (Fraction(0), Fraction(0), Fraction(1))
    hyperbola = PolyMatrix.from_rows([[n, one], [one, n]])
    assert polydet(hyperbola).coeffs == (Fraction(-1), Fraction(0), Fraction(1))


def test_polydet_evaluation_homomorphism():
    rng = random.Random(3)
    for size in (2, 3, 4):
        pm = PolyMatrix.from_rows([
            [Poly.from_coeffs([rng.randint(-2, 2) for _ in range(3)]) for _ in range(size)]
            for _ in range(size)
        ])
        p = polydet(pm)
        for x in range(-5, 6):
            assert p(x) == det(pm.evaluate(x))


def test_charpoly_known_values():
    p = charpoly(Matrix.from_rows([[2, 1], [1, 1]]))
    assert p.coeffs == (Fraction(1), Fraction(-3), Fraction(1))
    ident = charpoly(Matrix.identity(3))
    assert ident.coeffs == (Fraction(-1), Fraction(3), Fraction(-3), Fraction(1))


def test_inverse_and_power():
    a = Matrix.from_rows([[1, 1], [0, 1]])
    assert matmul(a, inverse(a)) == Matrix.identity(2)
    assert matrix_power(a, 5).data == ((1, 5), (0, 1))
    assert matrix_power(a, -3).data == ((1, -3), (0, 1))
    with pytest.raises(ValueError):
        inverse(Matrix.zero(2, 2))
