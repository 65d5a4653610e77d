"""A fully computable model of a zero-entropy automorphism on a power of an
elliptic curve.

The variety is the d-fold power of a generic (non-CM) elliptic curve. Its
rational divisor-class space is identified with symmetric d x d rational
matrices; the coordinate automorphism given by an integer matrix A pulls a
class M back to A^T M A; a class is ample exactly when positive definite; and
the top intersection number of d classes is the polarization of the
determinant,

    I(M_1, ..., M_d) = sum over nonempty S of (-1)^(d - |S|) det(sum_{i in S} M_i),

so that I(M, ..., M) = d! det(M). The d = 2 instance reproduces the classical
intersection table of a product of two elliptic curves (fiber times fiber = 1,
diagonal self-intersection = 0), which pins the normalization.

Every quantity of interest in slow dynamics is then exactly computable here:
polynomial volume growth, nilpotency data of the pullback on divisor classes,
degree-sequence growth, monomial intersection numbers, weak numerical
triviality, and the positivity sequence of products of iterated classes.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd

from .exact_linalg import (
    Matrix,
    Poly,
    PolyMatrix,
    charpoly,
    choose_poly,
    det,
    matmul,
    matrix_power,
    polydet,
    rank,
)
from .partitions import Partition, enumerate_partitions


class PositiveEntropyError(ValueError):
    """The pullback on divisor classes has an eigenvalue off the unit circle."""


# ---------------------------------------------------------------------------
# Model construction
# ---------------------------------------------------------------------------

def _is_positive_definite(h: Matrix) -> bool:
    # Sylvester: all leading principal minors positive. Exact arithmetic.
    return all(
        det(Matrix(tuple(row[: t + 1] for row in h.data[: t + 1]))) > 0
        for t in range(h.rows)
    )


@dataclass(frozen=True)
class AbelianModel:
    """Dimension d, integer automorphism matrix A, ample class H.

    `iterate` records the power when the automorphism has been replaced by an
    iterate to make the divisor-class pullback unipotent.
    """

    d: int
    A: Matrix
    H: Matrix
    iterate: int = 1

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"dimension must be >= 1, got {self.d}")
        if self.A.rows != self.d or self.A.cols != self.d:
            raise ValueError("automorphism matrix has wrong shape")
        if not self.A.is_integral():
            raise ValueError("automorphism matrix must be integral")
        if det(self.A) not in (1, -1):
            raise ValueError("automorphism matrix must have determinant +1 or -1")
        if self.H.rows != self.d or not self.H.is_symmetric():
            raise ValueError("ample class must be a symmetric d x d matrix")
        if not _is_positive_definite(self.H):
            raise ValueError("ample class must be positive definite")


def make_model(a_rows, h_rows=None, iterate: int = 1) -> AbelianModel:
    a = Matrix.from_rows(a_rows) if not isinstance(a_rows, Matrix) else a_rows
    d = a.rows
    if h_rows is None:
        h = Matrix.identity(d)
    else:
        h = Matrix.from_rows(h_rows) if not isinstance(h_rows, Matrix) else h_rows
    return AbelianModel(d, a, h, iterate)


def jordan_model(r0: int, d0: int, m0: int) -> AbelianModel:
    """Block-diagonal unipotent model: one block of size r0 (omitted when r0 is
    zero) followed by m0 blocks of size d0, all with eigenvalue 1. H is the
    identity polarization."""
    if d0 < 1 or not 0 <= r0 < d0 or m0 < 0:
        raise ValueError(f"invalid block spec (r0, d0, m0) = ({r0}, {d0}, {m0})")
    d = m0 * d0 + r0
    if d < 1:
        raise ValueError("total dimension must be >= 1")
    sizes = ([r0] if r0 > 0 else []) + [d0] * m0
    rows = [[0] * d for _ in range(d)]
    offset = 0
    for s in sizes:
        for i in range(s):
            rows[offset + i][offset + i] = 1
            if i + 1 < s:
                rows[offset + i][offset + i + 1] = 1
        offset += s
    return make_model(rows)


def model_from_json(obj) -> AbelianModel:
    """Build a model from {"d": int, "A": [[...]], "H": optional [[...]]}.

    Integer entries may be given as JSON numbers or as decimal strings.
    """
    if not isinstance(obj, dict) or "d" not in obj or "A" not in obj:
        raise ValueError('model JSON needs keys "d" and "A"')

    def parse_entry(v):
        if isinstance(v, bool):
            raise ValueError("matrix entries must be integers or strings")
        if isinstance(v, int):
            return v
        if isinstance(v, str):
            if "/" in v:
                return Fraction(v)
            return int(v)
        raise ValueError(f"bad matrix entry {v!r}")

    def parse_matrix(rows, name):
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise ValueError(f'"{name}" must be a list of rows')
        parsed = [[parse_entry(v) for v in r] for r in rows]
        widths = {len(r) for r in parsed}
        if len(widths) != 1 or len(parsed) != widths.pop():
            raise ValueError(f'"{name}" must be square')
        return parsed

    d = parse_entry(obj["d"])
    a = parse_matrix(obj["A"], "A")
    if len(a) != d:
        raise ValueError(f'"A" must be {d} x {d}')
    h = parse_matrix(obj["H"], "H") if obj.get("H") is not None else None
    if h is not None and len(h) != d:
        raise ValueError(f'"H" must be {d} x {d}')
    return make_model(a, h)


# ---------------------------------------------------------------------------
# Intersection theory
# ---------------------------------------------------------------------------

def ns_class(rows) -> Matrix:
    m = Matrix.from_rows(rows) if not isinstance(rows, Matrix) else rows
    if not m.is_symmetric():
        raise ValueError("divisor class must be a symmetric matrix")
    return m


def symmetric_basis(d: int) -> list[Matrix]:
    """Basis of the symmetric-matrix space: E_ii, then E_ij + E_ji for i < j."""
    out = []
    for i in range(d):
        rows = [[0] * d for _ in range(d)]
        rows[i][i] = 1
        out.append(Matrix.from_rows(rows))
    for i in range(d):
        for j in range(i + 1, d):
            rows = [[0] * d for _ in range(d)]
            rows[i][j] = rows[j][i] = 1
            out.append(Matrix.from_rows(rows))
    return out


def intersection_number(classes) -> Fraction:
    """Top intersection number of exactly d divisor classes.

    Polarization of the determinant over nonempty subsets; symmetric and
    multilinear, with I(M, ..., M) = d! det(M).
    """
    classes = list(classes)
    d = classes[0].rows if classes else 0
    if len(classes) != d:
        raise ValueError(f"need exactly {d} classes, got {len(classes)}")
    total = Fraction(0)
    for mask in range(1, 1 << d):
        acc = None
        for i in range(d):
            if mask >> i & 1:
                acc = classes[i] if acc is None else acc + classes[i]
        sign = -1 if (d - mask.bit_count()) % 2 else 1
        total += sign * det(acc)
    return total


def intersection_poly(classes) -> Poly:
    """Same polarization with polynomial-entry classes; returns a polynomial."""
    classes = [
        PolyMatrix.from_scalar_matrix(c) if isinstance(c, Matrix) else c
        for c in classes
    ]
    d = classes[0].size if classes else 0
    if len(classes) != d:
        raise ValueError(f"need exactly {d} classes, got {len(classes)}")
    total = Poly.zero()
    for mask in range(1, 1 << d):
        acc = None
        for i in range(d):
            if mask >> i & 1:
                acc = classes[i] if acc is None else acc + classes[i]
        term = polydet(acc)
        if (d - mask.bit_count()) % 2:
            term = term.scale(-1)
        total = total + term
    return total


def pullback(a: Matrix, m: Matrix) -> Matrix:
    """Pullback of the divisor class m along the coordinate automorphism a."""
    if a.cols != m.rows or m.cols != a.rows:
        raise ValueError("dimension mismatch in pullback")
    return matmul(matmul(a.transpose(), m), a)


def ns_operator(a: Matrix) -> Matrix:
    """Matrix of M -> A^T M A on the symmetric-matrix space.

    Size D = d(d+1)/2, in the basis of symmetric_basis(d).
    """
    d = a.rows
    basis = symmetric_basis(d)
    pairs = [(i, i) for i in range(d)] + [
        (i, j) for i in range(d) for j in range(i + 1, d)
    ]
    cols = []
    for b in basis:
        s = pullback(a, b)
        cols.append([s.data[i][j] for (i, j) in pairs])
    return Matrix(tuple(zip(*cols)))


# ---------------------------------------------------------------------------
# Quasi-unipotency
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> Poly:
    # x^n - 1 divided by all lower cyclotomics at proper divisors of n.
    num = Poly.from_coeffs([-1] + [0] * (n - 1) + [1])
    for e in range(1, n):
        if n % e == 0:
            num = _polydiv_exact(num, _cyclotomic(e))
    return num


def _polydiv(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(f.coeffs) - len(g.coeffs) + 1, 1)
    r = list(f.coeffs)
    gl = g.leading_coefficient()
    gd = g.degree
    while len(r) - 1 >= gd and any(c != 0 for c in r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < gd:
            break
        shift = len(r) - 1 - gd
        c = r[-1] / gl
        q[shift] = c
        for i, gc in enumerate(g.coeffs):
            r[shift + i] -= c * gc
        r.pop()
    return Poly.from_coeffs(q), Poly.from_coeffs(r)


def _polydiv_exact(f: Poly, g: Poly) -> Poly:
    q, r = _polydiv(f, g)
    if not r.is_zero():
        raise ArithmeticError("division was expected to be exact")
    return q


def quasi_unipotent_reduce(a: Matrix) -> tuple[int, Matrix]:
    """Decide zero entropy and return (m, a**m) with unipotent class pullback.

    Factors the characteristic polynomial of the pullback operator on the
    symmetric-matrix space into cyclotomics by trial division; m is the lcm of
    the orders found. Raises PositiveEntropyError when a non-cyclotomic factor
    remains, i.e. some eigenvalue is not a root of unity.
    """
    phi = ns_operator(a)
    dim = phi.rows
    remaining = charpoly(phi)
    orders = []
    # Any root-of-unity order j occurring in a degree-dim polynomial has
    # phi(j) <= dim, and phi(j) >= sqrt(j/2) gives j <= 2 dim^2. phi is not
    # monotone, so the whole range must be scanned.
    for j in range(1, 2 * dim * dim + 1):
        if remaining.degree == 0:
            break
        if _euler_phi(j) > remaining.degree:
            continue
        cyc = _cyclotomic(j)
        while True:
            q, r = _polydiv(remaining, cyc)
            if r.is_zero() and not q.is_zero():
                remaining = q
                if j not in orders:
                    orders.append(j)
            else:
                break
    if remaining.degree != 0:
        raise PositiveEntropyError(
            "positive entropy: class pullback has an eigenvalue that is not a root of unity"
        )
    m = 1
    for j in orders:
        m = m // gcd(m, j) * j
    reduced = matrix_power(a, m)
    if not _is_nilpotent(ns_operator(reduced) - Matrix.identity(dim)):
        raise ArithmeticError("iterate failed to become unipotent")
    return m, reduced


def _is_nilpotent(n: Matrix) -> bool:
    p = n
    for _ in range(n.rows):
        if p.is_zero():
            return True
        p = matmul(p, n)
    return p.is_zero()


def reduce_model(model: AbelianModel) -> AbelianModel:
    """Replace the automorphism by the least iterate with unipotent pullback."""
    m, a_m = quasi_unipotent_reduce(model.A)
    if m == 1:
        return model
    return AbelianModel(model.d, a_m, model.H, model.iterate * m)


# ---------------------------------------------------------------------------
# Nilpotency data and growth polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NilpotentData:
    k: int
    jordan_sizes: tuple[int, ...]      # sorted descending, with multiplicity
    h_exponent: int                    # max i with N^i H != 0 for the model's H

    @property
    def r(self) -> int:
        return self.k // 2

    @property
    def h_matches_k(self) -> bool:
        return self.h_exponent == self.k


def _operator_n_matrix(model: AbelianModel) -> Matrix:
    phi = ns_operator(model.A)
    return phi - Matrix.identity(phi.rows)


def n_powers_of_h(model: AbelianModel, up_to: int) -> list[Matrix]:
    """[H, NH, N^2 H, ..., N^up_to H] where N(M) = A^T M A - M."""
    out = [model.H]
    for _ in range(up_to):
        prev = out[-1]
        out.append(pullback(model.A, prev) - prev)
    return out


def nilpotent_data(model: AbelianModel) -> NilpotentData:
    """Nilpotency exponent and Jordan structure of the class pullback.

    Requires the pullback to be unipotent (reduce first if unsure). The
    exponent k is the largest power of N = pullback - id that is nonzero; the
    maximum Jordan block size is k + 1, and k is always even here.
    """
    nmat = _operator_n_matrix(model)
    dim = nmat.rows
    powers = [Matrix.identity(dim), nmat]
    while not powers[-1].is_zero() and len(powers) <= dim + 1:
        powers.append(matmul(powers[-1], nmat))
    if not powers[-1].is_zero():
        raise ValueError("class pullback is not unipotent; reduce the model first")
    k = len(powers) - 2
    ranks = [rank(p) for p in powers]
    sizes = []
    for s in range(1, k + 2):
        r_lo = ranks[s - 1]
        r_mid = ranks[s]
        r_hi = ranks[s + 1] if s + 1 < len(ranks) else 0
        sizes.extend([s] * (r_lo - 2 * r_mid + r_hi))
    sizes.sort(reverse=True)

    nh = n_powers_of_h(model, k + 1)
    h_exp = max((i for i, m in enumerate(nh) if not m.is_zero()), default=0)

    if k % 2 != 0:
        raise ArithmeticError(f"nilpotency exponent k={k} is odd; model is inconsistent")
    return NilpotentData(k, tuple(sizes), h_exp)


def delta_poly(model: AbelianModel) -> PolyMatrix:
    """The cumulative pullback class as a matrix of polynomials in n.

    Entry-wise it is sum over i of C(n, i+1) * (N^i H); substituting a positive
    integer n reproduces the sum of the first n iterated pullbacks of H.
    """
    data = nilpotent_data(model)
    nh = n_powers_of_h(model, data.k)
    acc = None
    for i, m in enumerate(nh):
        if m.is_zero():
            continue
        term = PolyMatrix.from_scalar_matrix(m).scale(choose_poly(i + 1))
        acc = term if acc is None else acc + term
    if acc is None:
        raise ArithmeticError("ample class vanished; model is inconsistent")
    return acc


@dataclass(frozen=True)
class PlovResult:
    plov: int
    leading_coefficient: Fraction
    gkdim: int


def plov(model: AbelianModel) -> PlovResult:
    """Polynomial volume growth: degree of d! det of the cumulative class.

    The model must already be unipotent; the value is invariant under passing
    to iterates. The leading coefficient of the degree polynomial is returned
    and must be positive.
    """
    p = polydet(delta_poly(model))
    if p.is_zero():
        raise ArithmeticError("volume polynomial vanished identically")
    lead = factorial(model.d) * p.leading_coefficient()
    if lead <= 0:
        raise ArithmeticError("volume polynomial has nonpositive leading coefficient")
    return PlovResult(p.degree, lead, p.degree + 1)


def degree_sequence(model: AbelianModel, i: int) -> tuple[Poly, int]:
    """Exact polynomial n -> deg_i(f^n) and its degree.

    deg_i pairs i copies of the pulled-back ample class with d - i copies of
    the ample class itself.
    """
    if not 0 <= i <= model.d:
        raise ValueError(f"codimension i={i} outside [0, {model.d}]")
    data = nilpotent_data(model)
    nh = n_powers_of_h(model, data.k)
    fm = None
    for j, m in enumerate(nh):
        if m.is_zero():
            continue
        term = PolyMatrix.from_scalar_matrix(m).scale(choose_poly(j))
        fm = term if fm is None else fm + term
    poly = intersection_poly([fm] * i + [model.H] * (model.d - i))
    if poly.is_zero():
        raise ArithmeticError("degree polynomial vanished identically")
    return poly, poly.degree


def monomial_intersections(
    model: AbelianModel, check_vanishing: bool = True
) -> dict[Partition, Fraction]:
    """All monomial intersection numbers v, keyed by restricted partition.

    For a partition with parts (l_1, ..., l_d) bounded by the nilpotency
    exponent k, the value is the intersection of the classes N^{l_j} H. Beyond
    the midpoint (sum of parts > dk/2) every value must vanish; by default a
    violation raises, since it would falsify the vanishing theorem the rest of
    the package relies on.
    """
    data = nilpotent_data(model)
    k, d = data.k, model.d
    if k == 0:
        # Only the zero partition exists; the bound k=1 is a formal stand-in.
        zero = Partition((0,) * d, 1)
        return {zero: intersection_number([model.H] * d)}
    nh = n_powers_of_h(model, k)
    out: dict[Partition, Fraction] = {}
    for n in range(d * k + 1):
        for lam in enumerate_partitions(k, d, n):
            v = intersection_number([nh[part] for part in lam.parts])
            out[lam] = v
            if check_vanishing and 2 * n > d * k and v != 0:
                raise ArithmeticError(
                    f"nonzero monomial intersection {v} at {lam} past the midpoint"
                )
    return out


def plov_monomial_gap(model: AbelianModel) -> tuple[int, int]:
    """Monomial upper bound for plov, and the (reported, never asserted) gap.

    bound = d + max degree of a nonvanishing monomial; the inequality
    plov <= bound is checked, the question whether it is an equality stays
    open and only the gap is reported.
    """
    vmap = monomial_intersections(model, check_vanishing=False)
    best = max((lam.n for lam, v in vmap.items() if v != 0), default=0)
    bound = model.d + best
    value = plov(model).plov
    if value > bound:
        raise ArithmeticError(f"plov {value} exceeds its monomial bound {bound}")
    return bound, bound - value


# ---------------------------------------------------------------------------
# Weak triviality, weak positivity, positivity sequences
# ---------------------------------------------------------------------------

def weakly_trivial(model: AbelianModel, factors) -> bool:
    """Weak numerical triviality of a product of j divisor classes.

    True when every completion by d - j symmetric-basis classes pairs to zero;
    by multilinearity this is equivalent to vanishing against all ample
    (d - j)-tuples. j = d tests whether the number itself is zero.
    """
    factors = list(factors)
    j = len(factors)
    if not 0 <= j <= model.d:
        raise ValueError(f"need between 0 and {model.d} factors, got {j}")
    if j == model.d:
        return intersection_number(factors) == 0
    basis = symmetric_basis(model.d)
    return all(
        intersection_number(factors + list(fill)) == 0
        for fill in itertools.combinations_with_replacement(basis, model.d - j)
    )


def ample_samples(d: int, count: int, seed: int) -> list[Matrix]:
    """Deterministic positive definite integer sample classes, identity first."""
    rng = random.Random(seed)
    out = [Matrix.identity(d)]
    while len(out) < count:
        r = Matrix.from_rows(
            [[rng.randint(-2, 2) for _ in range(d)] for _ in range(d)]
        )
        out.append(matmul(r.transpose(), r) + Matrix.identity(d))
    return out


def weakly_positive_sampled(model: AbelianModel, factors, samples) -> bool:
    """Strict positivity against every multiset of sampled ample classes.

    A sampled stand-in for weak positivity, whose quantifier ranges over the
    whole ample cone; reports using it must label it as sampled.
    """
    factors = list(factors)
    j = len(factors)
    if not 0 <= j <= model.d:
        raise ValueError(f"need between 0 and {model.d} factors, got {j}")
    if j == model.d:
        return intersection_number(factors) > 0
    return all(
        intersection_number(factors + list(fill)) > 0
        for fill in itertools.combinations_with_replacement(samples, model.d - j)
    )


@dataclass(frozen=True)
class PositivityReport:
    k: int
    r: int
    t_values: tuple[int, ...]          # (t_r, t_{r-1}, ..., t_1)
    s_values: tuple[int, ...]          # partial sums (s_1, ..., s_r)
    sum_strictly_below_d: bool
    r_le_d_minus_1: bool
    positivity_ok: bool                # sampled
    vanishing_ok: bool                 # exact
    square_negativity_ok: bool         # sampled
    failures: tuple[str, ...]
    seed: int
    sample_count: int

    @property
    def ok(self) -> bool:
        return not self.failures


def positivity_sequence(
    model: AbelianModel, samples: int = 4, seed: int = 0
) -> PositivityReport:
    """Construct the maximal-exponent sequence t_r, ..., t_1 and verify it.

    Starting from the empty product, each step takes the largest power t of
    N^{2r-2j} H whose product with the running class is not weakly trivial,
    then multiplies it in. Along the way:

      * every intermediate product must be strictly positive against the
        sampled ample classes (weak positivity is sampled, and labeled so);
      * after each step the product must kill N^s H exactly, for every
        s >= 2r - 2j - 1 (checked via exact weak triviality);
      * the square of the next-lower odd class must pair strictly negatively;
      * the exponents must sum to less than d, forcing r <= d - 1.
    """
    data = nilpotent_data(model)
    k, d = data.k, model.d
    if k == 0:
        raise ValueError("nilpotency exponent is zero; no positivity sequence exists")
    r = k // 2
    nh = n_powers_of_h(model, k)
    amples = ample_samples(d, samples, seed)

    failures: list[str] = []
    current: list[Matrix] = []
    t_values: list[int] = []
    s_values: list[int] = []
    positivity_ok = True
    vanishing_ok = True
    square_ok = True

    def strictly_negative_sampled(cls_list) -> bool:
        if len(cls_list) == d:
            return intersection_number(cls_list) < 0
        return all(
            intersection_number(cls_list + list(fill)) < 0
            for fill in itertools.combinations_with_replacement(
                amples, d - len(cls_list)
            )
        )

    for j in range(r):
        cls = nh[2 * r - 2 * j]
        s_j = len(current)
        t_best = 0
        for t in range(1, d - s_j + 1):
            if not weakly_trivial(model, current + [cls] * t):
                t_best = t
        if t_best == 0:
            failures.append(f"no positive exponent at step j={j}; sequence breaks")
            break
        for i in range(t_best + 1):
            if not weakly_positive_sampled(model, current + [cls] * i, amples):
                positivity_ok = False
                failures.append(f"sampled positivity fails at step j={j}, power i={i}")
        current = current + [cls] * t_best
        t_values.append(t_best)
        s_values.append(len(current))
        for s in range(2 * r - 2 * j - 1, k + 1):
            if not weakly_trivial(model, current + [nh[s]]):
                vanishing_ok = False
                failures.append(f"product fails to kill N^{s} H after step j={j}")
        square = current[:-1] + [nh[2 * r - 2 * j - 1]] * 2
        if len(square) <= d and not strictly_negative_sampled(square):
            square_ok = False
            failures.append(f"odd-class square not strictly negative at step j={j}")

    total = sum(t_values)
    sum_ok = total < d and len(t_values) == r
    if len(t_values) == r and total >= d:
        failures.append(f"exponent sum {total} is not below d={d}")
    r_ok = r <= d - 1
    if not r_ok:
        failures.append(f"r={r} exceeds d-1={d - 1}")

    return PositivityReport(
        k=k,
        r=r,
        t_values=tuple(t_values),
        s_values=tuple(s_values),
        sum_strictly_below_d=sum_ok,
        r_le_d_minus_1=r_ok,
        positivity_ok=positivity_ok,
        vanishing_ok=vanishing_ok,
        square_negativity_ok=square_ok,
        failures=tuple(failures),
        seed=seed,
        sample_count=len(amples),
    )


@dataclass(frozen=True)
class PolynomialCheck:
    poly: Poly
    degree: int
    degree_bound: int
    even_degree: bool
    positive_at_samples: bool
    positive_leading: bool

    @property
    def ok(self) -> bool:
        return (
            self.even_degree
            and self.positive_at_samples
            and self.positive_leading
            and self.degree <= self.degree_bound
        )


def positivity_polynomial_check(
    model: AbelianModel, j: int, l: int, samples: int = 4, seed: int = 0
) -> PolynomialCheck:
    """Pair the step-j product with l pulled-back ample classes, in m.

    P(m) = (step-j product) . ((f^m)^* H)^l . H^(d - s_j - l) as an exact
    polynomial in the iterate m. It must be positive at all sampled integers,
    of even degree, with positive leading coefficient, and of degree at most
    (2r - 2j) * l.
    """
    data = nilpotent_data(model)
    k, d = data.k, model.d
    if k == 0:
        raise ValueError("nilpotency exponent is zero")
    r = k // 2
    if not 0 <= j <= r - 1:
        raise ValueError(f"step j={j} outside [0, {r - 1}]")
    seq = positivity_sequence(model, samples=samples, seed=seed)
    s_j = sum(seq.t_values[:j])
    if not 0 <= l <= d - s_j:
        raise ValueError(f"power l={l} outside [0, {d - s_j}]")
    nh = n_powers_of_h(model, k)
    m_j: list[Matrix] = []
    for step in range(j):
        m_j.extend([nh[2 * r - 2 * step]] * seq.t_values[step])

    fm = None
    for t, m in enumerate(nh):
        if m.is_zero():
            continue
        term = PolyMatrix.from_scalar_matrix(m).scale(choose_poly(t))
        fm = term if fm is None else fm + term
    poly = intersection_poly(m_j + [fm] * l + [model.H] * (d - s_j - l))
    if poly.is_zero():
        raise ArithmeticError("pairing polynomial vanished identically")
    degree = poly.degree
    return PolynomialCheck(
        poly=poly,
        degree=degree,
        degree_bound=(2 * r - 2 * j) * l,
        even_degree=degree % 2 == 0,
        positive_at_samples=all(poly(m) > 0 for m in range(-10, 11)),
        positive_leading=poly.leading_coefficient() > 0,
    )


# ---------------------------------------------------------------------------
# Full report
# ---------------------------------------------------------------------------

MIDPOINT_COUPLES = frozenset({(6, 5), (6, 7), (6, 9), (6, 11), (6, 13), (10, 7)})


def midpoint_improvement_applies(k: int, d: int) -> bool:
    """Couples where the upper bound improves by one."""
    return (k, d) in MIDPOINT_COUPLES or (k == 2 and d % 2 == 1)


@dataclass(frozen=True)
class BoundRecord:
    name: str
    claim: str
    status: str                # "pass" | "fail" | "observed"
    values: dict = field(default_factory=dict)


@dataclass(frozen=True)
class DynReport:
    d: int
    iterate: int
    k: int
    r: int
    jordan_sizes: tuple[int, ...]
    plov: int
    gkdim: int
    leading_coefficient: Fraction
    degree_exponents: tuple[int, ...]
    positivity: PositivityReport | None
    monomial_bound: int
    monomial_gap: int
    records: tuple[BoundRecord, ...]

    @property
    def ok(self) -> bool:
        return all(rec.status != "fail" for rec in self.records)


def verify_bounds(
    model: AbelianModel,
    samples: int = 4,
    seed: int = 0,
    include_positivity: bool = True,
    include_degrees: bool = True,
) -> DynReport:
    """Run every inequality the theory guarantees against one model.

    Applies the unipotent reduction internally, then instantiates and checks
    each bound. Open questions are reported with status "observed" and never
    asserted. Raises PositiveEntropyError for genuinely hyperbolic input.
    """
    model = reduce_model(model)
    d = model.d
    data = nilpotent_data(model)
    k, r = data.k, data.r
    presult = plov(model)
    records: list[BoundRecord] = []

    def record(name, claim, ok_or_status, **values):
        if isinstance(ok_or_status, bool):
            status = "pass" if ok_or_status else "fail"
        else:
            status = ok_or_status
        records.append(BoundRecord(name, claim, status, dict(values)))

    record(
        "plov_upper_bound",
        "plov <= (k/2 + 1) * d",
        presult.plov <= (k // 2 + 1) * d,
        plov=presult.plov, bound=(k // 2 + 1) * d,
    )
    record(
        "plov_dimension_square",
        "plov <= d^2",
        presult.plov <= d * d,
        plov=presult.plov, bound=d * d,
    )
    record(
        "jordan_exponent_bound",
        "k <= 2d - 2",
        k <= 2 * d - 2,
        k=k, bound=2 * d - 2,
    )
    record(
        "h_exponent_matches_k",
        "max power of N with N^i H nonzero equals k",
        data.h_exponent == k,
        h_exponent=data.h_exponent, k=k,
    )

    degree_exponents: tuple[int, ...] = ()
    if include_degrees:
        polys = [degree_sequence(model, i) for i in range(d + 1)]
        degree_exponents = tuple(e for _, e in polys)
        record(
            "degree_growth_exponent",
            "growth exponent of deg_1 equals k (so deg_1 is O(n^(2d-2)))",
            degree_exponents[1] == k and k <= 2 * (d - 1),
            exponent=degree_exponents[1], k=k,
        )
        record(
            "degree_exponent_bounds",
            "exponent of deg_i is at most 2(d-1) * min(i, d-i)",
            all(
                degree_exponents[i] <= 2 * (d - 1) * min(i, d - i)
                for i in range(d + 1)
            ),
            exponents=list(degree_exponents),
        )
        record(
            "degree_parity",
            "every degree polynomial has even degree and positive leading coefficient",
            all(
                e % 2 == 0 and p.leading_coefficient() > 0 for p, e in polys
            ),
        )

    try:
        monomial_bound, gap = plov_monomial_gap(model)
        vanish_ok = True
    except ArithmeticError:
        vmap = monomial_intersections(model, check_vanishing=False)
        best = max((lam.n for lam, v in vmap.items() if v != 0), default=0)
        monomial_bound, gap = d + best, d + best - presult.plov
        vanish_ok = False
    record(
        "monomial_vanishing",
        "v vanishes for every partition heavier than dk/2",
        vanish_ok,
    )
    record(
        "monomial_gap",
        "is the monomial bound an equality? (open; reported only)",
        "observed",
        bound=monomial_bound, gap=gap,
    )
    record(
        "conjectural_lower_bound",
        "plov >= d + r(r+1) (conditional; reported only)",
        "observed",
        holds=presult.plov >= d + r * (r + 1),
        plov=presult.plov, candidate=d + r * (r + 1),
    )

    if midpoint_improvement_applies(k, d):
        record(
            "midpoint_couple_improvement",
            "plov <= (k/2 + 1) * d - 1 for the special couples",
            presult.plov <= (k // 2 + 1) * d - 1,
            plov=presult.plov, bound=(k // 2 + 1) * d - 1,
        )
    if k == 2:
        bound = 2 * (d // 2) + d
        record(
            "small_block_bound",
            "plov <= 2*floor(d/2) + d when the largest Jordan block is 3",
            presult.plov <= bound,
            plov=presult.plov, bound=bound,
        )
    if (k, d) == (4, 4):
        record(
            "observed_4_4_bound",
            "plov <= 10 for (k, d) = (4, 4) (reported only)",
            "observed",
            holds=presult.plov <= 10, plov=presult.plov,
        )

    positivity = None
    if include_positivity and k > 0:
        positivity = positivity_sequence(model, samples=samples, seed=seed)
        record(
            "positivity_sequence",
            "maximal exponents exist, sum below d, with sampled positivity "
            "and exact vanishing",
            positivity.ok,
            t_values=list(positivity.t_values),
            failures=list(positivity.failures),
        )

    return DynReport(
        d=d,
        iterate=model.iterate,
        k=k,
        r=r,
        jordan_sizes=data.jordan_sizes,
        plov=presult.plov,
        gkdim=presult.gkdim,
        leading_coefficient=presult.leading_coefficient,
        degree_exponents=degree_exponents,
        positivity=positivity,
        monomial_bound=monomial_bound,
        monomial_gap=gap,
        records=tuple(records),
    )


# ---------------------------------------------------------------------------
# Randomized model generation (for property sweeps)
# ---------------------------------------------------------------------------

def random_unimodular(d: int, rng: random.Random, shears: int = 6) -> Matrix:
    """Random integer matrix of determinant +1 or -1, built from shear steps."""
    rows = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    for _ in range(shears):
        i, j = rng.randrange(d), rng.randrange(d)
        if i == j:
            continue
        c = rng.choice([-2, -1, 1, 2])
        for t in range(d):
            rows[i][t] += c * rows[j][t]
    if rng.random() < 0.5 and d >= 2:
        rows[0], rows[1] = rows[1], rows[0]
    return Matrix.from_rows(rows)


def conjugate_model(base: AbelianModel, s: Matrix) -> AbelianModel:
    """Model with the automorphism conjugated by a unimodular change of basis."""
    from .exact_linalg import inverse

    a = matmul(matmul(inverse(s), base.A), s)
    if not a.is_integral():
        raise ValueError("conjugation left the integers; s must be unimodular")
    a = Matrix(tuple(tuple(int(v) for v in row) for row in a.data))
    return AbelianModel(base.d, a, base.H, base.iterate)
