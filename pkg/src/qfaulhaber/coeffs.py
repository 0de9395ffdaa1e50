"""The four coefficient families P, Q, G, H by determinant and inversion routes.

The forward lower-triangular matrices are built from the h/c/g/d generators;
their inverses encode the families up to explicit sign and denominator
factors.  Polynomial identity between routes is established by exact rational
evaluation at more sample points than the degree bound (interpolation
completeness), so pointwise agreement is a proof, not a heuristic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .homog import c_poly, d_poly, g_poly, h_spec
from .laurent import FAMILIES, LaurentPoly, ONE, ZERO, q_fact


class BadIndexError(ValueError):
    """Raised for (m, k) outside a family's defined range."""


class SingularSampleError(ArithmeticError):
    """Raised when a denominator factor vanishes at a sample point."""


@dataclass(frozen=True)
class PolyMatrix:
    entries: tuple[tuple[LaurentPoly, ...], ...]

    def __post_init__(self):
        if any(len(row) != len(self.entries) for row in self.entries):
            raise ValueError("matrix must be square")

    @classmethod
    def from_rows(cls, rows) -> "PolyMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij) -> LaurentPoly:
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return PolyMatrix.from_rows(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)
        )

    def det(self) -> LaurentPoly:
        """Exact determinant by cofactor expansion memoized on column sets."""
        n = self.dim
        if n == 0:
            return ONE
        entries = self.entries

        @lru_cache(maxsize=None)
        def minor(row: int, cols: frozenset) -> LaurentPoly:
            if row == n:
                return ONE
            total = ZERO
            for sign_idx, j in enumerate(sorted(cols)):
                e = entries[row][j]
                if e.is_zero:
                    continue
                sub = minor(row + 1, cols - {j})
                if sub.is_zero:
                    continue
                term = e * sub
                total = total + (term if sign_idx % 2 == 0 else -term)
            return total

        return minor(0, frozenset(range(n)))


def detsum_expansion(a: PolyMatrix, b: PolyMatrix) -> LaurentPoly:
    """det(A+B) via the sum over column subsets drawn from A versus B."""
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    n = a.dim
    total = ZERO
    for r in range(n + 1):
        for cols in combinations(range(n), r):
            chosen = set(cols)
            rows = [
                [a[i, j] if j in chosen else b[i, j] for j in range(n)]
                for i in range(n)
            ]
            total = total + PolyMatrix.from_rows(rows).det()
    return total


# ---------------------------------------------------------------------------
# determinant route
# ---------------------------------------------------------------------------

def _check_index(m: int, k: int):
    if m < 0 or k < 0:
        raise BadIndexError(f"negative index (m={m}, k={k})")
    if k >= m and k > 0:
        raise BadIndexError(f"k must satisfy 0 <= k < m (got m={m}, k={k})")


def _det_P(m: int, k: int) -> LaurentPoly:
    rows = [
        [h_spec(m - k - i + 2 * j - 1, i - j + 2, i - j + 2, 1) for j in range(k)]
        for i in range(k)
    ]
    return PolyMatrix.from_rows(rows).det()


def _det_Q(m: int, k: int) -> LaurentPoly:
    rows = [
        [c_poly(m - k + i + 1, m - k + j) for j in range(k)] for i in range(k)
    ]
    return PolyMatrix.from_rows(rows).det()


def _det_G(m: int, k: int) -> LaurentPoly:
    rows = [
        [g_poly(m - k + i + 1, m - k + j) for j in range(k)] for i in range(k)
    ]
    return PolyMatrix.from_rows(rows).det()


def _det_H(m: int, k: int) -> LaurentPoly:
    rows = [
        [d_poly(m - k + i + 1, m - k + j) for j in range(k)] for i in range(k)
    ]
    return PolyMatrix.from_rows(rows).det()


_DETS = {"P": _det_P, "Q": _det_Q, "G": _det_G, "H": _det_H}


@lru_cache(maxsize=None)
def _family_det(family: str, m: int, k: int) -> LaurentPoly:
    # internal: also defined at k == m, where the first determinant column
    # vanishes identically for P and Q (needed by the summation identities)
    return _DETS[family](m, k)


def faulhaber_P(m: int, k: int) -> LaurentPoly:
    _check_index(m, k)
    return _family_det("P", m, k)


def faulhaber_Q(m: int, k: int) -> LaurentPoly:
    _check_index(m, k)
    return _family_det("Q", m, k)


def salie_G(m: int, k: int) -> LaurentPoly:
    _check_index(m, k)
    return _family_det("G", m, k)


def salie_H(m: int, k: int) -> LaurentPoly:
    _check_index(m, k)
    return _family_det("H", m, k)


def det_route(family: str, m: int, k: int) -> LaurentPoly:
    _check_index(m, k)
    return _family_det(family, m, k)


# ---------------------------------------------------------------------------
# forward matrices and their claimed inverses
# ---------------------------------------------------------------------------

def forward_entry(family: str, k: int, m: int) -> LaurentPoly:
    """Entry (k, m) of the forward lower-triangular matrix of a family.

    The P matrix is indexed from 0, the Q/G/H matrices from 1.
    """
    if family == "P":
        return h_spec(2 * m - k, k - m + 1, k - m + 1, 1)
    if family == "Q":
        return c_poly(k, m)
    if family == "G":
        return g_poly(k, m)
    if family == "H":
        return d_poly(k, m)
    raise ValueError(f"unknown family {family!r}")


def _index_range(family: str, n: int) -> range:
    return range(0, n + 1) if family == "P" else range(1, n + 1)


def build_forward_matrix(family: str, n: int) -> PolyMatrix:
    if n < 1:
        raise ValueError("matrix size must be at least 1")
    idx = _index_range(family, n)
    return PolyMatrix.from_rows(
        [forward_entry(family, k, m) for m in idx] for k in idx
    )


def _inverse_numerator(family: str, k: int, m: int) -> LaurentPoly:
    """Numerator polynomial of the claimed inverse entry (k, m), m <= k."""
    poly = _family_det(family, k, k - m)
    if family == "P":
        return q_fact(m) * poly
    if family == "Q":
        return (ONE - LaurentPoly.term(1, 1)) ** (k - m + 1) * poly
    return poly


def _inverse_denominator_at(family: str, k: int, m: int, q0: Fraction) -> Fraction:
    """Denominator of the claimed inverse entry (k, m) evaluated at q0."""
    if family == "P":
        return q_fact(k + 1)(q0)
    if family == "Q":
        d = Fraction(1)
        for i in range(k - m + 1):
            d *= 1 - q0 ** (2 * k - 2 * i + 1)
        return d
    if family == "G":
        d = Fraction(1)
        for i in range(k - m + 1):
            d *= 1 + q0 ** (k - i)
        return d
    d = (1 + q0) ** (k - m + 1)
    for i in range(k - m + 1):
        d *= 1 + q0 ** (2 * k - 2 * i - 1)
    return d


def _inverse_entry_at(family: str, k: int, m: int, q0: Fraction) -> Fraction:
    if m > k:
        return Fraction(0)
    den = _inverse_denominator_at(family, k, m, q0)
    if den == 0:
        raise SingularSampleError(f"denominator vanishes at q0={q0}")
    sign = -1 if (k - m) % 2 else 1
    return sign * _inverse_numerator(family, k, m)(q0) / den


def sample_points(count: int) -> list[Fraction]:
    """Deterministic distinct positive rationals, none equal to 0 or 1."""
    pts: list[Fraction] = []
    seen = set()
    n = 2
    while len(pts) < count:
        for d in (1, 2, 3):
            f = Fraction(n, d)
            if f != 1 and f not in seen:
                seen.add(f)
                pts.append(f)
                if len(pts) == count:
                    break
        n += 1
    return pts


def _max_deg(p: LaurentPoly) -> int:
    return 0 if p.is_zero else p.max_exp


def _pair_degree_bound(family: str, n: int) -> int:
    """Degree bound for the denominator-cleared inverse-pair identity."""
    idx = list(_index_range(family, n))
    fwd_deg = max(
        _max_deg(forward_entry(family, k, m)) for k in idx for m in idx if m <= k
    )
    bound = 0
    for k in idx:
        for l in idx:
            if l > k:
                continue
            num = max(
                _max_deg(_inverse_numerator(family, mid, l))
                for mid in idx
                if l <= mid <= k
            )
            den = sum(
                _den_degree(family, mid, l) for mid in idx if l <= mid <= k
            )
            bound = max(bound, fwd_deg + num + den)
    return bound


def _den_degree(family: str, k: int, m: int) -> int:
    if family == "P":
        return sum(i for i in range(1, k + 2))  # deg of the q-factorial [k+1]!
    if family == "Q":
        return sum(2 * k - 2 * i + 1 for i in range(k - m + 1))
    if family == "G":
        return sum(k - i for i in range(k - m + 1))
    return (k - m + 1) + sum(2 * k - 2 * i - 1 for i in range(k - m + 1))


def verify_inverse_pair(
    family: str, n: int, points: list[Fraction] | None = None
) -> bool:
    """Check forward * claimed-inverse == identity at rational points.

    With the default point set, the number of points exceeds the degree bound
    of the cleared identity, so success proves the polynomial statement.
    """
    idx = list(_index_range(family, n))
    if points is None:
        points = sample_points(_pair_degree_bound(family, n) + 1)
    fwd = [[forward_entry(family, k, m) for m in idx] for k in idx]
    size = len(idx)
    for q0 in points:
        a = [[fwd[i][j](q0) for j in range(size)] for i in range(size)]
        b = [
            [_inverse_entry_at(family, idx[i], idx[j], q0) for j in range(size)]
            for i in range(size)
        ]
        for i in range(size):
            for j in range(size):
                val = sum(a[i][t] * b[t][j] for t in range(j, i + 1)) if j <= i else 0
                if val != (1 if i == j else 0):
                    return False
    return True


# ---------------------------------------------------------------------------
# rational triangular inversion and the submatrix-determinant identity
# ---------------------------------------------------------------------------

def invert_lower_triangular(a: list[list[Fraction]]) -> list[list[Fraction]]:
    """Inverse of a lower-triangular rational matrix by forward substitution."""
    n = len(a)
    b = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        for i in range(j, n):
            if i == j:
                rhs = Fraction(1)
            else:
                rhs = Fraction(0)
            rhs -= sum(a[i][t] * b[t][j] for t in range(j, i))
            if a[i][i] == 0:
                raise ZeroDivisionError("singular triangular matrix")
            b[i][j] = rhs / a[i][i]
    return b


def fraction_det(a: list[list[Fraction]]) -> Fraction:
    """Determinant of a rational matrix by Gaussian elimination."""
    n = len(a)
    a = [row[:] for row in a]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            factor = a[r][col] / a[col][col]
            if factor:
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return det


def verify_detinv_consistency(
    family: str, m: int, k: int, points: list[Fraction] | None = None
) -> bool:
    """Inverse entries by back-substitution match the submatrix-determinant
    formula B[n,k] = (-1)^(n-k) det(A_{k+i+1,k+j}) / (A_kk ... A_nn)."""
    _check_index(m, k)
    if points is None:
        points = sample_points(3)
    idx = list(_index_range(family, m))
    size = len(idx)
    fwd = [[forward_entry(family, r, c) for c in idx] for r in idx]
    row = size - 1
    col = size - 1 - k
    for q0 in points:
        a = [[fwd[i][j](q0) for j in range(size)] for i in range(size)]
        if any(a[i][i] == 0 for i in range(size)):
            raise SingularSampleError(f"singular diagonal at q0={q0}")
        b = invert_lower_triangular(a)
        sub = [
            [a[col + i + 1][col + j] for j in range(row - col)]
            for i in range(row - col)
        ]
        diag = Fraction(1)
        for j in range(col, row + 1):
            diag *= a[j][j]
        sign = -1 if (row - col) % 2 else 1
        if b[row][col] != sign * fraction_det(sub) / diag:
            return False
    return True


# ---------------------------------------------------------------------------
# polynomial extraction via inversion + interpolation (the "invert" route)
# ---------------------------------------------------------------------------

def interpolate_poly(points: list[Fraction], values: list[Fraction]) -> LaurentPoly:
    """Interpolate and convert to an integer polynomial."""
    coeffs = _newton_interpolate(points, values)
    ints = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError("interpolated coefficients are not integers")
        ints.append(c.numerator)
    return LaurentPoly(ints)


def _newton_interpolate(points, values) -> list[Fraction]:
    n = len(points)
    divided = [Fraction(v) for v in values]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            divided[i] = (divided[i] - divided[i - 1]) / (
                points[i] - points[i - level]
            )
    # Horner expansion of the Newton form
    coeffs = [Fraction(0)] * n
    for i in reversed(range(n)):
        # coeffs <- coeffs * (x - points[i]) + divided[i]
        new_coeffs = [Fraction(0)] * n
        for j in range(n - 1):
            new_coeffs[j + 1] += coeffs[j]
            new_coeffs[j] -= points[i] * coeffs[j]
        new_coeffs[0] += divided[i]
        coeffs = new_coeffs
    return coeffs


def _invert_degree_bound(family: str, m: int, k: int) -> int:
    """Degree bound for the family polynomial from its defining submatrix."""
    if k == 0:
        return 0
    if family == "P":
        rows = [
            [h_spec(m - k - i + 2 * j - 1, i - j + 2, i - j + 2, 1) for j in range(k)]
            for i in range(k)
        ]
    else:
        gen = {"Q": c_poly, "G": g_poly, "H": d_poly}[family]
        rows = [[gen(m - k + i + 1, m - k + j) for j in range(k)] for i in range(k)]
    return sum(max(_max_deg(e) for e in row) for row in rows)


def _invert_clearing_at(family: str, m: int, k: int, q0: Fraction) -> Fraction:
    """Sign and denominator clearing mapping an inverse entry back to the
    family polynomial value at q0."""
    sign = -1 if k % 2 else 1
    if family == "P":
        return sign * q_fact(m + 1)(q0) / q_fact(m - k)(q0)
    if family == "Q":
        c = Fraction(1)
        for i in range(k + 1):
            c *= 1 - q0 ** (2 * m - 2 * i + 1)
        return sign * c / (1 - q0) ** (k + 1)
    if family == "G":
        c = Fraction(1)
        for i in range(k + 1):
            c *= 1 + q0 ** (m - i)
        return sign * c
    c = (1 + q0) ** (k + 1)
    for i in range(k + 1):
        c *= 1 + q0 ** (2 * m - 2 * i - 1)
    return sign * c


def invert_route_row(family: str, m: int) -> dict[int, LaurentPoly]:
    """All family polynomials with first index m, recovered from the exact
    rational inverse of the forward matrix by interpolation."""
    if m < 1:
        raise BadIndexError("m must be at least 1")
    ks = range(0, m)
    bound = max(_invert_degree_bound(family, m, k) for k in ks)
    points = sample_points(bound + 1)
    idx = list(_index_range(family, m))
    size = len(idx)
    fwd = [[forward_entry(family, r, c) for c in idx] for r in idx]
    values: dict[int, list[Fraction]] = {k: [] for k in ks}
    for q0 in points:
        a = [[fwd[i][j](q0) for j in range(size)] for i in range(size)]
        b = invert_lower_triangular(a)
        for k in ks:
            entry = b[size - 1][size - 1 - k]
            values[k].append(entry * _invert_clearing_at(family, m, k, q0))
    return {k: interpolate_poly(points, values[k]) for k in ks}


def invert_route(family: str, m: int, k: int) -> LaurentPoly:
    _check_index(m, k)
    if m == 0:
        return ONE
    return invert_route_row(family, m)[k]


# ---------------------------------------------------------------------------
# vanishing boundary sum
# ---------------------------------------------------------------------------

def verify_dstr_vanishing(m: int, t0: Fraction) -> bool:
    """The alternating boundary sum of d- and H-values is exactly zero."""
    t0 = Fraction(t0)
    if t0 <= 0 or t0 == 1:
        raise ValueError("t0 must be positive and distinct from 1")
    total = Fraction(0)
    for j in range(1, m + 1):  # j = m - k
        d_val = d_poly(m, j)(t0)
        if j == 1:
            h_val = Fraction(1)
        else:
            h_val = _family_det("H", j, j - 1)(t0)
        den = (1 + t0) ** j
        for i in range(j):
            den *= 1 + t0 ** (2 * (j - i) - 1)
        sign = -1 if j % 2 else 1
        total += sign * d_val * h_val / den
    return total == 0
