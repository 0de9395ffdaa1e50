"""Weighted non-intersecting lattice paths and the determinant shortcut.

Paths take unit steps east or north.  "Non-intersecting" means vertex
disjoint: two paths of a family never share a lattice point.  Families are
enumerated by depth-first placement with on-the-fly disjointness pruning;
the determinant of single-pair weighted sums gives the same totals and is
used as the fast route.
"""
from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Iterator, Mapping, NamedTuple, Sequence

from .laurent import LaurentPoly, ONE, ZERO
from .coeffs import BadIndexError, PolyMatrix


class LatticePoint(NamedTuple):
    x: int
    y: int


LatticePath = tuple[LatticePoint, ...]
PathFamily = tuple[LatticePath, ...]

_Q = LaurentPoly.term(1, 1)
_Q2 = LaurentPoly.term(1, 2)
_ONE_PLUS_Q = ONE + _Q
_Q_PLUS_Q2 = _Q + _Q2


def paths_between(a: LatticePoint, b: LatticePoint) -> Iterator[LatticePath]:
    """All monotone (east/north) paths from a to b."""
    a, b = LatticePoint(*a), LatticePoint(*b)
    if b.x < a.x or b.y < a.y:
        return
    east = b.x - a.x
    north = b.y - a.y
    for north_positions in combinations(range(east + north), north):
        chosen = set(north_positions)
        pts = [a]
        x, y = a
        for step in range(east + north):
            if step in chosen:
                y += 1
            else:
                x += 1
            pts.append(LatticePoint(x, y))
        yield tuple(pts)


def enumerate_nonintersecting(
    starts: Sequence[LatticePoint], ends: Sequence[LatticePoint]
) -> list[PathFamily]:
    """All vertex-disjoint families (starts[i] -> ends[i])."""
    n = len(starts)
    if n != len(ends):
        raise ValueError("starts and ends differ in length")
    families: list[PathFamily] = []

    def place(i: int, used: set[LatticePoint], chosen: list[LatticePath]):
        if i == n:
            families.append(tuple(chosen))
            return
        for path in paths_between(starts[i], ends[i]):
            if any(p in used for p in path):
                continue
            used.update(path)
            chosen.append(path)
            place(i + 1, used, chosen)
            chosen.pop()
            used.difference_update(path)

    place(0, set(), [])
    return families


def single_path_weight_sum(
    a: LatticePoint,
    b: LatticePoint,
    per_column_weights: Mapping[int, LaurentPoly],
) -> LaurentPoly:
    """Sum over monotone paths a -> b of the product of vertical-step column
    weights; horizontal steps weigh 1.  Zero when b is unreachable."""
    a, b = LatticePoint(*a), LatticePoint(*b)
    if b.x < a.x or b.y < a.y:
        return ZERO
    height = b.y - a.y
    # column-by-column dynamic program over arrival heights
    column = [ONE] + [ZERO] * height
    for x in range(a.x, b.x + 1):
        w = per_column_weights.get(x, ONE)
        for h in range(1, height + 1):
            column[h] = column[h] + w * column[h - 1]
        # moving east keeps the height profile
    return column[height]


def lgv_determinant(
    starts: Sequence[LatticePoint],
    ends: Sequence[LatticePoint],
    per_column_weights: Mapping[int, LaurentPoly],
) -> LaurentPoly:
    """det over (i, j) of the single-pair sums starts[j] -> ends[i]."""
    n = len(starts)
    rows = [
        [single_path_weight_sum(starts[j], ends[i], per_column_weights) for j in range(n)]
        for i in range(n)
    ]
    return PolyMatrix.from_rows(rows).det()


# ---------------------------------------------------------------------------
# start / end configurations
# ---------------------------------------------------------------------------

def pq_config(m: int, k: int) -> tuple[list[LatticePoint], list[LatticePoint]]:
    """Start/end points whose weighted families give P and Q."""
    if k == 0:
        return [], []
    if not 1 <= k < m:
        raise BadIndexError(f"need 1 <= k < m (got m={m}, k={k})")
    starts = [LatticePoint(2 * i, -2 * i) for i in range(k)]
    ends = [LatticePoint(2 * i + 3, m - k - i - 1) for i in range(k)]
    return starts, ends


def gh_config(m: int, k: int) -> tuple[list[LatticePoint], list[LatticePoint]]:
    """Start/end points whose weighted families give G and H."""
    if k == 0:
        return [], []
    if not 1 <= k < m:
        raise BadIndexError(f"need 1 <= k < m (got m={m}, k={k})")
    starts = [LatticePoint(2 * i, -2 * i) for i in range(k)]
    ends = [LatticePoint(2 * i + 2, m - k - 1 - i) for i in range(k)]
    return starts, ends


# ---------------------------------------------------------------------------
# step statistics
# ---------------------------------------------------------------------------

def vertical_columns(family: PathFamily) -> Counter:
    """Counter mapping x-coordinate to the number of vertical steps there."""
    sigma: Counter = Counter()
    for path in family:
        for p, nxt in zip(path, path[1:]):
            if nxt.x == p.x:
                sigma[p.x] += 1
    return sigma


def starts_vertically(family: PathFamily) -> list[bool]:
    return [len(path) > 1 and path[1].x == path[0].x for path in family]


def ends_vertically(family: PathFamily) -> list[bool]:
    return [len(path) > 1 and path[-1].x == path[-2].x for path in family]


def path_steps(path: LatticePath) -> str:
    """Serialize a path as a string of E/N steps (debug dump format)."""
    return "".join(
        "N" if nxt.x == p.x else "E" for p, nxt in zip(path, path[1:])
    )


def family_steps(family: PathFamily) -> str:
    return " ".join(path_steps(p) for p in family)


# ---------------------------------------------------------------------------
# family weights
# ---------------------------------------------------------------------------

def weight_P(family: PathFamily) -> LaurentPoly:
    """q per vertical step in an even column."""
    sigma = vertical_columns(family)
    e = sum(c for x, c in sigma.items() if x % 2 == 0)
    return LaurentPoly.term(1, e)


def weight_Q(family: PathFamily) -> LaurentPoly:
    """q^2 per vertical step in an even column, with the path-opening
    vertical step weighing q^2 + q instead."""
    total = ONE
    for path in family:
        for i, (p, nxt) in enumerate(zip(path, path[1:])):
            if nxt.x != p.x:
                continue
            if p.x % 2 == 0:
                total = total * (_Q_PLUS_Q2 if i == 0 else _Q2)
    return total


def weight_G(family: PathFamily) -> LaurentPoly:
    """Closed product form of the subset-summed weights for the G family."""
    k = len(family)
    sigma = vertical_columns(family)
    total = LaurentPoly.term(1, sigma[2 * k])
    for i in range(k):
        total = total * (
            LaurentPoly.term(1, sigma[2 * i - 1]) + LaurentPoly.term(1, sigma[2 * i])
        )
    return total


def weight_H(family: PathFamily) -> LaurentPoly:
    """Closed product form of the subset-summed weights for the H family."""
    k = len(family)
    sigma = vertical_columns(family)
    f_flags = starts_vertically(family)
    total = _ONE_PLUS_Q ** sum(f_flags) * LaurentPoly.term(1, 2 * sigma[2 * k])
    for i in range(k):
        total = total * (
            LaurentPoly.term(1, 2 * sigma[2 * i - 1])
            + LaurentPoly.term(1, 2 * sigma[2 * i] - int(f_flags[i]))
        )
    return total


def weight_alt(family: PathFamily, scheme: str) -> LaurentPoly:
    """Alternative weight placements; totals agree with weight_G / weight_H."""
    k = len(family)
    sigma = vertical_columns(family)
    if scheme == "G_alt":
        total = LaurentPoly.term(1, sigma[0])
        for i in range(k):
            total = total * (
                LaurentPoly.term(1, sigma[2 * i + 2])
                + LaurentPoly.term(1, sigma[2 * i + 3])
            )
        return total
    if scheme == "H_alt":
        fbar = ends_vertically(family)
        total = _ONE_PLUS_Q ** sum(fbar) * LaurentPoly.term(1, 2 * sigma[0])
        for i in range(k):
            total = total * (
                LaurentPoly.term(1, 2 * sigma[2 * i + 2] - int(fbar[i]))
                + LaurentPoly.term(1, 2 * sigma[2 * i + 3])
            )
        return total
    raise ValueError(f"unknown scheme {scheme!r}")


# ---------------------------------------------------------------------------
# literal subset weights (the slow oracle the product forms must match)
# ---------------------------------------------------------------------------

def subset_weight(family: PathFamily, subset: frozenset | set, scheme: str) -> LaurentPoly:
    """Weight of one family for one subset choice, taken literally."""
    chosen = set(subset)
    total = ONE
    for path_idx, path in enumerate(family):
        n_steps = len(path) - 1
        for i, (p, nxt) in enumerate(zip(path, path[1:])):
            if nxt.x != p.x:
                continue
            x = p.x
            if scheme == "G":
                q_weighted = (x % 2 and (x + 1) // 2 in chosen) or (
                    x % 2 == 0 and x // 2 not in chosen
                )
                if q_weighted:
                    total = total * _Q
            elif scheme == "H":
                q_weighted = (x % 2 and (x + 1) // 2 in chosen) or (
                    x % 2 == 0 and x // 2 not in chosen
                )
                if i == 0:
                    total = total * (_Q_PLUS_Q2 if q_weighted else _ONE_PLUS_Q)
                elif q_weighted:
                    total = total * _Q2
            elif scheme == "G_alt":
                q_weighted = (x % 2 and (x - 3) // 2 in chosen) or (
                    x % 2 == 0 and (x - 2) // 2 not in chosen
                )
                if q_weighted:
                    total = total * _Q
            elif scheme == "H_alt":
                into_end = i == n_steps - 1 and x % 2 == 0 and (x - 2) // 2 == path_idx
                if into_end:
                    total = total * (
                        _ONE_PLUS_Q if path_idx in chosen else _Q_PLUS_Q2
                    )
                else:
                    q_weighted = (x % 2 and (x - 3) // 2 in chosen) or (
                        x % 2 == 0 and (x - 2) // 2 not in chosen
                    )
                    if q_weighted:
                        total = total * _Q2
            else:
                raise ValueError(f"unknown scheme {scheme!r}")
    return total


def subset_weight_total(family: PathFamily, scheme: str) -> LaurentPoly:
    """Sum of the literal subset weights over all 2^k subsets."""
    k = len(family)
    total = ZERO
    for r in range(k + 1):
        for subset in combinations(range(k), r):
            total = total + subset_weight(family, frozenset(subset), scheme)
    return total


# ---------------------------------------------------------------------------
# brute-force and determinant routes per family
# ---------------------------------------------------------------------------

_FAMILY_WEIGHTS = {"P": weight_P, "Q": weight_Q, "G": weight_G, "H": weight_H}


def _config(family: str, m: int, k: int):
    return pq_config(m, k) if family in ("P", "Q") else gh_config(m, k)


def brute_route(family: str, m: int, k: int) -> LaurentPoly:
    """Family polynomial as the weighted count of non-intersecting families."""
    if k == 0:
        return ONE
    starts, ends = _config(family, m, k)
    weigh = _FAMILY_WEIGHTS[family]
    total = ZERO
    for fam in enumerate_nonintersecting(starts, ends):
        total = total + weigh(fam)
    return total


def _pair_sum_with_steps(a: LatticePoint, b: LatticePoint, step_weight) -> LaurentPoly:
    """Brute single-pair sum for step rules that look at step position."""
    total = ZERO
    for path in paths_between(a, b):
        w = ONE
        n_steps = len(path) - 1
        for i, (p, nxt) in enumerate(zip(path, path[1:])):
            if nxt.x == p.x:
                w = w * step_weight(p.x, i == 0, i == n_steps - 1)
        total = total + w
    return total


def lgv_det_route(family: str, m: int, k: int) -> LaurentPoly:
    """Family polynomial via the determinant of single-pair weighted sums."""
    if k == 0:
        return ONE
    starts, ends = _config(family, m, k)
    if family == "P":
        weights = {x: _Q for x in range(0, 2 * k + 4, 2)}
        return lgv_determinant(starts, ends, weights)
    if family == "Q":
        def rule(x, first, last):
            if x % 2:
                return ONE
            return _Q_PLUS_Q2 if first else _Q2
        rows = [
            [_pair_sum_with_steps(starts[j], ends[i], rule) for j in range(k)]
            for i in range(k)
        ]
        return PolyMatrix.from_rows(rows).det()
    # G and H: each determinant entry splits into an odd-column-weighted and
    # an even-column-weighted single-pair sum, summed entrywise.
    if family == "G":
        def rule_in(x, first, last):
            return _Q if x % 2 else ONE

        def rule_out(x, first, last):
            return ONE if x % 2 else _Q
    else:
        def rule_in(x, first, last):
            if first:
                return _Q_PLUS_Q2 if x % 2 else _ONE_PLUS_Q
            return _Q2 if x % 2 else ONE

        def rule_out(x, first, last):
            if first:
                return _ONE_PLUS_Q if x % 2 else _Q_PLUS_Q2
            return ONE if x % 2 else _Q2
    rows = [
        [
            _pair_sum_with_steps(starts[j], ends[i], rule_in)
            + _pair_sum_with_steps(starts[j], ends[i], rule_out)
            for j in range(k)
        ]
        for i in range(k)
    ]
    return PolyMatrix.from_rows(rows).det()
