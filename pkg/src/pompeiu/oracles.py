"""Finite-ball linear-algebra oracles.

These look at the truncated problem directly: unknowns are the values of ``f``
on a Cayley ball, constraints are translate sums (or mean-value sums) whose
data lies inside the ball.  Everything is exact over Q.
"""
from __future__ import annotations

from fractions import Fraction

from . import free_group as fg
from .linalg import RowSpace


def translate_rows(k: int, radius: int, radii) -> list:
    """Rows ``f -> sum_{x in g K} f(x)`` for ``K = union E_n`` and ``|g| <= R - max K``."""
    radii = sorted(set(radii))
    idx = fg._ball_index(k, radius)
    rows = []
    for g in fg._ball(k, radius - radii[-1]):
        row = {}
        for n in radii:
            for y in fg._sphere(k, n):
                row[idx[fg._mul(g, y)]] = 1
        rows.append(row)
    return rows


def mean_value_rows(k: int, radius: int, n: int, centers_radius: int | None = None) -> list:
    """Rows ``f -> sum_{y in E_n} f(x y) - e_n f(x)`` for ``|x| <= R - n``."""
    idx = fg._ball_index(k, radius)
    e_n = fg.sphere_size(k, n)
    top = radius - n if centers_radius is None else centers_radius
    if top > radius - n:
        raise ValueError("centers would need data outside the ball")
    rows = []
    for x in fg._ball(k, top):
        row = {}
        for y in fg._sphere(k, n):
            c = idx[fg._mul(x, y)]
            row[c] = row.get(c, 0) + 1
        c = idx[x]
        row[c] = row.get(c, 0) - e_n
        rows.append({c: v for c, v in row.items() if v})
    return rows


def span(rows) -> RowSpace:
    space = RowSpace()
    for r in rows:
        space.add(r)
    return space


def forces_zero(space: RowSpace, k: int, inner: int) -> bool:
    """Every solution of the constraint system vanishes on the inner ball."""
    return all(space.contains({i: 1}) for i in range(fg.ball_size(k, inner)))


def family_space(k: int, radius: int, sets) -> RowSpace:
    rows = []
    for s in sets:
        rows.extend(translate_rows(k, radius, s))
    return span(rows)


def pompeiu_forcing(k: int, sets, radius: int = 6, inner: int = 2) -> bool:
    return forces_zero(family_space(k, radius, sets), k, inner)


def satisfies_rows(rows, values) -> bool:
    return all(sum(v * values[c] for c, v in r.items()) == 0 for r in rows)


def mvp_implies_harmonic(k: int, n: int, m: int, radius: int = 6, region: int = 3) -> bool:
    """Whether the radius-``n`` and ``m`` mean-value rows span the harmonic rows on ``|x| <= region``."""
    space = span(mean_value_rows(k, radius, n) + mean_value_rows(k, radius, m))
    return all(space.contains(r) for r in mean_value_rows(k, radius, 1, centers_radius=region))


def kernel_vector(space: RowSpace, ncols: int, free_values) -> list:
    """A solution of ``rows . f = 0`` with prescribed values on non-pivot columns.

    ``free_values(col)`` supplies the value of each free column; pivot
    columns are then solved by back substitution.
    """
    f = [None] * ncols
    pivots = space._rows
    for c in range(ncols):
        if c not in pivots:
            f[c] = Fraction(free_values(c))
    for p in sorted(pivots):
        row = pivots[p]
        f[p] = -sum(v * f[c] for c, v in row.items() if c != p)
    return f
