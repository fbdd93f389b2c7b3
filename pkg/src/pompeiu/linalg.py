"""Exact sparse row spaces over Q, for the finite-ball rank oracles."""
from __future__ import annotations

from fractions import Fraction


class RowSpace:
    """Incrementally built echelon basis of sparse rational rows.

    Rows are ``{column: value}`` dicts.  A stored row has pivot entry 1 at its
    largest column and is free of every pivot that existed when it was added.
    """

    def __init__(self):
        self._rows: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, row) -> dict:
        r = {c: Fraction(v) for c, v in row.items() if v != 0}
        pivots = self._rows
        while True:
            hits = [c for c in r if c in pivots]
            if not hits:
                return r
            # pivot rows only reach columns <= their pivot, so eliminating the
            # largest hit first terminates
            c = max(hits)
            f = r[c]
            for cc, vv in pivots[c].items():
                nv = r.get(cc, 0) - f * vv
                if nv:
                    r[cc] = nv
                else:
                    r.pop(cc, None)

    def add(self, row) -> bool:
        """Insert ``row``; return True when it raised the rank."""
        r = self.reduce(row)
        if not r:
            return False
        # with columns in ball order the largest column is an outer cell touched
        # by few other rows, which keeps fill-in low
        p = max(r)
        inv = 1 / r[p]
        self._rows[p] = {c: v * inv for c, v in r.items()}
        return True

    def contains(self, row) -> bool:
        return not self.reduce(row)


def rank(rows) -> int:
    space = RowSpace()
    for r in rows:
        space.add(r)
    return space.rank
