"""Incremental sparse row echelon form over an exact field.

Rows are dicts ``column index -> nonzero scalar``.  The leading entry of a
row is its largest column index; stored pivot rows are scaled to leading
coefficient 1.  Only head reduction is performed, which is all that rank
and membership questions need.
"""

from __future__ import annotations


class SparseEchelon:
    def __init__(self):
        self.pivots = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        """Head-reduce a copy of ``row``; the result is empty iff row is in the span."""
        row = dict(row)
        pivots = self.pivots
        while row:
            lead = max(row)
            piv = pivots.get(lead)
            if piv is None:
                return row
            f = row[lead]
            for col, v in piv.items():
                old = row.get(col)
                if old is None:
                    row[col] = -f * v
                else:
                    s = old - f * v
                    if s:
                        row[col] = s
                    else:
                        del row[col]
        return row

    def add(self, row: dict) -> int | None:
        """Insert ``row``; returns the new pivot column, or None if dependent."""
        row = self.reduce(row)
        if not row:
            return None
        lead = max(row)
        inv = row[lead].inverse()
        self.pivots[lead] = {c: v * inv for c, v in row.items()}
        return lead

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)

    def rank(self) -> int:
        return len(self.pivots)
