"""Reduced rational homology of flag complexes, by exact boundary ranks.

All linear algebra is exact: boundary matrices are integer matrices and
ranks come from fraction-free (Bareiss) elimination on sparse rows. No
floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import FlagComplex


def rank_sparse_int(rows, ncols=None) -> int:
    """Rank over Q of an integer matrix given as sparse rows (dict col->int).

    One-step fraction-free elimination: every surviving row is updated as
    new = (pivot*row - row[c]*pivot_row) / previous_pivot, which stays
    integral (Sylvester identity), so there is no coefficient blow-up beyond
    minors of the input.
    """
    rows = [dict(r) for r in rows if r]
    rank = 0
    prev = 1
    while rows:
        col = min(min(r) for r in rows)
        pick = next(i for i, r in enumerate(rows) if col in r)
        pivot_row = rows.pop(pick)
        pivot = pivot_row[col]
        rank += 1
        nxt = []
        for r in rows:
            factor = r.pop(col, 0)
            new = {}
            for j in set(r) | set(pivot_row):
                if j == col:
                    continue
                num = pivot * r.get(j, 0) - factor * pivot_row.get(j, 0)
                if num:
                    q, rem = divmod(num, prev)
                    if rem:
                        raise AssertionError("fraction-free step not integral")
                    new[j] = q
            if new:
                nxt.append(new)
        rows = nxt
        prev = pivot
    return rank


@dataclass(frozen=True)
class ReducedBettiVector:
    """Ranks of reduced homology over Q, indexed from dimension -1 upward.

    ``betti[0]`` is the rank in dimension -1 (1 exactly for the empty
    complex); ``betti[d+1]`` is the rank in dimension d. ``top_dim`` is the
    largest simplex dimension (-1 for the empty complex).
    """

    betti: tuple
    top_dim: int

    def rank(self, dim: int) -> int:
        i = dim + 1
        if 0 <= i < len(self.betti):
            return self.betti[i]
        return 0

    def reduced_euler(self) -> int:
        """Alternating sum over dimensions, i.e. euler characteristic - 1."""
        return sum((-1) ** (i - 1) * b for i, b in enumerate(self.betti))

    def to_json_doc(self):
        return {str(i - 1): b for i, b in enumerate(self.betti)}


def boundary_rows(levels, d):
    """Columns of the d-th boundary map as sparse rows over (d-1)-simplices.

    Simplices are index-sorted tuples; the sign of the face omitting
    position i is (-1)^i.
    """
    face_index = {s: i for i, s in enumerate(levels[d - 1])}
    rows = []
    for s in levels[d]:
        row = {}
        for i in range(len(s)):
            face = s[:i] + s[i + 1 :]
            row[face_index[face]] = -1 if i % 2 else 1
        rows.append(row)
    return rows


def reduced_betti(L: FlagComplex, cap=None) -> ReducedBettiVector:
    """Exact reduced Betti numbers from augmented boundary matrices."""
    levels = L.simplices_by_dim(cap)
    if not levels:
        return ReducedBettiVector((1,), -1)
    top = len(levels) - 1
    f = [len(lv) for lv in levels]
    # ranks[d] = rank of the boundary map leaving dimension d; the
    # augmentation sends every vertex to the empty simplex.
    ranks = [0] * (top + 2)
    ranks[0] = 1
    for d in range(1, top + 1):
        ranks[d] = rank_sparse_int(boundary_rows(levels, d))
    betti = [0] * (top + 2)
    for d in range(top + 1):
        betti[d + 1] = f[d] - ranks[d] - ranks[d + 1]
    return ReducedBettiVector(tuple(betti), top)


def euler_raag(L: FlagComplex, cap=None) -> int:
    """Euler characteristic of the group defined by ``L``.

    Equals 1 minus the alternating simplex count of ``L``; the empty complex
    gives 1 (trivial group), a single clique gives 0, an edgeless complex on
    n vertices gives 1 - n.
    """
    levels = L.simplices_by_dim(cap)
    return 1 - sum((-1) ** d * len(lv) for d, lv in enumerate(levels))
