"""Spliced Tate windows and cohomology tables.

Layout: a module with anchor a is the image of T^a -> T^{a+1}. The projective
term P_j sits at index a - j and the injective term I^j at a + 1 + j.
"""
from dataclasses import dataclass

from ..exactla import rank
from ..fields import QQ
from .modules import ExteriorMatrix, FreeModule, strip_free_summands
from .resolution import (
    minimal_injective_resolution, minimal_projective_resolution, splice_matrix,
)

__all__ = ["TateWindow", "CohomTable", "tate_window", "cohomology_table"]


@dataclass
class TateWindow:
    """Terms T^lo..T^hi (FreeModule) and differentials d^t: T^t -> T^{t+1}, lo <= t < hi."""

    n: int
    lo: int
    hi: int
    terms: dict
    differentials: dict
    field: object = QQ

    def term_ranks(self):
        return [self.terms[t].rank for t in range(self.lo, self.hi + 1)]

    def term_degrees(self):
        """t -> {q: multiplicity}."""
        return {t: self.terms[t].degree_counts() for t in range(self.lo, self.hi + 1)}

    def compositions_vanish(self):
        return all(
            self.differentials[t].then(self.differentials[t + 1]).is_zero()
            for t in range(self.lo, self.hi - 1)
        )

    def is_minimal(self):
        return not any(d.has_scalar_entries() for d in self.differentials.values())

    def homology_dims(self, t):
        """{internal degree: dim H} at an interior term, from exact ranks."""
        T = self.terms[t]
        rng = T.internal_range()
        if rng is None:
            return {}
        din, dout = self.differentials[t - 1], self.differentials[t]
        src, tgt = self.terms[t - 1], self.terms[t + 1]
        out = {}
        for D in range(rng[0], rng[1] + 1):
            h = T.dim(D) - rank(dout.degree_matrix(D, T, tgt)) - rank(din.degree_matrix(D, src, T))
            if h:
                out[D] = h
        return out

    def is_exact(self):
        return all(not self.homology_dims(t) for t in range(self.lo + 1, self.hi))

    def verify(self):
        """(compositions vanish, minimal, exact at interior terms)."""
        return self.compositions_vanish(), self.is_minimal(), self.is_exact()


def tate_window(M, lo, hi):
    """Splice minimal projective and injective resolutions of M over [lo, hi].

    Free summands of M are split off first: they contribute a contractible
    piece and would break minimality at the splice.
    """
    if lo >= hi:
        raise ValueError(f"window needs lo < hi, got [{lo}, {hi}]")
    n, F = M.n, M.field
    a = M.anchor
    M, _ = strip_free_summands(M)
    terms = {t: FreeModule(n, [], F) for t in range(lo, hi + 1)}
    diffs = {}
    if M.is_zero():
        for t in range(lo, hi):
            diffs[t] = ExteriorMatrix(n, [], [], {}, F)
        return TateWindow(n, lo, hi, terms, diffs, F)

    psteps = a - lo
    isteps = hi - a - 1
    P = minimal_projective_resolution(M, max(psteps, 0)) if psteps >= 0 else None
    I = minimal_injective_resolution(M, max(isteps, 0)) if isteps >= 0 else None

    for t in range(lo, hi + 1):
        if t <= a:
            j = a - t
            if P is not None and j < len(P.modules):
                terms[t] = P.modules[j]
        else:
            j = t - a - 1
            if I is not None and j < len(I.modules):
                terms[t] = I.modules[j]

    for t in range(lo, hi):
        src, tgt = terms[t], terms[t + 1]
        if t < a:
            j = a - t - 1  # P_{j+1} -> P_j
            A = P.maps[j] if j < len(P.maps) else None
        elif t == a:
            A = None
            if src.rank and tgt.rank:
                A = splice_matrix(M, P.augmentation, I.augmentation)
        else:
            j = t - a - 1
            A = I.maps[j] if j < len(I.maps) else None
        if A is None:
            A = ExteriorMatrix(n, tgt.gen_degrees, src.gen_degrees, {}, F)
        diffs[t] = A
    return TateWindow(n, lo, hi, terms, diffs, F)


class CohomTable:
    """(p, q) -> dim H^p(F(q)) read off a Tate window; None means unknown.

    Entry (p, q) is the number of generators of degree q in term p + q.
    Generators whose p would fall outside 0..n-1 are kept in ``unplaced``.
    """

    def __init__(self, n, lo, hi, entries, unplaced=None):
        self.n = n
        self.lo = lo
        self.hi = hi
        self.entries = dict(entries)
        self.unplaced = dict(unplaced or {})

    def known(self, p, q):
        return self.lo <= p + q <= self.hi

    def get(self, p, q):
        if not 0 <= p <= self.n - 1:
            return 0
        if not self.known(p, q):
            return None
        return self.entries.get((p, q), 0)

    __getitem__ = lambda self, pq: self.get(*pq)  # noqa: E731

    def twists(self):
        """All q with at least one known entry."""
        return list(range(self.lo - (self.n - 1), self.hi + 1))

    def full_twists(self):
        """q whose whole column p = 0..n-1 lies inside the window."""
        return list(range(self.lo, self.hi - (self.n - 1) + 1))

    def euler_characteristic(self, q):
        vals = [self.get(p, q) for p in range(self.n)]
        if any(v is None for v in vals):
            return None
        return sum(v if p % 2 == 0 else -v for p, v in enumerate(vals))

    def is_empty(self):
        return not any(self.entries.values())

    def to_dict(self):
        """{p: {q: dim}} over all known cells, zeros included."""
        out = {}
        for p in range(self.n - 1, -1, -1):
            row = {}
            for q in self.twists():
                v = self.get(p, q)
                if v is not None:
                    row[q] = v
            out[p] = row
        return out

    def to_text(self):
        """Rows p descending, columns q ascending; '.' is zero and '?' unknown."""
        qs = self.twists()
        cells = {}
        for p in range(self.n):
            for q in qs:
                v = self.get(p, q)
                cells[(p, q)] = "?" if v is None else ("." if v == 0 else str(v))
        w = max([len(str(q)) for q in qs] + [len(c) for c in cells.values()] + [1])
        lw = len(f"p={self.n - 1}")
        lines = []
        for p in range(self.n - 1, -1, -1):
            lines.append(f"p={p}".ljust(lw) + " | " + " ".join(cells[(p, q)].rjust(w) for q in qs))
        lines.append("-" * len(lines[0]))
        lines.append("q".ljust(lw) + " | " + " ".join(str(q).rjust(w) for q in qs))
        return "\n".join(lines)

    def __repr__(self):
        return f"CohomTable(n={self.n}, window=[{self.lo}, {self.hi}])"


def cohomology_table(T):
    """Read H^p(F(q)) = #(degree-q generators of T^{p+q}) off a minimal window."""
    entries, unplaced = {}, {}
    for t in range(T.lo, T.hi + 1):
        for q, m in T.terms[t].degree_counts().items():
            p = t - q
            if 0 <= p <= T.n - 1:
                entries[(p, q)] = m
            else:
                unplaced[(t, q)] = m
    return CohomTable(T.n, T.lo, T.hi, entries, unplaced)
