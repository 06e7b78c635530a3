"""Matroids of vector configurations and Orlik-Solomon algebras.

The Orlik-Solomon algebra is A(M) = E(n)/(I_M + d(I_M)) where I_M is the
face ideal of the independence complex and d is contraction with
u* = e_1^* + ... + e_n^*. In degree r the ideal is spanned by the dependent
monomials of degree r together with d(e_C) for every dependent set C of size
r + 1; products a ^ d(e_C) reduce to these modulo I_M, so nothing is lost.
"""
from dataclasses import dataclass
from itertools import combinations

from .exactla import EchelonBasis, Matrix, rank
from .exterior import DualVector, MultiVector, contract, grade, indices, mono, monomials
from .fields import QQ
from .simplicial import SimplicialComplex, MAX_VERTICES

__all__ = [
    "VectorConfiguration", "Matroid", "OSAlgebra", "NotAMatroid",
    "matroid_from_vectors", "check_exchange", "exchange_violation",
    "orlik_solomon", "complement_betti", "os_ideal_span", "uniform_matroid",
]


class NotAMatroid(ValueError):
    """The independence complex violates the exchange axiom."""


class VectorConfiguration:
    """Linear forms v_1, ..., v_n on k^m, given by coefficient rows."""

    def __init__(self, m, vectors, field=QQ):
        self.m = int(m)
        self.field = field
        rows = []
        for v in vectors:
            v = tuple(field.reduce(field(x)) for x in v)
            if len(v) != self.m:
                raise ValueError(f"form {v} has length {len(v)}, expected {self.m}")
            if not any(v):
                raise ValueError("zero form: a zero linear form defines no hyperplane")
            rows.append(v)
        self.vectors = tuple(rows)

    @property
    def n(self):
        return len(self.vectors)

    def rank_of(self, subset):
        """Rank of the forms indexed by ``subset`` (1-based)."""
        sub = [self.vectors[i - 1] for i in subset]
        if not sub:
            return 0
        return rank(Matrix.from_rows(sub, self.field, ncols=self.m))

    def drop_coordinate(self, j):
        """Configuration with coordinate ``j`` (0-based) removed."""
        return VectorConfiguration(self.m - 1, [v[:j] + v[j + 1:] for v in self.vectors], self.field)

    def __repr__(self):
        return f"VectorConfiguration(m={self.m}, n={self.n})"


class Matroid:
    """A matroid on [n] given by its complex of independent sets."""

    def __init__(self, n, independents):
        if not isinstance(independents, SimplicialComplex):
            faces = {mono(tuple(s)) if len(tuple(s)) else 0 for s in independents}
            independents = SimplicialComplex(n, faces)
        self.n = n
        self.independents = independents

    def is_independent(self, s):
        if not isinstance(s, int):
            s = mono(tuple(s)) if len(tuple(s)) else 0
        return s in self.independents.faces

    @property
    def rank(self):
        return max((grade(f) for f in self.independents.faces), default=0)

    def dependent_sets(self, size):
        ind = self.independents.faces
        return [m for m in monomials(self.n, size) if m not in ind]

    def relabel(self, perm):
        return Matroid(self.n, self.independents.relabel(perm))

    def __repr__(self):
        return f"Matroid(n={self.n}, rank={self.rank}, #independent={len(self.independents)})"


def matroid_from_vectors(cfg):
    """Linear matroid: all subsets of forms that are linearly independent."""
    if cfg.n > MAX_VERTICES:
        raise ValueError(f"exhaustive subset enumeration is limited to n <= {MAX_VERTICES}")
    ind = {0}
    frontier = [()]
    while frontier:
        nxt = []
        for s in frontier:
            start = s[-1] + 1 if s else 1
            for i in range(start, cfg.n + 1):
                t = s + (i,)
                # downward closure: all facets of t must be independent already
                if all(mono(t[:k] + t[k + 1:]) in ind for k in range(len(t))) and cfg.rank_of(t) == len(t):
                    ind.add(mono(t))
                    nxt.append(t)
        frontier = nxt
    return Matroid(cfg.n, SimplicialComplex(cfg.n, ind))


def exchange_violation(m):
    """A pair (X, Y) violating the exchange axiom, or None."""
    faces = sorted(m.independents.faces, key=grade)
    for x in faces:
        gx = grade(x)
        for y in faces:
            if grade(y) <= gx:
                continue
            rest = y & ~x
            ok = False
            while rest:
                b = rest & -rest
                rest ^= b
                if x | b in m.independents.faces:
                    ok = True
                    break
            if not ok:
                return indices(x), indices(y)
    return None


def check_exchange(m):
    """True iff every pair of independent sets satisfies the exchange axiom."""
    return exchange_violation(m) is None


@dataclass(frozen=True)
class OSAlgebra:
    """Graded dimensions and a monomial basis per degree of A(M)."""

    degree_dims: tuple
    degree_bases: tuple

    @property
    def total_dim(self):
        return sum(self.degree_dims)

    def poincare_polynomial(self):
        return list(self.degree_dims)


def os_ideal_span(m, r, field=QQ):
    """Spanning vectors of (I_M + d(I_M)) in degree r, indexed by monomials(n, r)."""
    n = m.n
    cols = {mono_: j for j, mono_ in enumerate(monomials(n, r))}
    u = DualVector.sum_all(n, field)
    vecs = [{cols[s]: field.one} for s in m.dependent_sets(r)]
    for c in m.dependent_sets(r + 1) if r + 1 <= n else ():
        img = contract(u, MultiVector._raw(n, {c: field.one}, field))
        v = {cols[s]: x for s, x in img.items()}
        if v:
            vecs.append(v)
    return vecs


def orlik_solomon(m, field=QQ):
    """Orlik-Solomon algebra of a matroid: per-degree dimensions and monomial bases.

    The basis in each degree is the greedy lexicographic completion of the
    ideal to all of E(n)_r.
    """
    v = exchange_violation(m)
    if v is not None:
        raise NotAMatroid(f"exchange axiom fails for X={set(v[0]) or '{}'}, Y={set(v[1])}")
    dims, bases = [], []
    top = m.rank
    for r in range(0, top + 1):
        mons = monomials(m.n, r)
        last = len(mons) - 1
        # reversed column order: non-pivot columns are then the greedy lex-first completion
        eb = EchelonBasis(field, ({last - j: x for j, x in v.items()} for v in os_ideal_span(m, r, field)))
        basis = [indices(mons[last - j]) for j in reversed(eb.complement(len(mons)))]
        dims.append(len(basis))
        bases.append(tuple(basis))
    while len(dims) > 1 and dims[-1] == 0:
        dims.pop()
        bases.pop()
    return OSAlgebra(tuple(dims), tuple(bases))


def complement_betti(cfg):
    """Betti numbers of the complement of the complexified arrangement (Orlik-Solomon)."""
    if cfg.field != QQ:
        raise ValueError("complement_betti is defined over the rationals")
    return list(orlik_solomon(matroid_from_vectors(cfg), QQ).degree_dims)


def uniform_matroid(r, n):
    """U_{r,n}: every subset of size <= r is independent."""
    return Matroid(n, [c for k in range(r + 1) for c in combinations(range(1, n + 1), k)])
