"""Simplicial complexes, the exterior face ring E(Delta) and reduced (co)homology.

Faces are bitmasks over the vertex set {1, ..., n}, exactly like exterior
monomials, so the face ring E(Delta) = E(n)/I_Delta has the faces of Delta
as its monomial basis. Homology is computed from the contraction complex on
the dual face ring and cohomology from wedging with u = e_1 + ... + e_n; an
internal algebra degree i+1 corresponds to topological index i.
"""
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import comb

from .exactla import Matrix, rank
from .exterior import DualVector, MultiVector, contract, grade, indices, mono, wedge
from .fields import QQ

__all__ = [
    "SimplicialComplex", "HomologyProfile", "HilbertSeries", "from_facets",
    "face_ideal_generators", "reduced_homology", "reduced_cohomology",
    "hilbert_series_face_ring", "boundary_matrix", "coboundary_matrix",
]

MAX_VERTICES = 20


class SimplicialComplex:
    """Downward-closed family of subsets of [n], stored as a set of bitmasks."""

    __slots__ = ("n", "faces", "_by_card")

    def __init__(self, n, faces):
        if n < 0 or n > MAX_VERTICES:
            raise ValueError(f"simplicial complexes are limited to n <= {MAX_VERTICES} vertices, got {n}")
        full = (1 << n) - 1
        faces = frozenset(faces)
        for f in faces:
            if f & ~full:
                raise ValueError(f"face {indices(f)} has vertices outside 1..{n}")
        for f in faces:
            m = f
            while m:
                low = m & -m
                if f ^ low not in faces:
                    raise ValueError(f"not downward closed: {indices(f)} present, {indices(f ^ low)} missing")
                m ^= low
        self.n = n
        self.faces = faces
        by_card = {}
        for f in faces:
            by_card.setdefault(grade(f), []).append(f)
        self._by_card = {k: sorted(v, key=indices) for k, v in by_card.items()}

    def __contains__(self, face):
        if not isinstance(face, int):
            face = mono(face)
        return face in self.faces

    def __len__(self):
        return len(self.faces)

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.n == other.n and self.faces == other.faces

    def __hash__(self):
        return hash((self.n, self.faces))

    def __repr__(self):
        return f"SimplicialComplex(n={self.n}, facets={[list(indices(f)) for f in self.facets()]})"

    @property
    def dim(self):
        """Dimension: largest face cardinality minus one (-1 for {empty}, None for the void complex)."""
        if not self.faces:
            return None
        return max(self._by_card) - 1

    def faces_of_card(self, k):
        """Faces with exactly ``k`` vertices, in lexicographic order."""
        return list(self._by_card.get(k, ()))

    def f_vector(self):
        """f[i] = number of faces of cardinality i (f[0] = 1 counts the empty face)."""
        if not self.faces:
            return ()
        top = max(self._by_card)
        return tuple(len(self._by_card.get(k, ())) for k in range(top + 1))

    def facets(self):
        fs = []
        for f in self.faces:
            if not any(g != f and g & f == f for g in self.faces):
                fs.append(f)
        return sorted(fs, key=lambda f: (grade(f), indices(f)))

    def relabel(self, perm):
        """Apply a vertex permutation given as a dict or list (1-based images)."""
        if not isinstance(perm, dict):
            perm = {i + 1: p for i, p in enumerate(perm)}
        return SimplicialComplex(self.n, {mono(perm[i] for i in indices(f)) for f in self.faces})


def from_facets(n, facets):
    """Downward closure of ``facets`` (plus the empty face)."""
    if n < 0 or n > MAX_VERTICES:
        raise ValueError(f"simplicial complexes are limited to n <= {MAX_VERTICES} vertices, got {n}")
    faces = {0}
    for fct in facets:
        idx = tuple(fct)
        for i in idx:
            if not 1 <= i <= n:
                raise ValueError(f"vertex {i} out of range 1..{n}")
        f = mono(idx) if idx else 0
        # enumerate submasks
        s = f
        while True:
            faces.add(s)
            if s == 0:
                break
            s = (s - 1) & f
    return SimplicialComplex(n, faces)


def face_ideal_generators(cx):
    """Minimal non-faces of the complex, i.e. the monomial generators of I_Delta."""
    out = set()
    full = (1 << cx.n) - 1
    for f in cx.faces:
        rest = full & ~f
        while rest:
            low = rest & -rest
            rest ^= low
            g = f | low
            if g in cx.faces or g in out:
                continue
            m = g
            ok = True
            while m:
                b = m & -m
                if g ^ b not in cx.faces:
                    ok = False
                    break
                m ^= b
            if ok:
                out.add(g)
    return sorted(out, key=lambda g: (grade(g), indices(g)))


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced (co)homology dimensions keyed by topological index i >= -1.

    Only nonzero entries are stored; indexing a missing key gives 0.
    """

    reduced_h: dict = dc_field(default_factory=dict)

    def __getitem__(self, i):
        return self.reduced_h.get(i, 0)

    def betti(self):
        return dict(self.reduced_h)

    def euler_characteristic(self):
        return sum((-1) ** i * d for i, d in self.reduced_h.items())


def _index(faces):
    return {f: j for j, f in enumerate(faces)}


def boundary_matrix(cx, k, field=QQ):
    """Matrix of contraction by u* from card-k faces to card-(k-1) faces."""
    src = cx.faces_of_card(k)
    dst = _index(cx.faces_of_card(k - 1)) if k >= 1 else {}
    u = DualVector.sum_all(cx.n, field)
    ent = {}
    for j, f in enumerate(src):
        img = contract(u, MultiVector._raw(cx.n, {f: field.one}, field))
        for m, c in img.items():
            ent[(dst[m], j)] = c
    return Matrix(len(dst), len(src), ent, field)


def coboundary_matrix(cx, k, field=QQ):
    """Matrix of a -> u ^ a mod I_Delta from E(Delta)^k to E(Delta)^(k+1)."""
    src = cx.faces_of_card(k)
    dst = _index(cx.faces_of_card(k + 1))
    u = MultiVector._raw(cx.n, {1 << i: field.one for i in range(cx.n)}, field)
    ent = {}
    for j, f in enumerate(src):
        img = wedge(u, MultiVector._raw(cx.n, {f: field.one}, field))
        for m, c in img.items():
            if m in dst:  # terms outside Delta lie in I_Delta
                ent[(dst[m], j)] = c
    return Matrix(len(dst), len(src), ent, field)


def reduced_homology(cx, field=QQ):
    """Reduced simplicial homology dims from the dual exterior face ring.

    The card-(i+1) part of E(Delta)* carries the i-dimensional faces, so
    H~_i = dim ker(d on card i+1) - rank(d from card i+2).
    """
    if not cx.faces:
        return HomologyProfile({})
    top = max(cx._by_card)
    ranks = {k: rank(boundary_matrix(cx, k, field)) for k in range(1, top + 2)}
    out = {}
    for k in range(0, top + 1):
        h = len(cx.faces_of_card(k)) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if h:
            out[k - 1] = h
    return HomologyProfile(out)


def reduced_cohomology(cx, field=QQ):
    """Reduced cohomology dims: H^{i+1}(E(Delta), u ^ -) = H~^i(X)."""
    if not cx.faces:
        return HomologyProfile({})
    top = max(cx._by_card)
    ranks = {k: rank(coboundary_matrix(cx, k, field)) for k in range(0, top + 1)}
    out = {}
    for k in range(0, top + 1):
        h = len(cx.faces_of_card(k)) - ranks.get(k, 0) - ranks.get(k - 1, 0)
        if h:
            out[k - 1] = h
    return HomologyProfile(out)


@dataclass(frozen=True)
class HilbertSeries:
    """Hilbert series of the Stanley-Reisner ring as numerator / (1 - t)^d."""

    numerator: tuple
    denominator_exponent: int
    f_vector: tuple = ()

    def coefficients(self, k):
        """First ``k`` coefficients of the power series expansion."""
        d = self.denominator_exponent
        # 1/(1-t)^d = sum_j C(j+d-1, d-1) t^j
        out = []
        for j in range(k):
            s = 0
            for i, a in enumerate(self.numerator):
                if i <= j:
                    s += a * (comb(j - i + d - 1, d - 1) if d else int(j == i))
            out.append(s)
        return out

    def evaluate(self, t):
        t = Fraction(t)
        num = sum(a * t**i for i, a in enumerate(self.numerator))
        return num / (1 - t) ** self.denominator_exponent

    def __str__(self):
        parts = []
        for i, a in enumerate(self.numerator):
            if not a:
                continue
            mag = abs(a)
            body = str(mag) if not i else (("" if mag == 1 else str(mag)) + ("t" if i == 1 else f"t^{i}"))
            parts.append(("- " if a < 0 else "+ ") + body)
        num = " ".join(parts).lstrip("+ ") if parts else "0"
        if num.startswith("- "):
            num = "-" + num[2:]
        if not self.denominator_exponent:
            return num
        return f"({num}) / (1-t)^{self.denominator_exponent}"


def hilbert_series_face_ring(cx):
    """Hilbert series sum_i f[i] t^i / (1-t)^i of k[Delta] over the common denominator."""
    f = cx.f_vector()
    if not f:
        return HilbertSeries((0,), 0, f)
    d = len(f) - 1
    num = [0] * (d + 1)
    for i, fi in enumerate(f):
        # f_i t^i (1-t)^(d-i)
        for j in range(d - i + 1):
            num[i + j] += fi * comb(d - i, j) * (-1) ** j
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return HilbertSeries(tuple(num), d, f)
