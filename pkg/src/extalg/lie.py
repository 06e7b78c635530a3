"""Derivation differentials on E(V) dual to a bracket on g = V^*.

A bracket is given by structure constants c[i, j, k] for i < j, meaning
[x_i, x_j] = sum_k c[i, j, k] x_k. Dualizing gives d(e_k) = sum_{i<j}
c[i, j, k] e_i ^ e_j, extended to all of E(V) by the graded Leibniz rule.
d^2 = 0 exactly when the bracket satisfies the Jacobi identity; the Jacobi
check here expands brackets directly and never touches d.
"""
from itertools import combinations
from math import comb

from .exactla import Matrix, rank
from .exterior import MultiVector, indices, monomials, wedge
from .fields import QQ

__all__ = [
    "Bracket", "Derivation", "NotALieAlgebra",
    "derivation_from_bracket", "extend_derivation", "is_differential",
    "jacobi_holds", "jacobi_violation", "lie_cohomology", "differential_matrix",
    "abelian", "sl2",
]


class NotALieAlgebra(ValueError):
    pass


class Bracket:
    """Antisymmetric bracket on a ``dim``-dimensional space.

    ``c`` maps (i, j, k) with 1 <= i < j <= dim to the coefficient of x_k in
    [x_i, x_j]. Passing i > j is accepted and stored negated.
    """

    def __init__(self, dim, c=None, field=QQ):
        self.dim = int(dim)
        self.field = field
        table = {}
        for (i, j, k), v in (c or {}).items():
            if not (1 <= i <= self.dim and 1 <= j <= self.dim and 1 <= k <= self.dim):
                raise ValueError(f"structure constant index ({i}, {j}, {k}) out of range 1..{self.dim}")
            if i == j:
                raise ValueError("[x_i, x_i] is zero by antisymmetry; do not pass i == j")
            v = field.reduce(field(v))
            if i > j:
                i, j, v = j, i, field.reduce(-v)
            x = field.reduce(table.get((i, j, k), 0) + v)
            if x:
                table[(i, j, k)] = x
            else:
                table.pop((i, j, k), None)
        self.c = table

    def bracket_basis(self, i, j):
        """[x_i, x_j] as a coefficient dict k -> value."""
        if i == j:
            return {}
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        return {k: self.field.reduce(sign * v) for (a, b, k), v in self.c.items() if a == i and b == j}

    def bracket(self, x, y):
        """Bracket of two vectors given as dicts k -> coefficient."""
        red = self.field.reduce
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, v in self.bracket_basis(i, j).items():
                    out[k] = red(out.get(k, 0) + a * b * v)
        return {k: v for k, v in out.items() if v}

    def __repr__(self):
        return f"Bracket(dim={self.dim}, nnz={len(self.c)})"


class Derivation:
    """Degree-1 map V -> wedge^2 V, stored as the images d(e_i)."""

    def __init__(self, n, images, field=QQ):
        self.n = n
        self.field = field
        imgs = {}
        for i, v in images.items():
            if not 1 <= i <= n:
                raise ValueError(f"generator index {i} out of range")
            if v.n != n:
                raise ValueError("image lives in the wrong exterior algebra")
            if not v.is_homogeneous(2):
                raise ValueError(f"d(e{i}) must be homogeneous of grade 2")
            if v:
                imgs[i] = v
        self.images = imgs

    def image(self, i):
        return self.images.get(i, MultiVector.zero(self.n, self.field))


def derivation_from_bracket(b):
    """Transpose of the structure constants: d(e_k) = sum_{i<j} c[i,j,k] e_i ^ e_j."""
    imgs = {}
    for (i, j, k), v in b.c.items():
        imgs.setdefault(k, {})[(1 << (i - 1)) | (1 << (j - 1))] = v
    return Derivation(b.dim, {k: MultiVector(b.dim, t, b.field) for k, t in imgs.items()}, b.field)


def _extend_monomial(d, m):
    """d(e_{i1} ^ ... ^ e_{ir}) = sum_j (-1)^(j-1) e_{i1} ^ .. d(e_ij) .. ^ e_ir."""
    n, F = d.n, d.field
    idx = indices(m)
    total = MultiVector.zero(n, F)
    for j, i in enumerate(idx):
        img = d.images.get(i)
        if img is None:
            continue
        left = MultiVector._raw(n, {sum(1 << (t - 1) for t in idx[:j]): F.one}, F)
        right = MultiVector._raw(n, {sum(1 << (t - 1) for t in idx[j + 1:]): F.one}, F)
        term = wedge(wedge(left, img), right)
        total = total + (term if j % 2 == 0 else -term)
    return total


def extend_derivation(d, a):
    """Apply the unique degree-1 derivation extending ``d`` to ``a``."""
    if a.n != d.n:
        raise ValueError(f"E({a.n}) element given to a derivation on E({d.n})")
    d.field.check_same(a.field)
    out = MultiVector.zero(d.n, d.field)
    for m, c in a.items():
        out = out + _extend_monomial(d, m).scale(c)
    return out


def is_differential(d):
    """True iff d(d(e_k)) == 0 for every generator, which forces d^2 == 0 everywhere."""
    for k in range(1, d.n + 1):
        if extend_derivation(d, d.image(k)):
            return False
    return True


def jacobi_violation(b):
    """First basis triple (i, j, k) with [x,[y,z]] + [y,[z,x]] + [z,[x,y]] != 0, or None."""
    red = b.field.reduce
    for i, j, k in combinations(range(1, b.dim + 1), 3):
        x, y, z = {i: 1}, {j: 1}, {k: 1}
        acc = {}
        for p, q, r in ((x, y, z), (y, z, x), (z, x, y)):
            for t, v in b.bracket(p, b.bracket(q, r)).items():
                acc[t] = red(acc.get(t, 0) + v)
        if any(acc.values()):
            return (i, j, k)
    return None


def jacobi_holds(b):
    """Brute-force Jacobi identity on all basis triples.

    Triples with a repeated element vanish by antisymmetry, so distinct
    triples suffice.
    """
    return jacobi_violation(b) is None


def differential_matrix(d, r):
    """Matrix of the extended derivation from grade r to grade r+1."""
    src = monomials(d.n, r)
    dst = {m: i for i, m in enumerate(monomials(d.n, r + 1))}
    ent = {}
    for j, m in enumerate(src):
        for mm, c in _extend_monomial(d, m).items():
            ent[(dst[mm], j)] = c
    return Matrix(len(dst), len(src), ent, d.field)


def lie_cohomology(b):
    """Dimensions of H^r(E(V), d) for r = 0..dim."""
    d = derivation_from_bracket(b)
    if not is_differential(d):
        raise NotALieAlgebra(f"Jacobi identity fails: {jacobi_violation(b)}")
    n = b.dim
    ranks = [rank(differential_matrix(d, r)) for r in range(n + 1)]
    return [comb(n, r) - ranks[r] - (ranks[r - 1] if r else 0) for r in range(n + 1)]


def abelian(dim, field=QQ):
    return Bracket(dim, {}, field)


def sl2(field=QQ):
    """[x1,x2] = x3, [x2,x3] = x1, [x3,x1] = x2."""
    return Bracket(3, {(1, 2, 3): 1, (2, 3, 1): 1, (3, 1, 2): 1}, field)
