"""Exact arithmetic in the exterior algebra E(n).

A basis monomial e_{i1} ^ ... ^ e_{ir} (i1 < ... < ir) is stored as the
integer bitmask with bits i1-1, ..., ir-1 set. A :class:`MultiVector` is a
sparse map from such masks to nonzero field elements.
"""
from itertools import combinations
from math import comb

from .fields import QQ, FieldMismatch

__all__ = [
    "MAX_N", "DimensionMismatch", "MultiVector", "DualVector",
    "mono", "indices", "grade", "wedge_sign", "monomials",
    "wedge", "contract", "grade_part", "hodge_dual", "meet", "from_tensor_word",
    "basis", "top",
]

MAX_N = 64


class DimensionMismatch(ValueError):
    """Operands live in exterior algebras on different numbers of generators."""


def mono(*idx):
    """Bitmask of the monomial with the given 1-based indices."""
    if len(idx) == 1 and not isinstance(idx[0], int):
        idx = tuple(idx[0])
    m = 0
    for i in idx:
        if i < 1:
            raise ValueError(f"generator index {i} < 1")
        m |= 1 << (i - 1)
    return m


def indices(m):
    """Sorted 1-based indices of a monomial bitmask."""
    out = []
    i = 1
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return tuple(out)


def grade(m):
    return bin(m).count("1")


def wedge_sign(s, t):
    """Sign of e_S ^ e_T relative to e_{S u T} for disjoint S, T.

    (-1) to the number of pairs (s, t) in S x T with s > t.
    """
    inv = 0
    while t:
        low = t & -t
        inv += bin(s & ~((low << 1) - 1)).count("1")
        t ^= low
    return -1 if inv & 1 else 1


def monomials(n, r=None):
    """Monomials of E(n), grade-major and lexicographic within a grade."""
    grades = range(n + 1) if r is None else [r]
    out = []
    for k in grades:
        if 0 <= k <= n:
            out.extend(mono(c) if c else 0 for c in combinations(range(1, n + 1), k))
    return out


class MultiVector:
    """Element of E(n) over a field; immutable. ``^`` and ``*`` are the wedge."""

    __slots__ = ("n", "field", "_terms", "_hash")

    def __init__(self, n, terms=None, field=QQ):
        n = int(n)
        if n < 0 or n > MAX_N:
            raise ValueError(f"number of generators must be in 0..{MAX_N}, got {n}")
        self.n = n
        self.field = field
        full = (1 << n) - 1
        clean = {}
        red = field.reduce
        for m, c in (terms or {}).items():
            if m & ~full or m < 0:
                raise ValueError(f"monomial {indices(m)} not in E({n})")
            c = red(field(c))
            if c:
                clean[m] = red(clean.get(m, 0) + c)
                if not clean[m]:
                    del clean[m]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n, terms, field):
        obj = object.__new__(cls)
        obj.n = n
        obj.field = field
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, n, idx, coeff=1, field=QQ):
        m = mono(idx) if not isinstance(idx, int) else idx
        return cls(n, {m: coeff}, field)

    @classmethod
    def scalar(cls, n, c=1, field=QQ):
        return cls(n, {0: c}, field)

    @classmethod
    def zero(cls, n, field=QQ):
        return cls._raw(n, {}, field)

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self):
        return iter(sorted(self._terms, key=_mono_key))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def coeff(self, m):
        if not isinstance(m, int):
            m = mono(m)
        return self._terms.get(m, self.field.zero)

    def grades(self):
        return sorted({grade(m) for m in self._terms})

    def is_homogeneous(self, r=None):
        g = self.grades()
        if not g:
            return True
        return len(g) == 1 and (r is None or g[0] == r)

    def _check(self, other):
        if self.n != other.n:
            raise DimensionMismatch(f"E({self.n}) vs E({other.n})")
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other):
        if not isinstance(other, MultiVector):
            if other == 0:
                return self
            other = MultiVector.scalar(self.n, other, self.field)
        self._check(other)
        red = self.field.reduce
        t = dict(self._terms)
        for m, c in other._terms.items():
            x = red(t.get(m, 0) + c)
            if x:
                t[m] = x
            else:
                t.pop(m, None)
        return MultiVector._raw(self.n, t, self.field)

    __radd__ = __add__

    def __neg__(self):
        red = self.field.reduce
        return MultiVector._raw(self.n, {m: red(-c) for m, c in self._terms.items()}, self.field)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, a):
        F = self.field
        a = F.reduce(F(a))
        if not a:
            return MultiVector._raw(self.n, {}, F)
        return MultiVector._raw(self.n, {m: F.reduce(c * a) for m, c in self._terms.items()}, F)

    def __mul__(self, other):
        if isinstance(other, MultiVector):
            return wedge(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if isinstance(other, MultiVector):
            return self.n == other.n and self.field == other.field and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        if not self._terms:
            return "0"
        out = ""
        for m in self:
            c = self._terms[m]
            neg = c < 0
            c = -c if neg else c
            name = "^".join(f"e{i}" for i in indices(m))
            term = (f"{c}*{name}" if c != 1 else name) if name else str(c)
            if out:
                out += (" - " if neg else " + ") + term
            else:
                out = ("-" if neg else "") + term
        return out


def _mono_key(m):
    return (grade(m), indices(m))


def basis(n, field=QQ):
    """The generators e_1, ..., e_n of E(n) as a list (0-based list index)."""
    return [MultiVector._raw(n, {1 << i: field.one}, field) for i in range(n)]


def top(n, field=QQ):
    return MultiVector._raw(n, {(1 << n) - 1: field.one}, field)


def wedge(a, b):
    """Exterior product of two multivectors."""
    a._check(b)
    red = a.field.reduce
    out = {}
    for s, x in a._terms.items():
        for t, y in b._terms.items():
            if s & t:
                continue
            m = s | t
            v = red(out.get(m, 0) + wedge_sign(s, t) * x * y)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return MultiVector._raw(a.n, out, a.field)


class DualVector:
    """Linear combination of dual generators e_i^*; acts by contraction."""

    __slots__ = ("n", "field", "coeffs")

    def __init__(self, n, coeffs, field=QQ):
        if n < 0 or n > MAX_N:
            raise ValueError(f"number of generators must be in 0..{MAX_N}, got {n}")
        self.n = n
        self.field = field
        if not isinstance(coeffs, dict):
            coeffs = {i + 1: c for i, c in enumerate(coeffs)}
        clean = {}
        for i, c in coeffs.items():
            if not 1 <= i <= n:
                raise ValueError(f"dual generator e{i}* not in E({n})*")
            c = field.reduce(field(c))
            if c:
                clean[i] = c
        self.coeffs = clean

    @classmethod
    def sum_all(cls, n, field=QQ):
        """u* = e_1^* + ... + e_n^*."""
        return cls(n, {i: 1 for i in range(1, n + 1)}, field)

    def __repr__(self):
        return " + ".join(f"{c}*e{i}*" for i, c in sorted(self.coeffs.items())) or "0"


def contract_monomial(i, m):
    """Contraction of e_i^* into monomial ``m``: (sign, mask) or None."""
    bit = 1 << (i - 1)
    if not m & bit:
        return None
    below = bin(m & (bit - 1)).count("1")
    return (-1 if below & 1 else 1), m ^ bit


def contract(u_star, a):
    """Contraction u* -| a, a graded derivation of degree -1.

    Removing the j-th smallest index of a monomial carries the sign (-1)^(j-1).
    """
    if u_star.n != a.n:
        raise DimensionMismatch(f"E({u_star.n})* vs E({a.n})")
    if u_star.field != a.field:
        raise FieldMismatch(f"{u_star.field} vs {a.field}")
    red = a.field.reduce
    out = {}
    for m, x in a._terms.items():
        for i, c in u_star.coeffs.items():
            r = contract_monomial(i, m)
            if r is None:
                continue
            s, mm = r
            v = red(out.get(mm, 0) + s * c * x)
            if v:
                out[mm] = v
            else:
                out.pop(mm, None)
    return MultiVector._raw(a.n, out, a.field)


def grade_part(a, r):
    """Sum of the terms of ``a`` of grade exactly ``r``."""
    return MultiVector._raw(a.n, {m: c for m, c in a._terms.items() if grade(m) == r}, a.field)


def hodge_dual(a):
    """Complement duality e_S -> sign(S, S^c) e_{S^c}.

    Applying it twice multiplies the grade-r part by (-1)^(r(n-r)).
    """
    full = (1 << a.n) - 1
    return MultiVector._raw(
        a.n, {full ^ m: c if wedge_sign(m, full ^ m) > 0 else a.field.reduce(-c) for m, c in a._terms.items()},
        a.field,
    )


def meet(a, b):
    """Regressive product dual(dual(a) ^ dual(b)).

    On homogeneous inputs the result has grade grade(a) + grade(b) - n.
    """
    a._check(b)
    return hodge_dual(wedge(hodge_dual(a), hodge_dual(b)))


def from_tensor_word(n, word, coeff=1, field=QQ):
    """Image of the tensor e_{w1} (x) ... (x) e_{wk} in E(n) = T(V)/<S_2 V>.

    Rewrites using only the symmetric relations v(x)w + w(x)v; the square
    e_i (x) e_i is killed by dividing 2(e_i (x) e_i) by 2, which needs
    characteristic different from 2.
    """
    if field.characteristic == 2:
        raise ValueError("the S_2 V presentation of E(V) requires characteristic != 2")
    word = list(word)
    if any(not 1 <= i <= n for i in word):
        raise ValueError(f"tensor word {word} has indices outside 1..{n}")
    if len(set(word)) < len(word):
        return MultiVector.zero(n, field)
    # sign of the sorting permutation
    inv = sum(1 for x in range(len(word)) for y in range(x + 1, len(word)) if word[x] > word[y])
    return MultiVector(n, {mono(word) if word else 0: -coeff if inv & 1 else coeff}, field)


def dim(n, r=None):
    return 2**n if r is None else comb(n, r)
