"""Clifford algebras Cl_b of a symmetric bilinear form.

Elements are expanded in the basis e_{i1} e_{i2} ... e_{ir} (i1 < ... < ir),
the same bitmask monomials as the exterior algebra. Products are computed
by rewriting the concatenated index word with the defining relations

    e_i e_i = g[i][i],    e_j e_i = -e_i e_j + 2 g[i][j]   (i < j),

so arbitrary (non-diagonal) symmetric forms work without a change of basis.
With g = 0 this is the exterior algebra.
"""
from .exterior import MultiVector, grade, indices, monomials, DimensionMismatch
from .fields import QQ, format_scalar

__all__ = [
    "SymmetricForm", "CliffordElement", "signature_form", "geometric_product",
    "multiplication_table", "dimension_checks", "real_classification", "blade",
    "basis_order", "table_as_terms", "table_as_text",
]

MAX_TABLE_N = 8


class SymmetricForm:
    """Symmetric n x n Gram matrix g[i][j] = b(e_i, e_j) (0-based lists)."""

    def __init__(self, g, field=QQ):
        g = [[field.reduce(field(x)) for x in row] for row in g]
        n = len(g)
        for row in g:
            if len(row) != n:
                raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise ValueError(f"form is not symmetric at ({i + 1}, {j + 1})")
        self.n = n
        self.field = field
        self.g = tuple(tuple(r) for r in g)
        self._cache = {}
        self._words = {}

    @classmethod
    def zero(cls, n, field=QQ):
        return cls([[0] * n for _ in range(n)], field)

    def __eq__(self, other):
        return isinstance(other, SymmetricForm) and self.g == other.g and self.field == other.field

    def __hash__(self):
        return hash((self.g, self.field))

    def __repr__(self):
        return f"SymmetricForm({[list(r) for r in self.g]})"

    def blade_product(self, a, b):
        """Product of basis blades ``a`` and ``b`` (bitmasks) as a dict mask -> coeff."""
        key = (a, b)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._reduce_word(indices(a) + indices(b))
            self._cache[key] = hit
        return hit

    def _reduce_word(self, word):
        return dict(_reduce_word(self, tuple(word)))


def _reduce_word(form, word):
    hit = form._words.get(word)
    if hit is None:
        hit = form._words[word] = _rewrite(form, word)
    return hit


def _rewrite(form, word):
    """Normal form of the word ``e_{w1} ... e_{wk}`` as a tuple of (mask, coeff)."""
    F = form.field
    for k in range(len(word) - 1):
        i, j = word[k], word[k + 1]
        if i < j:
            continue
        g = form.g
        out = {}
        if i == j:
            c = g[i - 1][i - 1]
            if c:
                for m, v in _reduce_word(form, word[:k] + word[k + 2:]):
                    out[m] = F.reduce(out.get(m, 0) + c * v)
        else:
            for m, v in _reduce_word(form, word[:k] + (j, i) + word[k + 2:]):
                out[m] = F.reduce(out.get(m, 0) - v)
            c = g[i - 1][j - 1]
            if c:
                for m, v in _reduce_word(form, word[:k] + word[k + 2:]):
                    out[m] = F.reduce(out.get(m, 0) + 2 * c * v)
        return tuple((m, v) for m, v in out.items() if v)
    mask = 0
    for i in word:
        mask |= 1 << (i - 1)
    return ((mask, F.one),)


class CliffordElement(MultiVector):
    """Element of a Clifford algebra; arithmetic except products is that of MultiVector."""

    __slots__ = ()

    def __mul__(self, other):
        if isinstance(other, MultiVector):
            raise TypeError("Clifford products need the form: use geometric_product(b, x, y)")
        return _as_clifford(self.scale(other))

    __xor__ = __mul__

    def __rmul__(self, other):
        return _as_clifford(self.scale(other))

    def __add__(self, other):
        return _as_clifford(MultiVector.__add__(self, other))

    __radd__ = __add__

    def __neg__(self):
        return _as_clifford(MultiVector.__neg__(self))

    def __sub__(self, other):
        return self + (-other)

    def __repr__(self):
        return "Cl[" + super().__repr__().replace("^", "") + "]"


def _as_clifford(x):
    if isinstance(x, CliffordElement):
        return x
    return CliffordElement._raw(x.n, dict(x.items()), x.field)


def blade(n, idx=(), coeff=1, field=QQ):
    """The basis element e_{i1} ... e_{ir} (indices sorted) times ``coeff``."""
    m = 0
    for i in idx:
        m |= 1 << (i - 1)
    return _as_clifford(MultiVector(n, {m: coeff}, field))


def signature_form(p, q, field=QQ):
    """Diagonal form with ``p`` entries +1 followed by ``q`` entries -1."""
    if p < 0 or q < 0:
        raise ValueError("signature entries must be nonnegative")
    n = p + q
    return SymmetricForm([[(1 if i < p else -1) if i == j else 0 for j in range(n)] for i in range(n)], field)


def geometric_product(b, x, y):
    """Clifford product of ``x`` and ``y`` with respect to the form ``b``."""
    if x.n != b.n or y.n != b.n:
        raise DimensionMismatch(f"form on {b.n} generators, operands in {x.n} and {y.n}")
    b.field.check_same(x.field)
    b.field.check_same(y.field)
    red = b.field.reduce
    out = {}
    for s, u in x.items():
        for t, v in y.items():
            for m, c in b.blade_product(s, t).items():
                out[m] = red(out.get(m, 0) + c * u * v)
    return CliffordElement._raw(b.n, {m: c for m, c in out.items() if c}, b.field)


def basis_order(n):
    """Grade-major, then lexicographic."""
    return monomials(n)


def multiplication_table(b):
    """Full table ``T[i][j] = B_i B_j`` over :func:`basis_order` blades."""
    if b.n > MAX_TABLE_N:
        raise ValueError(f"multiplication tables are limited to n <= {MAX_TABLE_N}")
    order = basis_order(b.n)
    F = b.field
    rows = []
    for s in order:
        row = []
        for t in order:
            row.append(CliffordElement._raw(b.n, dict(b.blade_product(s, t)), F))
        rows.append(row)
    return rows


def table_as_terms(table):
    """JSON-ready table: each cell a list of (coeff, indices) pairs."""
    return [
        [[{"coeff": format_scalar(c), "indices": list(indices(m))} for m, c in sorted(cell.items(), key=lambda mc: (grade(mc[0]), indices(mc[0])))] for cell in row]
        for row in table
    ]


def _blade_name(m):
    return "".join(f"e{i}" for i in indices(m)) or "1"


def table_as_text(table, n):
    """Aligned text grid of a multiplication table."""
    order = basis_order(n)
    heads = [_blade_name(m) for m in order]

    def cell(x):
        if not x:
            return "0"
        parts = []
        for m in x:
            c = x.coeff(m)
            name = _blade_name(m)
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append("-" + name)
            else:
                parts.append(f"{c}{name}" if name != "1" else f"{c}")
        return "+".join(parts).replace("+-", "-")

    cells = [[cell(x) for x in row] for row in table]
    width = max([len(h) for h in heads] + [len(c) for r in cells for c in r])
    lines = [" " * width + " | " + " ".join(h.rjust(width) for h in heads)]
    lines.append("-" * len(lines[0]))
    for h, r in zip(heads, cells):
        lines.append(h.rjust(width) + " | " + " ".join(c.rjust(width) for c in r))
    return "\n".join(lines)


_CLASSES = {
    0: ("R", 1), 1: ("R+R", 2), 2: ("R", 1), 3: ("C", 2),
    4: ("H", 4), 5: ("H+H", 8), 6: ("H", 4), 7: ("C", 2),
}


def real_classification(p, q):
    """Which real matrix algebra Cl_{p,q} is, keyed by (p - q) mod 8.

    Documentation only: the code works over exact fields, not the reals.
    """
    kind, d = _CLASSES[(p - q) % 8]
    dim = 2 ** (p + q)
    k = round((dim // d) ** 0.5)
    if kind == "R+R":
        return f"M{k}(R) + M{k}(R)" if k > 1 else "R + R"
    if kind == "H+H":
        return f"M{k}(H) + M{k}(H)" if k > 1 else "H + H"
    return f"M{k}({kind})" if k > 1 else kind


def _closure_dim(b):
    """Dimension of the span of all products of generators, grown from 1."""
    span = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(b.n):
                for mm in b.blade_product(m, 1 << i):
                    if mm not in span:
                        span.add(mm)
                        nxt.append(mm)
        frontier = nxt
    # products land on distinct blades, so the blade count is the dimension
    return len(span)


def dimension_checks(p, q):
    """Dimension identities behind Cl_{p+1,q+1} = M2(Cl_{p,q}) and Cl_{p+8,q} = M16(Cl_{p,q}).

    Cl_{p,q} and Cl_{p+1,q+1} are generated explicitly and their dimension
    measured; the +8 case, with up to 16 generators, uses the blade count.
    """
    if p < 0 or q < 0 or p + q > MAX_TABLE_N:
        raise ValueError(f"need p, q >= 0 and p + q <= {MAX_TABLE_N}")
    base = _closure_dim(signature_form(p, q))
    shifted = _closure_dim(signature_form(p + 1, q + 1))
    eight = len(monomials(p + q + 8)) if p + q + 8 <= 12 else 2 ** (p + q + 8)
    return {
        "p": p,
        "q": q,
        "dim": base,
        "dim_p1_q1": shifted,
        "dim_p8_q": eight,
        "two_by_two": shifted == 4 * base,
        "sixteen_by_sixteen": eight == 256 * base,
        "classification": real_classification(p, q),
    }
