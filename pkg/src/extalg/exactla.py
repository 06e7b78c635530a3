"""Exact linear algebra over QQ or GF(p).

Vectors are sparse ``dict`` objects mapping a column index to a nonzero
field element. :class:`EchelonBasis` keeps a fully reduced row echelon form
incrementally and is the workhorse for every rank, kernel and quotient
computation in the package; :class:`Matrix` is a thin immutable wrapper
used at the public surface.

Pivot rule: each incoming row is reduced against the existing pivots and
its first nonzero column becomes its pivot. Rows are consumed in order, so
bases are reproducible run to run.
"""
from .fields import QQ

__all__ = [
    "Matrix", "EchelonBasis", "rank", "kernel_basis", "image_basis", "solve",
    "NoSolution", "ShapeError",
]


class ShapeError(ValueError):
    pass


class NoSolution(ValueError):
    """The linear system has no solution."""


class EchelonBasis:
    """Incrementally maintained reduced row echelon basis of a subspace.

    ``rows[p]`` is the basis vector with pivot column ``p``; it has a 1 at
    ``p`` and zeros at every other pivot column.
    """

    __slots__ = ("field", "rows")

    def __init__(self, field=QQ, vectors=()):
        self.field = field
        self.rows = {}
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    @property
    def pivots(self):
        return sorted(self.rows)

    def reduce(self, vec):
        """Return ``vec`` minus its projection onto the span, as a new dict."""
        red = self.field.reduce
        v = dict(vec)
        rows = self.rows
        for c in [c for c in v if c in rows]:
            a = v.get(c)
            if not a:
                continue
            for j, b in rows[c].items():
                x = red(v.get(j, 0) - a * b)
                if x:
                    v[j] = x
                else:
                    v.pop(j, None)
        return v

    def contains(self, vec):
        return not self.reduce(vec)

    def add(self, vec):
        """Add ``vec`` to the span. Returns its new pivot, or None if dependent."""
        F = self.field
        r = self.reduce(vec)
        if not r:
            return None
        p = min(r)
        a = r[p]
        if a != 1:
            ainv = F.inv(a)
            r = {j: F.reduce(x * ainv) for j, x in r.items()}
        for q, row in self.rows.items():
            b = row.get(p)
            if b:
                for j, x in r.items():
                    y = F.reduce(row.get(j, 0) - b * x)
                    if y:
                        row[j] = y
                    else:
                        row.pop(j, None)
        self.rows[p] = r
        return p

    def coordinates(self, vec):
        """Coordinates of a vector lying in the span, keyed by pivot column."""
        return {p: vec[p] for p in self.rows if vec.get(p)}

    def basis(self):
        """Basis vectors in pivot order."""
        return [dict(self.rows[p]) for p in sorted(self.rows)]

    def complement(self, ncols):
        """Non-pivot columns of ``range(ncols)``: standard vectors spanning a complement."""
        return [c for c in range(ncols) if c not in self.rows]


class Matrix:
    """Immutable sparse matrix over a field. ``entries`` maps (row, col) to nonzero values."""

    __slots__ = ("nrows", "ncols", "field", "_entries")

    def __init__(self, nrows, ncols, entries=None, field=QQ):
        self.nrows = int(nrows)
        self.ncols = int(ncols)
        self.field = field
        clean = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < self.nrows and 0 <= c < self.ncols):
                raise ShapeError(f"entry ({r}, {c}) outside a {nrows}x{ncols} matrix")
            v = field.reduce(field(v))
            if v:
                clean[(r, c)] = v
        self._entries = clean

    @classmethod
    def from_rows(cls, rows, field=QQ, ncols=None):
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ShapeError("ragged rows")
        ent = {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v}
        return cls(len(rows), ncols, ent, field)

    @classmethod
    def from_sparse_rows(cls, rows, ncols, field=QQ):
        ent = {(i, j): v for i, r in enumerate(rows) for j, v in r.items()}
        return cls(len(rows), ncols, ent, field)

    @classmethod
    def identity(cls, k, field=QQ):
        return cls(k, k, {(i, i): 1 for i in range(k)}, field)

    @classmethod
    def zero(cls, nrows, ncols, field=QQ):
        return cls(nrows, ncols, {}, field)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def entries(self):
        return dict(self._entries)

    def __getitem__(self, rc):
        return self._entries.get(rc, self.field.zero)

    def sparse_rows(self):
        rows = [{} for _ in range(self.nrows)]
        for (r, c), v in self._entries.items():
            rows[r][c] = v
        return rows

    def sparse_cols(self):
        cols = [{} for _ in range(self.ncols)]
        for (r, c), v in self._entries.items():
            cols[c][r] = v
        return cols

    def to_lists(self):
        out = [[self.field.zero] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self._entries.items():
            out[r][c] = v
        return out

    def transpose(self):
        return Matrix(self.ncols, self.nrows, {(c, r): v for (r, c), v in self._entries.items()}, self.field)

    T = property(transpose)

    def is_zero(self):
        return not self._entries

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            self.field.check_same(other.field)
            if self.ncols != other.nrows:
                raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
            red = self.field.reduce
            ocols = other.sparse_rows()
            acc = {}
            for (r, k), a in self._entries.items():
                for c, b in ocols[k].items():
                    acc[(r, c)] = red(acc.get((r, c), 0) + a * b)
            return Matrix(self.nrows, other.ncols, acc, self.field)
        vec = list(other)
        if len(vec) != self.ncols:
            raise ShapeError(f"vector of length {len(vec)} for a matrix with {self.ncols} columns")
        red = self.field.reduce
        out = [0] * self.nrows
        for (r, c), a in self._entries.items():
            if vec[c]:
                out[r] = red(out[r] + a * vec[c])
        return tuple(out)

    def __add__(self, other):
        self.field.check_same(other.field)
        if self.shape != other.shape:
            raise ShapeError("shape mismatch in addition")
        red = self.field.reduce
        acc = dict(self._entries)
        for rc, v in other._entries.items():
            acc[rc] = red(acc.get(rc, 0) + v)
        return Matrix(self.nrows, self.ncols, acc, self.field)

    def __neg__(self):
        red = self.field.reduce
        return Matrix(self.nrows, self.ncols, {rc: red(-v) for rc, v in self._entries.items()}, self.field)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.shape == other.shape
            and self.field == other.field
            and self._entries == other._entries
        )

    def __hash__(self):
        return hash((self.shape, frozenset(self._entries.items())))

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols}, nnz={len(self._entries)}, {self.field!r})"


def _row_echelon(m):
    eb = EchelonBasis(m.field)
    for row in m.sparse_rows():
        if row:
            eb.add(row)
    return eb


def rank(m):
    """Rank of ``m`` over its field."""
    if not m.nrows or not m.ncols:
        return 0
    # eliminate along the shorter side
    if m.nrows > m.ncols:
        m = m.transpose()
    return len(_row_echelon(m))


def kernel_basis(m):
    """Basis of the right null space, as dense tuples, one per free column."""
    return [tuple(v.get(j, 0) for j in range(m.ncols)) for v in kernel_vectors(m)]


def kernel_vectors(m):
    """Right null space basis as sparse dicts (free column order)."""
    eb = _row_echelon(m)
    return _kernel_from_echelon(eb, m.ncols, m.field)


def _kernel_from_echelon(eb, ncols, field):
    by_col = {}
    for p, row in eb.rows.items():
        for j, x in row.items():
            if j != p:
                by_col.setdefault(j, []).append((p, x))
    out = []
    for f in range(ncols):
        if f in eb.rows:
            continue
        v = {f: field.one}
        for p, x in by_col.get(f, ()):
            v[p] = field.reduce(-x)
        out.append(v)
    return out


def image_basis(m):
    """Basis of the column space, as dense tuples in reduced echelon form."""
    eb = _row_echelon(m.transpose())
    return [tuple(v.get(i, 0) for i in range(m.nrows)) for v in eb.basis()]


def solve(m, rhs):
    """Return one solution ``x`` of ``m @ x == rhs`` (free variables set to 0).

    Raises :class:`NoSolution` for inconsistent systems.
    """
    rhs = [m.field.reduce(m.field(b)) for b in rhs]
    if len(rhs) != m.nrows:
        raise ShapeError(f"right-hand side has length {len(rhs)}, expected {m.nrows}")
    aug = m.ncols
    eb = EchelonBasis(m.field)
    for row, b in zip(m.sparse_rows(), rhs):
        if b:
            row = dict(row)
            row[aug] = b
        if row:
            eb.add(row)
    if aug in eb.rows:
        raise NoSolution("inconsistent linear system")
    x = [m.field.zero] * m.ncols
    for p, row in eb.rows.items():
        x[p] = row.get(aug, 0)
    return tuple(x)
