"""Graded modules over E(n), free modules and homogeneous exterior matrices.

Two gradings appear and are kept apart:

* internal degree: e_i has degree +1 and a :class:`GradedEModule` stores its
  components M_d with actions A_i(d): M_d -> M_{d+1};
* generator degree q: a free generator "of degree q" spans internal degrees
  -q, ..., -q + n. This is the convention in which Tate resolution terms are
  written as sums of W_q (x) E, so cohomology tables read q directly.

An :class:`ExteriorMatrix` maps the free module on its columns to the free
module on its rows, sending column generator c to sum_r A[r, c] g_r; entry
(r, c) is homogeneous of polynomial degree row_degrees[r] - col_degrees[c].
"""
from ..exactla import EchelonBasis, Matrix
from ..exterior import MultiVector, grade, indices, monomials, wedge_sign
from ..fields import QQ

__all__ = [
    "GradedEModule", "FreeModule", "ExteriorMatrix", "ModuleAxiomError",
    "act_monomial", "submodule_span", "quotient_module", "strip_free_summands",
    "graded_from_free", "exterior_module", "trivial_module", "module_from_matrix",
]


class ModuleAxiomError(ValueError):
    """Action matrices violate e_i^2 = 0 or e_i e_j = -e_j e_i."""


class GradedEModule:
    """Finite-dimensional graded module over E(n).

    ``components`` maps internal degree d to dim M_d; ``actions`` maps
    (i, d) with 1 <= i <= n to the m_{d+1} x m_d matrix of e_i on M_d.
    Missing actions are zero. ``anchor`` is the Tate index of the term that
    covers this module (see :func:`extalg.tate.window.tate_window`).
    """

    def __init__(self, n, components, actions=None, field=QQ, anchor=0, validate=True):
        self.n = int(n)
        self.field = field
        self.components = {int(d): int(m) for d, m in components.items() if m}
        acts = {}
        for (i, d), mat in (actions or {}).items():
            if not 1 <= i <= self.n:
                raise ValueError(f"action index e{i} out of range 1..{self.n}")
            d = int(d)
            shape = (self.dim(d + 1), self.dim(d))
            if mat.shape != shape:
                raise ValueError(f"action of e{i} on degree {d} has shape {mat.shape}, expected {shape}")
            field.check_same(mat.field)
            if not mat.is_zero():
                acts[(i, d)] = mat
        self.actions = acts
        self.anchor = anchor
        # column-sparse copies for fast application
        self._cols = {k: m.sparse_cols() for k, m in acts.items()}
        if validate:
            self.validate()

    def dim(self, d):
        return self.components.get(d, 0)

    @property
    def degrees(self):
        return sorted(self.components)

    @property
    def total_dim(self):
        return sum(self.components.values())

    def is_zero(self):
        return not self.components

    def action(self, i, d):
        m = self.actions.get((i, d))
        if m is None:
            return Matrix.zero(self.dim(d + 1), self.dim(d), self.field)
        return m

    def act(self, i, d, vec):
        """e_i applied to a sparse vector of M_d, as a sparse vector of M_{d+1}."""
        cols = self._cols.get((i, d))
        if cols is None:
            return {}
        red = self.field.reduce
        out = {}
        for j, x in vec.items():
            for r, a in cols[j].items():
                out[r] = red(out.get(r, 0) + a * x)
        return {r: v for r, v in out.items() if v}

    def validate(self):
        """Check e_i e_i = 0 and e_i e_j + e_j e_i = 0 on every component."""
        for d in self.degrees:
            for i in range(1, self.n + 1):
                for j in range(i, self.n + 1):
                    a = self.action(j, d + 1) @ self.action(i, d)
                    if i == j:
                        if not a.is_zero():
                            raise ModuleAxiomError(f"e{i}^2 acts nontrivially on degree {d}")
                    else:
                        b = self.action(i, d + 1) @ self.action(j, d)
                        if not (a + b).is_zero():
                            raise ModuleAxiomError(f"e{i}, e{j} do not anticommute on degree {d}")
        return True

    def dual(self):
        """Graded k-dual: (M^v)_{-d} = (M_d)^*, e_i acting by the transpose."""
        comps = {-d: m for d, m in self.components.items()}
        acts = {(i, -d - 1): m.transpose() for (i, d), m in self.actions.items()}
        return GradedEModule(self.n, comps, acts, self.field, validate=False)

    def __repr__(self):
        return f"GradedEModule(n={self.n}, dims={dict(sorted(self.components.items()))})"


def act_monomial(M, S, d, vec):
    """e_S applied to ``vec`` in M_d: e_{s1}(e_{s2}(... e_{sk} vec))."""
    for s in reversed(indices(S)):
        if not vec:
            return {}
        vec = M.act(s, d, vec)
        d += 1
    return vec


class FreeModule:
    """Free graded E(n)-module on generators of the given q-degrees."""

    def __init__(self, n, gen_degrees, field=QQ):
        self.n = n
        self.field = field
        self.gen_degrees = tuple(int(q) for q in gen_degrees)
        self._basis = {}

    @property
    def rank(self):
        return len(self.gen_degrees)

    def degree_counts(self):
        """q -> number of generators of degree q."""
        out = {}
        for q in self.gen_degrees:
            out[q] = out.get(q, 0) + 1
        return dict(sorted(out.items()))

    def internal_range(self):
        """Internal degrees where the module is nonzero, as (lo, hi) or None."""
        if not self.gen_degrees:
            return None
        return -max(self.gen_degrees), -min(self.gen_degrees) + self.n

    def basis(self, D):
        """(list of (gen, mask), index dict) for internal degree D."""
        hit = self._basis.get(D)
        if hit is None:
            lst = []
            for g, q in enumerate(self.gen_degrees):
                k = D + q
                if 0 <= k <= self.n:
                    lst.extend((g, m) for m in monomials(self.n, k))
            hit = (lst, {b: j for j, b in enumerate(lst)})
            self._basis[D] = hit
        return hit

    def dim(self, D):
        return len(self.basis(D)[0])

    def mul_generator(self, i, vec, D):
        """e_i times a sparse vector of degree D (coordinates in basis(D))."""
        src, _ = self.basis(D)
        _, idx = self.basis(D + 1)
        bit = 1 << (i - 1)
        F = self.field
        out = {}
        for j, x in vec.items():
            g, m = src[j]
            if m & bit:
                continue
            k = idx[(g, m | bit)]
            v = x if not bin(m & (bit - 1)).count("1") & 1 else -x
            out[k] = F.reduce(out.get(k, 0) + v)
        return {k: v for k, v in out.items() if v}

    def element_to_column(self, vec, D):
        """Split a degree-D vector into per-generator exterior forms: {gen: MultiVector}."""
        src, _ = self.basis(D)
        parts = {}
        for j, x in vec.items():
            g, m = src[j]
            parts.setdefault(g, {})[m] = x
        return {g: MultiVector._raw(self.n, t, self.field) for g, t in parts.items()}

    def __repr__(self):
        return f"FreeModule(n={self.n}, degrees={self.degree_counts()})"


class ExteriorMatrix:
    """Homogeneous matrix of exterior forms between free modules.

    ``entries`` maps (row, col) to a MultiVector; rows index target
    generators, columns source generators.
    """

    def __init__(self, n, row_degrees, col_degrees, entries=None, field=QQ):
        self.n = n
        self.field = field
        self.row_degrees = tuple(int(q) for q in row_degrees)
        self.col_degrees = tuple(int(q) for q in col_degrees)
        clean = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < self.nrows and 0 <= c < self.ncols):
                raise ValueError(f"entry ({r}, {c}) outside a {self.nrows}x{self.ncols} matrix")
            if v.n != n:
                raise ValueError(f"entry ({r}, {c}) lives in E({v.n}), expected E({n})")
            field.check_same(v.field)
            if not v:
                continue
            want = self.row_degrees[r] - self.col_degrees[c]
            if not v.is_homogeneous(want):
                raise ValueError(
                    f"entry ({r}, {c}) = {v} is not homogeneous of degree {want} "
                    f"(row degree {self.row_degrees[r]} minus column degree {self.col_degrees[c]})"
                )
            clean[(r, c)] = v
        self.entries = clean

    @property
    def nrows(self):
        return len(self.row_degrees)

    @property
    def ncols(self):
        return len(self.col_degrees)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def source(self):
        return FreeModule(self.n, self.col_degrees, self.field)

    def target(self):
        return FreeModule(self.n, self.row_degrees, self.field)

    def __getitem__(self, rc):
        return self.entries.get(rc, MultiVector.zero(self.n, self.field))

    def is_zero(self):
        return not self.entries

    def has_scalar_entries(self):
        """True if some entry has a nonzero degree-0 component (non-minimal)."""
        return any(v.coeff(0) for v in self.entries.values())

    def degree_matrix(self, D, source=None, target=None):
        """k-linear matrix of the map on internal degree D."""
        source = source or self.source()
        target = target or self.target()
        src, _ = source.basis(D)
        _, tidx = target.basis(D)
        by_col = {}
        for (r, c), v in self.entries.items():
            by_col.setdefault(c, []).append((r, v))
        red = self.field.reduce
        ent = {}
        for j, (c, s) in enumerate(src):
            for r, v in by_col.get(c, ()):
                for t, x in v.items():
                    if s & t:
                        continue
                    key = (tidx[(r, s | t)], j)
                    ent[key] = red(ent.get(key, 0) + wedge_sign(s, t) * x)
        return Matrix(len(tidx), len(src), ent, self.field)

    def then(self, other):
        """Composite ``other`` after ``self`` (apply self first)."""
        if self.row_degrees != other.col_degrees:
            raise ValueError("incompatible free modules in composition")
        out = {}
        by_k = {}
        for (r, k), b in other.entries.items():
            by_k.setdefault(k, []).append((r, b))
        for (k, c), a in self.entries.items():
            for r, b in by_k.get(k, ()):
                out[(r, c)] = out.get((r, c), MultiVector.zero(self.n, self.field)) + a * b
        return ExteriorMatrix(self.n, other.row_degrees, self.col_degrees, out, self.field)

    def to_term_lists(self):
        from ..fields import format_scalar
        rows = []
        for r in range(self.nrows):
            row = []
            for c in range(self.ncols):
                v = self[(r, c)]
                row.append([{"coeff": format_scalar(x), "indices": list(indices(m))} for m, x in sorted(v.items(), key=lambda t: (grade(t[0]), indices(t[0])))])
            rows.append(row)
        return rows

    def __eq__(self, other):
        return (
            isinstance(other, ExteriorMatrix)
            and self.n == other.n
            and self.row_degrees == other.row_degrees
            and self.col_degrees == other.col_degrees
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"ExteriorMatrix({self.nrows}x{self.ncols} over E({self.n}))"


def submodule_span(M, gens):
    """Per-degree EchelonBasis of the submodule generated by ``gens`` = [(d, vec), ...]."""
    spans = {}
    todo = {}
    for d, v in gens:
        todo.setdefault(d, []).append(v)
    for d in sorted(set(M.degrees) | set(todo)):
        eb = spans.setdefault(d, EchelonBasis(M.field))
        for v in todo.get(d, ()):
            eb.add(v)
        prev = spans.get(d - 1)
        if prev is not None:
            for v in prev.basis():
                for i in range(1, M.n + 1):
                    w = M.act(i, d - 1, v)
                    if w:
                        eb.add(w)
    return {d: eb for d, eb in spans.items() if len(eb)}


def quotient_module(M, spans):
    """M / N for a graded submodule N given per degree by EchelonBasis objects."""
    comps, keep = {}, {}
    for d in M.degrees:
        eb = spans.get(d)
        cols = eb.complement(M.dim(d)) if eb is not None else list(range(M.dim(d)))
        keep[d] = cols
        comps[d] = len(cols)
    acts = {}
    for d in M.degrees:
        if not comps.get(d) or not comps.get(d + 1):
            continue
        pos = {c: j for j, c in enumerate(keep[d + 1])}
        eb = spans.get(d + 1)
        for i in range(1, M.n + 1):
            ent = {}
            for j, c in enumerate(keep[d]):
                w = M.act(i, d, {c: M.field.one})
                if eb is not None:
                    w = eb.reduce(w)
                for r, x in w.items():
                    ent[(pos[r], j)] = x
            acts[(i, d)] = Matrix(comps[d + 1], comps[d], ent, M.field)
    return GradedEModule(M.n, comps, acts, M.field, anchor=M.anchor, validate=False)


def strip_free_summands(M):
    """Remove free summands (E is injective, so each one splits off).

    A free summand is detected by e_1 ^ ... ^ e_n acting nontrivially.
    """
    top = (1 << M.n) - 1
    gens = []
    for d in M.degrees:
        if not M.dim(d + M.n):
            continue
        seen = EchelonBasis(M.field)
        for j in range(M.dim(d)):
            img = act_monomial(M, top, d, {j: M.field.one})
            if img and seen.add(img) is not None:
                gens.append((d, {j: M.field.one}))
    if not gens:
        return M, 0
    return quotient_module(M, submodule_span(M, gens)), len(gens)


def graded_from_free(F):
    """A free module written out as an explicit GradedEModule."""
    rng = F.internal_range()
    if rng is None:
        return GradedEModule(F.n, {}, {}, F.field, validate=False)
    lo, hi = rng
    comps = {D: F.dim(D) for D in range(lo, hi + 1) if F.dim(D)}
    acts = {}
    for D in comps:
        if not comps.get(D + 1):
            continue
        for i in range(1, F.n + 1):
            ent = {}
            for j in range(comps[D]):
                for r, x in F.mul_generator(i, {j: F.field.one}, D).items():
                    ent[(r, j)] = x
            acts[(i, D)] = Matrix(comps[D + 1], comps[D], ent, F.field)
    return GradedEModule(F.n, comps, acts, F.field, validate=False)


def exterior_module(n, field=QQ):
    """E(n) as a graded module over itself, generated in degree 0."""
    return graded_from_free(FreeModule(n, [0], field))


def trivial_module(n, field=QQ, degree=0):
    """The residue field k = E/(e_1, ..., e_n), sitting in one degree."""
    return GradedEModule(n, {degree: 1}, {}, field)


def module_from_matrix(A, mode="cokernel", index=0):
    """Cokernel or image of the map of free modules given by ``A``.

    ``A`` is read as the Tate differential d^index; the returned module's
    ``anchor`` is the index of its free cover in that resolution (``index``
    for the image, ``index + 1`` for the cokernel).
    """
    if mode not in ("cokernel", "image"):
        raise ValueError(f"mode must be 'cokernel' or 'image', got {mode!r}")
    F = A.field
    src, tgt = A.source(), A.target()
    rng = tgt.internal_range()
    if rng is None:
        return GradedEModule(A.n, {}, {}, F, anchor=index + (mode == "cokernel"))
    lo, hi = rng
    spans = {}
    for D in range(lo, hi + 1):
        spans[D] = EchelonBasis(F, (c for c in A.degree_matrix(D, src, tgt).sparse_cols() if c))
    comps, acts = {}, {}
    if mode == "image":
        for D, eb in spans.items():
            if len(eb):
                comps[D] = len(eb)
        for D in comps:
            if not comps.get(D + 1):
                continue
            nxt = spans[D + 1]
            pos = {p: r for r, p in enumerate(nxt.pivots)}
            for i in range(1, A.n + 1):
                ent = {}
                for j, v in enumerate(spans[D].basis()):
                    w = tgt.mul_generator(i, v, D)
                    for p, x in nxt.coordinates(w).items():
                        ent[(pos[p], j)] = x
                acts[(i, D)] = Matrix(comps[D + 1], comps[D], ent, F)
        anchor = index
    else:
        keep = {}
        for D, eb in spans.items():
            cols = eb.complement(tgt.dim(D))
            if cols:
                keep[D] = cols
                comps[D] = len(cols)
        for D in comps:
            if not comps.get(D + 1):
                continue
            pos = {c: r for r, c in enumerate(keep[D + 1])}
            for i in range(1, A.n + 1):
                ent = {}
                for j, c in enumerate(keep[D]):
                    w = spans[D + 1].reduce(tgt.mul_generator(i, {c: F.one}, D))
                    for r, x in w.items():
                        ent[(pos[r], j)] = x
                acts[(i, D)] = Matrix(comps[D + 1], comps[D], ent, F)
        anchor = index + 1
    return GradedEModule(A.n, comps, acts, F, anchor=anchor)
