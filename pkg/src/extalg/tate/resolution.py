"""Minimal projective and injective resolutions of graded E(n)-modules.

Projective side: generators of M/(e_1..e_n)M give the free cover, kernels are
computed degree by degree and their minimal generators give the next term.

Injective side: E is self-injective, so a minimal projective resolution of
the graded dual M^v is dualized back. A free generator of q-degree q dualizes
to one of q-degree n - q, and a homogeneous form x = sum_T x_T e_T of grade k
dualizes to sum_T s(k) x_T e_T with s(k) = (-1)^(k(n-k) + k(k-1)/2).
"""
from dataclasses import dataclass, field as dc_field

from ..exactla import EchelonBasis, Matrix, kernel_vectors
from ..exterior import MultiVector, grade, monomials, wedge_sign
from .modules import ExteriorMatrix, FreeModule, act_monomial

__all__ = [
    "FreeComplex", "minimal_generators", "minimal_projective_resolution",
    "minimal_injective_resolution", "dual_form", "dual_matrix", "splice_matrix",
]


@dataclass
class FreeComplex:
    """A finite piece of a minimal resolution.

    ``kind == "projective"``: ``modules[j]`` is P_j and ``maps[j]`` is
    P_{j+1} -> P_j. ``augmentation`` lists the images in M of the generators
    of P_0 as (internal degree, vector).

    ``kind == "injective"``: ``modules[j]`` is I^j and ``maps[j]`` is
    I^j -> I^{j+1}. ``augmentation`` then lists the generators of M^v used
    to build I^0.

    ``complete`` is True when the resolution stopped because a kernel
    vanished, so every later term is zero.
    """

    n: int
    kind: str
    modules: list
    maps: list
    augmentation: list = dc_field(default_factory=list)
    complete: bool = False

    @property
    def ranks(self):
        return [F.rank for F in self.modules]

    def degree_counts(self):
        return [F.degree_counts() for F in self.modules]

    def is_minimal(self):
        return not any(A.has_scalar_entries() for A in self.maps)

    def compositions_vanish(self):
        return all(a.then(b).is_zero() for a, b in zip(self.maps, self.maps[1:])) if self.kind == "injective" \
            else all(b.then(a).is_zero() for a, b in zip(self.maps, self.maps[1:]))


def minimal_generators(M):
    """Complement of sum_i e_i M_{d-1} in each M_d, as [(d, vec)]."""
    F = M.field
    gens = []
    for d in M.degrees:
        eb = EchelonBasis(F)
        for j in range(M.dim(d - 1)):
            for i in range(1, M.n + 1):
                w = M.act(i, d - 1, {j: F.one})
                if w:
                    eb.add(w)
        gens.extend((d, {c: F.one}) for c in eb.complement(M.dim(d)))
    return gens


def _cover_matrix(M, P, gens, D):
    """Degree-D matrix of the cover P -> M sending generator g to gens[g]."""
    src, _ = P.basis(D)
    ent = {}
    for j, (g, S) in enumerate(src):
        d, v = gens[g]
        for r, x in act_monomial(M, S, d, v).items():
            ent[(r, j)] = x
    return Matrix(M.dim(D), len(src), ent, M.field)


def _kernel_generators(P, degree_map):
    """Minimal generators of ker(P -> target), scanning the support of P."""
    lo, hi = P.internal_range()
    gens = []
    prev = []
    for D in range(lo, hi + 1):
        K = kernel_vectors(degree_map(D))
        if not K:
            prev = K
            continue
        eb = EchelonBasis(P.field)
        for v in prev:
            for i in range(1, P.n + 1):
                w = P.mul_generator(i, v, D - 1)
                if w:
                    eb.add(w)
                    if len(eb) == len(K):
                        break
            if len(eb) == len(K):
                break
        for v in K:
            if len(eb) == len(K):
                break
            if eb.add(v) is not None:
                gens.append((D, v))
        prev = K
    return gens


def _next_term(P, gens):
    """Free module on ``gens`` (kernel elements of P) and its map into P."""
    Q = FreeModule(P.n, [-D for D, _ in gens], P.field)
    ent = {}
    for h, (D, v) in enumerate(gens):
        for g, form in P.element_to_column(v, D).items():
            ent[(g, h)] = form
    return Q, ExteriorMatrix(P.n, P.gen_degrees, Q.gen_degrees, ent, P.field)


def minimal_projective_resolution(M, steps):
    """P_0, ..., P_steps of a minimal free resolution of M (fewer if it ends)."""
    if steps < 0:
        raise ValueError("steps must be >= 0")
    gens = minimal_generators(M)
    P = FreeModule(M.n, [-d for d, _ in gens], M.field)
    modules, maps = [P], []
    if not gens:
        return FreeComplex(M.n, "projective", [], [], [], True)
    degree_map = lambda D: _cover_matrix(M, P, gens, D)  # noqa: E731
    for _ in range(steps):
        kgens = _kernel_generators(P, degree_map)
        if not kgens:
            return FreeComplex(M.n, "projective", modules, maps, gens, True)
        Q, A = _next_term(P, kgens)
        modules.append(Q)
        maps.append(A)
        degree_map = (lambda A, Q, P: lambda D: A.degree_matrix(D, Q, P))(A, Q, P)
        P = Q
    complete = not _kernel_generators(P, degree_map)
    return FreeComplex(M.n, "projective", modules, maps, gens, complete)


def _dual_sign(n, k):
    return -1 if (k * (n - k) + k * (k - 1) // 2) & 1 else 1


def _epsilon(T, full):
    """(-1)^(|T|(|T|-1)/2) * sign(T, T^c)."""
    t = grade(T)
    s = wedge_sign(T, full & ~T)
    return -s if (t * (t - 1) // 2) & 1 else s


def dual_form(x):
    """Image of a homogeneous form under the duality Hom_E(-, E)."""
    n = x.n
    F = x.field
    return MultiVector._raw(n, {T: (c if _dual_sign(n, grade(T)) == 1 else F.reduce(-c)) for T, c in x.items()}, F)


def dual_matrix(B):
    """Dual of B: P -> Q (as Q^v -> P^v); rows and columns swap, degrees q -> n - q."""
    n = B.n
    ent = {(c, r): dual_form(v) for (r, c), v in B.entries.items()}
    return ExteriorMatrix(n, [n - q for q in B.col_degrees], [n - q for q in B.row_degrees], ent, B.field)


def minimal_injective_resolution(M, steps):
    """I^0, ..., I^steps of a minimal injective resolution M -> I^0 -> I^1 -> ..."""
    if steps < 0:
        raise ValueError("steps must be >= 0")
    Q = minimal_projective_resolution(M.dual(), steps)
    n = M.n
    modules = [FreeModule(n, [n - q for q in P.gen_degrees], M.field) for P in Q.modules]
    maps = [dual_matrix(B) for B in Q.maps]
    return FreeComplex(n, "injective", modules, maps, Q.augmentation, Q.complete)


def splice_matrix(M, proj_gens, dual_gens):
    """The composite P_0 -> M -> I^0 as an exterior matrix.

    ``proj_gens`` are generators m_g of M, ``dual_gens`` generators pi_h of
    the dual module. Entry (h, g) collects (e_S pi_h)(m_g) over monomials S,
    each placed on e_{S^c} with the duality sign.
    """
    n, F = M.n, M.field
    D = M.dual()
    full = (1 << n) - 1
    ent = {}
    for h, (dh, pi) in enumerate(dual_gens):
        for g, (dg, m) in enumerate(proj_gens):
            k = -dh - dg
            if not 0 <= k <= n:
                continue
            terms = {}
            for S in monomials(n, k):
                w = act_monomial(D, S, dh, pi)
                val = F.reduce(sum(x * m.get(j, 0) for j, x in w.items()))
                if val:
                    T = full & ~S
                    terms[T] = F.reduce(val * _epsilon(T, full))
            if terms:
                ent[(h, g)] = MultiVector._raw(n, terms, F)
    rows = [n + dh for dh, _ in dual_gens]
    cols = [-dg for dg, _ in proj_gens]
    return ExteriorMatrix(n, rows, cols, ent, F)
