"""The linear complex over S = Sym(W) attached to a graded E-module.

d^p: S (x) M_p -> S (x) M_{p+1} has entry (a, b) = sum_i x_i A_i(p)[a][b].
Linear forms are dicts i -> coefficient. The composite d^{p+1} d^p is
expanded symbolically: the x_i x_j coefficient (i < j) is
A_j(p+1) A_i(p) + A_i(p+1) A_j(p) and the x_i^2 coefficient is A_i(p+1) A_i(p).
"""
from dataclasses import dataclass

from ..fields import format_scalar
from .modules import ModuleAxiomError

__all__ = ["LinearFormMatrix", "BGGComplex", "bgg_linear_complex"]


@dataclass(frozen=True)
class LinearFormMatrix:
    """rows x cols matrix whose (a, b) entry is the linear form {i: coeff}."""

    rows: int
    cols: int
    entries: dict

    def __getitem__(self, ab):
        return self.entries.get(ab, {})

    def to_strings(self):
        out = []
        for a in range(self.rows):
            row = []
            for b in range(self.cols):
                form = self[(a, b)]
                s = " + ".join(_term(c, i) for i, c in sorted(form.items()))
                row.append(s.replace("+ -", "- ") or "0")
            out.append(row)
        return out


@dataclass(frozen=True)
class BGGComplex:
    """Terms S (x) M_p for p in ``degrees``; ``differentials[p]`` goes p -> p+1."""

    n: int
    ranks: dict
    differentials: dict
    squares_vanish: bool

    @property
    def degrees(self):
        return sorted(self.ranks)


def _term(c, i):
    if c == 1:
        return f"x{i}"
    if c == -1:
        return f"-x{i}"
    return f"{format_scalar(c)}*x{i}"


def _quadratic_part(M, p):
    """Nonzero coefficient matrices of d^{p+1} d^p keyed by (i, j), i <= j."""
    out = {}
    for i in range(1, M.n + 1):
        for j in range(i, M.n + 1):
            if i == j:
                c = M.action(i, p + 1) @ M.action(i, p)
            else:
                c = M.action(j, p + 1) @ M.action(i, p) + M.action(i, p + 1) @ M.action(j, p)
            if not c.is_zero():
                out[(i, j)] = c
    return out


def bgg_linear_complex(M):
    """Linear-form matrices of the BGG complex of M and a symbolic d^2 = 0 check."""
    ranks = {p: M.dim(p) for p in M.degrees}
    diffs = {}
    for p in M.degrees:
        if not M.dim(p + 1):
            continue
        ent = {}
        for i in range(1, M.n + 1):
            for (a, b), x in M.action(i, p).entries.items():
                ent.setdefault((a, b), {})[i] = x
        diffs[p] = LinearFormMatrix(M.dim(p + 1), M.dim(p), ent)
    for p in M.degrees:
        bad = _quadratic_part(M, p)
        if bad:
            i, j = min(bad)
            raise ModuleAxiomError(f"d^{p + 1} d^{p} has a nonzero x{i}*x{j} coefficient")
    return BGGComplex(M.n, ranks, diffs, True)
