"""Independent reference implementations used to check the library.

Nothing here imports the code under test: ranks come from a dense
textbook elimination, signs from bubble sort, homology from faces listed
as tuples.
"""
from fractions import Fraction
from itertools import combinations


def bubble_sign(seq):
    """Sign of the permutation sorting ``seq`` (distinct entries), by bubble sort."""
    seq = list(seq)
    swaps = 0
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                swaps += 1
    return -1 if swaps % 2 else 1


def wedge_words(a, b):
    """Wedge of dicts {tuple: coeff} by concatenating words and sorting."""
    out = {}
    for s, x in a.items():
        for t, y in b.items():
            w = s + t
            if len(set(w)) < len(w):
                continue
            key = tuple(sorted(w))
            out[key] = out.get(key, 0) + bubble_sign(w) * x * y
    return {k: v for k, v in out.items() if v}


def dense_rank(rows, p=None):
    """Rank of a list-of-lists matrix over QQ (p None) or GF(p)."""
    m = [[(Fraction(x) if p is None else x % p) for x in r] for r in rows]
    if not m or not m[0]:
        return 0
    nr, nc = len(m), len(m[0])
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = (1 / m[r][c]) if p is None else pow(m[r][c], p - 2, p)
        m[r] = [x * inv if p is None else x * inv % p for x in m[r]]
        for i in range(nr):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) if p is None else (a - f * b) % p for a, b in zip(m[i], m[r])]
        r += 1
        if r == nr:
            break
    return r


def closure(facets):
    faces = {()}
    for f in facets:
        f = tuple(sorted(f))
        for k in range(len(f) + 1):
            faces.update(combinations(f, k))
    return faces


def naive_reduced_homology(n, facets, p=None):
    """Reduced simplicial homology from the classical boundary matrices.

    Chains of dimension d are the faces with d+1 vertices; the empty face is
    the (-1)-chain, so the augmented complex gives reduced homology.
    """
    faces = closure(facets)
    by = {}
    for f in faces:
        by.setdefault(len(f) - 1, []).append(f)
    for d in by:
        by[d].sort()
    top = max(by)
    ranks = {}
    for d in range(0, top + 1):
        src, dst = by.get(d, []), by.get(d - 1, [])
        pos = {f: i for i, f in enumerate(dst)}
        rows = [[0] * len(src) for _ in dst]
        for j, f in enumerate(src):
            for k in range(len(f)):
                rows[pos[f[:k] + f[k + 1:]]][j] += (-1) ** k
        ranks[d] = dense_rank(rows, p) if rows and src else 0
    out = {}
    for d in range(-1, top + 1):
        h = len(by.get(d, [])) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


def bracket_dict(c, x, y):
    """[x, y] for vectors {i: coeff} with structure constants {(i, j, k): v} (i < j)."""
    out = {}
    for i, a in x.items():
        for j, b in y.items():
            if i == j:
                continue
            s = 1 if i < j else -1
            lo, hi = min(i, j), max(i, j)
            for (p, q, k), v in c.items():
                if (p, q) == (lo, hi):
                    out[k] = out.get(k, 0) + s * a * b * v
    return {k: v for k, v in out.items() if v}


def jacobi_oracle(dim, c):
    """Jacobi identity on every ordered basis triple, including repeats."""
    for i in range(1, dim + 1):
        for j in range(1, dim + 1):
            for k in range(1, dim + 1):
                x, y, z = {i: 1}, {j: 1}, {k: 1}
                acc = {}
                for a, b, cc in ((x, y, z), (y, z, x), (z, x, y)):
                    for t, v in bracket_dict(c, a, bracket_dict(c, b, cc)).items():
                        acc[t] = acc.get(t, 0) + v
                if any(acc.values()):
                    return False
    return True


# Quaternion multiplication on the basis 1, i, j, k written as (sign, index).
QUATERNIONS = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}
