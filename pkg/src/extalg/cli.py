"""Command line front end: ``python -m extalg <verb> FILE [options]``.

Exit status is 0 on success, 1 when the input is well formed but
mathematically rejected, and 2 when it cannot be read or parsed. Errors are
reported on stderr as a single line ``extalg: error[<kind>]: <message>``.
"""
import argparse
import sys

from . import io
from .arrangements import (
    NotAMatroid, exchange_violation, matroid_from_vectors, orlik_solomon,
)
from .clifford import MAX_TABLE_N, basis_order, multiplication_table, table_as_terms, table_as_text
from .exterior import indices
from .fields import parse_field
from .lie import NotALieAlgebra, lie_cohomology
from .simplicial import hilbert_series_face_ring, reduced_cohomology, reduced_homology
from .tate import (
    bgg_linear_complex, cohomology_table, minimal_injective_resolution,
    minimal_projective_resolution, strip_free_summands, tate_window,
)

VERBS = (
    "homology", "cohomology", "hilbert", "matroid", "orlik-solomon",
    "lie-cohomology", "clifford-table", "tate", "bgg-check",
)


class DomainError(Exception):
    pass


def _profile(p):
    return {str(i): d for i, d in sorted(p.reduced_h.items())}


def _profile_text(p, sym):
    if not p.reduced_h:
        return "all reduced groups vanish"
    return "\n".join(f"{sym}_{i} = {d}" for i, d in sorted(p.reduced_h.items()))


def cmd_homology(obj, args, F):
    prof = reduced_homology(io.read_complex(obj), F)
    return {"reduced_h": _profile(prof)}, _profile_text(prof, "H~")


def cmd_cohomology(obj, args, F):
    prof = reduced_cohomology(io.read_complex(obj), F)
    return {"reduced_h": _profile(prof)}, _profile_text(prof, "H~^")


def cmd_hilbert(obj, args, F):
    hs = hilbert_series_face_ring(io.read_complex(obj))
    rep = {
        "f_vector": list(hs.f_vector),
        "numerator": list(hs.numerator),
        "denominator_exponent": hs.denominator_exponent,
        "coefficients": hs.coefficients(8),
    }
    text = f"f = {tuple(hs.f_vector)}\nH(t) = {hs}\nseries: {', '.join(map(str, rep['coefficients']))}, ..."
    return rep, text


def _matroid_of(obj, F):
    if isinstance(obj, dict) and "independent" in obj:
        return io.read_matroid(obj)
    return matroid_from_vectors(io.read_arrangement(obj, F))


def cmd_matroid(obj, args, F):
    m = _matroid_of(obj, F)
    bad = exchange_violation(m)
    faces = sorted(m.independents.faces, key=lambda f: (len(indices(f)), indices(f)))
    rep = {
        "n": m.n,
        "rank": m.rank,
        "is_matroid": bad is None,
        "independent": [list(indices(f)) for f in faces],
        "violation": None if bad is None else {"X": list(bad[0]), "Y": list(bad[1])},
    }
    text = f"n = {m.n}, rank = {m.rank}, exchange axiom {'holds' if bad is None else 'fails'}"
    if bad is not None:
        text += f" (X = {list(bad[0])}, Y = {list(bad[1])})"
    text += f"\nindependent sets: {len(faces)}"
    if bad is not None:
        print(io.dumps(rep) if args.format == "json" else text)
        raise DomainError(f"exchange axiom fails for X={list(bad[0])}, Y={list(bad[1])}")
    return rep, text


def cmd_orlik_solomon(obj, args, F):
    try:
        A = orlik_solomon(_matroid_of(obj, F), F)
    except NotAMatroid as exc:
        raise DomainError(str(exc)) from None
    rep = {"dims": list(A.degree_dims), "bases": [[list(b) for b in basis] for basis in A.degree_bases]}
    lines = [f"dims = {tuple(A.degree_dims)}"]
    for r, basis in enumerate(A.degree_bases):
        names = ["1" if not b else "e" + "e".join(map(str, b)) for b in basis]
        lines.append(f"  degree {r}: {' '.join(names) or '-'}")
    return rep, "\n".join(lines)


def cmd_lie(obj, args, F):
    try:
        dims = lie_cohomology(io.read_bracket(obj, F))
    except NotALieAlgebra as exc:
        raise DomainError(str(exc)) from None
    return {"dims": dims}, "\n".join(f"H^{r} = {d}" for r, d in enumerate(dims))


def cmd_clifford(obj, args, F):
    b = io.read_form(obj, F)
    if b.n > MAX_TABLE_N:
        raise DomainError(f"multiplication tables are limited to n <= {MAX_TABLE_N}")
    T = multiplication_table(b)
    rep = {"basis": [list(indices(m)) for m in basis_order(b.n)], "table": table_as_terms(T)}
    return rep, table_as_text(T, b.n)


def _counts(F):
    return {str(q): m for q, m in F.degree_counts().items()}


def cmd_tate(obj, args, F):
    if args.lo is None or args.hi is None:
        raise io.ParseError("tate needs both --lo and --hi")
    if args.lo >= args.hi:
        raise io.ParseError(f"window needs lo < hi, got [{args.lo}, {args.hi}]")
    M = io.read_module(obj, F)
    W = tate_window(M, args.lo, args.hi)
    C = cohomology_table(W)
    comp, minimal, exact = W.verify()
    rep = {
        "terms": {str(t): _counts(W.terms[t]) for t in range(W.lo, W.hi + 1)},
        "table": {str(p): {str(q): v for q, v in row.items()} for p, row in C.to_dict().items()},
        "ranks": W.term_ranks(),
        "checks": {"composition_zero": comp, "minimal": minimal, "exact": exact},
    }
    lines = [f"Tate window [{W.lo}, {W.hi}]"]
    for t in range(W.lo, W.hi + 1):
        degs = ", ".join(f"{m}@{q}" for q, m in W.terms[t].degree_counts().items()) or "0"
        lines.append(f"  T^{t}: rank {W.terms[t].rank}  ({degs})")
    lines.append(f"checks: composition_zero={comp} minimal={minimal} exact={exact}")
    if args.steps is not None:
        base, _ = strip_free_summands(M)
        P = minimal_projective_resolution(base, args.steps)
        I = minimal_injective_resolution(base, args.steps)
        rep["projective"] = [_counts(X) for X in P.modules]
        rep["injective"] = [_counts(X) for X in I.modules]
        lines.append(f"projective ranks: {P.ranks}")
        lines.append(f"injective ranks: {I.ranks}")
    lines.append("")
    lines.append(C.to_text())
    return rep, "\n".join(lines)


def cmd_bgg(obj, args, F):
    M = io.read_module(obj, F)
    B = bgg_linear_complex(M)
    rep = {
        "ranks": {str(p): r for p, r in sorted(B.ranks.items())},
        "differentials": {str(p): d.to_strings() for p, d in sorted(B.differentials.items())},
        "d_squared_zero": B.squares_vanish,
    }
    lines = ["terms: " + "  ".join(f"S^{r}({p})" for p, r in sorted(B.ranks.items()))]
    for p, d in sorted(B.differentials.items()):
        lines.append(f"d^{p}:")
        rows = d.to_strings()
        w = max((len(c) for r in rows for c in r), default=1)
        lines.extend("  [ " + "  ".join(c.rjust(w) for c in r) + " ]" for r in rows)
    lines.append(f"d^2 = 0: {B.squares_vanish}")
    return rep, "\n".join(lines)


HANDLERS = {
    "homology": cmd_homology,
    "cohomology": cmd_cohomology,
    "hilbert": cmd_hilbert,
    "matroid": cmd_matroid,
    "orlik-solomon": cmd_orlik_solomon,
    "lie-cohomology": cmd_lie,
    "clifford-table": cmd_clifford,
    "tate": cmd_tate,
    "bgg-check": cmd_bgg,
}


def build_parser():
    ap = argparse.ArgumentParser(prog="extalg", description="Exact computations in exterior algebras.")
    ap.add_argument("verb", choices=VERBS)
    ap.add_argument("input", help="JSON input file")
    ap.add_argument("--field", default="rational", help="rational (default) or fp:<prime>")
    ap.add_argument("--format", choices=("json", "text"), default="json")
    ap.add_argument("--lo", type=int, help="first term index of a Tate window")
    ap.add_argument("--hi", type=int, help="last term index of a Tate window")
    ap.add_argument("--steps", type=int, help="also report resolutions of this length (tate)")
    return ap


def _fail(kind, msg, code):
    print(f"extalg: error[{kind}]: {' '.join(str(msg).split())}", file=sys.stderr)
    return code


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        F = parse_field(args.field)
    except ValueError as exc:
        return _fail("parse", exc, 2)
    if args.steps is not None and args.steps < 0:
        return _fail("parse", "--steps must be >= 0", 2)
    try:
        obj = io.load_json(args.input)
        rep, text = HANDLERS[args.verb](obj, args, F)
    except io.ParseError as exc:
        return _fail("parse", exc, 2)
    except DomainError as exc:
        return _fail("domain", exc, 1)
    except (ValueError, ArithmeticError) as exc:
        return _fail("domain", exc, 1)
    sys.stdout.write(io.dumps(rep) if args.format == "json" else text + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
