import random

import pytest
from hypothesis import given, strategies as st

from extalg.exactla import Matrix
from extalg.exterior import MultiVector, mono, monomials
from extalg.fields import GF, QQ
from extalg.tate import (
    ExteriorMatrix, GradedEModule, ModuleAxiomError, bgg_linear_complex,
    cohomology_table, exterior_module, minimal_injective_resolution,
    minimal_projective_resolution, module_from_matrix, strip_free_summands, tate_window,
    trivial_module,
)
from oracles import dense_rank


def form(n, *terms):
    """form(n, (c, (i, j, ...)), ...)"""
    return MultiVector(n, {mono(idx) if idx else 0: c for c, idx in terms})


def column_e2_e1(row_q=1, col_q=0):
    return ExteriorMatrix(2, [row_q, row_q], [col_q], {(0, 0): form(2, (1, (2,))), (1, 0): form(2, (1, (1,)))})


def projective_line():
    return module_from_matrix(column_e2_e1(), "cokernel")


def horrocks_mumford(field=QQ):
    n = 5
    def w(i, j):
        e = [MultiVector(n, {1 << (k - 1): 1}, field) for k in range(1, 6)]
        return e[i - 1] ^ e[j - 1]
    rows = [[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)], [(3, 5), (4, 1), (5, 2), (1, 3), (2, 4)]]
    ent = {(r, c): w(*rows[r][c]) for r in range(2) for c in range(5)}
    return ExteriorMatrix(n, [-2, -2], [-4] * 5, ent, field)


def random_matrix(rng, n, field=QQ):
    rows = [rng.randint(-1, 2) for _ in range(rng.randint(1, 2))]
    cols = [rng.randint(-2, 1) for _ in range(rng.randint(1, 3))]
    ent = {}
    for r, qr in enumerate(rows):
        for c, qc in enumerate(cols):
            k = qr - qc
            if 1 <= k <= n and rng.random() < 0.8:
                mons = monomials(n, k)
                picked = rng.sample(mons, rng.randint(1, len(mons)))
                ent[(r, c)] = MultiVector(n, {m: rng.randint(-2, 2) for m in picked}, field)
    return ExteriorMatrix(n, rows, cols, ent, field)


class TestExteriorMatrix:
    def test_homogeneity_enforced(self):
        with pytest.raises(ValueError):
            ExteriorMatrix(2, [1], [0], {(0, 0): form(2, (1, (1,)), (1, (1, 2)))})
        with pytest.raises(ValueError):
            ExteriorMatrix(2, [0], [0], {(0, 0): form(2, (1, (1,)))})

    def test_degree_matrix_is_left_multiplication(self):
        A = column_e2_e1()
        # internal degree 0: source basis {1*g}, target basis {e1 g0, e2 g0, e1 g1, e2 g1}
        m = A.degree_matrix(0)
        assert m.to_lists() == [[0], [1], [1], [0]]
        # internal degree 1: e1*g -> e1e2 g0 (+1), e2*g -> e2e1 g1 = -e1e2 g1
        assert A.degree_matrix(1).to_lists() == [[1, 0], [0, -1]]

    def test_composition(self):
        row = ExteriorMatrix(2, [2], [1, 1], {(0, 0): form(2, (1, (1,))), (0, 1): form(2, (-1, (2,)))})
        comp = column_e2_e1().then(row)
        # e2 ^ e1 - e1 ^ e2 = -2 e1e2
        assert comp[(0, 0)] == form(2, (-2, (1, 2)))


class TestModuleFromMatrix:
    def test_cokernel_dimensions(self):
        M = module_from_matrix(column_e2_e1(0, -1), "cokernel")
        assert M.components == {0: 2, 1: 3}

    def test_cokernel_dimensions_by_enumeration(self):
        # E^2 in degree 1 has basis e1 g0, e2 g0, e1 g1, e2 g1; relations are the
        # multiples of (e2, e1): only the generator itself sits in degree 1
        relation_span = [[0, 1, 1, 0]]
        assert 4 - dense_rank(relation_span) == 3
        # degree 2: e1e2 g0, e1e2 g1; e1*(e2,e1) = (e1e2, 0), e2*(e2,e1) = (0, -e1e2)
        assert 2 - dense_rank([[1, 0], [0, -1]]) == 0

    def test_empty_matrix_gives_free_module(self):
        A = ExteriorMatrix(3, [0], [], {})
        M = module_from_matrix(A, "cokernel")
        assert M.components == {0: 1, 1: 3, 2: 3, 3: 1}

    def test_horrocks_mumford_accepted(self):
        M = module_from_matrix(horrocks_mumford(), "image", index=-1)
        assert M.n == 5 and M.total_dim > 0
        assert M.validate()

    def test_anchors(self):
        assert module_from_matrix(column_e2_e1(), "cokernel", 0).anchor == 1
        assert module_from_matrix(column_e2_e1(), "image", 0).anchor == 0

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            module_from_matrix(column_e2_e1(), "kernel")

    @given(st.integers(0, 10**6))
    def test_result_satisfies_module_axioms(self, seed):
        rng = random.Random(seed)
        A = random_matrix(rng, rng.choice([2, 3]))
        for mode in ("cokernel", "image"):
            assert module_from_matrix(A, mode).validate()


class TestGradedModule:
    def test_axioms_checked(self):
        bad = {(1, 0): Matrix.from_rows([[1]]), (1, 1): Matrix.from_rows([[1]])}
        with pytest.raises(ModuleAxiomError):
            GradedEModule(1, {0: 1, 1: 1, 2: 1}, bad)

    def test_anticommutation_checked(self):
        acts = {(1, 0): Matrix.from_rows([[1]]), (2, 1): Matrix.from_rows([[1]]),
                (2, 0): Matrix.from_rows([[1]]), (1, 1): Matrix.from_rows([[1]])}
        with pytest.raises(ModuleAxiomError):
            GradedEModule(2, {0: 1, 1: 1, 2: 1}, acts)

    def test_double_dual(self):
        M = projective_line()
        DD = M.dual().dual()
        assert DD.components == M.components
        assert all(DD.action(i, d) == M.action(i, d) for i in (1, 2) for d in M.degrees)

    def test_strip_free_summands(self):
        M = exterior_module(2)
        Q, k = strip_free_summands(M)
        assert k == 1 and Q.is_zero()
        Q, k = strip_free_summands(projective_line())
        assert k == 0


class TestResolutions:
    def test_residue_field(self):
        P = minimal_projective_resolution(trivial_module(2), 4)
        assert P.ranks == [1, 2, 3, 4, 5]
        assert P.is_minimal() and P.compositions_vanish()

    def test_free_module(self):
        P = minimal_projective_resolution(exterior_module(3), 3)
        assert P.ranks == [1] and P.complete
        assert minimal_injective_resolution(exterior_module(3), 3).ranks == [1]

    def test_projective_line_syzygies(self):
        P = minimal_projective_resolution(projective_line(), 3)
        assert P.ranks == [2, 1, 1, 2]

    def test_injective_of_residue_field(self):
        I = minimal_injective_resolution(trivial_module(2), 4)
        assert I.ranks == [1, 2, 3, 4, 5]
        assert I.is_minimal() and I.compositions_vanish()

    def test_injective_of_projective_line(self):
        M = projective_line()
        P = minimal_projective_resolution(M, 0)
        I = minimal_injective_resolution(M, 2)
        assert [P.ranks[0]] + I.ranks == [2, 3, 4, 5]

    def test_negative_steps(self):
        with pytest.raises(ValueError):
            minimal_projective_resolution(trivial_module(2), -1)


class TestWindow:
    def test_projective_line(self):
        W = tate_window(projective_line(), -3, 3)
        assert W.term_ranks() == [3, 2, 1, 1, 2, 3, 4]
        assert W.verify() == (True, True, True)

    def test_zero_module(self):
        W = tate_window(GradedEModule(2, {}), -2, 2)
        assert W.term_ranks() == [0] * 5
        assert cohomology_table(W).is_empty()

    def test_free_module_window_is_zero(self):
        assert tate_window(exterior_module(2), -2, 2).term_ranks() == [0] * 5

    def test_two_term_window(self):
        W = tate_window(projective_line(), 4, 5)
        assert list(W.differentials) == [4]
        assert W.verify() == (True, True, True)

    def test_window_must_be_nonempty(self):
        with pytest.raises(ValueError):
            tate_window(projective_line(), 2, 2)

    def test_window_away_from_the_module(self):
        W = tate_window(projective_line(), 3, 6)
        assert W.term_ranks() == [4, 5, 6, 7]
        W = tate_window(projective_line(), -6, -3)
        assert W.term_ranks() == [6, 5, 4, 3]

    def test_determinacy(self):
        ref = tate_window(projective_line(), -6, 6)
        for t in (-4, -1, 1, 3):
            M = module_from_matrix(ref.differentials[t], "image", index=t)
            W = tate_window(M, -6, 6)
            assert W.term_degrees() == ref.term_degrees()

    def test_free_summand_does_not_change_the_window(self):
        k = trivial_module(2)
        E = exterior_module(2)
        acts = {}
        comps = {0: 2, 1: 2, 2: 1}
        # k (+) E: k sits in the first coordinate of degree 0
        for i in (1, 2):
            m0 = E.action(i, 0).to_lists()
            acts[(i, 0)] = Matrix.from_rows([[0] + r for r in m0])
            acts[(i, 1)] = E.action(i, 1)
        M = GradedEModule(2, comps, acts)
        assert tate_window(M, -3, 3).term_degrees() == tate_window(k, -3, 3).term_degrees()

    @given(st.integers(0, 10**6), st.sampled_from(["cokernel", "image"]), st.sampled_from([QQ, GF(7), GF(32003)]))
    def test_random_windows_are_minimal_and_exact(self, seed, mode, field):
        rng = random.Random(seed)
        A = random_matrix(rng, rng.choice([2, 3, 4]), field)
        W = tate_window(module_from_matrix(A, mode), -3, 3)
        assert W.verify() == (True, True, True)

    @given(st.integers(0, 10**6))
    def test_random_determinacy(self, seed):
        rng = random.Random(seed)
        A = random_matrix(rng, rng.choice([2, 3]))
        ref = tate_window(module_from_matrix(A, "cokernel"), -3, 4)
        t = rng.randint(-2, 2)
        W = tate_window(module_from_matrix(ref.differentials[t], "image", index=t), -3, 4)
        assert W.term_degrees() == ref.term_degrees()


class TestCohomologyTable:
    def test_projective_line(self):
        C = cohomology_table(tate_window(projective_line(), -6, 6))
        for d in range(0, 6):
            assert C.get(0, d) == d + 1
        for d in range(2, 7):
            assert C.get(1, -d) == d - 1
        assert C.get(1, -1) == 0 and C.get(0, -1) == 0

    def test_unknown_outside_window(self):
        C = cohomology_table(tate_window(projective_line(), -3, 3))
        assert C.get(0, 4) is None
        assert C.get(1, -5) is None
        assert C.get(2, 0) == 0

    @pytest.mark.parametrize("n", [2, 3])
    def test_serre_symmetry_for_the_structure_sheaf(self, n):
        top = (1 << n) - 1
        A = ExteriorMatrix(n, [0], [-n], {(0, 0): MultiVector(n, {top: 1})})
        C = cohomology_table(tate_window(module_from_matrix(A, "image", index=-1), -5, 5))
        checked = 0
        for d in range(-12, 12):
            a, b = C.get(0, d), C.get(n - 1, -d - n)
            if a is not None and b is not None:
                assert a == b
                checked += 1
        assert checked >= 5
        assert C.get(0, 2) == (3 if n == 2 else 6)

    def test_text_layout(self):
        text = cohomology_table(tate_window(projective_line(), -2, 2)).to_text()
        lines = text.splitlines()
        assert lines[0].startswith("p=1") and lines[1].startswith("p=0")
        assert lines[-1].split("|")[1].split() == ["-3", "-2", "-1", "0", "1", "2"]

    def test_horrocks_mumford_euler_polynomial(self):
        W = tate_window(module_from_matrix(horrocks_mumford(GF(32003)), "image", index=-1), -5, 5)
        C = cohomology_table(W)
        qs = C.full_twists()
        chi = {q: C.euler_characteristic(q) for q in qs}
        assert all(v == ((q + 2) ** 2 - 1) * ((q + 2) ** 2 - 24) // 12 for q, v in chi.items())
        assert not C.unplaced


class TestBGG:
    def test_residue_field(self):
        B = bgg_linear_complex(trivial_module(3))
        assert B.ranks == {0: 1} and B.differentials == {}

    def test_exterior_algebra_gives_koszul(self):
        B = bgg_linear_complex(exterior_module(2))
        assert B.ranks == {0: 1, 1: 2, 2: 1}
        assert B.differentials[0].to_strings() == [["x1"], ["x2"]]
        assert B.differentials[1].to_strings() == [["-x2", "x1"]]
        assert B.squares_vanish

    def test_projective_line(self):
        B = bgg_linear_complex(module_from_matrix(column_e2_e1(0, -1), "cokernel"))
        assert sorted(B.differentials) == [0]
        assert B.squares_vanish

    def test_invalid_module(self):
        acts = {(1, 0): Matrix.from_rows([[1]]), (2, 1): Matrix.from_rows([[1]]),
                (2, 0): Matrix.from_rows([[1]]), (1, 1): Matrix.from_rows([[1]])}
        M = GradedEModule(2, {0: 1, 1: 1, 2: 1}, acts, validate=False)
        with pytest.raises(ModuleAxiomError):
            bgg_linear_complex(M)
