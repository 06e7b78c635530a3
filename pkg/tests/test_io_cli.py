import json
import os
import subprocess
import sys

import pytest

from extalg import io
from extalg.cli import main
from extalg.fields import GF, QQ

DATA = os.path.join(os.path.dirname(os.path.dirname(__file__)), "data")
FILES = sorted(f for f in os.listdir(DATA) if f.endswith(".json"))


def verb_for(name):
    """The verb each bundled file is meant for, plus extra flags."""
    kind = name.split("_")[0]
    return {
        "complex": ("homology", []),
        "arrangement": ("orlik-solomon", []),
        "matroid": ("matroid", []),
        "bracket": ("lie-cohomology", []),
        "form": ("clifford-table", []),
        "module": ("tate", ["--lo", "-2", "--hi", "2"]),
    }[kind]


def cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def path(name):
    return os.path.join(DATA, name)


class TestVerbs:
    def test_homology(self, capsys):
        code, out, _ = cli(capsys, "homology", path("complex_edge_and_cycle.json"))
        assert code == 0
        assert json.loads(out) == {"reduced_h": {"0": 1, "1": 1}}

    def test_homology_prime_field(self, capsys):
        code, out, _ = cli(capsys, "homology", path("complex_edge_and_cycle.json"), "--field", "fp:32003")
        assert json.loads(out) == {"reduced_h": {"0": 1, "1": 1}}

    def test_cohomology(self, capsys):
        _, out, _ = cli(capsys, "cohomology", path("complex_hollow_triangle.json"))
        assert json.loads(out) == {"reduced_h": {"1": 1}}

    def test_hilbert(self, capsys):
        _, out, _ = cli(capsys, "hilbert", path("complex_hollow_triangle.json"))
        rep = json.loads(out)
        assert rep["f_vector"] == [1, 3, 3]
        assert rep["numerator"] == [1, 1, 1]
        assert rep["denominator_exponent"] == 2
        assert rep["coefficients"][:4] == [1, 3, 6, 9]

    def test_orlik_solomon(self, capsys):
        _, out, _ = cli(capsys, "orlik-solomon", path("arrangement_braid.json"))
        assert json.loads(out)["dims"] == [1, 3, 2]
        _, out, _ = cli(capsys, "orlik-solomon", path("arrangement_coordinates.json"))
        assert json.loads(out)["dims"] == [1, 2, 1]
        _, out, _ = cli(capsys, "orlik-solomon", path("arrangement_generic_four_lines.json"))
        assert json.loads(out)["dims"] == [1, 4, 6, 3]

    def test_matroid(self, capsys):
        code, out, _ = cli(capsys, "matroid", path("arrangement_braid.json"))
        rep = json.loads(out)
        assert code == 0 and rep["rank"] == 2 and rep["is_matroid"]
        assert [1, 2, 3] not in rep["independent"]

    def test_matroid_failure_reports_then_exits_one(self, capsys):
        code, out, err = cli(capsys, "matroid", path("matroid_exchange_fails.json"))
        assert code == 1
        rep = json.loads(out)
        assert not rep["is_matroid"] and rep["violation"] == {"X": [1], "Y": [2, 3]}
        assert err.startswith("extalg: error[domain]:")

    def test_orlik_solomon_rejects_non_matroid(self, capsys):
        code, out, err = cli(capsys, "orlik-solomon", path("matroid_exchange_fails.json"))
        assert code == 1 and out == ""

    def test_lie(self, capsys):
        _, out, _ = cli(capsys, "lie-cohomology", path("bracket_sl2.json"))
        assert json.loads(out) == {"dims": [1, 0, 0, 1]}
        _, out, _ = cli(capsys, "lie-cohomology", path("bracket_affine_line.json"))
        assert json.loads(out) == {"dims": [1, 1, 0]}

    def test_lie_jacobi_failure(self, capsys):
        code, out, err = cli(capsys, "lie-cohomology", path("bracket_not_jacobi.json"))
        assert code == 1 and out == ""
        assert err.startswith("extalg: error[domain]: Jacobi")

    def test_clifford_quaternions(self, capsys):
        _, out, _ = cli(capsys, "clifford-table", path("form_quaternions.json"))
        rep = json.loads(out)
        assert rep["basis"] == [[], [1], [2], [1, 2]]
        # e1 * e2 = e1e2 and e2 * e1 = -e1e2
        assert rep["table"][1][2] == [{"coeff": 1, "indices": [1, 2]}]
        assert rep["table"][2][1] == [{"coeff": -1, "indices": [1, 2]}]
        assert rep["table"][3][3] == [{"coeff": -1, "indices": []}]

    def test_clifford_complex_numbers(self, capsys):
        _, out, _ = cli(capsys, "clifford-table", path("form_complex_numbers.json"))
        assert json.loads(out)["table"][1][1] == [{"coeff": -1, "indices": []}]

    def test_tate(self, capsys):
        code, out, _ = cli(capsys, "tate", path("module_projective_line.json"), "--lo", "-3", "--hi", "3")
        rep = json.loads(out)
        assert code == 0
        assert rep["ranks"] == [3, 2, 1, 1, 2, 3, 4]
        assert rep["checks"] == {"composition_zero": True, "minimal": True, "exact": True}
        assert rep["table"]["0"]["2"] == 3 and rep["table"]["1"]["-4"] == 3
        assert "3" not in rep["table"]["1"]  # outside the window: unknown, omitted

    def test_tate_image_form_agrees(self, capsys):
        _, a, _ = cli(capsys, "tate", path("module_projective_line.json"), "--lo", "-3", "--hi", "3")
        _, b, _ = cli(capsys, "tate", path("module_projective_line_image.json"), "--lo", "-3", "--hi", "3")
        assert json.loads(a)["terms"] == json.loads(b)["terms"]

    def test_tate_steps(self, capsys):
        _, out, _ = cli(capsys, "tate", path("module_residue_field.json"), "--lo", "-1", "--hi", "1", "--steps", "3")
        rep = json.loads(out)
        assert [sum(t.values()) for t in rep["projective"]] == [1, 2, 3, 4]
        assert [sum(t.values()) for t in rep["injective"]] == [1, 2, 3, 4]

    def test_tate_needs_window(self, capsys):
        code, out, err = cli(capsys, "tate", path("module_projective_line.json"))
        assert code == 2 and out == ""
        assert err.startswith("extalg: error[parse]:")

    def test_bgg(self, capsys):
        _, out, _ = cli(capsys, "bgg-check", path("module_exterior_plane.json"))
        rep = json.loads(out)
        assert rep["ranks"] == {"0": 1, "1": 2, "2": 1}
        assert rep["differentials"] == {"0": [["x1"], ["x2"]], "1": [["-x2", "x1"]]}
        assert rep["d_squared_zero"] is True


class TestErrors:
    def test_missing_file(self, capsys, tmp_path):
        code, _, err = cli(capsys, "homology", str(tmp_path / "nope.json"))
        assert code == 2 and err.startswith("extalg: error[parse]: cannot read")

    def test_malformed_json(self, capsys, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text("{\"n\": 3, ")
        code, _, err = cli(capsys, "homology", str(p))
        assert code == 2 and "malformed JSON" in err
        assert err.count("\n") == 1

    def test_wrong_shape(self, capsys, tmp_path):
        p = tmp_path / "x.json"
        p.write_text(json.dumps({"n": 3}))
        assert cli(capsys, "homology", str(p))[0] == 2
        p.write_text(json.dumps([1, 2]))
        assert cli(capsys, "lie-cohomology", str(p))[0] == 2

    def test_vertex_out_of_range_is_a_domain_error(self, capsys, tmp_path):
        p = tmp_path / "x.json"
        p.write_text(json.dumps({"n": 2, "facets": [[1, 5]]}))
        assert cli(capsys, "homology", str(p))[0] == 1

    def test_non_homogeneous_module(self, capsys, tmp_path):
        p = tmp_path / "m.json"
        cell = [{"coeff": 1, "indices": [1]}, {"coeff": 1, "indices": [1, 2]}]
        p.write_text(json.dumps({"n": 2, "matrix": [[cell]], "row_degrees": [1], "col_degrees": [0]}))
        assert cli(capsys, "tate", str(p), "--lo", "0", "--hi", "1")[0] == 1

    def test_bad_field(self, capsys):
        code, _, err = cli(capsys, "homology", path("complex_edge_and_cycle.json"), "--field", "fp:12")
        assert code == 2

    def test_unknown_verb(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate", path("complex_edge_and_cycle.json")])
        assert exc.value.code == 2

    def test_reversed_window(self, capsys):
        assert cli(capsys, "tate", path("module_projective_line.json"), "--lo", "2", "--hi", "1")[0] == 2


class TestDeterminismAndRoundTrip:
    @pytest.mark.parametrize("name", FILES)
    def test_round_trip(self, capsys, name):
        verb, extra = verb_for(name)
        code, out, _ = cli(capsys, verb, path(name), *extra)
        if code == 0:
            assert json.loads(out) is not None
            assert io.dumps(json.loads(out)) == out
        else:
            assert code == 1
        # every file also parses with its reader
        obj = io.load_json(path(name))
        reader = {
            "complex": io.read_complex, "arrangement": io.read_arrangement,
            "matroid": io.read_matroid, "bracket": io.read_bracket,
            "form": io.read_form, "module": io.read_module,
        }[name.split("_")[0]]
        reader(obj)

    @pytest.mark.parametrize("name", FILES)
    def test_byte_identical(self, capsys, name):
        verb, extra = verb_for(name)
        first = cli(capsys, verb, path(name), *extra)
        second = cli(capsys, verb, path(name), *extra)
        assert first == second

    def test_module_entry_point(self):
        env = dict(os.environ)
        src = os.path.join(os.path.dirname(DATA), "src")
        env["PYTHONPATH"] = src + os.pathsep + env.get("PYTHONPATH", "")
        runs = [
            subprocess.run([sys.executable, "-m", "extalg", "orlik-solomon", path("arrangement_braid.json")],
                           capture_output=True, env=env)
            for _ in range(2)
        ]
        assert runs[0].returncode == 0
        assert runs[0].stdout == runs[1].stdout
        assert json.loads(runs[0].stdout)["dims"] == [1, 3, 2]


class TestTextSnapshots:
    def test_hilbert(self, capsys):
        _, out, _ = cli(capsys, "hilbert", path("complex_hollow_triangle.json"), "--format", "text")
        assert out == "f = (1, 3, 3)\nH(t) = (1 + t + t^2) / (1-t)^2\nseries: 1, 3, 6, 9, 12, 15, 18, 21, ...\n"

    def test_quaternion_table(self, capsys):
        _, out, _ = cli(capsys, "clifford-table", path("form_quaternions.json"), "--format", "text")
        assert out == (
            "      |     1    e1    e2  e1e2\n"
            "-------------------------------\n"
            "    1 |     1    e1    e2  e1e2\n"
            "   e1 |    e1    -1  e1e2   -e2\n"
            "   e2 |    e2 -e1e2    -1    e1\n"
            " e1e2 |  e1e2    e2   -e1    -1\n"
        )

    def test_tate_table(self, capsys):
        _, out, _ = cli(capsys, "tate", path("module_projective_line.json"), "--lo", "-3", "--hi", "3",
                        "--format", "text")
        assert out.endswith(
            "p=1 |  3  2  1  .  .  .  .  ?\n"
            "p=0 |  ?  .  .  .  1  2  3  4\n"
            "-----------------------------\n"
            "q   | -4 -3 -2 -1  0  1  2  3\n"
        )

    def test_bgg(self, capsys):
        _, out, _ = cli(capsys, "bgg-check", path("module_projective_line.json"), "--format", "text")
        assert out == (
            "terms: S^2(-1)  S^3(0)\n"
            "d^-1:\n"
            "  [  x1    0 ]\n"
            "  [ -x2   x1 ]\n"
            "  [   0   x2 ]\n"
            "d^2 = 0: True\n"
        )


class TestReaders:
    def test_term_list_sorting_sign(self):
        v = io.read_term_list(3, [{"coeff": 2, "indices": [3, 1]}])
        assert io.term_list(v) == [{"coeff": -2, "indices": [1, 3]}]

    def test_repeated_index_is_zero(self):
        assert not io.read_term_list(3, [{"coeff": 1, "indices": [2, 2]}])

    def test_rationals_serialize_as_strings(self):
        v = io.read_term_list(2, [{"coeff": "3/6", "indices": [1]}])
        assert io.term_list(v) == [{"coeff": "1/2", "indices": [1]}]

    def test_prime_field_scalars(self):
        v = io.read_term_list(2, [{"coeff": "1/2", "indices": [1]}], GF(7))
        assert io.term_list(v) == [{"coeff": 4, "indices": [1]}]

    def test_bool_is_not_an_integer(self):
        with pytest.raises(io.ParseError):
            io.read_complex({"n": True, "facets": []})

    def test_explicit_module_anchor(self):
        obj = {"n": 1, "components": {"0": 1}, "anchor": 3}
        assert io.read_module(obj, QQ).anchor == 3

    def test_form_from_signature(self):
        assert io.read_form({"p": 1, "q": 2}).n == 3
