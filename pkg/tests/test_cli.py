import json

import pytest

from momentangle.cli import main
from momentangle.intlinalg import IntMatrix
from momentangle.simplicial import boundary_of_simplex, cyclic_polytope_boundary
from momentangle.torus import cyclic69_free_subtorus, cyclic69_quotient_matrix


@pytest.fixture
def c69_file(tmp_path):
    path = tmp_path / "c69.json"
    path.write_text(json.dumps(cyclic_polytope_boundary(6, 9).to_json()))
    return str(path)


@pytest.fixture
def torus_file(tmp_path):
    path = tmp_path / "torus.json"
    path.write_text(json.dumps(cyclic69_free_subtorus().to_json()))
    return str(path)


@pytest.fixture
def theta_file(tmp_path):
    path = tmp_path / "theta.json"
    path.write_text(json.dumps(cyclic69_quotient_matrix().to_json()))
    return str(path)


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


class TestFacetsCyclic:
    def test_c69(self, capsys):
        code, obj = run_json(capsys, ["facets-cyclic", "6", "9"])
        assert code == 0
        assert len(obj["facets"]) == 30

    def test_quadrilateral(self, capsys):
        code, obj = run_json(capsys, ["facets-cyclic", "2", "4"])
        assert code == 0
        assert obj["facets"] == [[1, 2], [1, 4], [2, 3], [3, 4]]

    def test_bad_arguments(self, capsys):
        assert main(["facets-cyclic", "3", "3"]) == 2


class TestCheckManifold:
    def test_certified(self, capsys, c69_file):
        code, obj = run_json(capsys, ["check-manifold", "--complex",
                                      c69_file])
        assert code == 0
        assert obj["verdict"] is True
        assert obj["manifold"] == "certified_manifold"

    def test_unknown(self, capsys, tmp_path):
        path = tmp_path / "edge.json"
        path.write_text(json.dumps({"m": 2, "facets": [[1, 2]]}))
        code, obj = run_json(capsys, ["check-manifold", "--complex",
                                      str(path)])
        assert code == 1
        assert obj["verdict"] is False
        assert obj["manifold"] == "unknown"


class TestCheckFree:
    def test_reference_pair(self, capsys, c69_file, torus_file):
        code, obj = run_json(capsys, ["check-free", "--complex", c69_file,
                                      "--torus", torus_file])
        assert code == 0
        assert obj["verdict"] is True

    def test_negative_verdict(self, capsys, tmp_path):
        cpath = tmp_path / "tri.json"
        cpath.write_text(json.dumps(boundary_of_simplex(2).to_json()))
        tpath = tmp_path / "coord.json"
        tpath.write_text(json.dumps({"m": 3, "rows": [[1, 0, 0]]}))
        code, obj = run_json(capsys, ["check-free", "--complex", str(cpath),
                                      "--torus", str(tpath)])
        assert code == 1
        assert obj["verdict"] is False
        assert obj["witness_facet"] == [1, 2]


class TestExtendChar:
    def test_requires_seed(self, capsys, c69_file, torus_file):
        assert main(["extend-char", "--complex", c69_file,
                     "--torus", torus_file]) == 2

    def test_success(self, capsys, c69_file, torus_file):
        code, obj = run_json(capsys, ["--seed", "7", "extend-char",
                                      "--complex", c69_file,
                                      "--torus", torus_file,
                                      "--entry-bound", "3"])
        assert code == 0
        assert obj["verdict"] is True
        assert obj["theta_full"]["rows"] == 3


class TestQuotientAndW2:
    def test_h2(self, capsys, theta_file):
        code, obj = run_json(capsys, ["quotient-h2", "--theta", theta_file])
        assert code == 0
        assert obj["h2"]["free_rank"] == 2
        assert obj["h2"]["torsion"] == []
        assert obj["w1"] == 0
        assert "simply-connected" in obj["assumption"]

    def test_w2_nonzero(self, capsys, theta_file):
        code, obj = run_json(capsys, ["w2", "--theta", theta_file])
        assert code == 0
        assert obj["w2"]["nonzero"] is True
        assert obj["w2"]["coords"] == [1, 1]

    def test_w2_from_torus(self, capsys, torus_file):
        code, obj = run_json(capsys, ["w2", "--torus", torus_file])
        assert code == 0
        assert obj["w2"]["nonzero"] is True

    def test_missing_input(self, capsys):
        assert main(["w2"]) == 2


class TestSwQuasitoric:
    def test_cp2(self, capsys, tmp_path):
        cpath = tmp_path / "bd2.json"
        cpath.write_text(json.dumps(boundary_of_simplex(2).to_json()))
        lpath = tmp_path / "cp2.json"
        lpath.write_text(json.dumps(
            IntMatrix([[1, 0, 1], [0, 1, 1]]).to_json()))
        code, obj = run_json(capsys, ["sw-quasitoric", "--complex",
                                      str(cpath), "--char", str(lpath)])
        assert code == 0  # nontrivial classes
        assert obj["sw_trivial"] is False
        assert obj["graded_dims"] == [1, 1, 1]
        assert obj["sw_numbers"] == {"w2^2": 1, "w4": 1}

    def test_cp3_trivial(self, capsys, tmp_path):
        cpath = tmp_path / "bd3.json"
        cpath.write_text(json.dumps(boundary_of_simplex(3).to_json()))
        lpath = tmp_path / "cp3.json"
        lpath.write_text(json.dumps(IntMatrix(
            [[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]]).to_json()))
        code, obj = run_json(capsys, ["sw-quasitoric", "--complex",
                                      str(cpath), "--char", str(lpath)])
        assert code == 1  # trivial classes: negative verdict
        assert obj["sw_trivial"] is True


class TestSearchFree:
    def test_triangle(self, capsys, tmp_path):
        cpath = tmp_path / "tri.json"
        cpath.write_text(json.dumps(boundary_of_simplex(2).to_json()))
        code, obj = run_json(capsys, ["search-free", "--complex",
                                      str(cpath), "--k", "1",
                                      "--entries=-1,0,1"])
        assert code == 0
        assert obj["found"]
        assert "bounded evidence" in obj["note"]


class TestGlobalFlags:
    def test_json_out_and_quiet(self, capsys, tmp_path):
        out = tmp_path / "out.json"
        code = main(["--json-out", str(out), "--quiet",
                     "facets-cyclic", "2", "4"])
        assert code == 0
        assert capsys.readouterr().out == ""
        obj = json.loads(out.read_text())
        assert len(obj["facets"]) == 4

    def test_malformed_json_is_input_error(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert main(["check-manifold", "--complex", str(bad)]) == 2

    def test_missing_file_is_input_error(self):
        assert main(["check-manifold", "--complex", "/nope.json"]) == 2


class TestVerifyExample:
    def test_full_pipeline(self, capsys):
        code, obj = run_json(capsys, ["verify-example"])
        assert code == 0
        assert obj["passed"] is True
        assert [s["stage"] for s in obj["stages"]] == [
            "gale-enumeration", "purity", "homology-sphere", "freeness",
            "kernel-containment", "h2", "w2"]

    def test_deterministic_reports(self, capsys):
        main(["verify-example"])
        first = capsys.readouterr().out
        main(["verify-example"])
        second = capsys.readouterr().out
        assert first == second
