"""Command-line interface: outputs, exit codes, determinism, round trips."""

import json

import pytest

from sfenc.cli import main
from sfenc.encoding import EncodingMap
from sfenc.fermion import FermionHamiltonian
from sfenc.graph import InteractionGraph
from sfenc.sampling import complete_graph
from sfenc.stabilizers import StabilizerGroup


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# ----------------------------------------------------------------------
# encode


def test_encode_k4_superfast(capsys, tmp_path):
    code, out, _ = run(
        capsys, "encode", "--preset", "k4", "--kind", "superfast", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["encoding"]["n"] == 6
    assert payload["stabilizers"]["rank"] == 3
    # round-trip through the owning parsers
    EncodingMap.from_json(payload["encoding"])
    StabilizerGroup.from_json(payload["stabilizers"])


def test_encode_hubbard_gse_preset(capsys):
    code, out, _ = run(
        capsys, "encode", "--preset", "hubbard-gse", "--lx", "3", "--ly", "3",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["encoding"]["n"] == 54
    assert payload["encoding"]["kind"] == "gse-ec"


def test_encode_graph_file(capsys, tmp_path):
    path = tmp_path / "k4.json"
    path.write_text(json.dumps(complete_graph(4).to_json()))
    code, out, _ = run(
        capsys, "encode", "--graph", str(path), "--kind", "superfast",
        "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["stabilizers"]["logical_qubits"] == 3


def test_encode_malformed_json_exit_2(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"vertices": 3, "edges": [')
    code, _, err = run(capsys, "encode", "--graph", str(path), "--kind", "superfast")
    assert code == 2
    assert "line" in err and "column" in err


def test_encode_without_input_exit_2(capsys):
    code, _, err = run(capsys, "encode", "--kind", "superfast")
    assert code == 2
    assert "preset" in err


# ----------------------------------------------------------------------
# check-distance


def test_check_distance_k7_certificate(capsys):
    code, out, _ = run(
        capsys, "check-distance", "--preset", "k7", "--kind", "gse-ec",
        "--w-max", "2", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["certified_distance_at_least"] == 3
    assert payload["witnesses"] == []
    assert payload["single_qubit_errors"]["correctable"] is True


def test_check_distance_k4_witnesses(capsys):
    code, out, _ = run(
        capsys, "check-distance", "--preset", "k4", "--kind", "superfast",
        "--orderings", "3", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["witnesses"]
    assert payload["ordering_sweep"]["all_have_witness"] is True
    assert payload["ordering_sweep"]["orderings_sampled"] == 4


def test_check_distance_guard_exit_2(capsys):
    code, _, err = run(capsys, "check-distance", "--preset", "k4", "--w-max", "5")
    assert code == 2
    assert "guard" in err


# ----------------------------------------------------------------------
# verify-spectrum


def test_verify_spectrum_cycle4(capsys):
    code, out, _ = run(
        capsys, "verify-spectrum", "--preset", "cycle4-gse", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_verify_spectrum_k4_seeded(capsys):
    code, out, _ = run(
        capsys, "verify-spectrum", "--preset", "k4-superfast-random", "--seed", "3",
        "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_verify_spectrum_corrupted_encoding_fails(capsys, tmp_path):
    code, out, _ = run(
        capsys, "encode", "--preset", "cycle4", "--kind", "gse-fenwick",
        "--format", "json",
    )
    enc = json.loads(out)["encoding"]
    # corrupt one edge operator: X <-> Y on the first non-identity letter
    s = enc["edge_ops"][0]
    enc["edge_ops"][0] = s.replace("X", "Q").replace("Y", "X").replace("Q", "Y")
    path = tmp_path / "enc.json"
    path.write_text(json.dumps(enc))

    ham_path = tmp_path / "ham.json"
    ham = {
        "modes": 4,
        "terms": [
            {"kind": "hopping", "modes": [0, 1], "coeff": -1.0},
            {"kind": "number", "modes": [2], "coeff": 0.5},
        ],
    }
    ham_path.write_text(json.dumps(ham))
    graph_path = tmp_path / "graph.json"
    graph_path.write_text(json.dumps(enc["graph"]))
    code, out, _ = run(
        capsys, "verify-spectrum", "--graph", str(graph_path),
        "--hamiltonian", str(ham_path), "--encoding", str(path),
        "--kind", "gse-fenwick", "--format", "json",
    )
    assert code == 1


def test_verify_spectrum_file_inputs(capsys, tmp_path):
    graph_path = tmp_path / "g.json"
    graph_path.write_text(json.dumps(complete_graph(4).to_json()))
    ham_path = tmp_path / "h.json"
    ham_path.write_text(
        json.dumps(
            {
                "modes": 4,
                "terms": [
                    {"kind": "hopping", "modes": [0, 1], "coeff": -1.0},
                    {"kind": "coulomb", "modes": [2, 3], "coeff": 2.0},
                ],
            }
        )
    )
    code, out, _ = run(
        capsys, "verify-spectrum", "--graph", str(graph_path),
        "--hamiltonian", str(ham_path), "--kind", "superfast", "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["pass"] is True


# ----------------------------------------------------------------------
# hubbard / selftest


def test_hubbard_emits_parsable_graph_and_hamiltonian(capsys):
    code, out, _ = run(
        capsys, "hubbard", "--preset", "hubbard-gse", "--lx", "3", "--ly", "3",
        "--t", "1.0", "--u", "2.0", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    graph = InteractionGraph.from_json(payload["graph"])
    ham = FermionHamiltonian.from_json(payload["hamiltonian"])
    assert graph.m == 18 and ham.modes == 18


def test_hubbard_aux_preset_lists_auxiliaries(capsys):
    code, out, _ = run(
        capsys, "hubbard", "--preset", "hubbard-superfast-aux", "--lx", "4",
        "--ly", "4", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["auxiliary_vertices"] == list(range(9))


def test_selftest_passes(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert "OK" in out


# ----------------------------------------------------------------------
# determinism


def test_outputs_deterministic(capsys):
    _, out1, _ = run(
        capsys, "check-distance", "--preset", "k4", "--kind", "superfast",
        "--orderings", "2", "--seed", "9", "--format", "json",
    )
    _, out2, _ = run(
        capsys, "check-distance", "--preset", "k4", "--kind", "superfast",
        "--orderings", "2", "--seed", "9", "--format", "json",
    )
    assert out1 == out2


def test_output_to_file(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "encode", "--preset", "k4", "--kind", "superfast",
        "--format", "json", "--out", str(path),
    )
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["encoding"]["n"] == 6
