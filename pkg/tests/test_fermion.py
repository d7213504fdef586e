"""Term library: generator polynomials, matrix-oracle equivalence, compilation."""

import json
import random

import numpy as np
import pytest

from sfenc.encoding import gse_encode, superfast_encode
from sfenc.errors import CompileError, ValidationError
from sfenc.fermion import (
    FermionHamiltonian,
    FermionTerm,
    QubitHamiltonian,
    compile_hamiltonian,
    term_to_edge_algebra,
    verify_compiled_commutes_with_stabilizers,
)
from sfenc.pauli import Pauli
from sfenc.sampling import (
    complete_graph,
    path_graph,
    random_even_degree_graph,
    random_fermion_hamiltonian,
)
from sfenc.spectra import fermion_term_matrix, majorana_matrices
from sfenc.stabilizers import build_stabilizer_group


# ----------------------------------------------------------------------
# expansion into the generator algebra


def test_number_expansion():
    expr = term_to_edge_algebra(FermionTerm("number", (2,), 1.0))
    assert expr == [(0.5, ()), (-0.5, (("B", 2),))]


def test_hopping_expansion():
    t = 0.7
    expr = term_to_edge_algebra(FermionTerm("hopping", (0, 1), t))
    assert expr == [
        (-0.5j * t, (("A", 0, 1), ("B", 1))),
        (-0.5j * t, (("B", 0), ("A", 0, 1))),
    ]


def test_coulomb_expansion():
    u = 2.0
    expr = term_to_edge_algebra(FermionTerm("coulomb", (0, 1), u))
    assert expr == [
        (0.5, ()),
        (-0.5, (("B", 0),)),
        (-0.5, (("B", 1),)),
        (0.5, (("B", 0), ("B", 1))),
    ]


def test_pairing_expansion_signs():
    expr = term_to_edge_algebra(FermionTerm("pairing", (0, 1), 1.0))
    assert expr == [
        (-0.5j, (("A", 0, 1), ("B", 1))),
        (0.5j, (("B", 0), ("A", 0, 1))),
    ]


def test_number_excitation_uses_outer_edge():
    expr = term_to_edge_algebra(FermionTerm("number_excitation", (0, 1, 2), 1.0))
    a_factors = {f for _, mono in expr for f in mono if f[0] == "A"}
    assert a_factors == {("A", 0, 2)}
    assert len(expr) == 4


def test_double_excitation_has_eight_monomials():
    expr = term_to_edge_algebra(FermionTerm("double_excitation", (0, 1, 2, 3), 1.0))
    assert len(expr) == 8
    for _, mono in expr:
        assert mono[0] == ("A", 0, 1) and mono[1] == ("A", 2, 3)


def test_term_validation():
    with pytest.raises(ValidationError):
        FermionTerm("hopping", (1, 1), 1.0)
    with pytest.raises(ValidationError):
        FermionTerm("number_excitation", (0, 1, 1), 1.0)
    with pytest.raises(ValidationError):
        FermionTerm("unknown", (0,), 1.0)
    with pytest.raises(ValidationError):
        FermionTerm("number", (0, 1), 1.0)
    with pytest.raises(ValidationError):
        FermionHamiltonian(2, (FermionTerm("number", (5,), 1.0),))


# ----------------------------------------------------------------------
# matrix-oracle equivalence of every row (independent of any encoding)


def _edge_algebra_matrix(term: FermionTerm, modes: int) -> np.ndarray:
    """Substitute the Majorana-built generator matrices into the polynomial."""
    maj = majorana_matrices(modes)
    dim = 1 << modes
    acc = np.zeros((dim, dim), dtype=complex)
    for coeff, mono in term_to_edge_algebra(term):
        part = np.eye(dim, dtype=complex)
        for factor in mono:
            if factor[0] == "A":
                _, j, k = factor
                part = part @ (-1j * maj[2 * j] @ maj[2 * k])
            else:
                _, i = factor
                part = part @ (-1j * maj[2 * i] @ maj[2 * i + 1])
        acc += coeff * part
    return acc


ROWS = [
    FermionTerm("number", (0,), 1.0),
    FermionTerm("number", (3,), -0.25),
    FermionTerm("coulomb", (0, 1), 1.0),
    FermionTerm("coulomb", (3, 1), 0.5),
    FermionTerm("hopping", (0, 1), 1.0),
    FermionTerm("hopping", (2, 1), -0.8),
    FermionTerm("number_excitation", (0, 1, 2), 1.0),
    FermionTerm("number_excitation", (2, 3, 0), 1.3),
    FermionTerm("pairing", (0, 1), 1.0),
    FermionTerm("pairing", (3, 1), 0.6),
    FermionTerm("double_excitation", (0, 1, 2, 3), 1.0),
    FermionTerm("double_excitation", (1, 0, 3, 2), -0.4),
]


@pytest.mark.parametrize("term", ROWS, ids=lambda t: f"{t.kind}{t.modes}")
def test_row_matches_second_quantized_oracle(term):
    lhs = fermion_term_matrix(term, 4)
    rhs = _edge_algebra_matrix(term, 4)
    assert np.max(np.abs(lhs - rhs)) <= 1e-12
    assert np.max(np.abs(lhs - lhs.conj().T)) <= 1e-12  # rows are Hermitian


# ----------------------------------------------------------------------
# compilation


def test_compile_number_term():
    enc = superfast_encode(complete_graph(4))
    ham = FermionHamiltonian(4, (FermionTerm("number", (1,), 1.0),))
    compiled = compile_hamiltonian(ham, enc)
    terms = dict((str(p), c) for p, c in compiled.terms)
    assert terms[str(Pauli.identity(6))] == pytest.approx(0.5)
    assert terms[str(enc.vertex_operator(1))] == pytest.approx(-0.5)
    assert len(terms) == 2


def test_compile_hopping_weights_on_degree6_family():
    enc = gse_encode(complete_graph(7), "error_correcting")
    ham = FermionHamiltonian(7, (FermionTerm("hopping", (0, 1), 1.0),))
    compiled = compile_hamiltonian(ham, enc)
    assert len(compiled.terms) == 2
    assert all(p.weight() == 4 for p, _ in compiled.terms)


def test_compile_coulomb_weights_on_degree6_family():
    enc = gse_encode(complete_graph(7), "error_correcting")
    ham = FermionHamiltonian(7, (FermionTerm("coulomb", (0, 1), 1.0),))
    compiled = compile_hamiltonian(ham, enc)
    weights = sorted(p.weight() for p, _ in compiled.terms)
    assert weights == [0, 3, 3, 6]


def test_compile_missing_edge_names_term():
    enc = superfast_encode(path_graph(4))
    ham = FermionHamiltonian(4, (FermionTerm("hopping", (0, 3), 1.0),))
    with pytest.raises(CompileError, match=r"hopping.*edge \(0, ?3\)"):
        compile_hamiltonian(ham, enc)


def test_compile_merges_and_drops_zeros():
    enc = superfast_encode(complete_graph(4))
    ham = FermionHamiltonian(
        4,
        (
            FermionTerm("number", (0,), 1.0),
            FermionTerm("number", (0,), -1.0),
        ),
    )
    compiled = compile_hamiltonian(ham, enc)
    assert compiled.terms == ()


def test_compiled_terms_hermitian_with_real_coefficients(rng):
    for _ in range(5):
        g = random_even_degree_graph(rng.randint(3, 6), rng)
        ham = random_fermion_hamiltonian(g, rng)
        enc = gse_encode(g, "fenwick")
        compiled = compile_hamiltonian(ham, enc)
        for p, c in compiled.terms:
            assert p.is_hermitian()
            assert p.prefix_exponent() == 0
            assert isinstance(c, float)


def test_compiled_commutes_with_stabilizers(rng):
    for _ in range(5):
        g = random_even_degree_graph(rng.randint(3, 6), rng)
        ham = random_fermion_hamiltonian(g, rng)
        enc = gse_encode(g, "fenwick")
        group = build_stabilizer_group(enc)
        compiled = compile_hamiltonian(ham, enc)
        assert verify_compiled_commutes_with_stabilizers(compiled, group)


def test_empty_hamiltonian_commutes():
    enc = superfast_encode(complete_graph(4))
    group = build_stabilizer_group(enc)
    assert verify_compiled_commutes_with_stabilizers(QubitHamiltonian(6, ()), group)


def test_injected_error_term_detected():
    enc = superfast_encode(complete_graph(4))
    group = build_stabilizer_group(enc)
    bad = QubitHamiltonian(6, ((Pauli.single(6, 1, "X"), 1.0),))
    assert not verify_compiled_commutes_with_stabilizers(bad, group)


# ----------------------------------------------------------------------
# serialization


def test_fermion_hamiltonian_json_round_trip():
    ham = FermionHamiltonian(
        4,
        (
            FermionTerm("hopping", (0, 1), -1.0),
            FermionTerm("coulomb", (0, 2), 2.0),
        ),
    )
    back = FermionHamiltonian.from_json(json.loads(json.dumps(ham.to_json())))
    assert back == ham


def test_qubit_hamiltonian_json_round_trip():
    enc = superfast_encode(complete_graph(4))
    ham = random_fermion_hamiltonian(complete_graph(4), random.Random(1))
    compiled = compile_hamiltonian(ham, enc)
    back = QubitHamiltonian.from_json(json.loads(json.dumps(compiled.to_json())), n=6)
    assert back == compiled
