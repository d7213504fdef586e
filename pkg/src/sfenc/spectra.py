"""Dense numerical verification that encoded Hamiltonians reproduce fermionic
spectra on the codespace.

The fermionic side is built from a Jordan-Wigner realization of the Majorana
generators, which serves as the independent oracle throughout: the encodings
under test never touch it.  Everything here is dense linear algebra capped at
2^14 dimensions; all verification instances are far smaller.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, DimensionError, ResourceError
from .fermion import (
    COULOMB,
    DOUBLE_EXCITATION,
    HOPPING,
    NUMBER,
    NUMBER_EXCITATION,
    PAIRING,
    FermionHamiltonian,
    FermionTerm,
    QubitHamiltonian,
)
from .pauli import Pauli
from .stabilizers import StabilizerGroup

MAX_DENSE_QUBITS = 14
HERMITICITY_TOL = 1e-10

_I2 = np.eye(2, dtype=complex)
_X2 = np.array([[0, 1], [1, 0]], dtype=complex)
_Z2 = np.array([[1, 0], [0, -1]], dtype=complex)
_XZ2 = _X2 @ _Z2
_FACTOR = {(0, 0): _I2, (1, 0): _X2, (0, 1): _Z2, (1, 1): _XZ2}


@dataclass(frozen=True, eq=False)
class DenseOperator:
    """A 2^k-dimensional matrix with its qubit count attached."""

    qubits: int
    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return 1 << self.qubits


def _guard(k: int) -> None:
    if k > MAX_DENSE_QUBITS:
        raise ResourceError(f"{k} qubits exceed the dense guard {MAX_DENSE_QUBITS}")


def _check_hermitian(mat: np.ndarray, what: str) -> None:
    if np.max(np.abs(mat - mat.conj().T)) > HERMITICITY_TOL:
        raise ConsistencyError(f"{what} is not Hermitian")


def pauli_matrix(p: Pauli) -> np.ndarray:
    """Dense matrix of a Pauli operator; qubit 0 is the first tensor factor."""
    _guard(p.n)
    out = np.array([[1j ** p.phase]], dtype=complex)
    for q in range(p.n):
        out = np.kron(out, _FACTOR[(p.x >> q) & 1, (p.z >> q) & 1])
    return out


def qubit_hamiltonian_matrix(hamiltonian: QubitHamiltonian) -> DenseOperator:
    _guard(hamiltonian.n)
    dim = 1 << hamiltonian.n
    acc = np.zeros((dim, dim), dtype=complex)
    for p, coeff in hamiltonian.terms:
        acc += coeff * pauli_matrix(p)
    _check_hermitian(acc, "compiled Hamiltonian")
    return DenseOperator(hamiltonian.n, acc)


# ----------------------------------------------------------------------
# fermionic (Fock space) oracle


def majorana_matrices(modes: int) -> list[np.ndarray]:
    """2m Hermitian anticommuting generators; index 2j/2j+1 belong to mode j."""
    _guard(modes)
    out = []
    for j in range(modes):
        for letter in ("X", "Y"):
            ops = ["Z"] * j + [letter] + ["I"] * (modes - j - 1)
            mat = np.array([[1.0 + 0j]])
            for ch in ops:
                mat = np.kron(mat, {"I": _I2, "X": _X2, "Y": 1j * _XZ2, "Z": _Z2}[ch])
            out.append(mat)
    return out


def ladder_matrices(modes: int) -> tuple[list[np.ndarray], list[np.ndarray]]:
    """(annihilation, creation) matrices per mode."""
    majorana = majorana_matrices(modes)
    lower = []
    raise_ = []
    for j in range(modes):
        c_even, c_odd = majorana[2 * j], majorana[2 * j + 1]
        lower.append((c_even + 1j * c_odd) / 2)
        raise_.append((c_even - 1j * c_odd) / 2)
    return lower, raise_


def fermion_term_matrix(term: FermionTerm, modes: int) -> np.ndarray:
    """Second-quantized matrix of one term, built from ladder operators."""
    a, ad = ladder_matrices(modes)
    c = term.coeff
    if term.kind == NUMBER:
        (i,) = term.modes
        return c * (ad[i] @ a[i])
    if term.kind == COULOMB:
        i, j = term.modes
        return c * (ad[i] @ ad[j] @ a[j] @ a[i])
    if term.kind == HOPPING:
        i, j = term.modes
        return c * (ad[i] @ a[j] + ad[j] @ a[i])
    if term.kind == PAIRING:
        # The Hermitian combination: a_i a_j plus its adjoint a+_j a+_i.
        i, j = term.modes
        return c * (a[i] @ a[j] + ad[j] @ ad[i])
    if term.kind == NUMBER_EXCITATION:
        i, j, k = term.modes
        return c * (ad[i] @ ad[j] @ a[j] @ a[k] + ad[k] @ ad[j] @ a[j] @ a[i])
    if term.kind == DOUBLE_EXCITATION:
        i, j, k, l = term.modes
        return c * (ad[i] @ ad[j] @ a[k] @ a[l] + ad[l] @ ad[k] @ a[j] @ a[i])
    raise ConsistencyError(f"unhandled term kind {term.kind!r}")


def fock_matrix(hamiltonian: FermionHamiltonian) -> DenseOperator:
    """Dense 2^m second-quantized matrix of the full Hamiltonian."""
    _guard(hamiltonian.modes)
    dim = 1 << hamiltonian.modes
    acc = np.zeros((dim, dim), dtype=complex)
    for term in hamiltonian.terms:
        acc += fermion_term_matrix(term, hamiltonian.modes)
    _check_hermitian(acc, "Fock-space Hamiltonian")
    return DenseOperator(hamiltonian.modes, acc)


def even_sector_spectrum(op: DenseOperator, modes: int) -> np.ndarray:
    """Eigenvalues on the even-occupation subspace, sorted ascending.

    The subspace has dimension 2^(m-1) for m >= 1.
    """
    if op.qubits != modes:
        raise DimensionError(f"operator has {op.qubits} modes, expected {modes}")
    idx = [b for b in range(op.dim) if bin(b).count("1") % 2 == 0]
    block = op.matrix[np.ix_(idx, idx)]
    return np.sort(np.linalg.eigvalsh(block))


# ----------------------------------------------------------------------
# codespace side


def codespace_projector_basis(group: StabilizerGroup) -> np.ndarray:
    """Orthonormal columns spanning the joint +1 eigenspace of the generators."""
    _guard(group.n)
    dim = 1 << group.n
    proj = np.eye(dim, dtype=complex)
    for g in group.generators:
        proj = proj @ (np.eye(dim, dtype=complex) + pauli_matrix(g)) / 2
    _check_hermitian(proj, "codespace projector")
    eigvals, eigvecs = np.linalg.eigh(proj)
    basis = eigvecs[:, eigvals > 0.5]
    expected = 1 << (group.n - group.rank)
    if basis.shape[1] != expected:
        raise ConsistencyError(
            f"codespace dimension {basis.shape[1]} != 2^(n-rank) = {expected}"
        )
    return basis


def codespace_spectrum(
    hamiltonian: QubitHamiltonian, group: StabilizerGroup
) -> np.ndarray:
    """Eigenvalues of the Hamiltonian restricted to the codespace, sorted."""
    if hamiltonian.n != group.n:
        raise DimensionError(f"widths differ: {hamiltonian.n} != {group.n}")
    dense = qubit_hamiltonian_matrix(hamiltonian)
    basis = codespace_projector_basis(group)
    block = basis.conj().T @ dense.matrix @ basis
    _check_hermitian(block, "restricted Hamiltonian")
    return np.sort(np.linalg.eigvalsh(block))


@dataclass(frozen=True)
class SpectrumReport:
    fermionic: tuple[float, ...]
    encoded: tuple[float, ...]
    tolerance: float
    max_deviation: float
    passed: bool

    def to_json(self) -> dict:
        return {
            "fermionic": list(self.fermionic),
            "encoded": list(self.encoded),
            "tolerance": self.tolerance,
            "max_deviation": self.max_deviation,
            "pass": self.passed,
        }


def compare_spectra(a, b, tol: float) -> SpectrumReport:
    """Element-wise comparison of two sorted eigenvalue lists."""
    a = np.sort(np.asarray(a, dtype=float))
    b = np.sort(np.asarray(b, dtype=float))
    if len(a) != len(b):
        return SpectrumReport(tuple(a), tuple(b), tol, float("inf"), False)
    dev = float(np.max(np.abs(a - b))) if len(a) else 0.0
    return SpectrumReport(tuple(a), tuple(b), tol, dev, dev <= tol)
