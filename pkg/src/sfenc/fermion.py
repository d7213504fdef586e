"""Fermionic term library and compilation into qubit Hamiltonians.

Every supported term kind is a Hermitian combination of creation/annihilation
operators whose expansion over the edge/vertex generator algebra is fixed
here once, as written, with no symbolic reordering: edge factors obey
nontrivial sign rules, and the phase-exact Pauli substitution already handles
every sign, so normalizing expressions symbolically would only duplicate that
logic and invite sign bugs.

Mode indices refer to graph vertices; odd (parity-violating) operators are
not representable and not accepted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .encoding import EncodingMap
from .errors import (
    CompileError,
    ConsistencyError,
    DimensionError,
    ValidationError,
)
from .pauli import Pauli
from .stabilizers import StabilizerGroup

NUMBER = "number"
COULOMB = "coulomb"
HOPPING = "hopping"
NUMBER_EXCITATION = "number_excitation"
PAIRING = "pairing"
DOUBLE_EXCITATION = "double_excitation"

TERM_ARITY = {
    NUMBER: 1,
    COULOMB: 2,
    HOPPING: 2,
    NUMBER_EXCITATION: 3,
    PAIRING: 2,
    DOUBLE_EXCITATION: 4,
}

MERGE_TOLERANCE = 1e-12

# A monomial factor: ("A", j, k) is the edge generator for j -> k,
# ("B", i) the vertex generator at i.
Factor = tuple
Monomial = tuple[Factor, ...]
EdgeAlgebraExpr = list[tuple[complex, Monomial]]


@dataclass(frozen=True)
class FermionTerm:
    """One Hermitian term: a kind, its distinct mode indices, a real coefficient."""

    kind: str
    modes: tuple[int, ...]
    coeff: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in TERM_ARITY:
            raise ValidationError(f"unknown term kind {self.kind!r}")
        object.__setattr__(self, "modes", tuple(int(i) for i in self.modes))
        if len(self.modes) != TERM_ARITY[self.kind]:
            raise ValidationError(
                f"{self.kind} takes {TERM_ARITY[self.kind]} modes, got {self.modes}"
            )
        if len(set(self.modes)) != len(self.modes):
            raise ValidationError(f"{self.kind} requires distinct modes: {self.modes}")
        if any(i < 0 for i in self.modes):
            raise ValidationError("mode indices must be >= 0")

    def to_json(self) -> dict:
        return {"kind": self.kind, "modes": list(self.modes), "coeff": self.coeff}

    @classmethod
    def from_json(cls, obj: dict) -> "FermionTerm":
        return cls(obj["kind"], tuple(obj["modes"]), float(obj.get("coeff", 1.0)))


@dataclass(frozen=True)
class FermionHamiltonian:
    """Mode count plus a list of Hermitian terms."""

    modes: int
    terms: tuple[FermionTerm, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(self.terms))
        for t in self.terms:
            if max(t.modes) >= self.modes:
                raise ValidationError(f"term {t} references mode >= {self.modes}")

    def to_json(self) -> dict:
        return {"modes": self.modes, "terms": [t.to_json() for t in self.terms]}

    @classmethod
    def from_json(cls, obj: dict) -> "FermionHamiltonian":
        return cls(
            int(obj["modes"]),
            tuple(FermionTerm.from_json(t) for t in obj["terms"]),
        )


def _a(j: int, k: int) -> Factor:
    return ("A", j, k)


def _b(i: int) -> Factor:
    return ("B", i)


def term_to_edge_algebra(term: FermionTerm) -> EdgeAlgebraExpr:
    """The fixed polynomial of edge/vertex generators for one term.

    number(i)                = (1 - B_i) / 2
    coulomb(i,j)             = (1 - B_i)(1 - B_j) / 4, expanded
    hopping(i,j)             = -i (A_ij B_j + B_i A_ij) / 2
    number_excitation(i,j,k) = -i (A_ik B_k + B_i A_ik)(1 - B_j) / 4, expanded
    pairing(i,j)             = -i (A_ij B_j - B_i A_ij) / 2
    double_excitation(i,j,k,l) = A_ij A_kl (-1 - B_i B_j + B_i B_k + B_i B_l
                                 + B_j B_k + B_j B_l - B_k B_l
                                 - B_i B_j B_k B_l) / 8
    """
    c = term.coeff
    if term.kind == NUMBER:
        (i,) = term.modes
        return [(0.5 * c, ()), (-0.5 * c, (_b(i),))]
    if term.kind == COULOMB:
        i, j = term.modes
        q = 0.25 * c
        return [
            (q, ()),
            (-q, (_b(i),)),
            (-q, (_b(j),)),
            (q, (_b(i), _b(j))),
        ]
    if term.kind == HOPPING:
        i, j = term.modes
        h = -0.5j * c
        return [(h, (_a(i, j), _b(j))), (h, (_b(i), _a(i, j)))]
    if term.kind == PAIRING:
        i, j = term.modes
        h = -0.5j * c
        return [(h, (_a(i, j), _b(j))), (-h, (_b(i), _a(i, j)))]
    if term.kind == NUMBER_EXCITATION:
        i, j, k = term.modes
        h = -0.25j * c
        return [
            (h, (_a(i, k), _b(k))),
            (h, (_b(i), _a(i, k))),
            (-h, (_a(i, k), _b(k), _b(j))),
            (-h, (_b(i), _a(i, k), _b(j))),
        ]
    if term.kind == DOUBLE_EXCITATION:
        i, j, k, l = term.modes
        f = 0.125 * c
        lead = (_a(i, j), _a(k, l))
        return [
            (-f, lead),
            (-f, lead + (_b(i), _b(j))),
            (f, lead + (_b(i), _b(k))),
            (f, lead + (_b(i), _b(l))),
            (f, lead + (_b(j), _b(k))),
            (f, lead + (_b(j), _b(l))),
            (-f, lead + (_b(k), _b(l))),
            (-f, lead + (_b(i), _b(j), _b(k), _b(l))),
        ]
    raise ValidationError(f"unknown term kind {term.kind!r}")


@dataclass(frozen=True)
class QubitHamiltonian:
    """Real-coefficient sum of Hermitian (+1 prefix) Pauli terms."""

    n: int
    terms: tuple[tuple[Pauli, float], ...]

    def max_weight(self) -> int:
        return max((p.weight() for p, _ in self.terms), default=0)

    def to_json(self) -> list:
        return [{"pauli": str(p), "coeff": c} for p, c in self.terms]

    @classmethod
    def from_json(cls, obj: list, n: int | None = None) -> "QubitHamiltonian":
        terms = tuple(
            (Pauli.from_string(item["pauli"]), float(item["coeff"])) for item in obj
        )
        if n is None:
            if not terms:
                raise ValidationError("cannot infer qubit count from an empty list")
            n = terms[0][0].n
        if any(p.n != n for p, _ in terms):
            raise ValidationError("mixed qubit counts in Hamiltonian JSON")
        return cls(n, terms)


def _substitute(enc: EncodingMap, term: FermionTerm, monomial: Monomial) -> Pauli:
    acc = Pauli.identity(enc.n)
    for factor in monomial:
        if factor[0] == "A":
            _, j, k = factor
            if not enc.graph.edges_between(j, k):
                raise CompileError(
                    f"term {term.kind}{term.modes} needs edge ({j},{k}), "
                    "which the interaction graph does not have"
                )
            acc = acc * enc.edge_operator(j, k)
        else:
            _, i = factor
            acc = acc * enc.vertex_operator(i)
    return acc


def compile_hamiltonian(
    hamiltonian: FermionHamiltonian,
    enc: EncodingMap,
    tol: float = MERGE_TOLERANCE,
) -> QubitHamiltonian:
    """Substitute the encoded generators into every term and merge.

    Terms with the same symplectic content merge exactly; coefficients below
    ``tol`` in magnitude are dropped.  The result always has Hermitian Pauli
    terms with real coefficients, otherwise the encoding is inconsistent.
    """
    if hamiltonian.modes > enc.graph.m:
        raise CompileError(
            f"Hamiltonian uses {hamiltonian.modes} modes but the graph has "
            f"{enc.graph.m} vertices"
        )
    bucket: dict[tuple[int, int], complex] = {}
    for term in hamiltonian.terms:
        for coeff, monomial in term_to_edge_algebra(term):
            p = _substitute(enc, term, monomial)
            amp = coeff * (1j) ** p.prefix_exponent()
            key = (p.x, p.z)
            bucket[key] = bucket.get(key, 0.0) + amp
    terms = []
    for (x, z), amp in bucket.items():
        if abs(amp) < tol:
            continue
        if abs(amp.imag) > tol:
            raise ConsistencyError(
                f"non-real coefficient {amp} after merging; encoding inconsistent"
            )
        terms.append((Pauli.hermitian(enc.n, x, z), float(amp.real)))
    terms.sort(key=lambda item: str(item[0]))
    return QubitHamiltonian(enc.n, tuple(terms))


def verify_compiled_commutes_with_stabilizers(
    hamiltonian: QubitHamiltonian, group: StabilizerGroup
) -> bool:
    """Every Pauli term commutes with every generator."""
    if hamiltonian.n != group.n:
        raise DimensionError(f"widths differ: {hamiltonian.n} != {group.n}")
    return all(
        p.commutes(g) for p, _ in hamiltonian.terms for g in group.generators
    )
