"""Brute-force error-correction checks: low-weight logical search and
single-qubit syndrome uniqueness.

Enumeration runs over positive-prefix Hermitian representatives only: an
operator and its negation share a syndrome, and since -I is never in the
group at most one sign of a symplectic class is a stabilizer, so no witness
is lost by fixing the sign.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product

from .encoding import superfast_encode
from .errors import PreconditionError, ResourceError
from .graph import Edge, InteractionGraph
from .pauli import Pauli
from .stabilizers import StabilizerGroup, build_stabilizer_group

CLASS_LOGICAL = "logical"
CLASS_STABILIZER = "stabilizer"
CLASS_DETECTABLE = "detectable"

MAX_SEARCH_WEIGHT = 3
MAX_SEARCH_QUBITS = 512

_LETTERS = ("X", "Y", "Z")


@dataclass(frozen=True)
class LogicalWitness:
    pauli: Pauli
    weight: int
    classification: str

    def to_json(self) -> dict:
        return {
            "pauli": str(self.pauli),
            "weight": self.weight,
            "classification": self.classification,
        }


def classify(group: StabilizerGroup, p: Pauli) -> str:
    """logical / stabilizer / detectable, exhaustively and exclusively."""
    if any(group.syndrome(p)):
        return CLASS_DETECTABLE
    if group.contains(p):
        return CLASS_STABILIZER
    return CLASS_LOGICAL


def _candidates_for_support(n: int, support: tuple[int, ...]):
    for letters in product(_LETTERS, repeat=len(support)):
        x = z = 0
        for q, letter in zip(support, letters):
            if letter in ("X", "Y"):
                x |= 1 << q
            if letter in ("Y", "Z"):
                z |= 1 << q
        yield Pauli.hermitian(n, x, z)


def find_low_weight_logicals(
    group: StabilizerGroup, w_max: int, max_workers: int = 1
) -> list[LogicalWitness]:
    """All logical operators of weight <= w_max, positive-prefix representatives.

    An empty result for w_max = 2 certifies code distance >= 3.  The search is
    partitioned over supports; partitions are independent and the merge is
    deterministic (sorted by weight, then rendering).
    """
    if not 0 <= w_max <= MAX_SEARCH_WEIGHT:
        raise ResourceError(
            f"weight {w_max} exceeds the enumeration guard {MAX_SEARCH_WEIGHT}"
        )
    if group.n > MAX_SEARCH_QUBITS:
        raise ResourceError(
            f"{group.n} qubits exceed the enumeration guard {MAX_SEARCH_QUBITS}"
        )
    supports = [
        supp
        for w in range(1, w_max + 1)
        for supp in combinations(range(group.n), w)
    ]

    def scan(chunk) -> list[LogicalWitness]:
        found = []
        for supp in chunk:
            for cand in _candidates_for_support(group.n, supp):
                if classify(group, cand) == CLASS_LOGICAL:
                    found.append(LogicalWitness(cand, cand.weight(), CLASS_LOGICAL))
        return found

    if max_workers > 1 and supports:
        step = max(1, len(supports) // max_workers)
        chunks = [supports[i : i + step] for i in range(0, len(supports), step)]
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            parts = list(pool.map(scan, chunks))
        witnesses = [w for part in parts for w in part]
    else:
        witnesses = scan(supports)
    witnesses.sort(key=lambda w: (w.weight, str(w.pauli)))
    return witnesses


@dataclass(frozen=True)
class CorrectabilityResult:
    ok: bool
    colliding_pair: tuple[Pauli, Pauli] | None = None
    zero_syndrome: Pauli | None = None

    def to_json(self) -> dict:
        return {
            "correctable": self.ok,
            "colliding_pair": [str(p) for p in self.colliding_pair]
            if self.colliding_pair
            else None,
            "zero_syndrome": str(self.zero_syndrome) if self.zero_syndrome else None,
        }


def single_qubit_errors_correctable(group: StabilizerGroup) -> CorrectabilityResult:
    """True iff all 3n single-qubit errors have pairwise distinct, nonzero
    syndromes; on failure the offending error or pair is returned."""
    seen: dict[tuple[int, ...], Pauli] = {}
    for q in range(group.n):
        for letter in _LETTERS:
            err = Pauli.single(group.n, q, letter)
            syn = group.syndrome(err)
            if not any(syn):
                return CorrectabilityResult(False, zero_syndrome=err)
            if syn in seen:
                return CorrectabilityResult(False, colliding_pair=(seen[syn], err))
            seen[syn] = err
    return CorrectabilityResult(True)


# ----------------------------------------------------------------------
# ordering sweeps


def random_port_assignment(
    graph: InteractionGraph, rng: random.Random
) -> InteractionGraph:
    """The same graph with independently shuffled port orderings per vertex."""
    new_port: dict[tuple[int, int], int] = {}
    for i in range(graph.m):
        incident = graph.incident(i)
        ports = list(range(1, len(incident) + 1))
        rng.shuffle(ports)
        for (idx, _), p in zip(incident, ports):
            new_port[(idx, i)] = p
    edges = tuple(
        Edge(e.u, e.v, new_port[(idx, e.u)], new_port[(idx, e.v)], e.orientation)
        for idx, e in enumerate(graph.edges)
    )
    return InteractionGraph(graph.m, edges)


def seeded_orderings(
    graph: InteractionGraph, count: int, seed: int
) -> list[InteractionGraph]:
    rng = random.Random(seed)
    return [random_port_assignment(graph, rng) for _ in range(count)]


@dataclass(frozen=True)
class OrderingOutcome:
    label: str
    witness: LogicalWitness | None


@dataclass(frozen=True)
class WitnessSweepReport:
    vertex_count: int
    degree: int
    outcomes: tuple[OrderingOutcome, ...] = field(default_factory=tuple)

    @property
    def all_have_witness(self) -> bool:
        return all(o.witness is not None for o in self.outcomes)

    def to_json(self) -> dict:
        return {
            "vertices": self.vertex_count,
            "degree": self.degree,
            "orderings_sampled": len(self.outcomes),
            "all_have_witness": self.all_have_witness,
            "outcomes": [
                {
                    "ordering": o.label,
                    "witness": o.witness.to_json() if o.witness else None,
                }
                for o in self.outcomes
            ],
        }


def lemma1_witness_sweep(
    graph: InteractionGraph,
    orderings: list[InteractionGraph],
    max_workers: int = 1,
) -> WitnessSweepReport:
    """Edge-qubit encoding of a regular degree <= 6 graph: every sampled port
    ordering is expected to expose a weight <= 2 logical operator.

    The universal statement quantifies over all orderings; sampling records
    evidence, with the count carried in the report.
    """
    degs = set(graph.degrees())
    if len(degs) != 1:
        raise PreconditionError("witness sweep expects a regular graph")
    degree = degs.pop()
    if degree > 6:
        raise PreconditionError("witness sweep applies to degree <= 6 only")
    outcomes = []
    for label, variant in enumerate([graph, *orderings]):
        enc = superfast_encode(variant)
        group = build_stabilizer_group(enc)
        found = find_low_weight_logicals(group, 2, max_workers=max_workers)
        name = "default" if label == 0 else f"sample-{label - 1}"
        outcomes.append(OrderingOutcome(name, found[0] if found else None))
    return WitnessSweepReport(graph.m, degree, tuple(outcomes))


def distance_report(
    group: StabilizerGroup,
    w_max: int,
    witnesses: list[LogicalWitness],
    orderings_sampled: int | None = None,
) -> dict:
    report = {
        "n": group.n,
        "rank": group.rank,
        "logical_qubits": group.logical_qubits,
        "w_max": w_max,
        "certified_distance_at_least": (w_max + 1) if not witnesses else None,
        "witnesses": [w.to_json() for w in witnesses],
    }
    if orderings_sampled is not None:
        report["orderings_sampled"] = orderings_sampled
    return report
