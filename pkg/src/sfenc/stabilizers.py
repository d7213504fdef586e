"""Stabilizer groups from fundamental-cycle loop operators.

The generators are the loop operators of a fundamental cycle basis (one per
non-tree edge, in edge input order), optionally followed by the vertex
operators of designated auxiliary vertices.  Membership and syndrome queries
run against a cached row-reduced GF(2) symplectic form with exact sign
verification, so ``contains`` distinguishes an element from its negation.
"""

from __future__ import annotations

from collections.abc import Iterable

from .encoding import EncodingMap, path_operator
from .errors import ConsistencyError, DimensionError, PreconditionError
from .graph import fundamental_cycles
from .pauli import Pauli


class StabilizerGroup:
    """Abelian group of signed Pauli generators with -I excluded.

    Immutable after construction; membership and syndrome queries are pure.
    """

    def __init__(self, n: int, generators: Iterable[Pauli]):
        self.n = n
        self.generators = tuple(generators)
        for g in self.generators:
            if g.n != n:
                raise DimensionError(f"generator width {g.n} != {n}")
            if not g.is_hermitian():
                raise ConsistencyError(f"generator {g} is not Hermitian")
        for a in range(len(self.generators)):
            for b in range(a + 1, len(self.generators)):
                if not self.generators[a].commutes(self.generators[b]):
                    raise ConsistencyError(
                        f"generators {a} and {b} anticommute; the encoding is broken"
                    )
        # Row-reduce the symplectic vectors, tracking which subset of the
        # original generators each row stands for.  Dependencies must multiply
        # out to +I exactly, otherwise -I would be in the group.
        rows: list[tuple[int, int, int]] = []  # (pivot bit, vector, combo mask)
        for i, g in enumerate(self.generators):
            vec = g.symplectic()
            combo = 1 << i
            for bit, rvec, rcombo in rows:
                if (vec >> bit) & 1:
                    vec ^= rvec
                    combo ^= rcombo
            if vec == 0:
                product = self._combo_product(combo)
                if not product.is_identity():
                    raise ConsistencyError(
                        "generator dependency multiplies to -I; not a stabilizer group"
                    )
                continue
            bit = (vec & -vec).bit_length() - 1
            rows = [
                (b, rv ^ vec if (rv >> bit) & 1 else rv,
                 rc ^ combo if (rv >> bit) & 1 else rc)
                for b, rv, rc in rows
            ]
            rows.append((bit, vec, combo))
        self._rows = tuple(rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def logical_qubits(self) -> int:
        return self.n - self.rank

    def _combo_product(self, combo: int) -> Pauli:
        acc = Pauli.identity(self.n)
        i = 0
        while combo:
            if combo & 1:
                acc = acc * self.generators[i]
            combo >>= 1
            i += 1
        return acc

    def contains(self, p: Pauli) -> bool:
        """True iff ``p`` equals a product of generators exactly, sign included."""
        if p.n != self.n:
            raise DimensionError(f"operator width {p.n} != {self.n}")
        vec = p.symplectic()
        combo = 0
        for bit, rvec, rcombo in self._rows:
            if (vec >> bit) & 1:
                vec ^= rvec
                combo ^= rcombo
        if vec != 0:
            return False
        return self._combo_product(combo) == p

    def syndrome(self, p: Pauli) -> tuple[int, ...]:
        """Bit k is 1 iff ``p`` anticommutes with generator k."""
        if p.n != self.n:
            raise DimensionError(f"operator width {p.n} != {self.n}")
        return tuple(0 if g.commutes(p) else 1 for g in self.generators)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "generators": [str(g) for g in self.generators],
            "rank": self.rank,
            "logical_qubits": self.logical_qubits,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "StabilizerGroup":
        return cls(int(obj["n"]), [Pauli.from_string(s) for s in obj["generators"]])

    def __repr__(self) -> str:
        return (
            f"StabilizerGroup(n={self.n}, generators={len(self.generators)}, "
            f"rank={self.rank})"
        )


def build_stabilizer_group(
    enc: EncodingMap, extra_vertex_stabilizers: Iterable[int] = ()
) -> StabilizerGroup:
    """Loop operators of the fundamental cycles, plus vertex operators of the
    designated auxiliary vertices.

    Without extras the generator count is |E| - |V| + 1.  Syndrome bit order
    follows construction order: cycles in non-tree-edge input order, then the
    auxiliary vertex operators.
    """
    extras = tuple(extra_vertex_stabilizers)
    for v in extras:
        if not 0 <= v < enc.graph.m:
            raise PreconditionError(f"auxiliary vertex {v} not in the graph")
    generators = [path_operator(enc, loop) for loop in fundamental_cycles(enc.graph)]
    generators.extend(enc.vertex_operator(v) for v in extras)
    return StabilizerGroup(enc.n, generators)


def product_of_vertex_ops_in_group(group: StabilizerGroup, enc: EncodingMap) -> bool:
    """Whether the product of all vertex operators lies in the group, sign exact.

    Holds for the edge-qubit backend identically, and for the vertex-local
    backends whenever the edge orientations were chosen along a suitably
    corrected Eulerian walk; the result is orientation-dependent data, not an
    axiom.
    """
    acc = Pauli.identity(enc.n)
    for i in range(enc.graph.m):
        acc = acc * enc.vertex_operator(i)
    return group.contains(acc)
