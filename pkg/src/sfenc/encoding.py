"""Encoding backends mapping fermionic edge/vertex generators to qubit Paulis.

Three backends are provided:

* ``superfast_encode`` -- one qubit per edge; the vertex operator is the
  Z-product over incident edges and the edge operator is an X dressed with
  Z's on the lower-port edges at both endpoints.
* ``gse_encode(..., "error_correcting")`` -- d(i)/2 qubits per vertex built
  from anticommuting local mode families whose weights are high enough that
  the resulting code (on 3-connected, even-degree >= 6 graphs with at most
  doubled edges) corrects any single-qubit error.
* ``gse_encode(..., "fenwick")`` -- the same vertex-local layout, but the
  local modes come from a binary-indexed-tree mapping, giving edge operators
  of weight at most 2*ceil(log2 d) and weight-1 vertex operators.

All stored operators are Hermitian involutions; the reverse direction of an
edge operator is the negation of the stored one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import PreconditionError, StructureError, ValidationError
from .graph import InteractionGraph, Path
from .pauli import Pauli

SUPERFAST = "superfast"
GSE_ERROR_CORRECTING = "error_correcting"
GSE_FENWICK = "fenwick"
GSE_KINDS = (GSE_ERROR_CORRECTING, GSE_FENWICK)

ModeFamily = tuple[Pauli, ...]


@dataclass(frozen=True)
class EncodingMap:
    """Assignment of Pauli operators to every edge and vertex of a graph.

    ``edge_ops[e]`` is the operator for the stored direction ``u -> v`` of
    edge ``e``; the opposite direction is its negation.  For the vertex-local
    layouts, ``local_modes[(i, p)]`` is the p-th anticommuting mode at vertex
    ``i`` embedded into the full register, and ``vertex_qubits[i]`` lists the
    qubits of the block; for the edge layout, ``edge_qubits[e]`` maps edges to
    qubits.  Immutable after construction.
    """

    kind: str
    graph: InteractionGraph
    n: int
    edge_ops: tuple[Pauli, ...]
    vertex_ops: tuple[Pauli, ...]
    local_modes: dict[tuple[int, int], Pauli] | None = None
    edge_qubits: tuple[int, ...] | None = None
    vertex_qubits: tuple[tuple[int, ...], ...] | None = None

    def edge_operator(self, j: int, k: int, edge_index: int | None = None) -> Pauli:
        """The operator for direction ``j -> k``; negated if stored as k -> u.

        With parallel edges and no explicit ``edge_index``, the lowest-index
        edge joining the pair is used.
        """
        if edge_index is None:
            candidates = self.graph.edges_between(j, k)
            if not candidates:
                raise StructureError(f"no edge between vertices {j} and {k}")
            edge_index = candidates[0]
        e = self.graph.edges[edge_index]
        if {j, k} != {e.u, e.v}:
            raise StructureError(
                f"edge {edge_index} joins ({e.u},{e.v}), not ({j},{k})"
            )
        op = self.edge_ops[edge_index]
        return op if j == e.u else -op

    def vertex_operator(self, i: int) -> Pauli:
        return self.vertex_ops[i]

    def local_mode(self, i: int, port: int) -> Pauli:
        if self.local_modes is None:
            raise StructureError("edge-qubit layout has no local modes")
        try:
            return self.local_modes[(i, port)]
        except KeyError:
            raise ValidationError(f"vertex {i} has no port {port}") from None

    # ------------------------------------------------------------------

    def to_json(self) -> dict:
        layout: dict
        if self.kind == SUPERFAST:
            layout = {"type": "edge_qubits", "edge_qubits": list(self.edge_qubits)}
        else:
            layout = {
                "type": "vertex_blocks",
                "vertex_qubits": [list(b) for b in self.vertex_qubits],
            }
        out = {
            "kind": self.kind,
            "n": self.n,
            "graph": self.graph.to_json(),
            "layout": layout,
            "edge_ops": [str(p) for p in self.edge_ops],
            "vertex_ops": [str(p) for p in self.vertex_ops],
        }
        if self.local_modes is not None:
            out["local_modes"] = [
                [i, p, str(op)] for (i, p), op in sorted(self.local_modes.items())
            ]
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "EncodingMap":
        try:
            kind = obj["kind"]
            n = int(obj["n"])
            graph = InteractionGraph.from_json(obj["graph"])
            layout = obj["layout"]
            edge_ops = tuple(Pauli.from_string(s) for s in obj["edge_ops"])
            vertex_ops = tuple(Pauli.from_string(s) for s in obj["vertex_ops"])
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"encoding JSON missing field: {exc}") from None
        if len(edge_ops) != len(graph.edges) or len(vertex_ops) != graph.m:
            raise ValidationError("operator tables do not match the graph")
        if any(p.n != n for p in edge_ops) or any(p.n != n for p in vertex_ops):
            raise ValidationError("operator width does not match qubit count")
        local_modes = None
        if obj.get("local_modes") is not None:
            local_modes = {
                (int(i), int(p)): Pauli.from_string(s)
                for i, p, s in obj["local_modes"]
            }
        edge_qubits = None
        vertex_qubits = None
        if layout.get("type") == "edge_qubits":
            edge_qubits = tuple(int(q) for q in layout["edge_qubits"])
        else:
            vertex_qubits = tuple(
                tuple(int(q) for q in block) for block in layout["vertex_qubits"]
            )
        return cls(
            kind=kind,
            graph=graph,
            n=n,
            edge_ops=edge_ops,
            vertex_ops=vertex_ops,
            local_modes=local_modes,
            edge_qubits=edge_qubits,
            vertex_qubits=vertex_qubits,
        )


# ----------------------------------------------------------------------
# edge-qubit backend


def superfast_encode(graph: InteractionGraph) -> EncodingMap:
    """One qubit per edge (qubit e = edge e in input order).

    The vertex operator at j is the product of Z over all incident edges.
    The edge operator for the stored direction u -> v is the orientation sign
    times X on the edge qubit times Z on every incident edge of strictly
    smaller port at either endpoint.
    """
    n = len(graph.edges)
    vertex_ops = []
    for i in range(graph.m):
        zmask = 0
        for idx, _ in graph.incident(i):
            zmask |= 1 << idx
        vertex_ops.append(Pauli(n, 0, zmask, 0))
    edge_ops = []
    for idx, e in enumerate(graph.edges):
        zmask = 0
        for port, other_idx, _ in graph.edges_at(e.u):
            if port < e.port_u:
                zmask ^= 1 << other_idx
        for port, other_idx, _ in graph.edges_at(e.v):
            if port < e.port_v:
                zmask ^= 1 << other_idx
        phase = 0 if e.orientation == 1 else 2
        edge_ops.append(Pauli(n, 1 << idx, zmask, phase))
    return EncodingMap(
        kind=SUPERFAST,
        graph=graph,
        n=n,
        edge_ops=tuple(edge_ops),
        vertex_ops=tuple(vertex_ops),
        edge_qubits=tuple(range(n)),
    )


# ----------------------------------------------------------------------
# local mode families


def _family_from_strings(strings: list[str]) -> ModeFamily:
    return tuple(Pauli.from_string(s) for s in strings)


def _shift(letters: str, amount: int) -> str:
    amount %= len(letters)
    return letters[-amount:] + letters[:-amount] if amount else letters


def mode_family_degree6() -> ModeFamily:
    """Six anticommuting Hermitian Paulis on 3 qubits; their ordered product
    times (-i)^3 is ZZZ and all the weight conditions for single-error
    correction hold."""
    return _family_from_strings(["ZXI", "ZYI", "IZX", "IZY", "XIZ", "YIZ"])


def mode_family_general(d: int) -> ModeFamily:
    """Anticommuting family of d Hermitian Paulis on d/2 qubits, d even >= 6.

    For d/2 = 2k+1 the two seeds Z^k X I^k and Z^k Y I^k are cyclically
    shifted 2k times; for d/2 = 2k the four seeds Z^k X I^(k-1),
    Z^k Y I^(k-1), X I^k Z^(k-1), Y I^k Z^(k-1) are shifted k-1 times.
    Every member has weight >= 2 and the family satisfies the weight
    conditions needed for single-error correction.
    """
    if d % 2 or d < 6:
        raise PreconditionError(f"degree must be even and >= 6, got {d}")
    half = d // 2
    strings: list[str] = []
    if half % 2 == 1:
        k = (half - 1) // 2
        seed_x = "Z" * k + "X" + "I" * k
        seed_y = "Z" * k + "Y" + "I" * k
        for s in range(half):
            strings.append(_shift(seed_x, s))
            strings.append(_shift(seed_y, s))
    else:
        k = half // 2
        first_x = "Z" * k + "X" + "I" * (k - 1)
        first_y = "Z" * k + "Y" + "I" * (k - 1)
        second_x = "X" + "I" * k + "Z" * (k - 1)
        second_y = "Y" + "I" * k + "Z" * (k - 1)
        for s in range(k):
            strings.append(_shift(first_x, s))
            strings.append(_shift(first_y, s))
        for s in range(k):
            strings.append(_shift(second_x, s))
            strings.append(_shift(second_y, s))
    return _family_from_strings(strings)


def _fenwick_parent(nmodes: int) -> list[int | None]:
    """Parent links of the binary indexed tree over modes 0..nmodes-1."""
    parent: list[int | None] = [None] * nmodes

    def descend(left: int, right: int) -> None:
        if left >= right:
            return
        pivot = (left + right) >> 1
        parent[pivot] = right
        descend(left, pivot)
        descend(pivot + 1, right)

    if nmodes > 0:
        descend(0, nmodes - 1)
    return parent


def mode_family_fenwick(d: int) -> ModeFamily:
    """d Majorana Paulis on d/2 qubits from the binary-indexed-tree mapping.

    Each member has weight at most ceil(log2 d), and the ordered product of
    all members times (-i)^(d/2) has weight 1.
    """
    if d % 2 or d < 2:
        raise PreconditionError(f"degree must be even and >= 2, got {d}")
    nmodes = d // 2
    parent = _fenwick_parent(nmodes)
    children: list[list[int]] = [[] for _ in range(nmodes)]
    for node, par in enumerate(parent):
        if par is not None:
            children[par].append(node)
    members: list[Pauli] = []
    for j in range(nmodes):
        update: list[int] = []
        node = parent[j]
        while node is not None:
            update.append(node)
            node = parent[node]
        remainder = [c for a in update for c in children[a] if c < j]
        parity = remainder + [c for c in children[j] if c < j]
        x_even = sum(1 << q for q in update) | (1 << j)
        z_even = sum(1 << q for q in parity)
        members.append(Pauli.hermitian(nmodes, x_even, z_even))
        x_odd = sum(1 << q for q in update) | (1 << j)
        z_odd = sum(1 << q for q in remainder) | (1 << j)
        members.append(Pauli.hermitian(nmodes, x_odd, z_odd))
    return tuple(members)


# ----------------------------------------------------------------------
# vertex-local backend


def _embed(p: Pauli, offset: int, n: int) -> Pauli:
    return Pauli(n, p.x << offset, p.z << offset, p.phase)


def gse_encode(graph: InteractionGraph, family_kind: str) -> EncodingMap:
    """Vertex-local encoding: d(i)/2 qubits per vertex, in vertex order.

    The vertex operator is (-i)^(d/2) times the ordered product of the local
    modes; the edge operator for u -> v is the orientation sign times the
    product of the modes sitting at the edge's ports.
    """
    if family_kind not in GSE_KINDS:
        raise ValidationError(f"unknown family kind {family_kind!r}")
    degrees = graph.degrees()
    odd = [i for i, d in enumerate(degrees) if d % 2]
    if odd:
        raise PreconditionError(f"vertices with odd degree: {odd}")
    if family_kind == GSE_ERROR_CORRECTING:
        low = [i for i, d in enumerate(degrees) if d < 6]
        if low:
            raise PreconditionError(
                f"error-correcting families need degree >= 6, violated at {low}"
            )
    n = sum(degrees) // 2
    offsets = []
    acc = 0
    for d in degrees:
        offsets.append(acc)
        acc += d // 2
    families: dict[int, ModeFamily] = {}
    for d in set(degrees):
        if d == 0:
            families[d] = ()
        elif family_kind == GSE_ERROR_CORRECTING:
            families[d] = mode_family_general(d)
        else:
            families[d] = mode_family_fenwick(d)
    local_modes: dict[tuple[int, int], Pauli] = {}
    vertex_ops = []
    for i, d in enumerate(degrees):
        fam = families[d]
        for p in range(1, d + 1):
            local_modes[(i, p)] = _embed(fam[p - 1], offsets[i], n)
        acc_op = Pauli(n, 0, 0, -(d // 2))  # (-i)^(d/2) prefactor
        for p in range(1, d + 1):
            acc_op = acc_op * local_modes[(i, p)]
        vertex_ops.append(acc_op)
    edge_ops = []
    for e in graph.edges:
        op = local_modes[(e.u, e.port_u)] * local_modes[(e.v, e.port_v)]
        if e.orientation == -1:
            op = -op
        edge_ops.append(op)
    return EncodingMap(
        kind="gse-ec" if family_kind == GSE_ERROR_CORRECTING else "gse-fenwick",
        graph=graph,
        n=n,
        edge_ops=tuple(edge_ops),
        vertex_ops=tuple(vertex_ops),
        local_modes=local_modes,
        vertex_qubits=tuple(
            tuple(range(offsets[i], offsets[i] + degrees[i] // 2))
            for i in range(graph.m)
        ),
    )


# ----------------------------------------------------------------------
# walk operators


def path_operator(enc: EncodingMap, path: Path) -> Pauli:
    """i^s times the ordered product of edge operators along the s-step walk."""
    graph = enc.graph
    acc = Pauli(enc.n, 0, 0, path.length)  # i^s
    for step, eidx in enumerate(path.edges):
        a, b = path.vertices[step], path.vertices[step + 1]
        if eidx < 0 or eidx >= len(graph.edges):
            raise StructureError(f"path step {step} uses unknown edge {eidx}")
        e = graph.edges[eidx]
        if {a, b} != {e.u, e.v}:
            raise StructureError(
                f"path step {step} walks ({a},{b}) but edge {eidx} joins ({e.u},{e.v})"
            )
        op = enc.edge_ops[eidx]
        acc = acc * (op if a == e.u else -op)
    return acc


def max_edge_weight_bound_fenwick(graph: InteractionGraph) -> int:
    """2*ceil(log2 d_max): the promised cap on edge-operator weight."""
    dmax = max(graph.degrees())
    return 2 * math.ceil(math.log2(dmax)) if dmax > 1 else 2
