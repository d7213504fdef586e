"""Interaction graphs with multi-edges, per-vertex edge orderings, and orientations.

Vertices are integers ``0..m-1``.  Every edge records, for each endpoint, a
*port*: its 1-based position in that endpoint's ordering of incident edges.
The ports at a vertex always form a bijection onto ``{1..degree}``.  The
encodings consume this ordering and their error-correction behaviour is
sensitive to it, so ports are first-class data, overridable from input files.

Orientation is the sign convention attached to each edge: ``orientation=+1``
means the stored ``u`` endpoint is the head.  Defaults: ports sort incident
edges by (neighbour index, insertion order); orientations follow an Eulerian
walk on even-degree graphs (head = the vertex the walk leaves, plus a single
compensating flip when the walk's reordering parity would make the full
Eulerian loop product carry a -1 sign), and are lexicographic otherwise.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from .errors import PreconditionError, StructureError, ValidationError


@dataclass(frozen=True)
class Edge:
    """One edge with per-endpoint ports and an orientation sign."""

    u: int
    v: int
    port_u: int
    port_v: int
    orientation: int  # +1 if u is the head, -1 if v is the head

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise ValidationError(f"self-loop at vertex {self.u}")
        if self.u < 0 or self.v < 0:
            raise ValidationError("vertex indices must be >= 0")
        if self.port_u < 1 or self.port_v < 1:
            raise ValidationError("ports are 1-based")
        if self.orientation not in (1, -1):
            raise ValidationError("orientation must be +1 or -1")

    def endpoints(self) -> frozenset[int]:
        return frozenset((self.u, self.v))

    def other(self, w: int) -> int:
        if w == self.u:
            return self.v
        if w == self.v:
            return self.u
        raise ValidationError(f"vertex {w} is not an endpoint of {self}")

    def port_at(self, w: int) -> int:
        if w == self.u:
            return self.port_u
        if w == self.v:
            return self.port_v
        raise ValidationError(f"vertex {w} is not an endpoint of {self}")


@dataclass(frozen=True)
class Path:
    """A walk recording the vertex sequence and the specific edge of every step.

    Recording edges (not just vertices) is what makes walks through parallel
    edges unambiguous.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) != len(self.edges) + 1:
            raise ValidationError("a path needs exactly one more vertex than edges")

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def is_loop(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    def reversed(self) -> "Path":
        return Path(tuple(reversed(self.vertices)), tuple(reversed(self.edges)))


class InteractionGraph:
    """Connected multigraph with validated ports and orientations.

    Immutable after construction; all methods are pure.
    """

    def __init__(self, m: int, edges: tuple[Edge, ...]):
        if m < 1:
            raise ValidationError("need at least one vertex")
        edges = tuple(edges)
        for e in edges:
            if e.u >= m or e.v >= m:
                raise ValidationError(f"edge {e} references a vertex >= {m}")
        self.m = m
        self.edges = edges
        incidence: list[list[tuple[int, int]]] = [[] for _ in range(m)]
        for idx, e in enumerate(edges):
            incidence[e.u].append((idx, e.v))
            incidence[e.v].append((idx, e.u))
        self._incidence = tuple(tuple(lst) for lst in incidence)
        by_port: list[dict[int, int]] = []
        for i in range(m):
            ports = {}
            for idx, _ in incidence[i]:
                p = edges[idx].port_at(i)
                if p in ports:
                    raise ValidationError(f"duplicate port {p} at vertex {i}")
                ports[p] = idx
            d = len(incidence[i])
            if sorted(ports) != list(range(1, d + 1)):
                raise ValidationError(
                    f"ports at vertex {i} must be a bijection onto 1..{d}, got {sorted(ports)}"
                )
            by_port.append(ports)
        self._by_port = tuple(by_port)
        pair_index: dict[frozenset[int], list[int]] = {}
        for idx, e in enumerate(edges):
            pair_index.setdefault(e.endpoints(), []).append(idx)
        self._pair_index = pair_index
        if not _connected(m, [(e.u, e.v) for e in edges]):
            raise StructureError("graph is not connected")

    # ------------------------------------------------------------------

    def degree(self, i: int) -> int:
        return len(self._incidence[i])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(lst) for lst in self._incidence)

    def incident(self, i: int) -> tuple[tuple[int, int], ...]:
        """Incident (edge_index, other_vertex) pairs in insertion order."""
        return self._incidence[i]

    def edges_at(self, i: int) -> tuple[tuple[int, int, int], ...]:
        """(port, edge_index, other_vertex) triples sorted by port."""
        ports = self._by_port[i]
        return tuple(
            (p, ports[p], self.edges[ports[p]].other(i)) for p in sorted(ports)
        )

    def edge_by_port(self, i: int, port: int) -> int:
        try:
            return self._by_port[i][port]
        except KeyError:
            raise ValidationError(f"vertex {i} has no port {port}") from None

    def neighbor(self, i: int, port: int) -> int:
        return self.edges[self.edge_by_port(i, port)].other(i)

    def edges_between(self, i: int, j: int) -> tuple[int, ...]:
        return tuple(self._pair_index.get(frozenset((i, j)), ()))

    # ------------------------------------------------------------------
    # construction with defaults

    @classmethod
    def build(
        cls,
        m: int,
        pairs: list[tuple[int, int]],
        ports: list[tuple[int, int]] | None = None,
        orientations: list[int] | None = None,
    ) -> "InteractionGraph":
        """Build a graph from endpoint pairs, applying default ports/orientations."""
        for u, v in pairs:
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if not (0 <= u < m and 0 <= v < m):
                raise ValidationError(f"edge ({u},{v}) out of range for m={m}")
        if not _connected(m, pairs):
            raise StructureError("graph is not connected")
        if ports is None:
            ports = _default_ports(m, pairs)
        if orientations is None:
            degrees = [0] * m
            for u, v in pairs:
                degrees[u] += 1
                degrees[v] += 1
            if pairs and all(d % 2 == 0 for d in degrees):
                orientations = _euler_orientations(m, pairs, ports)
            else:
                orientations = [1 if u < v else -1 for u, v in pairs]
        if len(ports) != len(pairs) or len(orientations) != len(pairs):
            raise ValidationError("ports/orientations must align with the edge list")
        edges = tuple(
            Edge(u, v, pu, pv, o)
            for (u, v), (pu, pv), o in zip(pairs, ports, orientations)
        )
        return cls(m, edges)

    # ------------------------------------------------------------------
    # JSON wire format

    def to_json(self) -> dict:
        return {
            "vertices": self.m,
            "edges": [
                {
                    "u": e.u,
                    "v": e.v,
                    "port_u": e.port_u,
                    "port_v": e.port_v,
                    "orientation": e.orientation,
                }
                for e in self.edges
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "InteractionGraph":
        try:
            m = int(obj["vertices"])
            raw = list(obj["edges"])
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"graph JSON missing field: {exc}") from None
        pairs = []
        ports = []
        orientations = []
        have_ports = have_orient = 0
        for item in raw:
            pairs.append((int(item["u"]), int(item["v"])))
            if "port_u" in item or "port_v" in item:
                ports.append((int(item["port_u"]), int(item["port_v"])))
                have_ports += 1
            if "orientation" in item:
                orientations.append(int(item["orientation"]))
                have_orient += 1
        if have_ports not in (0, len(raw)):
            raise ValidationError("ports must be given for all edges or for none")
        if have_orient not in (0, len(raw)):
            raise ValidationError("orientation must be given for all edges or for none")
        return cls.build(
            m,
            pairs,
            ports if have_ports else None,
            orientations if have_orient else None,
        )

    @classmethod
    def from_json_str(cls, text: str) -> "InteractionGraph":
        return cls.from_json(json.loads(text))

    def __repr__(self) -> str:
        return f"InteractionGraph(m={self.m}, edges={len(self.edges)})"


# ----------------------------------------------------------------------
# default assignments


def _default_ports(m: int, pairs: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Ports in ascending (neighbour index, insertion order) at every vertex."""
    incident: list[list[tuple[int, int, int]]] = [[] for _ in range(m)]
    for idx, (u, v) in enumerate(pairs):
        incident[u].append((v, idx, u))
        incident[v].append((u, idx, v))
    port_of: dict[tuple[int, int], int] = {}
    for i in range(m):
        for rank, (_, idx, _) in enumerate(sorted(incident[i]), start=1):
            port_of[(idx, i)] = rank
    return [(port_of[(idx, u)], port_of[(idx, v)]) for idx, (u, v) in enumerate(pairs)]


def _perm_parity(seq: list[int]) -> int:
    inversions = sum(
        1
        for i in range(len(seq))
        for j in range(i + 1, len(seq))
        if seq[i] > seq[j]
    )
    return -1 if inversions % 2 else 1


def _euler_orientations(
    m: int, pairs: list[tuple[int, int]], ports: list[tuple[int, int]]
) -> list[int]:
    """Orient every edge along an Eulerian walk (head = departure vertex).

    The product of edge operators around the Eulerian loop reorders, vertex by
    vertex, into the product of all vertex operators; the reordering costs a
    sign equal to (-1)^|E| times the parity of the per-vertex port
    permutations, independent of which local mode family an encoding uses.
    When that sign is -1, one edge is flipped so the full-loop operator comes
    out +1 and the vertex-operator product lands inside the stabilizer group.
    """
    vertices, edge_seq = _euler_circuit(m, pairs)
    orient = [0] * len(pairs)
    encounter: dict[int, list[int]] = {}
    for step, eidx in enumerate(edge_seq):
        a, b = vertices[step], vertices[step + 1]
        u, v = pairs[eidx]
        orient[eidx] = 1 if a == u else -1
        pu, pv = ports[eidx]
        port_a, port_b = (pu, pv) if a == u else (pv, pu)
        encounter.setdefault(a, []).append(port_a)
        encounter.setdefault(b, []).append(port_b)
    sign = 1 if len(pairs) % 2 == 0 else -1
    for seq in encounter.values():
        sign *= _perm_parity(seq)
    if sign < 0:
        orient[0] = -orient[0]
    return orient


def _euler_circuit(
    m: int, pairs: list[tuple[int, int]], start: int = 0
) -> tuple[list[int], list[int]]:
    """Hierholzer's algorithm; assumes connected input with even degrees."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(m)]
    for idx, (u, v) in enumerate(pairs):
        adj[u].append((idx, v))
        adj[v].append((idx, u))
    ptr = [0] * m
    used = [False] * len(pairs)
    stack: list[tuple[int, int]] = [(start, -1)]
    out: list[tuple[int, int]] = []
    while stack:
        v, arrival = stack[-1]
        lst = adj[v]
        while ptr[v] < len(lst) and used[lst[ptr[v]][0]]:
            ptr[v] += 1
        if ptr[v] == len(lst):
            out.append(stack.pop())
        else:
            idx, w = lst[ptr[v]]
            used[idx] = True
            stack.append((w, idx))
    out.reverse()
    if not all(used):
        raise StructureError("no Eulerian circuit: graph is not connected")
    return [v for v, _ in out], [e for _, e in out[1:]]


def _connected(m: int, pairs: list[tuple[int, int]]) -> bool:
    if m == 1:
        return True
    adj: list[list[int]] = [[] for _ in range(m)]
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == m


# ----------------------------------------------------------------------
# graph operations


def spanning_tree(graph: InteractionGraph) -> tuple[tuple[int, ...], int]:
    """Breadth-first spanning tree rooted at vertex 0.

    Returns (tree edge indices in discovery order, root).  Deterministic for a
    fixed input: vertices leave the queue in BFS order and incident edges are
    scanned in insertion order.
    """
    root = 0
    seen = {root}
    tree: list[int] = []
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for idx, w in graph.incident(v):
            if w not in seen:
                seen.add(w)
                tree.append(idx)
                queue.append(w)
    if len(seen) != graph.m:
        raise StructureError("graph is not connected")
    return tuple(tree), root


def fundamental_cycles(
    graph: InteractionGraph,
    tree: tuple[int, ...] | None = None,
    root: int | None = None,
) -> list[Path]:
    """One loop per non-tree edge: root-to-endpoint tree path, the edge, back.

    Exactly |E| - |V| + 1 loops, each starting and ending at the root.
    """
    if tree is None:
        tree, root = spanning_tree(graph)
    if root is None:
        root = 0
    tree_set = set(tree)
    if len(tree_set) != graph.m - 1:
        raise PreconditionError("tree edge set does not have |V|-1 edges")
    parent: dict[int, tuple[int, int] | None] = {root: None}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for idx, w in graph.incident(v):
            if idx in tree_set and w not in parent:
                parent[w] = (v, idx)
                queue.append(w)
    if len(parent) != graph.m:
        raise PreconditionError("edge set passed as tree does not span the graph")

    def root_path(u: int) -> tuple[list[int], list[int]]:
        verts = [u]
        eidxs: list[int] = []
        while parent[verts[-1]] is not None:
            p, idx = parent[verts[-1]]  # type: ignore[misc]
            verts.append(p)
            eidxs.append(idx)
        return list(reversed(verts)), list(reversed(eidxs))

    loops = []
    for idx, e in enumerate(graph.edges):
        if idx in tree_set:
            continue
        to_u_v, to_u_e = root_path(e.u)
        to_v_v, to_v_e = root_path(e.v)
        vertices = to_u_v + list(reversed(to_v_v))
        eidxs = to_u_e + [idx] + list(reversed(to_v_e))
        loops.append(Path(tuple(vertices), tuple(eidxs)))
    return loops


def eulerian_cycle(graph: InteractionGraph) -> Path:
    """Closed walk using every edge exactly once (Hierholzer construction)."""
    odd = [i for i in range(graph.m) if graph.degree(i) % 2]
    if odd:
        raise PreconditionError(f"vertices with odd degree: {odd}")
    vertices, edges = _euler_circuit(graph.m, [(e.u, e.v) for e in graph.edges])
    return Path(tuple(vertices), tuple(edges))


def is_three_connected(graph: InteractionGraph) -> bool:
    """Brute force: the graph stays connected after removing any vertex pair."""
    m = graph.m
    if m < 4:
        raise PreconditionError("3-connectivity check needs at least 4 vertices")
    adj: list[set[int]] = [set() for _ in range(m)]
    for e in graph.edges:
        adj[e.u].add(e.v)
        adj[e.v].add(e.u)
    for a in range(m):
        for b in range(a + 1, m):
            rest = [v for v in range(m) if v not in (a, b)]
            start = rest[0]
            seen = {start}
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for w in adj[v]:
                    if w not in (a, b) and w not in seen:
                        seen.add(w)
                        queue.append(w)
            if len(seen) != len(rest):
                return False
    return True


def max_parallel_edges(graph: InteractionGraph) -> int:
    """Largest number of edges joining any single vertex pair (0 if no edges)."""
    if not graph.edges:
        return 0
    return max(len(idxs) for idxs in graph._pair_index.values())
