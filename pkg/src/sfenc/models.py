"""Concrete model builders: Hubbard Hamiltonians and their interaction graphs.

Two graph constructions are provided for the 2D Hubbard model:

* ``hubbard_gse_graph`` -- two torus layers (spin up / spin down) joined by a
  doubled dummy edge per site, so every vertex has degree exactly 6 and the
  graph is 3-connected with at most two parallel edges: exactly the shape
  needed for the error-correcting vertex-local encoding.
* ``hubbard_superfast_aux_graph`` -- one open-boundary spin layer augmented
  with an auxiliary vertex per plaquette ("interacting" with its four
  corners).  Auxiliary vertices are numbered before the original modes, and
  each vertex orders its incident edges by neighbour index, which pins down
  the port convention the syndrome-uniqueness analysis relies on.  The two
  spin layers stay independent copies: their coupling is a density-density
  term that compiles through vertex operators alone, so no inter-layer edges
  are needed or added.

Vertex numbering of the Hamiltonian: mode(x, y, spin) = spin*Lx*Ly + y*Lx + x.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError, ValidationError
from .fermion import (
    COULOMB,
    HOPPING,
    NUMBER,
    FermionHamiltonian,
    FermionTerm,
)
from .graph import InteractionGraph


@dataclass(frozen=True)
class HubbardSpec:
    """Lattice dimensions, boundary, and the three couplings."""

    lx: int
    ly: int
    periodic: bool = False
    t: float = 1.0
    eps: float = 0.0
    u: float = 0.0

    def __post_init__(self) -> None:
        if self.lx < 2 or self.ly < 2:
            raise ValidationError("lattice dimensions must be at least 2x2")

    @property
    def sites(self) -> int:
        return self.lx * self.ly

    def site(self, x: int, y: int) -> int:
        return y * self.lx + x

    def mode(self, x: int, y: int, spin: int) -> int:
        return spin * self.sites + self.site(x, y)


def _bonds(spec: HubbardSpec) -> list[tuple[int, int]]:
    """Nearest-neighbour site pairs (right and up, wrapping when periodic)."""
    bonds = []
    for y in range(spec.ly):
        for x in range(spec.lx):
            if spec.periodic or x + 1 < spec.lx:
                bonds.append((spec.site(x, y), spec.site((x + 1) % spec.lx, y)))
            if spec.periodic or y + 1 < spec.ly:
                bonds.append((spec.site(x, y), spec.site(x, (y + 1) % spec.ly)))
    return bonds


def hubbard_hamiltonian(spec: HubbardSpec) -> FermionHamiltonian:
    """Hopping -t on every bond and spin, on-site energy eps, repulsion U."""
    terms: list[FermionTerm] = []
    for a, b in _bonds(spec):
        for spin in (0, 1):
            terms.append(
                FermionTerm(
                    HOPPING, (a + spin * spec.sites, b + spin * spec.sites), -spec.t
                )
            )
    for mode in range(2 * spec.sites):
        terms.append(FermionTerm(NUMBER, (mode,), spec.eps))
    for s in range(spec.sites):
        terms.append(FermionTerm(COULOMB, (s, s + spec.sites), spec.u))
    return FermionHamiltonian(2 * spec.sites, tuple(terms))


def hubbard_gse_graph(spec: HubbardSpec) -> InteractionGraph:
    """Two torus layers plus a doubled dummy edge per site; degree 6 everywhere.

    Requires a periodic lattice of at least 3x3: on an open boundary (or with
    wrap-around double bonds at length 2) boundary vertices drop below degree
    6 and the single-error-correction hypotheses fail, so such inputs are
    rejected rather than silently padded.
    """
    if not spec.periodic:
        raise PreconditionError(
            "the degree-6 construction needs periodic boundaries; open lattices "
            "leave boundary vertices below degree 6"
        )
    if spec.lx < 3 or spec.ly < 3:
        raise PreconditionError(
            "periodic lattices below 3x3 collapse wrap-around bonds into "
            "parallel edges of the same spin layer; use at least 3x3"
        )
    s = spec.sites
    pairs: list[tuple[int, int]] = []
    for spin in (0, 1):
        pairs.extend((a + spin * s, b + spin * s) for a, b in _bonds(spec))
    for site in range(s):
        pairs.append((site, site + s))
        pairs.append((site, site + s))
    return InteractionGraph.build(2 * s, pairs)


def hubbard_superfast_aux_graph(
    spec: HubbardSpec,
) -> tuple[InteractionGraph, tuple[int, ...]]:
    """One open-boundary spin layer with an auxiliary vertex per plaquette.

    Auxiliary vertices take indices 0..P-1 (left-to-right, bottom-to-top),
    original modes follow at P + y*Lx + x, so the default port rule (sort by
    neighbour index) gives every original vertex its auxiliary edges first.
    Returns the graph and the auxiliary vertex ids, whose vertex operators are
    meant to join the stabilizer group.  The full model uses two independent
    copies of this layer.
    """
    if spec.periodic:
        raise PreconditionError("the auxiliary-plaquette construction is open-boundary")
    px_count = spec.lx - 1
    plaquettes = px_count * (spec.ly - 1)
    offset = plaquettes

    def orig(x: int, y: int) -> int:
        return offset + spec.site(x, y)

    def aux(px: int, py: int) -> int:
        return py * px_count + px

    pairs: list[tuple[int, int]] = []
    for y in range(spec.ly):
        for x in range(spec.lx):
            if x + 1 < spec.lx:
                pairs.append((orig(x, y), orig(x + 1, y)))
            if y + 1 < spec.ly:
                pairs.append((orig(x, y), orig(x, y + 1)))
    for py in range(spec.ly - 1):
        for px in range(px_count):
            a = aux(px, py)
            pairs.append((a, orig(px, py)))
            pairs.append((a, orig(px + 1, py)))
            pairs.append((a, orig(px, py + 1)))
            pairs.append((a, orig(px + 1, py + 1)))
    graph = InteractionGraph.build(offset + spec.sites, pairs)
    return graph, tuple(range(plaquettes))


def plaquette_unit_cell_edges(
    spec: HubbardSpec, graph: InteractionGraph, px: int, py: int
) -> tuple[int, ...]:
    """Edge indices of one unit cell: the plaquette boundary plus the four
    auxiliary spokes of the plaquette's centre vertex."""
    if not (0 <= px < spec.lx - 1 and 0 <= py < spec.ly - 1):
        raise ValidationError(f"no plaquette at ({px},{py})")
    plaquettes = (spec.lx - 1) * (spec.ly - 1)
    corners = {
        plaquettes + spec.site(px, py),
        plaquettes + spec.site(px + 1, py),
        plaquettes + spec.site(px, py + 1),
        plaquettes + spec.site(px + 1, py + 1),
    }
    centre = py * (spec.lx - 1) + px
    cell = []
    for idx, e in enumerate(graph.edges):
        if e.u in corners and e.v in corners:
            cell.append(idx)
        elif centre in (e.u, e.v):
            cell.append(idx)
    return tuple(cell)


def two_site_hubbard(
    t: float = 1.0, eps: float = 0.0, u: float = 0.0
) -> tuple[FermionHamiltonian, InteractionGraph]:
    """Minimal two-site instance on a parity-padded ring.

    Four modes (two sites x two spins) with hopping inside each spin pair and
    on-site repulsion across spins.  The graph carries the two hopping edges
    plus two dummy edges closing a ring, which makes every degree even so the
    vertex-local encodings apply.
    """
    terms = (
        FermionTerm(HOPPING, (0, 1), -t),
        FermionTerm(HOPPING, (2, 3), -t),
        FermionTerm(NUMBER, (0,), eps),
        FermionTerm(NUMBER, (1,), eps),
        FermionTerm(NUMBER, (2,), eps),
        FermionTerm(NUMBER, (3,), eps),
        FermionTerm(COULOMB, (0, 2), u),
        FermionTerm(COULOMB, (1, 3), u),
    )
    graph = InteractionGraph.build(4, [(0, 1), (2, 3), (0, 2), (1, 3)])
    return FermionHamiltonian(4, terms), graph
