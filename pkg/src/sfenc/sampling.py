"""Seeded random graphs, orderings, and Hamiltonians for verification runs.

Even-degree graphs come from random closed walks: a closed walk that visits
vertex v exactly k_v times yields degree 2*k_v everywhere, is connected by
construction, and needs only a reshuffle to avoid self-loops.
"""

from __future__ import annotations

import random

from .errors import ValidationError
from .fermion import (
    COULOMB,
    DOUBLE_EXCITATION,
    HOPPING,
    NUMBER,
    NUMBER_EXCITATION,
    PAIRING,
    FermionHamiltonian,
    FermionTerm,
)
from .graph import InteractionGraph
from .pauli import Pauli


def random_pauli(n: int, rng: random.Random) -> Pauli:
    return Pauli(n, rng.getrandbits(n), rng.getrandbits(n), rng.randrange(4))


def random_connected_graph(m: int, rng: random.Random, extra: int | None = None) -> InteractionGraph:
    """Random spanning tree plus extra edges; multi-edges may occur."""
    pairs = [(rng.randrange(v), v) for v in range(1, m)]
    if extra is None:
        extra = rng.randrange(m + 1)
    for _ in range(extra):
        u = rng.randrange(m)
        v = rng.randrange(m)
        while v == u:
            v = rng.randrange(m)
        pairs.append((u, v))
    return InteractionGraph.build(m, pairs)


def random_closed_walk_graph(
    m: int, visits: list[int], rng: random.Random, attempts: int = 200
) -> InteractionGraph:
    """Connected multigraph with degree exactly 2*visits[v] at every vertex.

    A circular arrangement without adjacent repeats exists iff no vertex
    accounts for more than half the walk.
    """
    if m < 2 or len(visits) != m or any(k < 1 for k in visits):
        raise ValidationError("need m >= 2 vertices, each visited at least once")
    total = sum(visits)
    if 2 * max(visits) > total:
        raise ValidationError(f"visit profile {visits} cannot avoid self-loops")
    seq = [v for v in range(m) for _ in range(visits[v])]
    for _ in range(attempts):
        rng.shuffle(seq)
        if all(seq[i] != seq[(i + 1) % total] for i in range(total)):
            break
    else:
        # Fill even slots first, by descending multiplicity; valid whenever
        # the feasibility condition above holds.
        slots = [-1] * total
        order = [v for v in sorted(range(m), key=lambda v: -visits[v]) for _ in range(visits[v])]
        positions = list(range(0, total, 2)) + list(range(1, total, 2))
        for pos, v in zip(positions, order):
            slots[pos] = v
        seq = slots
        if any(seq[i] == seq[(i + 1) % total] for i in range(total)):
            raise ValidationError(f"cannot realize a closed walk for visits={visits}")
    pairs = [(seq[i], seq[(i + 1) % total]) for i in range(total)]
    return InteractionGraph.build(m, pairs)


def random_even_degree_graph(m: int, rng: random.Random, max_visits: int = 2) -> InteractionGraph:
    visits = [rng.randint(1, max_visits) for _ in range(m)]
    while 2 * max(visits) > sum(visits):
        visits[visits.index(min(visits))] += 1
    return random_closed_walk_graph(m, visits, rng)


def random_error_correcting_graph(m: int, rng: random.Random) -> InteractionGraph:
    """Even degrees >= 6 everywhere (visits >= 3)."""
    visits = [rng.randint(3, 4) for _ in range(m)]
    while 2 * max(visits) > sum(visits):
        visits[visits.index(min(visits))] += 1
    return random_closed_walk_graph(m, visits, rng)


def random_regular_even_graph(m: int, degree: int, rng: random.Random) -> InteractionGraph:
    if degree % 2:
        raise ValidationError("regular even graphs need an even degree")
    return random_closed_walk_graph(m, [degree // 2] * m, rng)


# ----------------------------------------------------------------------
# named small graphs


def complete_graph(m: int) -> InteractionGraph:
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    return InteractionGraph.build(m, pairs)


def cycle_graph(m: int) -> InteractionGraph:
    pairs = [(i, (i + 1) % m) for i in range(m)]
    return InteractionGraph.build(m, pairs)


def octahedron_graph() -> InteractionGraph:
    """Six vertices, 4-regular: all pairs except the antipodes (0,1),(2,3),(4,5)."""
    anti = {frozenset((0, 1)), frozenset((2, 3)), frozenset((4, 5))}
    pairs = [
        (i, j)
        for i in range(6)
        for j in range(i + 1, 6)
        if frozenset((i, j)) not in anti
    ]
    return InteractionGraph.build(6, pairs)


def path_graph(m: int) -> InteractionGraph:
    return InteractionGraph.build(m, [(i, i + 1) for i in range(m - 1)])


def doubled_edge_graph() -> InteractionGraph:
    return InteractionGraph.build(2, [(0, 1), (0, 1)])


# ----------------------------------------------------------------------
# random Hamiltonians


def random_fermion_hamiltonian(
    graph: InteractionGraph,
    rng: random.Random,
    require_all_kinds: bool = False,
) -> FermionHamiltonian:
    """Seeded Hamiltonian whose edge-consuming terms only reference existing
    edges, so it compiles against any encoding of ``graph``."""
    m = graph.m
    coef = lambda: round(rng.uniform(-1.0, 1.0), 6)
    terms: list[FermionTerm] = [FermionTerm(NUMBER, (i,), coef()) for i in range(m)]
    pair_pool = sorted({tuple(sorted((e.u, e.v))) for e in graph.edges})
    for i, j in rng.sample(pair_pool, min(3, len(pair_pool))):
        terms.append(FermionTerm(COULOMB, (i, j), coef()))
    for i, j in rng.sample(pair_pool, min(3, len(pair_pool))):
        terms.append(FermionTerm(HOPPING, (i, j), coef()))
    for i, j in rng.sample(pair_pool, min(2, len(pair_pool))):
        terms.append(FermionTerm(PAIRING, (i, j), coef()))
    for i, k in pair_pool:
        others = [j for j in range(m) if j not in (i, k)]
        if others:
            terms.append(
                FermionTerm(NUMBER_EXCITATION, (i, rng.choice(others), k), coef())
            )
            break
    disjoint = [
        (e1, e2)
        for e1 in pair_pool
        for e2 in pair_pool
        if not set(e1) & set(e2)
    ]
    if disjoint:
        (i, j), (k, l) = rng.choice(disjoint)
        terms.append(FermionTerm(DOUBLE_EXCITATION, (i, j, k, l), coef()))
    if require_all_kinds:
        kinds = {t.kind for t in terms}
        missing = set(
            (NUMBER, COULOMB, HOPPING, PAIRING, NUMBER_EXCITATION, DOUBLE_EXCITATION)
        ) - kinds
        if missing:
            raise ValidationError(f"graph too small to realize term kinds: {missing}")
    return FermionHamiltonian(m, tuple(terms))
