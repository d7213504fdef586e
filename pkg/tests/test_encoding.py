"""Encoding backends: mode families, operator tables, weights, walk operators."""

import json
import math
import random
from itertools import combinations

import numpy as np
import pytest

from sfenc.encoding import (
    EncodingMap,
    gse_encode,
    mode_family_degree6,
    mode_family_fenwick,
    mode_family_general,
    path_operator,
    superfast_encode,
)
from sfenc.errors import PreconditionError, StructureError
from sfenc.graph import Path, fundamental_cycles
from sfenc.pauli import Pauli
from sfenc.sampling import (
    complete_graph,
    cycle_graph,
    doubled_edge_graph,
    random_connected_graph,
    random_error_correcting_graph,
    random_even_degree_graph,
    random_regular_even_graph,
)
from sfenc.spectra import pauli_matrix


def assert_operator_table(enc):
    """The full commutation/involution/hermiticity table of an encoding.

    Vertex operators pairwise commute; an edge operator anticommutes with a
    vertex operator exactly at its endpoints; two edge operators anticommute
    exactly when they share one endpoint; everything is a Hermitian
    involution.
    """
    g = enc.graph
    for i in range(g.m):
        b = enc.vertex_operator(i)
        assert b.is_hermitian()
        assert (b * b).is_identity()
    for idx, e in enumerate(g.edges):
        a = enc.edge_ops[idx]
        assert a.is_hermitian()
        assert (a * a).is_identity()
        assert enc.edge_operator(e.v, e.u, idx) == -enc.edge_operator(e.u, e.v, idx)
    for i in range(g.m):
        for j in range(i + 1, g.m):
            assert enc.vertex_operator(i).commutes(enc.vertex_operator(j))
    for idx, e in enumerate(g.edges):
        a = enc.edge_ops[idx]
        for k in range(g.m):
            expected = k not in (e.u, e.v)
            assert a.commutes(enc.vertex_operator(k)) == expected
    for (i1, e1), (i2, e2) in combinations(enumerate(g.edges), 2):
        shared = len({e1.u, e1.v} & {e2.u, e2.v})
        expected = shared != 1
        assert enc.edge_ops[i1].commutes(enc.edge_ops[i2]) == expected


# ----------------------------------------------------------------------
# edge-qubit backend


def test_superfast_triangle_weights():
    enc = superfast_encode(complete_graph(3))
    for i in range(3):
        assert enc.vertex_operator(i).weight() == 2
    # Edge (0,1) sits at port 1 of both endpoints: bare X up to sign.
    op = enc.edge_ops[0]
    assert op.weight() == 1 and abs(op.x) == 1 << 0 and op.z == 0


def test_superfast_k4_weights_and_table():
    enc = superfast_encode(complete_graph(4))
    assert enc.n == 6
    for i in range(4):
        assert enc.vertex_operator(i).weight() == 3
    for op in enc.edge_ops:
        assert 1 <= op.weight() <= 5
    assert_operator_table(enc)


def test_superfast_k4_table_against_matrix_oracle():
    enc = superfast_encode(complete_graph(4))
    mats = [pauli_matrix(op) for op in enc.edge_ops]
    mats += [pauli_matrix(enc.vertex_operator(i)) for i in range(4)]
    for a in mats:
        assert np.array_equal(a.conj().T, a)
        assert np.allclose(a @ a, np.eye(a.shape[0]))
    for a, b in combinations(mats, 2):
        prod = a @ b
        assert np.array_equal(prod, b @ a) or np.array_equal(prod, -(b @ a))


def test_superfast_qubit_count_is_edge_count():
    rng = random.Random(2)
    for _ in range(10):
        g = random_connected_graph(rng.randint(2, 8), rng)
        enc = superfast_encode(g)
        assert enc.n == len(g.edges) == sum(g.degrees()) // 2
        assert enc.edge_qubits == tuple(range(enc.n))


# ----------------------------------------------------------------------
# mode families


def test_degree6_family_members():
    fam = mode_family_degree6()
    assert [str(p) for p in fam] == ["+ZXI", "+ZYI", "+IZX", "+IZY", "+XIZ", "+YIZ"]


def test_degree6_family_product_is_zzz():
    fam = mode_family_degree6()
    acc = Pauli(3, 0, 0, -3)  # (-i)^3 prefactor
    for p in fam:
        acc = acc * p
    assert acc == Pauli.from_string("+ZZZ")


def test_degree6_family_pairwise_anticommutes_matrix_oracle():
    fam = mode_family_degree6()
    for p, q in combinations(fam, 2):
        assert not p.commutes(q)
        mp, mq = pauli_matrix(p), pauli_matrix(q)
        assert np.array_equal(mp @ mq, -(mq @ mp))


def test_general_family_degree8_listing():
    fam = mode_family_general(8)
    assert [str(p) for p in fam] == [
        "+ZZXI", "+ZZYI", "+IZZX", "+IZZY",
        "+XIIZ", "+YIIZ", "+ZXII", "+ZYII",
    ]


def test_general_family_degree10_starts_zzxii():
    fam = mode_family_general(10)
    assert str(fam[0]) == "+ZZXII"
    assert str(fam[1]) == "+ZZYII"
    assert len(fam) == 10


def test_general_family_degree6_matches_fixed_family():
    assert mode_family_general(6) == mode_family_degree6()


@pytest.mark.parametrize("d", [6, 8, 10, 12, 14])
def test_general_family_is_anticommuting_hermitian_basis(d):
    fam = mode_family_general(d)
    assert len(fam) == d
    for p in fam:
        assert p.n == d // 2
        assert p.is_hermitian() and (p * p).is_identity()
    for p, q in combinations(fam, 2):
        assert not p.commutes(q)
    # Full Pauli group generation: symplectic vectors span everything.
    from sfenc.stabilizers import StabilizerGroup  # reuse the GF(2) reducer

    rows = {p.symplectic() for p in fam}
    assert _gf2_rank(rows, d) == d


def _gf2_rank(rows, width):
    rank = 0
    basis = []
    for vec in rows:
        for b in basis:
            vec = min(vec, vec ^ b)
        if vec:
            basis.append(vec)
            rank += 1
    return rank


@pytest.mark.parametrize("d", [6, 8, 10, 12, 14])
def test_general_family_weight_conditions(d):
    """|B| >= 3, |g| >= 2, |Bg| >= 2, |Bgg'| >= 2 for all port pairs."""
    fam = mode_family_general(d)
    b = Pauli(d // 2, 0, 0, -(d // 2))
    for p in fam:
        b = b * p
    assert b.weight() >= 3
    for p in fam:
        assert p.weight() >= 2
        assert (b * p).weight() >= 2
    for p, q in combinations(fam, 2):
        assert (b * p * q).weight() >= 2


def test_general_family_rejects_bad_degree():
    with pytest.raises(PreconditionError):
        mode_family_general(4)
    with pytest.raises(PreconditionError):
        mode_family_general(7)


def test_fenwick_family_degree2():
    fam = mode_family_fenwick(2)
    assert [str(p) for p in fam] == ["+X", "+Y"]


def test_fenwick_family_degree16_weight_bound():
    fam = mode_family_fenwick(16)
    assert len(fam) == 16
    assert all(p.weight() <= 4 for p in fam)


@pytest.mark.parametrize("d", [2, 4, 6, 8, 10, 16])
def test_fenwick_family_invariants(d):
    fam = mode_family_fenwick(d)
    bound = math.ceil(math.log2(d))
    for p in fam:
        assert p.n == d // 2
        assert p.is_hermitian()
        assert p.weight() <= bound
    for p, q in combinations(fam, 2):
        assert not p.commutes(q)
    parity = Pauli(d // 2, 0, 0, -(d // 2))
    for p in fam:
        parity = parity * p
    assert parity.weight() == 1
    assert _gf2_rank({p.symplectic() for p in fam}, d) == d


def test_fenwick_degree8_anticommutation_matrix_oracle():
    fam = mode_family_fenwick(8)
    mats = [pauli_matrix(p) for p in fam]
    for a, b in combinations(mats, 2):
        assert np.allclose(a @ b, -(b @ a))


def test_fenwick_rejects_odd():
    with pytest.raises(PreconditionError):
        mode_family_fenwick(3)


# ----------------------------------------------------------------------
# vertex-local backend


def test_gse_four_cycle_fenwick_weights():
    enc = gse_encode(cycle_graph(4), "fenwick")
    assert enc.n == 4
    for op in enc.edge_ops:
        assert op.weight() == 2
    for i in range(4):
        assert enc.vertex_operator(i).weight() == 1
    assert_operator_table(enc)


def test_gse_k7_error_correcting_weights():
    enc = gse_encode(complete_graph(7), "error_correcting")
    assert enc.n == 21
    for i in range(7):
        b = enc.vertex_operator(i)
        assert b.weight() == 3
        support = b.support()
        assert all(b.letter(q) == "Z" for q in support)
    for idx, e in enumerate(enc.graph.edges):
        a = enc.edge_ops[idx]
        assert a.weight() == 4
        assert (a * enc.vertex_operator(e.u)).weight() == 4
        assert (a * enc.vertex_operator(e.v)).weight() == 4


def test_gse_fenwick_edge_weight_bound_random_graphs():
    rng = random.Random(17)
    for _ in range(10):
        g = random_even_degree_graph(rng.randint(2, 6), rng, max_visits=4)
        enc = gse_encode(g, "fenwick")
        for idx, e in enumerate(g.edges):
            bound = math.ceil(math.log2(g.degree(e.u))) + math.ceil(
                math.log2(g.degree(e.v))
            )
            assert enc.edge_ops[idx].weight() <= bound
        for i in range(g.m):
            assert enc.vertex_operator(i).weight() == 1


def test_gse_rejects_odd_degree():
    with pytest.raises(PreconditionError):
        gse_encode(complete_graph(4), "fenwick")


def test_gse_error_correcting_rejects_low_degree():
    with pytest.raises(PreconditionError):
        gse_encode(cycle_graph(4), "error_correcting")


def test_gse_local_modes_disjoint_vertices_commute():
    enc = gse_encode(complete_graph(7), "error_correcting")
    g = enc.graph
    first = [(i, p) for (i, p) in enc.local_modes if i in (0, 1)]
    for (i, p) in first:
        for (j, q) in first:
            if i != j:
                assert enc.local_mode(i, p).commutes(enc.local_mode(j, q))


def test_gse_qubit_count_is_half_degree_sum():
    rng = random.Random(23)
    for _ in range(8):
        g = random_even_degree_graph(rng.randint(2, 6), rng)
        enc = gse_encode(g, "fenwick")
        assert enc.n == sum(g.degrees()) // 2 == len(g.edges)
        assert sum(len(b) for b in enc.vertex_qubits) == enc.n


@pytest.mark.parametrize("builder,kind", [
    (lambda rng: random_connected_graph(rng.randint(2, 8), rng), "superfast"),
    (lambda rng: random_even_degree_graph(rng.randint(2, 8), rng), "fenwick"),
    (lambda rng: random_error_correcting_graph(rng.randint(2, 8), rng), "error_correcting"),
])
def test_operator_table_random_graphs(builder, kind):
    rng = random.Random(hash(kind) % (2**32))
    for _ in range(8):
        g = builder(rng)
        enc = superfast_encode(g) if kind == "superfast" else gse_encode(g, kind)
        assert_operator_table(enc)


# ----------------------------------------------------------------------
# walk operators


def test_path_operator_empty_path_is_identity():
    enc = superfast_encode(complete_graph(4))
    assert path_operator(enc, Path((2,), ())) == Pauli.identity(enc.n)


def _random_walk(graph, rng, steps):
    v = rng.randrange(graph.m)
    vertices = [v]
    edges = []
    for _ in range(steps):
        eidx, w = rng.choice(graph.incident(vertices[-1]))
        edges.append(eidx)
        vertices.append(w)
    return Path(tuple(vertices), tuple(edges))


@pytest.mark.parametrize("make_enc", [
    lambda: superfast_encode(complete_graph(4)),
    lambda: gse_encode(cycle_graph(4), "fenwick"),
    lambda: gse_encode(complete_graph(7), "error_correcting"),
])
def test_path_inverse_cancels(make_enc):
    enc = make_enc()
    rng = random.Random(31)
    for _ in range(25):
        walk = _random_walk(enc.graph, rng, rng.randint(1, 6))
        forward = path_operator(enc, walk)
        backward = path_operator(enc, walk.reversed())
        assert (backward * forward).is_identity()


def test_parallel_pair_loop_is_local_mode_product():
    g = doubled_edge_graph()
    enc = gse_encode(g, "fenwick")
    loop = Path((0, 1, 0), (0, 1))
    op = path_operator(enc, loop)
    assert op.is_hermitian()
    direct = (
        enc.local_mode(0, 1) * enc.local_mode(1, 1)
        * enc.local_mode(1, 2) * enc.local_mode(0, 2)
    )
    assert op in (direct, -direct)


def test_path_operator_rejects_fake_steps():
    enc = superfast_encode(complete_graph(4))
    with pytest.raises(StructureError):
        path_operator(enc, Path((0, 2), (0,)))  # edge 0 joins (0,1), not (0,2)


def test_loop_operators_commute_with_all_edge_and_vertex_ops():
    for enc in (
        superfast_encode(complete_graph(4)),
        gse_encode(cycle_graph(4), "fenwick"),
        gse_encode(complete_graph(7), "error_correcting"),
    ):
        loops = fundamental_cycles(enc.graph)
        ops = [path_operator(enc, lp) for lp in loops]
        for lo in ops:
            assert lo.is_hermitian()
            for other in ops:
                assert lo.commutes(other)
            for a in enc.edge_ops:
                assert lo.commutes(a)
            for i in range(enc.graph.m):
                assert lo.commutes(enc.vertex_operator(i))


# ----------------------------------------------------------------------
# serialization


def test_encoding_json_round_trip():
    for enc in (
        superfast_encode(complete_graph(4)),
        gse_encode(cycle_graph(4), "fenwick"),
        gse_encode(complete_graph(7), "error_correcting"),
    ):
        blob = json.dumps(enc.to_json())
        back = EncodingMap.from_json(json.loads(blob))
        assert back.kind == enc.kind
        assert back.n == enc.n
        assert back.edge_ops == enc.edge_ops
        assert back.vertex_ops == enc.vertex_ops
        assert back.local_modes == enc.local_modes
        assert back.graph.edges == enc.graph.edges
