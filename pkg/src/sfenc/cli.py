"""Batch command-line front end.

Subcommands: ``encode``, ``check-distance``, ``verify-spectrum``, ``hubbard``,
``selftest``.  Every command is deterministic given its flags; randomized
orderings and Hamiltonians take an explicit ``--seed``.  ``SFENC_THREADS``
caps the parallelism of the candidate search.  Exit codes: 0 success, 1 a
check ran and failed, 2 invalid input or a resource guard rejection.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .distance import (
    distance_report,
    find_low_weight_logicals,
    lemma1_witness_sweep,
    seeded_orderings,
    single_qubit_errors_correctable,
)
from .encoding import (
    GSE_ERROR_CORRECTING,
    GSE_FENWICK,
    EncodingMap,
    gse_encode,
    superfast_encode,
)
from .errors import SfencError
from .fermion import (
    FermionHamiltonian,
    FermionTerm,
    QubitHamiltonian,
    compile_hamiltonian,
    verify_compiled_commutes_with_stabilizers,
)
from .graph import InteractionGraph, is_three_connected, max_parallel_edges
from .models import (
    HubbardSpec,
    hubbard_gse_graph,
    hubbard_hamiltonian,
    hubbard_superfast_aux_graph,
    two_site_hubbard,
)
from .sampling import (
    complete_graph,
    cycle_graph,
    octahedron_graph,
    random_fermion_hamiltonian,
)
from .spectra import (
    codespace_spectrum,
    compare_spectra,
    even_sector_spectrum,
    fock_matrix,
)
from .stabilizers import build_stabilizer_group, product_of_vertex_ops_in_group

KINDS = ("superfast", "gse-ec", "gse-fenwick")

GRAPH_PRESETS = {
    "k4": lambda args: (complete_graph(4), ()),
    "k5": lambda args: (complete_graph(5), ()),
    "k7": lambda args: (complete_graph(7), ()),
    "octahedron": lambda args: (octahedron_graph(), ()),
    "cycle4": lambda args: (cycle_graph(4), ()),
    "hubbard-gse": lambda args: (hubbard_gse_graph(_hubbard_spec(args, periodic=True)), ()),
    "hubbard-superfast-aux": lambda args: hubbard_superfast_aux_graph(
        _hubbard_spec(args, periodic=False)
    ),
}


def _hubbard_spec(args, periodic: bool) -> HubbardSpec:
    return HubbardSpec(
        lx=args.lx, ly=args.ly, periodic=periodic, t=args.t, eps=args.eps, u=args.u
    )


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise SfencError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise SfencError(
            f"malformed JSON in {path}: line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None


def _resolve_graph(args) -> tuple[InteractionGraph, tuple[int, ...]]:
    if getattr(args, "graph", None):
        return InteractionGraph.from_json(_load_json(args.graph)), ()
    if getattr(args, "preset", None):
        try:
            builder = GRAPH_PRESETS[args.preset]
        except KeyError:
            raise SfencError(f"unknown preset {args.preset!r}") from None
        return builder(args)
    raise SfencError("provide --graph FILE or --preset NAME")


def _encode(graph: InteractionGraph, kind: str) -> EncodingMap:
    if kind == "superfast":
        return superfast_encode(graph)
    if kind == "gse-ec":
        return gse_encode(graph, GSE_ERROR_CORRECTING)
    if kind == "gse-fenwick":
        return gse_encode(graph, GSE_FENWICK)
    raise SfencError(f"unknown encoding kind {kind!r}")


def _default_kind(args) -> str:
    if args.kind:
        return args.kind
    if getattr(args, "preset", None) == "hubbard-gse":
        return "gse-ec"
    if getattr(args, "preset", None) == "hubbard-superfast-aux":
        return "superfast"
    return "superfast"


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("SFENC_THREADS", "1")))
    except ValueError:
        return 1


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        out = json.dumps(payload, indent=2)
    else:
        out = "\n".join(text_lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)


# ----------------------------------------------------------------------
# subcommands


def _cmd_encode(args) -> int:
    graph, aux = _resolve_graph(args)
    kind = _default_kind(args)
    enc = _encode(graph, kind)
    extras = aux if args.aux_stabilizers else ()
    group = build_stabilizer_group(enc, extras)
    payload = {
        "encoding": enc.to_json(),
        "stabilizers": group.to_json(),
        "auxiliary_vertices": list(extras),
    }
    lines = [
        f"kind: {kind}",
        f"qubits: {enc.n}",
        f"stabilizer generators: {len(group.generators)} (rank {group.rank})",
        f"logical qubits: {group.logical_qubits}",
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_check_distance(args) -> int:
    graph, aux = _resolve_graph(args)
    kind = _default_kind(args)
    enc = _encode(graph, kind)
    extras = aux if args.aux_stabilizers else ()
    group = build_stabilizer_group(enc, extras)
    witnesses = find_low_weight_logicals(group, args.w_max, max_workers=_threads())
    payload = distance_report(group, args.w_max, witnesses)
    correctable = single_qubit_errors_correctable(group)
    payload["single_qubit_errors"] = correctable.to_json()
    lines = [
        f"n={group.n} rank={group.rank} logical={group.logical_qubits}",
        (
            f"distance >= {args.w_max + 1} (no logicals of weight <= {args.w_max})"
            if not witnesses
            else f"{len(witnesses)} logical operator(s) of weight <= {args.w_max}; "
            f"smallest: {witnesses[0].pauli}"
        ),
        f"single-qubit errors all distinguishable: {correctable.ok}",
    ]
    if args.orderings > 0:
        if kind != "superfast":
            raise SfencError("--orderings sweeps apply to the superfast kind only")
        sweep = lemma1_witness_sweep(
            graph,
            seeded_orderings(graph, args.orderings, args.seed),
            max_workers=_threads(),
        )
        payload["ordering_sweep"] = sweep.to_json()
        lines.append(
            f"ordering sweep ({len(sweep.outcomes)} runs): "
            f"all runs found a low-weight logical: {sweep.all_have_witness}"
        )
    _emit(args, payload, lines)
    return 0


SPECTRUM_PRESETS = ("cycle4-gse", "k4-superfast-random", "two-site-hubbard")


def _spectrum_instance(args):
    if args.preset == "cycle4-gse":
        graph = cycle_graph(4)
        terms = [FermionTerm("hopping", (i, (i + 1) % 4), -1.0) for i in range(4)]
        terms += [FermionTerm("number", (i,), 0.5) for i in range(4)]
        return FermionHamiltonian(4, tuple(terms)), graph, "gse-fenwick"
    if args.preset == "k4-superfast-random":
        graph = complete_graph(4)
        ham = random_fermion_hamiltonian(
            graph, random.Random(args.seed), require_all_kinds=True
        )
        return ham, graph, "superfast"
    if args.preset == "two-site-hubbard":
        ham, graph = two_site_hubbard(t=args.t, eps=args.eps, u=args.u)
        return ham, graph, "gse-fenwick"
    if not (args.graph and args.hamiltonian):
        raise SfencError(
            "provide --preset or both --graph and --hamiltonian (with --kind)"
        )
    graph = InteractionGraph.from_json(_load_json(args.graph))
    ham = FermionHamiltonian.from_json(_load_json(args.hamiltonian))
    return ham, graph, (args.kind or "superfast")


def _cmd_verify_spectrum(args) -> int:
    ham, graph, kind = _spectrum_instance(args)
    if args.encoding:
        enc = EncodingMap.from_json(_load_json(args.encoding))
    else:
        enc = _encode(graph, kind)
    group = build_stabilizer_group(enc)
    compiled = compile_hamiltonian(ham, enc)
    if not verify_compiled_commutes_with_stabilizers(compiled, group):
        payload = {"pass": False, "error": "compiled Hamiltonian leaves the codespace"}
        _emit(args, payload, ["FAIL: compiled Hamiltonian does not commute with the stabilizers"])
        return 1
    fermionic = even_sector_spectrum(fock_matrix(ham), ham.modes)
    encoded = codespace_spectrum(compiled, group)
    report = compare_spectra(fermionic, encoded, args.tol)
    payload = report.to_json()
    lines = [
        f"levels: {len(report.fermionic)} fermionic vs {len(report.encoded)} encoded",
        f"max deviation: {report.max_deviation:.3e} (tolerance {report.tolerance:.1e})",
        "PASS" if report.passed else "FAIL",
    ]
    _emit(args, payload, lines)
    return 0 if report.passed else 1


def _cmd_hubbard(args) -> int:
    if args.preset == "hubbard-gse":
        spec = _hubbard_spec(args, periodic=True)
        graph = hubbard_gse_graph(spec)
        aux: tuple[int, ...] = ()
    elif args.preset == "hubbard-superfast-aux":
        spec = _hubbard_spec(args, periodic=False)
        graph, aux = hubbard_superfast_aux_graph(spec)
    else:
        raise SfencError(f"unknown hubbard preset {args.preset!r}")
    ham = hubbard_hamiltonian(spec)
    payload = {
        "graph": graph.to_json(),
        "hamiltonian": ham.to_json(),
        "auxiliary_vertices": list(aux),
    }
    lines = [
        f"lattice: {spec.lx}x{spec.ly} periodic={spec.periodic}",
        f"graph: {graph.m} vertices, {len(graph.edges)} edges",
        f"hamiltonian: {len(ham.terms)} terms over {ham.modes} modes",
    ]
    if aux:
        lines.append(f"auxiliary vertices: {len(aux)}")
    _emit(args, payload, lines)
    return 0


def _cmd_selftest(args) -> int:
    failures = []

    def check(name: str, ok: bool) -> None:
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
        if not ok:
            failures.append(name)

    k4 = complete_graph(4)
    enc = superfast_encode(k4)
    group = build_stabilizer_group(enc)
    check("edge-qubit code on K4 has rank 3 and 3 logical qubits",
          group.rank == 3 and group.logical_qubits == 3)
    check("K4 edge-qubit code exposes a weight<=2 logical",
          bool(find_low_weight_logicals(group, 2)))

    k7 = complete_graph(7)
    enc7 = gse_encode(k7, GSE_ERROR_CORRECTING)
    s7 = build_stabilizer_group(enc7)
    check("degree-6 family on K7 has no weight<=2 logicals",
          not find_low_weight_logicals(s7, 2, max_workers=_threads()))
    check("degree-6 family on K7 distinguishes all single-qubit errors",
          single_qubit_errors_correctable(s7).ok)
    check("vertex-operator product is a stabilizer (K7 vertex-local)",
          product_of_vertex_ops_in_group(s7, enc7))

    ham, graph = two_site_hubbard(1.0, 0.3, 2.5)
    encq = gse_encode(graph, GSE_FENWICK)
    sq = build_stabilizer_group(encq)
    compiled = compile_hamiltonian(ham, encq)
    rep = compare_spectra(
        even_sector_spectrum(fock_matrix(ham), ham.modes),
        codespace_spectrum(compiled, sq),
        1e-9,
    )
    check("two-site Hubbard spectra agree on the codespace", rep.passed)

    spec = HubbardSpec(3, 3, periodic=True, t=1.0, eps=0.5, u=2.0)
    g = hubbard_gse_graph(spec)
    ench = gse_encode(g, GSE_ERROR_CORRECTING)
    hq = compile_hamiltonian(hubbard_hamiltonian(spec), ench)
    check("3x3 Hubbard torus satisfies the error-correction hypotheses",
          set(g.degrees()) == {6} and is_three_connected(g) and max_parallel_edges(g) == 2)
    check("3x3 Hubbard compiles with maximum Pauli weight 6", hq.max_weight() == 6)

    print(f"{'OK' if not failures else 'FAILED'}: {8 - len(failures)}/8 checks passed")
    return 0 if not failures else 1


# ----------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.add_argument("--seed", type=int, default=0)


def _add_graph_inputs(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", help="interaction graph JSON file")
    p.add_argument("--preset", choices=sorted(GRAPH_PRESETS), help="named graph")
    p.add_argument("--kind", choices=KINDS)
    p.add_argument("--aux-stabilizers", action="store_true",
                   help="add the vertex operators of auxiliary vertices to the group")
    _add_hubbard_params(p)


def _add_hubbard_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--lx", type=int, default=3)
    p.add_argument("--ly", type=int, default=3)
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--eps", type=float, default=0.0)
    p.add_argument("--u", type=float, default=0.0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sfenc",
        description="Fermion-to-qubit encodings: compile, analyze, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="emit encoding and stabilizer reports")
    _add_graph_inputs(p)
    _add_common(p)
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("check-distance", help="brute-force low-weight logical search")
    _add_graph_inputs(p)
    p.add_argument("--w-max", type=int, default=2)
    p.add_argument("--orderings", type=int, default=0,
                   help="also sweep this many seeded random port orderings")
    _add_common(p)
    p.set_defaults(func=_cmd_check_distance)

    p = sub.add_parser("verify-spectrum",
                       help="compare codespace and even-sector spectra")
    p.add_argument("--preset", choices=SPECTRUM_PRESETS)
    p.add_argument("--graph")
    p.add_argument("--hamiltonian")
    p.add_argument("--encoding", help="use a serialized encoding instead of re-encoding")
    p.add_argument("--kind", choices=KINDS)
    p.add_argument("--tol", type=float, default=1e-9)
    _add_hubbard_params(p)
    _add_common(p)
    p.set_defaults(func=_cmd_verify_spectrum)

    p = sub.add_parser("hubbard", help="emit Hubbard graph and Hamiltonian JSON")
    p.add_argument("--preset", choices=("hubbard-gse", "hubbard-superfast-aux"),
                   required=True)
    _add_hubbard_params(p)
    _add_common(p)
    p.set_defaults(func=_cmd_hubbard)

    p = sub.add_parser("selftest", help="run the built-in verification battery")
    _add_common(p)
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SfencError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
