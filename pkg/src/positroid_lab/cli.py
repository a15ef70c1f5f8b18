"""Command-line surface: cells, tilings, tropical subdivisions, membership.

Exit codes: 0 success / verified, 1 mathematical verification failure,
2 malformed input.  Every randomized command embeds its seed in the
output so reruns are bit-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from random import Random

from .amplituhedron import (
    ZMatrix,
    amp_map,
    m1_membership,
    m2_interior_test,
    make_positive_Z,
    sign_stratum,
    twistor_table,
    twistor_table_json,
    verify_amp_tiling_m2,
)
from .cells import cell_dim_of_perm, positroid_of_perm, sample_cell_matrix
from .exact import RatMatrix
from .grassmann import plucker_of_matrix
from .hypersimplex import enumerate_tilings, moment_map, tile_catalog, verify_tiling
from .perms import DecoratedPermutation, parse_decorated, t_dual, t_dual_inverse
from .plabic import PlabicGraph, bipartize, matchings, positroid_of_graph, trip_permutation
from .triangulations import BicoloredTriangulation
from .trop import (
    HeightVector,
    is_finest,
    faces_are_positroids,
    positivity_violation,
    regular_subdivision,
)
from .util import rat_to_str


class InputError(Exception):
    pass


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(f"{path}: no such file")
    except json.JSONDecodeError as e:
        raise InputError(f"{path}:{e.lineno}:{e.colno}: {e.msg}")


def _parse_z(spec: str, n: int, p: int) -> ZMatrix:
    if spec.startswith("vandermonde:"):
        nodes = [Fraction(t) for t in spec.split(":", 1)[1].split(",")]
        if len(nodes) != n:
            raise InputError(f"z spec has {len(nodes)} nodes, need {n}")
        return make_positive_Z(n, p, nodes)
    if spec.startswith("file:"):
        data = _load_json(spec.split(":", 1)[1])
        return ZMatrix(RatMatrix.from_json(data))
    raise InputError(f"unrecognized z spec {spec!r} (use vandermonde:<nodes> or file:<path>)")


def _parse_perm(text: str) -> DecoratedPermutation:
    """Lenient permutation parse: unmarked fixed points default to loops,
    and the echoed permutation in the output shows the interpretation."""
    try:
        return parse_decorated(text, fixed_default="loop")
    except (ValueError, IndexError) as e:
        raise InputError(f"bad permutation {text!r}: {e}")


def _parse_tile(rec, n: int):
    if isinstance(rec, str):
        return _parse_perm(rec)
    if "perm" in rec:
        p = rec["perm"]
        return _parse_perm(p) if isinstance(p, str) else DecoratedPermutation.from_json(p)
    if "black_polygons" in rec:
        from .triangulations import fan_triangulation

        black = frozenset(tuple(sorted(p)) for p in rec["black_polygons"])
        covered = set()
        for p in black:
            covered |= set(p)
        blacks = set()
        for p in black:
            blacks |= fan_triangulation(p)
        # triangulate the as-yet uncovered region by ear clipping over a fan
        from .triangulations import all_triangulations

        for tris in all_triangulations(n):
            if blacks <= tris:
                return BicoloredTriangulation(n, frozenset(blacks),
                                              tris - frozenset(blacks))
        raise InputError(f"black polygons {sorted(black)} fit no triangulation")
    raise InputError(f"cannot interpret tile record {rec!r}")


def _tile_triangulation(t, k: int, n: int) -> BicoloredTriangulation:
    """A triangulation for a tile given either way: hypersimplex labels are
    type (k+1, n) catalog keys; amplituhedron labels are their rotations."""
    if isinstance(t, BicoloredTriangulation):
        return t
    from .perms import type_of

    cat = tile_catalog(k + 1, n)
    if type_of(t)[0] == k + 1:
        key = t
    elif type_of(t)[0] == k and t.is_coloopless():
        key = t_dual_inverse(t)
    else:
        raise InputError(f"tile {t!r} has type {type_of(t)}, expected "
                         f"({k},{n}) or ({k + 1},{n})")
    if key not in cat:
        raise InputError(f"tile {t!r} does not label a tile")
    return cat[key].triangulation


def _emit(args, payload: dict) -> None:
    if getattr(args, "format", "json") == "text":
        for key, val in payload.items():
            print(f"{key}: {val}")
    else:
        print(json.dumps(payload, indent=2, default=str))


def cmd_cell(args) -> int:
    if args.graph:
        G = PlabicGraph.from_json(_load_json(args.graph))
        if args.format == "dot":
            print(G.to_dot())
            return 0
        if args.format == "tikz":
            print(G.to_tikz())
            return 0
        pi = trip_permutation(G)
        payload = {
            "trip_permutation": repr(pi),
            "positroid": [list(b) for b in positroid_of_graph(G).sorted_bases()],
        }
        if args.matchings:
            H, _ = bipartize(G)
            ms = matchings(H)
            payload["matchings"] = [
                {"boundary": sorted(m.boundary), "edges": sorted(m.edges)} for m in ms
            ]
        _emit(args, payload)
        return 0
    if not args.perm:
        raise InputError("cell needs --perm or --graph")
    pi = _parse_perm(args.perm)
    M = positroid_of_perm(pi)
    payload = {
        "perm": repr(pi),
        "type": list((M.k, M.n)),
        "dimension": cell_dim_of_perm(pi),
        "positroid": [list(b) for b in M.sorted_bases()],
        "seed": args.seed,
    }
    if args.sample:
        rng = Random(args.seed)
        samples = []
        for _ in range(args.sample):
            C = sample_cell_matrix(pi, rng)
            P = plucker_of_matrix(C)
            samples.append({
                "plucker": P.to_json(),
                "moment_map": [rat_to_str(x) for x in moment_map(P)],
            })
        payload["samples"] = samples
    _emit(args, payload)
    return 0


def cmd_tilings(args) -> int:
    if not (args.verify or args.t_dual) and (args.k is None or args.n is None):
        raise InputError("tilings needs --k and --n (or --verify / --t-dual)")
    if args.t_dual:
        data = _load_json(args.t_dual)
        out_tiles = []
        for rec in data.get("tiles", []):
            t = _parse_tile(rec, data["n"])
            if isinstance(t, BicoloredTriangulation):
                from .plabic import dual_graph_of_triangulation

                t = trip_permutation(dual_graph_of_triangulation(t))
                out_tiles.append(repr(t_dual(t)))
            elif data.get("space") == "hypersimplex":
                out_tiles.append(repr(t_dual(t)))
            else:
                out_tiles.append(repr(t_dual_inverse(t)))
        _emit(args, {"space": "amplituhedron" if data.get("space") == "hypersimplex"
                     else "hypersimplex",
                     "n": data["n"], "tiles": out_tiles})
        return 0
    if args.verify:
        data = _load_json(args.verify)
        n = data["n"]
        k = data.get("k", data.get("k_plus_1", 1) - 1)
        space = data.get("space", "hypersimplex")
        tiles = [_parse_tile(rec, n) for rec in data["tiles"]]
        if space == "hypersimplex":
            rep = verify_tiling(tiles, k + 1, n)
            _emit(args, rep.to_json())
            return 0 if rep.valid else 1
        Z = _parse_z(args.z or f"vandermonde:{','.join(map(str, range(n)))}", n, k + 2)
        tris = [_tile_triangulation(t, k, n) for t in tiles]
        rep = verify_amp_tiling_m2(tris, Z, samples=args.samples, seed=args.seed)
        _emit(args, rep.to_json())
        return 0 if rep.valid else 1
    if args.space == "hypersimplex":
        tilings = enumerate_tilings(args.k + 1, args.n)
        payload = {
            "space": "hypersimplex",
            "k_plus_1": args.k + 1,
            "n": args.n,
            "count": len(tilings),
            "tilings": [[repr(p) for p in t.perms()] for t in tilings],
        }
        _emit(args, payload)
        return 0
    # amplituhedron tilings via duality, with a sampled audit when Z is given
    tilings = enumerate_tilings(args.k + 1, args.n)
    payload = {
        "space": "amplituhedron",
        "k": args.k,
        "n": args.n,
        "m": 2,
        "count": len(tilings),
        "tilings": [[repr(t_dual(p)) for p in t.perms()] for t in tilings],
        "seed": args.seed,
    }
    if args.z:
        Z = _parse_z(args.z, args.n, args.k + 2)
        audits = []
        for t in tilings:
            tris = [rec.triangulation for rec in t.tiles]
            rep = verify_amp_tiling_m2(tris, Z, samples=args.samples, seed=args.seed)
            audits.append(rep.valid)
        payload["audited"] = audits
        if not all(audits):
            _emit(args, payload)
            return 1
    _emit(args, payload)
    return 0


def cmd_trop(args) -> int:
    data = _load_json(args.heights)
    P = HeightVector.from_json(data)
    violation = positivity_violation(P)
    if violation is not None:
        S, a, b, c, d = violation
        _emit(args, {
            "positive_tropical": False,
            "violation": {"S": list(S), "quad": [a, b, c, d]},
        })
        return 1
    D = regular_subdivision(P)
    payload = {
        "positive_tropical": True,
        "cells": D.to_json()["cells"],
        "faces_are_positroids": faces_are_positroids(D),
        "finest": is_finest(D),
    }
    _emit(args, payload)
    return 0


def cmd_amp_sample(args) -> int:
    n, k, m = args.n, args.k, args.m
    Z = _parse_z(args.z or f"vandermonde:{','.join(map(str, range(n)))}", n, k + m)
    pi = _parse_perm(args.cell)
    rng = Random(args.seed)
    samples = []
    for _ in range(args.count):
        C = sample_cell_matrix(pi, rng)
        Y = amp_map(C, Z)
        rec = {
            "Y": Y.Y.to_json(),
            "twistors": twistor_table_json(twistor_table(Y, Z)),
            "sign_stratum": sign_stratum(Y, Z).to_json(),
        }
        if m == 1:
            rec["m1_membership"] = m1_membership(Y, Z)
        if m == 2:
            rec["m2_interior"] = m2_interior_test(Y, Z)
        samples.append(rec)
    _emit(args, {"cell": repr(pi), "n": n, "k": k, "m": m,
                 "seed": args.seed, "samples": samples})
    return 0


def cmd_amp_verify(args) -> int:
    data = _load_json(args.file)
    n = data["n"]
    k = data.get("k", 1)
    tiles = [_parse_tile(rec, n) for rec in data["tiles"]]
    tris = [_tile_triangulation(t, k, n) for t in tiles]
    Z = _parse_z(args.z, n, k + 2)
    rep = verify_amp_tiling_m2(tris, Z, samples=args.samples, seed=args.seed)
    _emit(args, rep.to_json())
    return 0 if rep.valid else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="positroid-lab",
        description="exact computations with positroid cells, hypersimplex "
                    "tilings, tropical subdivisions, and amplituhedron tiles")
    sub = ap.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=["json", "text", "dot", "tikz"],
                        default="json")

    p = sub.add_parser("cell", parents=[common],
                       help="positroid data of a cell from a permutation or graph file")
    p.add_argument("--perm", help='decorated permutation, e.g. "(3,1,4,2)" or "2,3,1,4_"')
    p.add_argument("--graph", help="path to a plabic graph JSON file")
    p.add_argument("--matchings", action="store_true",
                   help="list almost perfect matchings (graph input)")
    p.add_argument("--sample", type=int, default=0,
                   help="emit this many exact sample points of the cell")
    p.set_defaults(func=cmd_cell)

    p = sub.add_parser("tilings", parents=[common],
                       help="enumerate or verify tilings")
    p.add_argument("--space", choices=["hypersimplex", "amplituhedron"],
                   default="hypersimplex")
    p.add_argument("--k", type=int, help="amplituhedron k (hypersimplex rank k+1)")
    p.add_argument("--n", type=int)
    p.add_argument("--z", help="vandermonde:<nodes> or file:<path>")
    p.add_argument("--verify", help="verify the tiling in this JSON file")
    p.add_argument("--t-dual", dest="t_dual", help="convert a tiling file across the duality")
    p.add_argument("--samples", type=int, default=25)
    p.set_defaults(func=cmd_tilings)

    p = sub.add_parser("trop", parents=[common],
                       help="positivity check and regular subdivision of a heights file")
    p.add_argument("--heights", required=True, help="path to a heights JSON file")
    p.set_defaults(func=cmd_trop)

    pa = sub.add_parser("amp", help="amplituhedron sampling and verification")
    asub = pa.add_subparsers(dest="amp_command", required=True)
    p = asub.add_parser("sample", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--cell", required=True, help="decorated permutation of the cell")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--z")
    p.set_defaults(func=cmd_amp_sample)
    p = asub.add_parser("verify-tiling", parents=[common])
    p.add_argument("--file", required=True)
    p.add_argument("--z", required=True)
    p.add_argument("--samples", type=int, default=25)
    p.set_defaults(func=cmd_amp_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"input error: {e}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
