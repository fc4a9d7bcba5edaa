"""Command-line driver: ``braidcover <command> ...``.

Every command prints a JSON report (schema ``braidcover/1``).  Exit status
is 0 when all checks pass, 1 when any check fails and 2 on invalid
arguments.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from math import gcd

import numpy as np

from .covering import DEFAULT_MAX_POWER, verify_cube_failure, verify_relations
from .errors import BraidCoverError
from .invariants import (
    check_formula_consistency,
    genus_dm,
    operad_genus_additivity,
    rh_invariants,
)
from .operad import (
    TOL,
    Configuration,
    act_on_configurations,
    act_on_surfaces,
    algebra_map_square,
    identity_element,
    max_distance,
    operad_compose,
    random_configuration,
    random_element,
    stratum_operand,
    surface,
    validate_element,
)
from .polygon import (
    MAX_SEARCH_EDGES,
    build_polygon,
    classify_simple_twists,
    cover_equivalence_check,
    expected_shifts,
    functor_order,
    polygon_ribbon,
    shift_twist,
)
from .report import VerificationReport
from .ribbon import build_cover_ribbon, faces, sheet_shift, surface_invariants


def relations_report(n: int, d: int, max_power: int = DEFAULT_MAX_POWER) -> VerificationReport:
    return verify_relations(n, d, max_power)


def cube_report(d: int) -> VerificationReport:
    return verify_cube_failure(d)


def ribbon_report(n: int, d: int, emit_faces: bool = False) -> VerificationReport:
    R = build_cover_ribbon(n, d)
    inv = surface_invariants(R)
    report = VerificationReport("ribbon", {"n": n, "d": d})
    fs = faces(R)
    report.data = {"genus": inv.genus, "boundary": inv.boundary, "euler": inv.euler}
    if emit_faces:
        report.data["faces"] = [list(f) for f in fs]
    covered = sorted(h for f in fs for h in f)
    report.add("faces_partition_half_edges", covered == sorted(R.half_edges), None if covered == sorted(R.half_edges) else {"faces": len(fs)})
    shift_ok = R.is_automorphism(sheet_shift(n, d, 1))
    report.add("deck_symmetry", shift_ok, None if shift_ok else {"shift": 1})
    if d >= 2:
        g, k = rh_invariants(d, n)
        ok = (inv.genus, inv.boundary) == (g, k)
        report.add(
            "riemann_hurwitz",
            ok,
            {"ribbon": [inv.genus, inv.boundary], "formula": [g, k]},
        )
    else:
        report.skip("riemann_hurwitz", "trivial cover d = 1")
    return report


def invariants_report(d: int, m: int | None = None, n: int | None = None) -> VerificationReport:
    if m is not None:
        report = VerificationReport("invariants", {"d": d, "m": m})
        g = genus_dm(d, m)
        report.data = {"g": g, "n": d * m}
        report.add("formula_consistency", check_formula_consistency(d, m), {"genus_dm": g, "rh": list(rh_invariants(d, d * m))})
    else:
        report = VerificationReport("invariants", {"d": d, "n": n})
        g, k = rh_invariants(d, n)
        report.data = {"g": g, "k": k}
        num = d * n - n - d - gcd(d, n)
        report.add("integrality", num % 2 == 0, {"numerator": num})
        if n >= 2 and d >= 2:
            R = build_cover_ribbon(n, d)
            inv = surface_invariants(R)
            report.add("ribbon_agreement", (inv.genus, inv.boundary) == (g, k), {"ribbon": [inv.genus, inv.boundary]})
    return report


def operad_report(samples: int, seed: int) -> VerificationReport:
    rng = np.random.default_rng(seed)
    report = VerificationReport("operad", {"samples": samples, "seed": seed})
    worst_unit = worst_assoc = 0.0
    invalid = []
    card_fail = []
    for s in range(samples):
        k = int(rng.integers(1, 4))
        f = random_element(rng, k)
        gs = [random_element(rng, int(rng.integers(0, 3))) for _ in range(k)]
        hs = [[random_element(rng, int(rng.integers(0, 3))) for _ in range(g.arity)] for g in gs]
        ident = identity_element()
        worst_unit = max(
            worst_unit,
            max_distance(operad_compose(f, [ident] * k), f),
            max_distance(operad_compose(ident, [f]), f),
        )
        left = operad_compose(operad_compose(f, gs), [h for block in hs for h in block])
        right = operad_compose(f, [operad_compose(g, block) for g, block in zip(gs, hs)])
        worst_assoc = max(worst_assoc, max_distance(left, right))
        if not validate_element(left)[0] or not validate_element(operad_compose(f, gs))[0]:
            invalid.append(s)
        configs = [random_configuration(rng, int(rng.integers(0, 5))) for _ in range(k)]
        out = act_on_configurations(f, configs)
        if len(out) != sum(len(c) for c in configs):
            card_fail.append(s)
    report.add("unit_law", worst_unit <= TOL, {"max_error": worst_unit})
    report.add("associativity", worst_assoc <= TOL, {"max_error": worst_assoc})
    report.add("validity_preserved", not invalid, {"invalid_samples": invalid})
    report.add("configuration_cardinality", not card_fail, {"failed_samples": card_fail})
    report.data = {"max_unit_error": worst_unit, "max_assoc_error": worst_assoc}
    return report


def _compositions(max_k: int, max_m: int, min_m: int = 1):
    for k in range(1, max_k + 1):
        yield from product(range(min_m, max_m + 1), repeat=k)


def additivity_report(d_max: int = 8, k_max: int = 5, m_max: int = 5) -> VerificationReport:
    report = VerificationReport("additivity", {"d_max": d_max, "k_max": k_max, "m_max": m_max})
    bad_formula, bad_gluing = [], []
    count = 0
    for d in range(2, d_max + 1):
        for ms in _compositions(k_max, m_max):
            count += 1
            if not operad_genus_additivity(d, ms):
                bad_formula.append([d, list(ms)])
            glued = act_on_surfaces(len(ms), [surface(genus_dm(d, m), d) for m in ms])
            if glued != surface(sum(genus_dm(d, m) for m in ms) + (len(ms) - 1) * (d - 1), d):
                bad_gluing.append([d, list(ms)])
    report.add("genus_additivity", not bad_formula, {"cases": count, "failures": bad_formula[:10]})
    report.add("gluing_closed_form", not bad_gluing, {"cases": count, "failures": bad_gluing[:10]})
    square_fail = [
        [d, list(ms)]
        for d in range(2, d_max + 1)
        for ms in _compositions(4, 4, min_m=0)
        if not algebra_map_square(d, ms)
    ]
    report.add("algebra_map_square", not square_fail, {"failures": square_fail[:10]})
    return report


def polygon_report(h: int, b: int) -> VerificationReport:
    P = build_polygon(h, b)
    d = P.d
    report = VerificationReport("polygon", {"h": h, "b": b})
    report.data = {"d": d, "boundary_words": [str(w) for w in P.boundary_words]}
    inv = surface_invariants(polygon_ribbon(P))
    report.add("ribbon_invariants", (inv.genus, inv.boundary) == (h, b), {"ribbon": [inv.genus, inv.boundary]})
    counts = {}
    for w in P.boundary_words:
        for lab, _ in w.letters:
            counts[lab] = counts.get(lab, 0) + 1
    sides_ok = all(counts.get(e, 0) == 2 for e in P.groupoid.edges)
    report.add("edge_sides_used_twice", sides_ok, None if sides_ok else {"counts": counts})
    order = functor_order(shift_twist(P))
    expected_order = 2 * d if d % 2 else d
    report.add("shift_order", order == expected_order, {"order": order, "expected": expected_order})
    if d <= MAX_SEARCH_EDGES:
        found = classify_simple_twists(h, b)
        expected = expected_shifts(d) if b <= 2 else set()
        report.data["classification"] = sorted([[x + 1 for x in s] for s in found])
        report.data["classification_empty"] = not found
        report.add(
            "classification",
            found == expected,
            {"found": sorted(map(list, found)), "expected": sorted(map(list, expected))},
        )
    else:
        report.skip("classification", f"d = {d} exceeds the exhaustive bound {MAX_SEARCH_EDGES}")
    if b <= 2:
        ok = cover_equivalence_check(d)
        report.add("cover_equivalence", ok, None if ok else {"d": d})
    return report


def _sweep_cell(task):
    kind, args = task
    builders = {
        "relations": relations_report,
        "cube": cube_report,
        "ribbon": ribbon_report,
        "invariants": invariants_report,
        "polygon": polygon_report,
    }
    report = builders[kind](*args)
    label = ",".join(f"{k}={v}" for k, v in report.parameters.items() if v is not None)
    return f"{kind}[{label}]/", report


def sweep_report(n_max: int = 8, d_max: int = 6, threads: int | None = None) -> VerificationReport:
    tasks = [("relations", (n, d)) for n in range(2, n_max + 1) for d in range(1, d_max + 1)]
    tasks += [("cube", (d,)) for d in range(2, d_max + 1)]
    tasks += [("ribbon", (n, d)) for n in range(2, n_max + 1) for d in range(2, d_max + 1)]
    tasks += [("invariants", (d, m)) for d in range(2, d_max + 1) for m in range(1, n_max + 1)]
    tasks += [
        ("polygon", (h, b))
        for h in range(0, MAX_SEARCH_EDGES // 2 + 1)
        for b in range(1, MAX_SEARCH_EDGES + 1)
        if 2 * h + b <= min(MAX_SEARCH_EDGES, max(d_max, 3)) and (h, b) != (0, 1)
    ]
    if threads is None:
        threads = int(os.environ.get("BRAIDCOVER_THREADS", "1") or 1)
    report = VerificationReport("sweep", {"n_max": n_max, "d_max": d_max})
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_sweep_cell, tasks))
    else:
        results = [_sweep_cell(t) for t in tasks]
    for prefix, sub in results:
        report.extend(sub, prefix)
    report.extend(additivity_report(min(d_max, 8)), "additivity/")
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidcover", description=__doc__.splitlines()[0])
    parser.add_argument("--out", help="write the JSON report here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("relations", help="braid relations of the lifted twists")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--max-power", type=int, default=DEFAULT_MAX_POWER)

    p = sub.add_parser("cube", help="cubes of the twists break the braid relation")
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("ribbon", help="ribbon graph of the cover and its invariants")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--emit-faces", action="store_true")

    p = sub.add_parser("invariants", help="Riemann-Hurwitz genus and boundary count")
    p.add_argument("--d", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--m", type=int)
    group.add_argument("--n", type=int)

    p = sub.add_parser("operad", help="operad laws on random framed disks")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("polygon", help="polygon model and simple twist classification")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--b", type=int, required=True)

    p = sub.add_parser("sweep", help="all checks over a parameter grid")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--d-max", type=int, default=6)
    p.add_argument("--out", dest="sweep_out")
    return parser


def run(args: argparse.Namespace) -> VerificationReport:
    if args.command == "relations":
        return relations_report(args.n, args.d, args.max_power)
    if args.command == "cube":
        return cube_report(args.d)
    if args.command == "ribbon":
        return ribbon_report(args.n, args.d, args.emit_faces)
    if args.command == "invariants":
        return invariants_report(args.d, m=args.m, n=args.n)
    if args.command == "operad":
        if args.samples < 1:
            raise ValueError("--samples must be positive")
        report = operad_report(args.samples, args.seed)
        return report
    if args.command == "polygon":
        return polygon_report(args.h, args.b)
    if args.command == "sweep":
        return sweep_report(args.n_max, args.d_max)
    raise ValueError(f"unknown command {args.command}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = run(args)
    except (BraidCoverError, ValueError) as exc:
        print(f"braidcover: error: {exc}", file=sys.stderr)
        return 2
    text = report.to_json()
    out = getattr(args, "sweep_out", None) or args.out
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
