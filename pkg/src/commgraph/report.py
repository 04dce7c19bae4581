"""Invariant reports: formula-versus-oracle comparison, sweep families, CSV rows, cache."""

from __future__ import annotations

import json
import math
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import abelian, detour, dihedral, graph, invariants, resolving

UNCHECKED = "unchecked"

DEFAULT_CACHE_PATH = ".commgraph-cache.jsonl"
CACHE_ENV_VAR = "COMMGRAPH_CACHE"

CSV_COLUMNS = [
    "spec",
    "n",
    "r",
    "blocks",
    "edges_f",
    "edges_o",
    "chi_f",
    "chi_o",
    "eccO1_f",
    "eccO1_o",
    "eccO23_f",
    "eccO23_o",
    "radD",
    "diamD",
    "beta_f",
    "beta_o",
    "poly_agree",
    "agree_all",
]


@dataclass(frozen=True)
class Caps:
    """Vertex caps for the exponential oracles and for building the measured graph."""

    detour: int = 20
    resolving: int = 16
    chromatic: int = 24
    graph: int = 2048


DEFAULT_CAPS = Caps()


def _entry(disagreements, unchecked, name, formula, oracle, witness=None):
    """Comparison record; oracle=None means the check did not run."""
    if oracle is None:
        unchecked.append(name)
        return {"formula": formula, "oracle": UNCHECKED, "agree": UNCHECKED}
    agree = formula == oracle
    entry = {"formula": formula, "oracle": oracle, "agree": agree}
    if not agree:
        entry["witness"] = witness or f"formula={formula} oracle={oracle}"
        disagreements.append({"invariant": name, "witness": entry["witness"]})
    return entry


def _poly_json(poly: resolving.ResolvingPolynomial) -> dict:
    """Serialize with decimal-string coefficients; counts overflow small ints fast."""
    return {
        "beta": poly.beta,
        "coeffs": {str(i): str(poly.coeffs[i]) for i in sorted(poly.coeffs)},
    }


def build_report(
    spec: str,
    caps: Caps = DEFAULT_CAPS,
    skip_oracles: bool = False,
    with_timings: bool = False,
) -> dict:
    """Full invariant report for one group spec; see README for the field layout."""
    group = abelian.parse_group_spec(spec)
    n, r = group.n, group.r
    report: dict = {
        "spec": spec,
        "moduli": list(group.moduli),
        "n": n,
        "r": r,
        "abelian": group.is_elementary_abelian_2(),
        "caps": {
            "detour": caps.detour,
            "resolving": caps.resolving,
            "chromatic": caps.chromatic,
            "graph": caps.graph,
        },
    }
    if report["abelian"]:
        # Every pair commutes, so the commuting graph is complete on 2n vertices.
        report["graph"] = f"K_{2 * n}"
        report["degree"] = 2 * n - 1
        report["edge_count"] = n * (2 * n - 1)
        report["unchecked"] = []
        report["disagreements"] = []
        report["agree_all"] = True
        return report

    c = 1 << r
    nv = 2 * n
    report["blocks"] = n // c
    report["vertex_count"] = nv
    disagreements: list[dict] = []
    unchecked: list[str] = []
    timings: dict[str, float] = {}

    def timed(name, fn):
        t0 = time.perf_counter()
        out = fn()
        timings[name] = round(time.perf_counter() - t0, 6)
        return out

    brute = None
    if not skip_oracles and nv <= caps.graph:
        brute = timed("build", lambda: graph.build_commuting_graph(group, "all"))

    # Structure: measured adjacency against the synthesized join of cliques.
    if brute is not None:
        structural = graph.build_structural_graph(n, r)
        match = graph.edge_sets_equal(brute, structural)
        struct_entry: dict = {"match": match}
        if not match:
            labels = brute.vertex_labels()
            witness = next(
                f"adjacency differs at ({labels[i]}, {labels[j]})"
                for i in range(nv)
                for j in range(i + 1, nv)
                if brute.is_adjacent(i, j) != structural.is_adjacent(i, j)
            )
            struct_entry["witness"] = witness
            disagreements.append({"invariant": "structure", "witness": witness})
    else:
        unchecked.append("structure")
        struct_entry = {"match": UNCHECKED}
    report["structure"] = struct_entry

    # Degrees: every vertex of each part against the part formula.
    degrees = {}
    for kind in ("omega1", "omega2", "omega3"):
        f = invariants.degree_formula(n, r, kind)
        if brute is None:
            degrees[kind] = _entry(disagreements, unchecked, f"degree.{kind}", f, None)
            continue
        idx = [
            v
            for v, pl in enumerate(brute.part_labels)
            if dihedral.part_kind(pl) == kind
        ]
        bad = next((v for v in idx if brute.degree(v) != f), None)
        if bad is None:
            degrees[kind] = _entry(
                disagreements, unchecked, f"degree.{kind}", f, brute.degree(idx[0])
            )
        else:
            witness = (
                f"vertex {brute.vertex_labels()[bad]} has degree "
                f"{brute.degree(bad)}, formula says {f}"
            )
            degrees[kind] = _entry(
                disagreements, unchecked, f"degree.{kind}", f, brute.degree(bad), witness
            )
    report["degrees"] = degrees

    report["edges"] = _entry(
        disagreements,
        unchecked,
        "edges",
        invariants.edge_count_formula(n, r),
        None if brute is None else brute.edge_count(),
    )

    # Chromatic number: explicit coloring validity plus the exact search.
    chi_f = invariants.chromatic_number_formula(n, r)
    if brute is not None:
        coloring = invariants.construct_coloring(brute)
        proper = invariants.is_proper_coloring(brute, coloring)
        ncolors = len(set(coloring))
        coloring_entry = {"proper": proper, "colors": ncolors, "agree": proper and ncolors == chi_f}
        if not coloring_entry["agree"]:
            witness = f"constructed coloring proper={proper} colors={ncolors} expected {chi_f}"
            coloring_entry["witness"] = witness
            disagreements.append({"invariant": "coloring", "witness": witness})
    else:
        unchecked.append("coloring")
        coloring_entry = {"proper": UNCHECKED, "colors": UNCHECKED, "agree": UNCHECKED}
    report["coloring"] = coloring_entry
    chi_o = None
    if brute is not None and nv <= caps.chromatic:
        chi_o = timed(
            "chromatic", lambda: invariants.chromatic_number_oracle(brute, caps.chromatic)
        )
    report["chromatic"] = _entry(disagreements, unchecked, "chromatic", chi_f, chi_o)

    # Detour eccentricities, radius, diameter.
    profile = None
    if brute is not None and nv <= caps.detour:
        profile = timed("detour", lambda: detour.detour_profile(brute, caps.detour))
    ecc = {}
    for kind in ("omega1", "omega2", "omega3"):
        f = detour.detour_ecc_formula(n, r, kind)
        if profile is None:
            ecc[kind] = _entry(disagreements, unchecked, f"detour.ecc.{kind}", f, None)
            continue
        idx = [
            v
            for v, pl in enumerate(brute.part_labels)
            if dihedral.part_kind(pl) == kind
        ]
        bad = next((v for v in idx if profile.eccentricities[v] != f), None)
        if bad is None:
            ecc[kind] = _entry(
                disagreements,
                unchecked,
                f"detour.ecc.{kind}",
                f,
                profile.eccentricities[idx[0]],
            )
        else:
            witness = (
                f"vertex {brute.vertex_labels()[bad]} has detour eccentricity "
                f"{profile.eccentricities[bad]}, formula says {f}"
            )
            ecc[kind] = _entry(
                disagreements,
                unchecked,
                f"detour.ecc.{kind}",
                f,
                profile.eccentricities[bad],
                witness,
            )
    rad_f, diam_f = detour.detour_radius_diameter_formula(n, r)
    report["detour"] = {
        "ecc": ecc,
        "radius": _entry(
            disagreements,
            unchecked,
            "detour.radius",
            rad_f,
            None if profile is None else profile.radius,
        ),
        "diameter": _entry(
            disagreements,
            unchecked,
            "detour.diameter",
            diam_f,
            None if profile is None else profile.diameter,
        ),
    }

    # Metric dimension and the resolving polynomial.
    beta_f = resolving.metric_dimension_formula(n, r)
    poly_f = resolving.resolving_polynomial_formula(n, r)
    beta_o = None
    poly_o = None
    if brute is not None and nv <= caps.resolving:
        beta_o = timed(
            "beta", lambda: resolving.metric_dimension_oracle(brute, caps.resolving)
        )
        poly_o = timed(
            "poly", lambda: resolving.resolving_polynomial_oracle(brute, caps.resolving)
        )
    poly_entry: dict = {"formula": _poly_json(poly_f)}
    if poly_o is None:
        unchecked.append("resolving.poly")
        poly_entry["oracle"] = UNCHECKED
        poly_entry["agree"] = UNCHECKED
    else:
        poly_entry["oracle"] = _poly_json(poly_o)
        agree = poly_f == poly_o
        poly_entry["agree"] = agree
        if not agree:
            sizes = sorted(set(poly_f.coeffs) | set(poly_o.coeffs))
            i = next(s for s in sizes if poly_f.coeffs.get(s) != poly_o.coeffs.get(s))
            witness = (
                f"coefficient s_{i}: formula={poly_f.coeffs.get(i)} "
                f"oracle={poly_o.coeffs.get(i)}"
            )
            poly_entry["witness"] = witness
            disagreements.append({"invariant": "resolving.poly", "witness": witness})
    report["resolving"] = {
        "beta": _entry(disagreements, unchecked, "resolving.beta", beta_f, beta_o),
        "poly": poly_entry,
    }

    report["unchecked"] = unchecked
    report["disagreements"] = disagreements
    report["agree_all"] = not disagreements
    if with_timings:
        report["timings"] = timings
    return report


def _cell(value) -> str:
    if value is True:
        return "true"
    if value is False:
        return "false"
    return "" if value is None else str(value)


def report_to_row(report: dict) -> list[str]:
    """One sweep CSV row; blank cells where a column does not apply."""
    if report["abelian"]:
        row = {col: "" for col in CSV_COLUMNS}
        row.update(
            spec=report["spec"],
            n=str(report["n"]),
            r=str(report["r"]),
            agree_all="true",
        )
        return [row[col] for col in CSV_COLUMNS]
    ecc = report["detour"]["ecc"]
    values = {
        "spec": report["spec"],
        "n": report["n"],
        "r": report["r"],
        "blocks": report["blocks"],
        "edges_f": report["edges"]["formula"],
        "edges_o": report["edges"]["oracle"],
        "chi_f": report["chromatic"]["formula"],
        "chi_o": report["chromatic"]["oracle"],
        "eccO1_f": ecc["omega1"]["formula"],
        "eccO1_o": ecc["omega1"]["oracle"],
        "eccO23_f": ecc["omega2"]["formula"],
        "eccO23_o": ecc["omega2"]["oracle"],
        "radD": report["detour"]["radius"]["formula"],
        "diamD": report["detour"]["diameter"]["formula"],
        "beta_f": report["resolving"]["beta"]["formula"],
        "beta_o": report["resolving"]["beta"]["oracle"],
        "poly_agree": report["resolving"]["poly"]["agree"],
        "agree_all": report["agree_all"],
    }
    return [_cell(values[col]) for col in CSV_COLUMNS]


def all_abelian_specs(max_order: int) -> list[str]:
    """Specs of every direct-product spelling with order 2..max_order, in a fixed order.

    Spellings are ordered tuples of moduli >= 2, so isomorphic respellings
    such as Z6, Z2xZ3 and Z3xZ2 all appear.
    """
    if max_order > abelian.MAX_ORDER:
        raise abelian.GroupSpecError(
            f"max order {max_order} exceeds cap {abelian.MAX_ORDER}"
        )
    if max_order < 2:
        raise abelian.GroupSpecError("max order must be at least 2")
    found: list[tuple[int, ...]] = []

    def extend(prefix: list[int], prod: int) -> None:
        if prefix:
            found.append(tuple(prefix))
        m = 2
        while prod * m <= max_order:
            prefix.append(m)
            extend(prefix, prod * m)
            prefix.pop()
            m += 1

    extend([], 1)
    found.sort(key=lambda t: (math.prod(t), len(t), t))
    return ["x".join(f"Z{m}" for m in t) for t in found]


def cache_path(explicit: str | None = None) -> str:
    return explicit or os.environ.get(CACHE_ENV_VAR) or DEFAULT_CACHE_PATH


def cache_key(n: int, r: int, caps: Caps, skip_oracles: bool) -> str:
    """Reports depend only on (n, r) plus the caps, not on the moduli spelling."""
    return (
        f"n={n};r={r};caps={caps.detour},{caps.resolving},{caps.chromatic},{caps.graph};"
        f"oracles={int(not skip_oracles)}"
    )


def cache_get(path: str, key: str) -> dict | None:
    """Last matching entry in the JSON-lines cache, or None. Corrupt lines are skipped."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except FileNotFoundError:
        return None
    hit = None
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            entry = json.loads(line)
            if entry["key"] == key:
                hit = entry["report"]
        except (ValueError, KeyError, TypeError):
            print(f"warning: skipping corrupt cache line {lineno} in {path}", file=sys.stderr)
    return hit


def cache_put(path: str, key: str, report: dict) -> None:
    """Append one entry; writes are append-only, last entry wins on read."""
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps({"key": key, "report": report}) + "\n")


def _build_report_job(args: tuple) -> dict:
    spec, caps, skip_oracles = args
    return build_report(spec, caps, skip_oracles)


def report_for_spec(
    spec: str,
    caps: Caps = DEFAULT_CAPS,
    skip_oracles: bool = False,
    with_timings: bool = False,
    use_cache: bool = True,
    cache_file: str | None = None,
) -> dict:
    """build_report with read-through caching; timed runs bypass the cache."""
    if with_timings:
        use_cache = False
    if not use_cache:
        return build_report(spec, caps, skip_oracles, with_timings)
    group = abelian.parse_group_spec(spec)
    path = cache_path(cache_file)
    key = cache_key(group.n, group.r, caps, skip_oracles)
    cached = cache_get(path, key)
    if cached is not None:
        cached = dict(cached)
        cached["spec"] = spec
        cached["moduli"] = list(group.moduli)
        return cached
    report = build_report(spec, caps, skip_oracles)
    cache_put(path, key, report)
    return report


def run_sweep(
    specs: Sequence[str],
    caps: Caps = DEFAULT_CAPS,
    skip_oracles: bool = False,
    use_cache: bool = True,
    cache_file: str | None = None,
    jobs: int = 1,
) -> tuple[list[dict], list[str], int]:
    """Reports for a family of specs; returns (reports, summary lines, exit code)."""
    reports: dict[int, dict] = {}
    pending: list[tuple[int, str]] = []
    path = cache_path(cache_file)
    keys: dict[int, str] = {}
    for i, spec in enumerate(specs):
        group = abelian.parse_group_spec(spec)
        keys[i] = cache_key(group.n, group.r, caps, skip_oracles)
        cached = cache_get(path, keys[i]) if use_cache else None
        if cached is not None:
            cached = dict(cached)
            cached["spec"] = spec
            cached["moduli"] = list(group.moduli)
            reports[i] = cached
        else:
            pending.append((i, spec))
    if pending:
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                fresh = list(
                    pool.map(
                        _build_report_job,
                        [(spec, caps, skip_oracles) for _, spec in pending],
                    )
                )
        else:
            fresh = [build_report(spec, caps, skip_oracles) for _, spec in pending]
        for (i, _), rep in zip(pending, fresh):
            reports[i] = rep
            if use_cache:
                cache_put(path, keys[i], rep)
    ordered = [reports[i] for i in range(len(specs))]
    agree = disagree = unchecked = 0
    lines = []
    for rep in ordered:
        if rep["disagreements"]:
            disagree += 1
            for item in rep["disagreements"]:
                lines.append(f"DISAGREE {rep['spec']} {item['invariant']}: {item['witness']}")
        elif rep["unchecked"]:
            unchecked += 1
        else:
            agree += 1
    lines.insert(
        0,
        f"rows={len(ordered)} agree={agree} disagree={disagree} unchecked={unchecked}",
    )
    return ordered, lines, 2 if disagree else 0
