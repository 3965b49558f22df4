"""Acceptance suite: one test per primary criterion.

Each test records a single ``PASS``/``FAIL`` line with a short summary and
then asserts.  The lines are collected in an "acceptance criteria" section
at the end of the pytest run.  Run on its own with::

    pytest tests/test_acceptance.py -v -s

or as a script with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import math
import os
import random
import sys
import time
from collections import Counter

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from oracles import (  # noqa: E402
    brute_fractional_matching,
    brute_independent_sets,
    brute_max_matchings,
)

from ramsey_witness.catalog import connected_graph6, connected_graphs, random_connected_graph  # noqa: E402
from ramsey_witness.cli import main as cli_main  # noqa: E402
from ramsey_witness.extraction import SoundnessError, pendant_extension, run_pipeline, verify_witness  # noqa: E402
from ramsey_witness.families import FamilySpec, generate  # noqa: E402
from ramsey_witness.graph import Graph, parse_graph6, write_graph6  # noqa: E402
from ramsey_witness.harness import ScanConfig, empirical_threshold, scan_invariants  # noqa: E402
from ramsey_witness.invariants import (  # noqa: E402
    fractional_matching_number,
    independence_number,
    induced_matching_number,
    maximum_matching,
)

RESULTS: list[str] = []


def report(name: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def catalog_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("acceptance") / "connected_1_8.g6"
    path.write_text("\n".join(connected_graph6()) + "\n")
    return str(path)


# 1 ----------------------------------------------------------------------


def test_sandwich_chains(catalog_file):
    t0 = time.perf_counter()
    rep = scan_invariants(ScanConfig((catalog_file,), jobs=1))
    elapsed = time.perf_counter() - t0
    ok = rep["violations"] == 0 and rep["connected_scanned"] == 12113 and elapsed < 300
    report(
        "sandwich chains",
        ok,
        f"{rep['connected_scanned']} connected graphs on <= 8 vertices, "
        f"{rep['violations']} violations, {elapsed:.1f}s",
    )


# 2 ----------------------------------------------------------------------


def family_table():
    rows = []
    for n in range(1, 6):
        for spec in (FamilySpec.hairy(n, 2), FamilySpec.triangles(n), FamilySpec.spider(n, 2), FamilySpec.friendship(n)):
            rows.append(("alpha''", spec, n))
    for n in range(1, 14):
        rows.append(("alpha''", FamilySpec.path(n), math.ceil((n - 1) / 3)))
    for n in range(1, 7):
        rows.append(("alpha'", FamilySpec.spider(n, 2), n))
        rows.append(("alpha'", FamilySpec.friendship(n), n))
        rows.append(("alpha'", FamilySpec.clique(n), n // 2))
        rows.append(("alpha'", FamilySpec.biclique(n), n))
    return rows


def test_family_value_table():
    bad = []
    rows = family_table()
    for which, spec, expected in rows:
        g = generate(spec)
        if which == "alpha''":
            got = induced_matching_number(g)[0]
            oracle = len(brute_max_matchings(g, induced=True)[0])
        else:
            got = maximum_matching(g)[0]
            oracle = len(brute_max_matchings(g)[0])
        if not got == oracle == expected:
            bad.append(f"{which}({spec.label()})={got}/oracle {oracle}/expected {expected}")
    report("family value table", not bad, f"{len(rows) - len(bad)}/{len(rows)} entries exact" + (f"; {bad[:3]}" if bad else ""))


# 3 ----------------------------------------------------------------------


def test_oracle_equivalence():
    graphs = list(connected_graphs(7))
    mismatches = Counter()
    for g in graphs:
        ind = brute_independent_sets(g)[0]
        if independence_number(g) != (len(ind), ind):
            mismatches["independence_number"] += 1
        mm = brute_max_matchings(g)[0]
        if maximum_matching(g) != (len(mm), mm):
            mismatches["maximum_matching"] += 1
        im = brute_max_matchings(g, induced=True)[0]
        if induced_matching_number(g) != (len(im), im):
            mismatches["induced_matching_number"] += 1
        if fractional_matching_number(g) != brute_fractional_matching(g):
            mismatches["fractional_matching_number"] += 1
    report(
        "oracle equivalence",
        not mismatches,
        f"4 optimisers x {len(graphs)} connected graphs on <= 7 vertices, "
        f"{sum(mismatches.values())} mismatches (values and lexicographically least witnesses)",
    )


# 4 ----------------------------------------------------------------------


def test_lemma_soundness():
    from test_extraction import check_lemma, valid_lemma_instances

    count = 0
    failures = 0
    for g in connected_graphs(6):
        for tree, pivots in valid_lemma_instances(g):
            count += 1
            try:
                check_lemma(g, tree, pivots, pendant_extension(g, tree, pivots))
            except AssertionError:
                failures += 1
    report("lemma soundness", failures == 0 and count > 0, f"{count} valid instances on <= 6 vertices, {failures} postcondition failures")


# 5 ----------------------------------------------------------------------

THEOREMS = ("independence", "induced-matching", "matching")


def test_extraction_soundness():
    rng = random.Random(20240601)
    hosts = list(connected_graphs())
    hosts += [random_connected_graph(rng.randint(8, 20), rng) for _ in range(10_000)]
    runs = witnesses = bad = soundness = 0
    t0 = time.perf_counter()
    for g in hosts:
        for theorem in THEOREMS:
            for n in (2, 3):
                runs += 1
                try:
                    res = run_pipeline(g, theorem, n)
                except SoundnessError:
                    soundness += 1
                    continue
                if res.ok:
                    witnesses += 1
                    if not verify_witness(g, res.witness):
                        bad += 1
    elapsed = time.perf_counter() - t0
    report(
        "extraction soundness",
        bad == 0 and soundness == 0,
        f"{len(hosts)} hosts x 3 pipelines x n=2,3 = {runs} runs, {witnesses} witnesses, "
        f"{bad} failed verification, {soundness} internal-soundness exits, {elapsed:.0f}s",
    )


# 6 ----------------------------------------------------------------------

# each family goes through every pipeline whose theorem lists it
PLANTED = [
    ("Path", FamilySpec.path, ("path-clique-star", "independence", "induced-matching", "matching")),
    ("Clique", FamilySpec.clique, ("path-clique-star", "matching")),
    ("Star", FamilySpec.star, ("path-clique-star", "independence")),
    ("Biclique", FamilySpec.biclique, ("matching",)),
    ("HairyClique(l=1)", lambda n: FamilySpec.hairy(n, 1), ("independence",)),
    ("HairyClique(l=2)", lambda n: FamilySpec.hairy(n, 2), ("induced-matching",)),
    ("TriangleClique", FamilySpec.triangles, ("induced-matching",)),
    ("Spider(l=2)", lambda n: FamilySpec.spider(n, 2), ("induced-matching", "matching")),
    ("Friendship", FamilySpec.friendship, ("induced-matching", "matching")),
]
PLANTED_SEEDS = 25


def planted_host(spec, rng):
    g = generate(spec)
    edges = list(g.edges())
    extra = rng.randint(0, 4)
    for i in range(extra):
        # noise pendant on any earlier vertex, including earlier noise
        edges.append((rng.randrange(g.order + i), g.order + i))
    return Graph.from_edges(g.order + extra, edges)


def test_planted_completeness():
    rng = random.Random(7)
    misses = Counter()
    total = 0
    for name, make, theorems in PLANTED:
        for n in range(1, 5):
            for _ in range(PLANTED_SEEDS):
                g = planted_host(make(n), rng)
                total += 1
                found = False
                for theorem in theorems:
                    res = run_pipeline(g, theorem, n)
                    if res.ok and res.witness.parameter >= n:
                        found = True
                        break
                if not found:
                    misses[f"{name} n={n}"] += 1
    detail = f"{total - sum(misses.values())}/{total} noisy hosts recovered at parameter >= n"
    if misses:
        detail += "; misses: " + ", ".join(f"{k} ({v}/{PLANTED_SEEDS})" for k, v in sorted(misses.items()))
    report("planted completeness", not misses, detail)


# 7 ----------------------------------------------------------------------


def test_empirical_threshold(catalog_file):
    rep = empirical_threshold(ScanConfig((catalog_file,), theorem="induced-matching", n=3))
    cliques = sorted(write_graph6(generate(FamilySpec.clique(k))) for k in range(2, 9))
    extremal_are_cliques = all(
        (g := parse_graph6(s)).size == g.order * (g.order - 1) // 2 for s in rep.extremal
    )
    ok = rep.empirical_threshold == 2 and extremal_are_cliques and rep.extremal == cliques
    report(
        "empirical threshold",
        ok,
        f"induced-matching n=3 over {rep.graphs_scanned} graphs: threshold {rep.empirical_threshold}, "
        f"{len(rep.extremal)} extremal graphs, all complete: {extremal_are_cliques}",
    )


# 8 ----------------------------------------------------------------------


def test_graph6_round_trip():
    lines = connected_graph6(7)
    bad = [s for s in lines if write_graph6(parse_graph6(s)) != s]
    k3 = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    golden = parse_graph6("Bw") == k3 and write_graph6(k3) == "Bw"
    report("graph6 round trip", not bad and golden, f"{len(lines) - len(bad)}/{len(lines)} byte-identical; Bw <-> K_3: {golden}")


# 9 ----------------------------------------------------------------------


def test_determinism(catalog_file, tmp_path):
    outs = []
    for jobs in (1, 8):
        out = tmp_path / f"report_{jobs}.json"
        code = cli_main(
            ["scan", "--theorem", "matching", "--n", "3", "--input", catalog_file, "--jobs", str(jobs), "--output", str(out), "--records"]
        )
        assert code == 0
        outs.append(out.read_bytes())
    same = outs[0] == outs[1]
    report("determinism", same, f"scan --jobs 1 vs --jobs 8: {len(outs[0])} bytes each, identical: {same}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
