"""Batch scans over graph6 streams.

Two scans are provided.  :func:`scan_invariants` recomputes every exact
parameter and checks the inequalities that tie them together;
:func:`empirical_threshold` looks for the largest parameter value carried by
a connected graph that avoids all target structures of a theorem.

Work is split per graph and merged through counters and sorted lists only,
so a report does not depend on the number of workers.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import get_context
from typing import Iterable, Iterator, Sequence

from .extraction import SoundnessError, run_pipeline, target_specs, verify_witness
from .families import contains_induced, generate
from .graph import Graph6Error, is_connected, parse_graph6
from .invariants import (
    fractional_matching_number,
    independence_number,
    induced_matching_number,
    matching_number,
    vertex_cover_number,
)

REPORT_VERSION = 1
THEOREMS = ("independence", "induced-matching", "matching")

# the parameter each theorem's hypothesis is stated in
THEOREM_PARAMETER = {
    "independence": "alpha",
    "induced-matching": "alpha_induced",
    "matching": "alpha_prime",
}

CHECKS = (
    "alpha_induced<=alpha_prime",
    "alpha_prime<=alpha_f",
    "alpha_f<=1.5*alpha_prime",
    "alpha_prime<=beta",
    "beta<=2*alpha_prime",
    "beta==order-alpha",
)


class InputError(ValueError):
    """A graph6 line that does not parse, located by file and line."""

    def __init__(self, path: str, lineno: int, err: Graph6Error):
        super().__init__(f"{path}:{lineno}: {err}")
        self.path = path
        self.lineno = lineno
        self.offset = err.offset


@dataclass(frozen=True)
class ScanConfig:
    inputs: tuple[str, ...]
    theorem: str | None = None
    n: int = 2
    jobs: int = 1
    output: str | None = None
    records: bool = False

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(self.inputs))
        if not self.inputs:
            raise ValueError("at least one input file is required")
        if self.theorem is not None and self.theorem not in THEOREMS:
            raise ValueError(f"theorem must be one of {', '.join(THEOREMS)}")
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")


def iter_graph6(paths: Iterable[str]) -> Iterator[tuple[str, int, str]]:
    """Yield ``(path, line, graph6)`` for every non-blank line; each line is
    parsed once here so errors carry their location."""
    for path in paths:
        with open(path, encoding="ascii", errors="replace") as fh:
            for lineno, line in enumerate(fh, 1):
                text = line.strip()
                if not text:
                    continue
                try:
                    parse_graph6(text)
                except Graph6Error as err:
                    raise InputError(path, lineno, err) from None
                yield path, lineno, text


def _map(fn, items: Sequence, jobs: int) -> list:
    if jobs == 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (jobs * 8))
    with get_context("fork").Pool(jobs) as pool:
        return pool.map(fn, items, chunksize=chunk)


def _fraction_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ------------------------------------------------------------ invariant scan


def graph_invariants(g6: str) -> dict:
    g = parse_graph6(g6)
    a = independence_number(g)[0]
    a1 = matching_number(g)
    a2 = induced_matching_number(g)[0]
    beta = vertex_cover_number(g)
    af = fractional_matching_number(g)
    return {
        "graph6": g6,
        "order": g.order,
        "size": g.size,
        "connected": is_connected(g),
        "alpha": a,
        "alpha_prime": a1,
        "alpha_induced": a2,
        "beta": beta,
        "alpha_f": _fraction_text(af),
    }


def check_record(rec: dict) -> list[str]:
    """Names of the inequalities violated by one invariant record."""
    a1 = rec["alpha_prime"]
    af = Fraction(rec["alpha_f"])
    beta = rec["beta"]
    ok = {
        "alpha_induced<=alpha_prime": rec["alpha_induced"] <= a1,
        "alpha_prime<=alpha_f": a1 <= af,
        "alpha_f<=1.5*alpha_prime": af <= Fraction(3, 2) * a1,
        "alpha_prime<=beta": a1 <= beta,
        "beta<=2*alpha_prime": beta <= 2 * a1,
        "beta==order-alpha": beta == rec["order"] - rec["alpha"],
    }
    return [name for name in CHECKS if not ok[name]]


def _invariant_task(g6: str) -> dict | None:
    if not is_connected(parse_graph6(g6)):
        return None
    rec = graph_invariants(g6)
    rec["violations"] = check_record(rec)
    return rec


def scan_invariants(config: ScanConfig) -> dict:
    items = list(iter_graph6(config.inputs))
    results = _map(_invariant_task, [g6 for _, _, g6 in items], config.jobs)
    skipped = 0
    per_check = Counter({name: 0 for name in CHECKS})
    dist: dict[str, Counter] = {k: Counter() for k in ("alpha", "alpha_prime", "alpha_induced", "beta", "alpha_f")}
    bad = []
    records = []
    for (path, lineno, g6), rec in zip(items, results):
        if rec is None:
            skipped += 1
            continue
        for name in rec["violations"]:
            per_check[name] += 1
        if rec["violations"]:
            bad.append({"graph6": g6, "violations": rec["violations"]})
        for key, c in dist.items():
            c[str(rec[key])] += 1
        if config.records:
            records.append(rec)
    report = {
        "version": REPORT_VERSION,
        "report": "invariants",
        "inputs": list(config.inputs),
        "graphs_read": len(items),
        "connected_scanned": len(items) - skipped,
        "skipped_disconnected": skipped,
        "violations": sum(per_check.values()),
        "violations_by_check": dict(per_check),
        "violating_graphs": sorted(bad, key=lambda r: r["graph6"]),
        "distributions": {k: dict(c) for k, c in dist.items()},
    }
    if config.records:
        report["records"] = sorted(records, key=lambda r: (r["order"], r["graph6"]))
    return report


# ------------------------------------------------------------ threshold scan


def structure_present(g, theorem: str, n: int) -> str | None:
    """Label of the first target of ``theorem`` at ``n`` found in ``g``."""
    for spec in target_specs(theorem, n):
        pat = generate(spec)
        if pat.order <= g.order and contains_induced(g, pat) is not None:
            return spec.label()
    return None


def relevant_parameter(g, theorem: str) -> int:
    if theorem == "independence":
        return independence_number(g)[0]
    if theorem == "induced-matching":
        return induced_matching_number(g)[0]
    return matching_number(g)


def _threshold_task(args: tuple[str, str, int]) -> tuple[int, bool] | None:
    g6, theorem, n = args
    g = parse_graph6(g6)
    if not is_connected(g):
        return None
    return relevant_parameter(g, theorem), structure_present(g, theorem, n) is None


@dataclass
class ThresholdReport:
    theorem: str
    n: int
    graphs_scanned: int
    skipped_disconnected: int
    structure_free: int
    empirical_threshold: int
    extremal: list[str]
    histogram: dict[str, int]
    free_histogram: dict[str, int]
    inputs: list[str] = field(default_factory=list)
    records: list[dict] | None = None

    def to_json(self) -> dict:
        out = {
            "version": REPORT_VERSION,
            "report": "threshold",
            "theorem": self.theorem,
            "parameter": THEOREM_PARAMETER[self.theorem],
            "n": self.n,
            "inputs": self.inputs,
            "graphs_scanned": self.graphs_scanned,
            "skipped_disconnected": self.skipped_disconnected,
            "structure_free": self.structure_free,
            "empirical_threshold": self.empirical_threshold,
            "extremal": self.extremal,
            "histogram": self.histogram,
            "structure_free_histogram": self.free_histogram,
        }
        if self.records is not None:
            out["records"] = self.records
        return out


def empirical_threshold(config: ScanConfig) -> ThresholdReport:
    """One more than the largest parameter value of a scanned connected
    graph containing none of the theorem's targets at ``config.n``.

    With no structure-free graph in the stream the threshold is 1.
    """
    if config.theorem is None:
        raise ValueError("a theorem is required for a threshold scan")
    items = list(iter_graph6(config.inputs))
    args = [(g6, config.theorem, config.n) for _, _, g6 in items]
    results = _map(_threshold_task, args, config.jobs)
    skipped = 0
    hist: Counter = Counter()
    free: Counter = Counter()
    free_graphs: dict[str, int] = {}
    records = []
    for (_, _, g6), res in zip(items, results):
        if res is None:
            skipped += 1
            continue
        rho, is_free = res
        hist[rho] += 1
        if is_free:
            free[rho] += 1
            free_graphs[g6] = rho
        if config.records:
            records.append({"graph6": g6, "parameter": rho, "structure_free": is_free})
    top = max(free) if free else 0
    extremal = sorted({g6 for g6, rho in free_graphs.items() if rho == top}) if free else []
    return ThresholdReport(
        theorem=config.theorem,
        n=config.n,
        graphs_scanned=len(items) - skipped,
        skipped_disconnected=skipped,
        structure_free=sum(free.values()),
        empirical_threshold=top + 1,
        extremal=extremal,
        histogram={str(k): v for k, v in sorted(hist.items())},
        free_histogram={str(k): v for k, v in sorted(free.items())},
        inputs=list(config.inputs),
        records=sorted(records, key=lambda r: r["graph6"]) if config.records else None,
    )


# ------------------------------------------------------------ single extraction


def run_extraction(g6: str, theorem: str, n: int, r: int | None = None) -> dict:
    """Run one pipeline on one graph and return a JSON-ready report.

    The witness is verified again here, independently of the pipeline's own
    check; a failure raises :class:`SoundnessError`.
    """
    g = parse_graph6(g6)
    outcome = run_pipeline(g, theorem, n, r)
    report = {"version": REPORT_VERSION, "graph6": g6, "theorem": theorem, "n": n}
    if theorem == "matching":
        report["r"] = n if r is None else r
    report.update(outcome.to_json())
    if outcome.witness is not None:
        if not verify_witness(g, outcome.witness):
            raise SoundnessError(f"witness for {g6} failed verification")
        report["witness"]["parameter"] = outcome.witness.parameter
        report["witness"]["label"] = outcome.witness.spec.label()
        report["verified"] = True
    return report


def dump_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
