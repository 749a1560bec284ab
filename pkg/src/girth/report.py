"""Run reports (JSON) and sweep tables (CSV).

JSON report: one UTF-8 object with keys ``format_version``, ``algorithm``
(``{"name", "params"}``), ``input``, ``girth_estimate`` (int or
``"acyclic"``), ``cycle``, ``oracle_girth``, ``guarantee_bound``,
``visited_total``, ``elapsed_ms``, ``seed``.

Sweep CSV: header ``n,algo,k,girth_estimate,oracle_girth,guarantee_ok,
visited_total,elapsed_ms,seed``; one row per (n, algorithm, seed) and then
one summary row per algorithm whose ``n`` field is ``slope`` and whose
``visited_total`` field holds the fitted log-log slope of the median
``visited_total`` against n.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from typing import Any

import numpy as np

FORMAT_VERSION = 1
ACYCLIC = "acyclic"


@dataclass(frozen=True)
class RunReport:
    algorithm: dict[str, Any]
    input: dict[str, Any]
    girth_estimate: int | str
    cycle: list[int] = field(default_factory=list)
    oracle_girth: int | None = None
    guarantee_bound: int | None = None
    visited_total: int = 0
    elapsed_ms: float = 0.0
    seed: int | None = None
    format_version: int = FORMAT_VERSION

    def violations(self) -> list[str]:
        """Sandwich checks: oracle <= estimate <= guarantee bound."""
        out = []
        est = self.girth_estimate
        if self.oracle_girth is not None:
            if est == ACYCLIC:
                if self.guarantee_bound is not None:
                    out.append(f"no cycle found but girth is {self.oracle_girth}")
            elif est < self.oracle_girth:
                out.append(f"estimate {est} below girth {self.oracle_girth}")
        if self.guarantee_bound is not None and est != ACYCLIC and est > self.guarantee_bound:
            out.append(f"estimate {est} above guarantee {self.guarantee_bound}")
        return out

    def deterministic_view(self) -> dict[str, Any]:
        """Every field except wall time."""
        d = asdict(self)
        d.pop("elapsed_ms")
        return d

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> RunReport:
        d = json.loads(text)
        version = d.get("format_version")
        if version != FORMAT_VERSION:
            raise ValueError(f"unsupported report format_version {version!r}")
        return cls(**d)


SWEEP_FIELDS = ["n", "algo", "k", "girth_estimate", "oracle_girth", "guarantee_ok",
                "visited_total", "elapsed_ms", "seed"]


@dataclass(frozen=True)
class SweepRow:
    n: int
    algo: str
    k: int | None
    girth_estimate: int | str
    oracle_girth: int | None
    guarantee_ok: bool | None
    visited_total: int
    elapsed_ms: float
    seed: int


def fit_slope(ns, values) -> float:
    """Least-squares slope of log(value) against log(n)."""
    x = np.log(np.asarray(ns, dtype=float))
    y = np.log(np.maximum(np.asarray(values, dtype=float), 1.0))
    return float(np.polyfit(x, y, 1)[0])


def median_slope(rows: list[SweepRow], algo: str) -> float:
    by_n: dict[int, list[int]] = {}
    for r in rows:
        if r.algo == algo:
            by_n.setdefault(r.n, []).append(r.visited_total)
    ns = sorted(by_n)
    return fit_slope(ns, [float(np.median(by_n[n])) for n in ns])


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return repr(v) if isinstance(v, float) else str(v)


def write_sweep_csv(rows: list[SweepRow], slopes: dict[str, float], fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(SWEEP_FIELDS)
    for r in rows:
        w.writerow([_cell(getattr(r, f)) for f in SWEEP_FIELDS])
    for algo, slope in slopes.items():
        w.writerow(["slope", algo, "", "", "", "", repr(slope), "", ""])


def _opt_int(s: str) -> int | None:
    return int(s) if s != "" else None


def read_sweep_csv(fh) -> tuple[list[SweepRow], dict[str, float]]:
    if isinstance(fh, str):
        fh = io.StringIO(fh)
    rows, slopes = [], {}
    for rec in csv.DictReader(fh):
        if rec["n"] == "slope":
            slopes[rec["algo"]] = float(rec["visited_total"])
            continue
        est = rec["girth_estimate"]
        ok = rec["guarantee_ok"]
        rows.append(SweepRow(
            n=int(rec["n"]), algo=rec["algo"], k=_opt_int(rec["k"]),
            girth_estimate=est if est == ACYCLIC else int(est),
            oracle_girth=_opt_int(rec["oracle_girth"]),
            guarantee_ok=None if ok == "" else ok == "true",
            visited_total=int(rec["visited_total"]),
            elapsed_ms=float(rec["elapsed_ms"]), seed=int(rec["seed"]),
        ))
    return rows, slopes
