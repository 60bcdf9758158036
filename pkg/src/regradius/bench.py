"""Experiment harness: method comparison rows, CSV/JSON persistence, summaries.

One row per (family, size, instance).  The full search runs when the size
is inside its enumeration cap, the orthant search always; delta_r is their
relative difference (r_os - r_fs) / r_fs.  Wall times are informative only;
operation counts (lp_calls, visited orthants, pair counts) are the
complexity proxy.  Per-row failures are recorded in the row's error field
and never abort the run.  Output files are written atomically and rows are
emitted in canonical sorted order.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import time
from dataclasses import asdict, dataclass, field, fields
from typing import Optional

from .core import DEFAULT_TOL, RadiusError, Tolerances
from .fullsearch import radius_full_search
from .generators import FAMILIES, GeneratorSpec, generate, row_seed
from .orthant import radius_orthant_search

METHOD_FULL = "full-search"
METHOD_ORTHANT = "orthant-search"


@dataclass(frozen=True)
class ExperimentConfig:
    families: tuple = FAMILIES
    sizes: tuple = tuple(range(3, 14))
    instances_per_size: int = 10
    methods: tuple = (METHOD_FULL, METHOD_ORTHANT)
    seed: int = 0
    output: Optional[str] = None  # path prefix for .csv / .json
    full_search_cap: int = 10
    negate_fraction: float = 0.10
    tolerances: Tolerances = field(default_factory=Tolerances)

    def __post_init__(self) -> None:
        for fam in self.families:
            if fam not in FAMILIES:
                raise ValueError(f"unknown family {fam!r}")
        for m in self.methods:
            if m not in (METHOD_FULL, METHOD_ORTHANT):
                raise ValueError(f"unknown method {m!r}")
        if self.instances_per_size < 1:
            raise ValueError("instances_per_size must be positive")


@dataclass(frozen=True)
class ExperimentRow:
    family: str
    n: int
    instance: int
    seed: int
    r_fs: Optional[float] = None
    r_os: Optional[float] = None
    delta_r: Optional[float] = None
    visited_orthants: Optional[int] = None
    lp_calls: int = 0
    wall_time_fs: Optional[float] = None
    wall_time_os: Optional[float] = None
    error: str = ""


def _run_row(cfg: ExperimentConfig, family: str, n: int, instance: int) -> ExperimentRow:
    seed = row_seed(cfg.seed, family, n, instance)
    base = dict(family=family, n=n, instance=instance, seed=seed)
    try:
        A, Delta = generate(
            GeneratorSpec(family, n, seed, negate_fraction=cfg.negate_fraction)
        )
    except RadiusError as exc:
        return ExperimentRow(error=f"generate: {exc}", **base)

    r_fs = wall_fs = None
    if METHOD_FULL in cfg.methods and n <= cfg.full_search_cap:
        t0 = time.perf_counter()
        try:
            r_fs = radius_full_search(A, Delta, cfg.tolerances, cap=cfg.full_search_cap).value
            wall_fs = time.perf_counter() - t0
        except RadiusError as exc:
            return ExperimentRow(error=f"full-search: {exc}", **base)

    r_os = wall_os = visited = lp_calls = None
    if METHOD_ORTHANT in cfg.methods:
        t0 = time.perf_counter()
        try:
            trace = radius_orthant_search(A, Delta, cfg.tolerances)
            wall_os = time.perf_counter() - t0
            r_os = trace.result.value
            visited = len(trace.visited)
            lp_calls = trace.lp_calls
        except RadiusError as exc:
            return ExperimentRow(error=f"orthant-search: {exc}", **base)

    delta_r = None
    if r_fs is not None and r_os is not None and math.isfinite(r_fs) and r_fs > 0.0:
        delta_r = (r_os - r_fs) / r_fs
    return ExperimentRow(
        r_fs=r_fs,
        r_os=r_os,
        delta_r=delta_r,
        visited_orthants=visited,
        lp_calls=lp_calls or 0,
        wall_time_fs=wall_fs,
        wall_time_os=wall_os,
        **base,
    )


def run_experiment(cfg: ExperimentConfig):
    """Execute the configured grid and return rows in canonical order."""
    rows = []
    for family in sorted(cfg.families):
        for n in sorted(cfg.sizes):
            for instance in range(cfg.instances_per_size):
                rows.append(_run_row(cfg, family, n, instance))
    if cfg.output:
        write_rows_csv(cfg.output + ".csv", rows)
        write_rows_json(cfg.output + ".json", rows)
    return rows


def summarize(rows):
    """Per (family, n) means of |delta_r|, visited orthants and lp calls."""
    groups = {}
    for row in rows:
        groups.setdefault((row.family, row.n), []).append(row)
    out = {}
    for key, grp in sorted(groups.items()):
        dr = [abs(r.delta_r) for r in grp if r.delta_r is not None]
        vis = [r.visited_orthants for r in grp if r.visited_orthants is not None]
        out[key] = {
            "rows": len(grp),
            "errors": sum(1 for r in grp if r.error),
            "mean_abs_delta_r": sum(dr) / len(dr) if dr else None,
            "mean_visited_orthants": sum(vis) / len(vis) if vis else None,
            "mean_lp_calls": sum(r.lp_calls for r in grp) / len(grp),
        }
    return out


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        if math.isinf(value):
            return "inf"
        return repr(value)
    return str(value)


def _atomic_write(path: str, text: str) -> None:
    tmp = f"{path}.tmp.{os.getpid()}"
    with open(tmp, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    os.replace(tmp, path)


def write_rows_csv(path: str, rows) -> None:
    names = [f.name for f in fields(ExperimentRow)]
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(names)
    for row in rows:
        writer.writerow([_cell(getattr(row, name)) for name in names])
    _atomic_write(path, buf.getvalue())


def read_rows_csv(path: str):
    """Round-trip parser for the CSV schema."""
    spec = {f.name: f for f in fields(ExperimentRow)}
    rows = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if set(reader.fieldnames or ()) != set(spec):
            raise ValueError("CSV header does not match the ExperimentRow schema")
        for rec in reader:
            kwargs = {}
            for name, raw in rec.items():
                if raw == "":
                    kwargs[name] = None if name != "error" else ""
                elif name in ("family", "error"):
                    kwargs[name] = raw
                elif name in ("n", "instance", "seed", "visited_orthants", "lp_calls"):
                    kwargs[name] = int(raw)
                else:
                    kwargs[name] = math.inf if raw == "inf" else float(raw)
            rows.append(ExperimentRow(**kwargs))
    return rows


def write_rows_json(path: str, rows) -> None:
    payload = {"schema": 1, "rows": [_jsonable_row(r) for r in rows]}
    _atomic_write(path, json.dumps(payload, indent=1))


def _jsonable_row(row: ExperimentRow):
    rec = asdict(row)
    for key, value in rec.items():
        if isinstance(value, float) and math.isinf(value):
            rec[key] = "inf"
    return rec


def parse_config(text: str) -> ExperimentConfig:
    """Parse the key = value config format (comments with '#')."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected 'key = value'")
        key, _, val = line.partition("=")
        values[key.strip()] = val.strip()

    kwargs = {}
    if "families" in values:
        kwargs["families"] = tuple(v.strip() for v in values.pop("families").split(",") if v.strip())
    if "sizes" in values:
        kwargs["sizes"] = _parse_sizes(values.pop("sizes"))
    if "instances" in values:
        kwargs["instances_per_size"] = int(values.pop("instances"))
    if "methods" in values:
        kwargs["methods"] = tuple(v.strip() for v in values.pop("methods").split(",") if v.strip())
    if "seed" in values:
        kwargs["seed"] = int(values.pop("seed"))
    if "output" in values:
        kwargs["output"] = values.pop("output")
    if "full_search_cap" in values:
        kwargs["full_search_cap"] = int(values.pop("full_search_cap"))
    if "negate_fraction" in values:
        kwargs["negate_fraction"] = float(values.pop("negate_fraction"))
    if values:
        raise ValueError(f"unknown config keys: {sorted(values)}")
    return ExperimentConfig(**kwargs)


def _parse_sizes(text: str):
    sizes = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part:
            lo, _, hi = part.partition("-")
            sizes.extend(range(int(lo), int(hi) + 1))
        else:
            sizes.append(int(part))
    return tuple(sizes)


def load_config(path) -> ExperimentConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())
