"""Suite runner: configuration, law selection, JSON reports.

The runner executes registered laws over their instances and produces a
report that is deterministic for a fixed (config, seed) apart from the
timing fields.  Configuration and reports are JSON with stable field
names; rationals serialize as "p/q" strings.

Report schema (``symalg-report/1``), a compatibility surface:

- ``schema``: the literal string above.
- ``config``: the effective configuration (bound, laws, mutate, seed,
  budget, parallelism).
- ``results``: one object per (law, instance) check with fields ``law``,
  ``anchor``, ``instance``, ``status`` ("equal" or "counterexample"),
  ``tested``, ``bound``, ``witness`` (string or null) and ``time_ms``.
- ``summary``: ``laws_run``, ``checks``, ``failures``, ``aborted``.
"""

from __future__ import annotations

import fnmatch
import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .spaces import base, GenIx
from .elements import Element, element
from .derivations import (
    SAlgebra, table_algebra, a_module, derivation, zero_derivation,
    builtin_algebras, InvalidStructureError,
)
from .morphisms import linear_map_from_matrix
from .laws import registry, LawContext, MUTATIONS

CONFIG_SCHEMA = "symalg-config/1"
REPORT_SCHEMA = "symalg-report/1"
PARALLELISM_ENV = "SYMALG_PARALLELISM"


class ConfigError(ValueError):
    pass


def _rational(x) -> Fraction:
    if isinstance(x, str):
        try:
            return Fraction(x)
        except ValueError as e:
            raise ConfigError(f"bad rational {x!r}") from e
    if isinstance(x, int):
        return Fraction(x)
    raise ConfigError(f"rationals must be integers or 'p/q' strings, got {x!r}")


def rational_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


@dataclass
class SuiteConfig:
    bound: int = 3
    laws: str = "*"
    mutate: str | None = None
    seed: int = 0
    budget: float | None = None
    parallelism: int = 1
    extra_algebras: tuple = ()
    extra_derivations: tuple = ()

    def as_json(self) -> dict:
        return {
            "schema": CONFIG_SCHEMA,
            "bound": self.bound,
            "laws": self.laws,
            "mutate": self.mutate,
            "seed": self.seed,
            "budget": self.budget,
            "parallelism": self.parallelism,
        }


def default_parallelism() -> int:
    raw = os.environ.get(PARALLELISM_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _vector_element(space, coeffs) -> Element:
    if len(coeffs) != len(list(coeffs)):
        raise ConfigError("bad vector")
    return element(space, {GenIx(i): _rational(c)
                           for i, c in enumerate(coeffs) if _rational(c) != 0})


def _load_algebra(entry: dict) -> SAlgebra:
    try:
        name = entry["name"]
        r = int(entry["rank"])
        table = entry["mult_table"]
        unit = entry["unit"]
    except (KeyError, TypeError, ValueError) as e:
        raise ConfigError(f"algebra entry malformed: {entry!r}") from e
    space = base(name, r)
    if len(table) != r or any(len(row) != r for row in table):
        raise ConfigError(f"algebra {name!r}: mult_table must be {r}x{r}")
    elems = tuple(tuple(_vector_element(space, cell) for cell in row)
                  for row in table)
    try:
        return table_algebra(name, space, elems, _vector_element(space, unit))
    except InvalidStructureError as e:
        raise ConfigError(f"algebra {name!r} rejected: {e}") from e


def _load_derivation(entry, algebras: dict):
    """A derivation entry: {"name", "algebra", "matrix"} acting on the
    named table algebra as a module over itself."""
    try:
        name = entry["name"]
        alg = algebras[entry["algebra"]]
        matrix = entry["matrix"]
    except (KeyError, TypeError) as e:
        raise ConfigError(f"derivation entry malformed: {entry!r}") from e
    a = alg.carrier
    d = linear_map_from_matrix(a, a, [[_rational(x) for x in row] for row in matrix])
    try:
        module = a_module(alg, a, alg.mult())
        return name, derivation(alg, module, d)
    except InvalidStructureError as e:
        raise ConfigError(f"derivation {name!r} rejected: {e}") from e


def load_config(path: str | None = None, overrides: dict | None = None) -> SuiteConfig:
    raw = {}
    if path is not None:
        try:
            with open(path) as fh:
                raw = json.load(fh)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"cannot read config {path}: {e}") from e
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")
    schema = raw.get("schema", CONFIG_SCHEMA)
    if schema != CONFIG_SCHEMA:
        raise ConfigError(f"unsupported config schema {schema!r}")
    known = {"schema", "bound", "laws", "mutate", "seed", "budget",
             "parallelism", "algebras", "derivations"}
    unknown = set(raw) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")

    cfg = SuiteConfig(parallelism=default_parallelism())
    merged = dict(raw)
    merged.update({k: v for k, v in (overrides or {}).items() if v is not None})

    if "bound" in merged:
        cfg.bound = int(merged["bound"])
        if cfg.bound < 1:
            raise ConfigError("bound must be >= 1")
    if "laws" in merged and merged["laws"] is not None:
        cfg.laws = str(merged["laws"])
    if "mutate" in merged and merged["mutate"] is not None:
        if merged["mutate"] not in MUTATIONS:
            raise ConfigError(
                f"unknown mutation {merged['mutate']!r}; known: {list(MUTATIONS)}")
        cfg.mutate = merged["mutate"]
    if "seed" in merged:
        cfg.seed = int(merged["seed"])
    if "budget" in merged and merged["budget"] is not None:
        cfg.budget = float(merged["budget"])
        if cfg.budget <= 0:
            raise ConfigError("budget must be positive")
    if "parallelism" in merged:
        cfg.parallelism = max(1, int(merged["parallelism"]))

    algebras = {a.name: a for a in builtin_algebras()}
    extra_algs = []
    for entry in raw.get("algebras", []):
        alg = _load_algebra(entry)
        if alg.name in algebras:
            raise ConfigError(f"algebra name {alg.name!r} already taken")
        algebras[alg.name] = alg
        extra_algs.append(alg)
    extra_ders = []
    for entry in raw.get("derivations", []):
        if entry == "zero":
            continue  # the zero derivations of the built-ins always run
        extra_ders.append(_load_derivation(entry, algebras))
    cfg.extra_algebras = tuple(extra_algs)
    cfg.extra_derivations = tuple(extra_ders)
    return cfg


def select_laws(pattern: str):
    reg = registry()
    names = [n for n in reg if fnmatch.fnmatchcase(n, pattern)]
    return [(n, reg[n]) for n in names]


def run_suite(cfg: SuiteConfig) -> dict:
    ctx = LawContext(mutation=cfg.mutate, seed=cfg.seed,
                     extra_algebras=cfg.extra_algebras,
                     extra_derivations=cfg.extra_derivations)
    selected = select_laws(cfg.laws)

    def run_one(item):
        name, law = item
        t0 = time.perf_counter()
        rows = []
        for instance, v in law.run(cfg.bound, ctx):
            rows.append({
                "law": name,
                "anchor": law.anchor,
                "instance": instance,
                "status": v.status,
                "tested": v.tested_count,
                "bound": v.weight_bound,
                "witness": None if v.witness is None else repr(v.witness),
            })
        elapsed = (time.perf_counter() - t0) * 1000.0
        for row in rows:
            row["time_ms"] = round(elapsed / max(1, len(rows)), 3)
        return name, rows, elapsed

    results = []
    aborted = False
    if cfg.parallelism > 1:
        with ThreadPoolExecutor(max_workers=cfg.parallelism) as pool:
            outcomes = list(pool.map(run_one, selected))
        for name, rows, elapsed in outcomes:
            results.extend(rows)
            if cfg.budget is not None and elapsed > cfg.budget * 1000.0:
                aborted = True
    else:
        for item in selected:
            name, rows, elapsed = run_one(item)
            results.extend(rows)
            if cfg.budget is not None and elapsed > cfg.budget * 1000.0:
                aborted = True
                break

    failures = sum(1 for r in results if r["status"] != "equal")
    return {
        "schema": REPORT_SCHEMA,
        "config": cfg.as_json(),
        "results": results,
        "summary": {
            "laws_run": len({r["law"] for r in results}),
            "checks": len(results),
            "failures": failures,
            "aborted": aborted,
        },
    }


def strip_timing(report: dict) -> dict:
    """The report with timing fields removed, for determinism comparisons."""
    out = json.loads(json.dumps(report))
    for row in out["results"]:
        row.pop("time_ms", None)
    return out


def render_summary(report: dict) -> str:
    lines = []
    for row in report["results"]:
        mark = "PASS" if row["status"] == "equal" else "FAIL"
        line = (f"{mark} {row['law']}[{row['instance']}] "
                f"tested={row['tested']} bound={row['bound']}")
        if row["witness"]:
            line += f" witness={row['witness']}"
        lines.append(line)
    s = report["summary"]
    lines.append(f"laws={s['laws_run']} checks={s['checks']} "
                 f"failures={s['failures']}"
                 + (" ABORTED (budget exceeded)" if s["aborted"] else ""))
    return "\n".join(lines)


def write_report(report: dict, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(report, fh, indent=2, sort_keys=True)
        fh.write("\n")
