"""Command-line driver.

Every run prints one document with a ``meta`` header (version, timing,
worker count) and a ``result`` body.  Only the body is stable: it is sorted,
carries no timestamps, and is byte-identical across runs with the same
configuration.

Exit status: 0 when every check passes, 1 when an identity fails, 2 on a
usage error (missing or invalid parameter, non-thin partition for
``verify tectonic``).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from typing import Any, Callable

from . import __version__
from .fock import matrix_elements, verify_fock_identity
from .hook_strip import verify_hook_strip
from .hooks import external_hooks_up_to, internal_hooks, max_hook_length, verify_bessenrodt
from .identities import (
    hook_product,
    verify_gansner,
    verify_hook_strip_series,
    verify_refined_rpp,
    verify_skew,
    verify_ultimate,
    verify_wallcrossing,
)
from .partition import EXTERNAL, INTERNAL, Partition, PartitionError, is_thin, partitions_of, partitions_up_to
from .plane_partitions import rpp_enumerate, spp_enumerate
from .report import Report
from .series import SeriesError, TruncSeries
from .tectonic import min_box, verify_thin_bijection

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

VERIFY_KINDS = (
    "bessenrodt",
    "tectonic",
    "hookstrip",
    "gansner",
    "skew",
    "wallcross",
    "refined-rpp",
    "hookstrip-series",
    "ultimate",
    "fock",
)
ENUMERATE_KINDS = ("partitions", "rpp", "spp", "hooks", "fock")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    kind: str | None = None
    lam: Partition | None = None
    d: int | None = None
    ell: int | None = None
    cap: int | None = None
    bound: int | None = None
    box: int | None = None
    max_size: int | None = None
    side: str | None = None
    format: str = "json"
    output: str | None = None
    jobs: int = 1

    def need(self, *names: str) -> None:
        for name in names:
            if getattr(self, name) is None:
                flag = "--lambda" if name == "lam" else "--" + name.replace("_", "-")
                raise UsageError(f"{self.command} {self.kind or ''}".strip() + f" requires {flag}")


# --- single checks ---------------------------------------------------------------


def _tectonic(lam: Partition, box: int | None) -> Report:
    # non-thin input raises before any work, naming the failed inequality
    return verify_thin_bijection(lam, box if box is not None else min_box(lam)).to_report()


CHECKS: dict[str, tuple[tuple[str, ...], Callable[..., Report]]] = {
    "bessenrodt": (("lam",), lambda c: verify_bessenrodt(c.lam, c.bound if c.bound is not None else max(1, max_hook_length(c.lam)))),
    "tectonic": (("lam",), lambda c: _tectonic(c.lam, c.box)),
    "hookstrip": (("d", "ell"), lambda c: verify_hook_strip(c.d, c.ell)),
    "gansner": (("lam", "cap"), lambda c: verify_gansner(c.lam, c.cap)),
    "skew": (("lam", "cap"), lambda c: verify_skew(c.lam, c.cap)),
    "wallcross": (("lam", "cap"), lambda c: verify_wallcrossing(c.lam, c.cap)),
    "refined-rpp": (("lam", "cap"), lambda c: verify_refined_rpp(c.lam, c.cap)),
    "hookstrip-series": (("d", "ell", "cap"), lambda c: verify_hook_strip_series(c.d, c.ell, c.cap)),
    "ultimate": (("d", "cap"), lambda c: verify_ultimate(c.d, c.cap)),
    "fock": (("d", "ell"), lambda c: verify_fock_identity(c.d, c.ell)),
}


def run_check(cfg: RunConfig) -> Report:
    required, fn = CHECKS[cfg.kind]
    cfg.need(*required)
    return fn(cfg)


# --- corpus ----------------------------------------------------------------------

Job = tuple[str, tuple[tuple[str, Any], ...]]


def corpus_jobs(max_size: int, cap: int) -> list[Job]:
    """Every (check, parameters) pair of a corpus run, in canonical order."""
    jobs: list[Job] = []
    lams = list(partitions_up_to(max_size))
    for lam in lams:
        p = lam.parts
        jobs.append(("bessenrodt", (("lam", p), ("bound", max(max_size, 1)))))
        if lam and is_thin(lam):
            jobs.append(("tectonic", (("lam", p), ("box", min_box(lam)))))
        for kind in ("gansner", "skew", "wallcross", "refined-rpp"):
            jobs.append((kind, (("lam", p), ("cap", cap))))
    for d in range(1, max_size + 1):
        for ell in range(1, d + 1):
            jobs.append(("hookstrip", (("d", d), ("ell", ell))))
            jobs.append(("hookstrip-series", (("d", d), ("ell", ell), ("cap", cap))))
            jobs.append(("fock", (("d", d), ("ell", ell))))
    for d in range(max_size + 1):
        jobs.append(("ultimate", (("d", d), ("cap", cap))))
    return jobs


def _run_job(job: Job) -> tuple[str, dict, bool]:
    kind, params = job
    cfg = RunConfig(command="verify", kind=kind)
    for k, v in params:
        setattr(cfg, k, Partition(v) if k == "lam" else v)
    rep = run_check(cfg)
    return kind, rep.params, rep.passed


def run_corpus(max_size: int, cap: int, jobs: int) -> dict:
    work = corpus_jobs(max_size, cap)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_job, work, chunksize=8))
    else:
        results = [_run_job(j) for j in work]
    results.sort(key=lambda r: (r[0], json.dumps(r[1], sort_keys=True)))
    counts: dict[str, dict[str, int]] = {}
    failures = []
    for kind, params, ok in results:
        c = counts.setdefault(kind, {"pass": 0, "fail": 0})
        c["pass" if ok else "fail"] += 1
        if not ok:
            failures.append({"check": kind, **params})
    return {
        "max_size": max_size,
        "cap": cap,
        "checks": len(results),
        "counts": dict(sorted(counts.items())),
        "failures": failures,
        "pass": not failures,
    }


# --- enumeration -----------------------------------------------------------------


def run_enumerate(cfg: RunConfig) -> list[dict]:
    kind = cfg.kind
    if kind == "partitions":
        cfg.need("d")
        return [{"lambda": lam.to_json(), "size": lam.size} for lam in partitions_of(cfg.d)]
    if kind in ("rpp", "spp"):
        cfg.need("lam", "cap")
        gen = rpp_enumerate if kind == "rpp" else spp_enumerate
        return [f.to_json() for f in gen(cfg.lam, cfg.cap)]
    if kind == "hooks":
        cfg.need("lam")
        bound = cfg.bound if cfg.bound is not None else max(1, max_hook_length(cfg.lam))
        rows = [("internal", c, hs) for c, hs in internal_hooks(cfg.lam) if hs.hook_len <= bound]
        rows += [("external", c, hs) for c, hs in external_hooks_up_to(cfg.lam, bound)]
        return [
            {"side": side, "cell": list(c), "arm": hs.arm, "leg": hs.leg, "hook_len": hs.hook_len,
             "content_lo": hs.content_lo, "content_hi": hs.content_hi}
            for side, c, hs in rows
        ]
    if kind == "fock":
        cfg.need("d", "ell")
        if not cfg.d >= cfg.ell >= 1:
            raise UsageError("enumerate fock needs d >= ell >= 1")
        rows = [("down", a, b, m) for a, b, m in matrix_elements(cfg.ell, partitions_of(cfg.d))]
        rows += [("up", a, b, m) for a, b, m in matrix_elements(-cfg.ell, partitions_of(cfg.d - cfg.ell))]
        return [{"direction": r, "source": a.to_json(), "target": b.to_json(), "monomial": str(m)} for r, a, b, m in rows]
    raise UsageError(f"unknown enumeration {kind}")


def series_emit(cfg: RunConfig) -> TruncSeries:
    cfg.need("lam", "cap")
    side = cfg.side or INTERNAL
    if side not in (INTERNAL, EXTERNAL):
        raise UsageError("--side must be internal or external")
    return hook_product(cfg.lam, cfg.cap, side)


# --- argument handling -----------------------------------------------------------


def _positive(name: str, allow_zero: bool = False):
    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {text!r}") from None
        if v < 0 or (v == 0 and not allow_zero):
            raise argparse.ArgumentTypeError(f"{name} must be {'nonnegative' if allow_zero else 'positive'}")
        return v

    return parse


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except PartitionError as exc:
        raise argparse.ArgumentTypeError(f"--lambda: {exc}") from None


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--lambda", dest="lam", type=_partition, help="partition, e.g. 8,4,3,2,2 (empty string for the empty partition)")
    p.add_argument("--d", type=_positive("--d", allow_zero=True))
    p.add_argument("--ell", type=_positive("--ell"))
    p.add_argument("--cap", type=_positive("--cap", allow_zero=True))
    p.add_argument("--bound", type=_positive("--bound"))
    p.add_argument("--box", type=_positive("--box"))
    p.add_argument("--side", choices=(INTERNAL, EXTERNAL))
    p.add_argument("--format", choices=("json", "tsv"))
    p.add_argument("--output")
    p.add_argument("--config", help="JSON file with the same fields; flags override it")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hookforge", description="Check hook and plane-partition identities.")
    parser.add_argument("--version", action="version", version=f"hookforge {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run one identity check")
    verify.add_argument("kind", choices=VERIFY_KINDS)
    _common(verify)

    enum = sub.add_parser("enumerate", help="list combinatorial objects")
    enum.add_argument("kind", choices=ENUMERATE_KINDS)
    _common(enum)

    series = sub.add_parser("series", help="series utilities")
    series.add_argument("kind", choices=("emit",))
    _common(series)

    corpus = sub.add_parser("corpus", help="run every check over all small inputs")
    _common(corpus)
    corpus.add_argument("--max-size", type=_positive("--max-size"))
    corpus.add_argument("--jobs", type=_positive("--jobs"))
    return parser


_CONFIG_FIELDS = {f.name for f in fields(RunConfig)} - {"command", "kind"}


def _load_config(path: str) -> dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"--config: cannot read {path}: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError("--config: expected a JSON object")
    if "lambda" in data:
        data["lam"] = data.pop("lambda")
    if "max-size" in data:
        data["max_size"] = data.pop("max-size")
    unknown = set(data) - _CONFIG_FIELDS
    if unknown:
        raise UsageError(f"--config: unknown field(s) {', '.join(sorted(unknown))}")
    if "lam" in data:
        lam = data["lam"]
        data["lam"] = Partition.parse(lam) if isinstance(lam, str) else Partition(tuple(lam))
    return data


def _default_jobs() -> int:
    env = os.environ.get("HOOKFORGE_JOBS")
    if env is None:
        return 1
    try:
        v = int(env)
    except ValueError:
        raise UsageError(f"HOOKFORGE_JOBS must be a positive integer, got {env!r}") from None
    if v < 1:
        raise UsageError("HOOKFORGE_JOBS must be a positive integer")
    return v


def make_config(ns: argparse.Namespace) -> RunConfig:
    values: dict[str, Any] = {}
    if ns.config:
        values.update(_load_config(ns.config))
    for name in _CONFIG_FIELDS:
        v = getattr(ns, name, None)
        if v is not None:
            values[name] = v
    values.setdefault("format", "json")
    values.setdefault("jobs", _default_jobs())
    for name in ("d", "ell", "cap", "bound", "box", "max_size", "jobs"):
        v = values.get(name)
        if v is not None and (not isinstance(v, int) or isinstance(v, bool) or v < 0):
            raise UsageError(f"--{name.replace('_', '-')} must be a nonnegative integer")
    if values["format"] not in ("json", "tsv"):
        raise UsageError("--format must be json or tsv")
    return RunConfig(command=ns.command, kind=getattr(ns, "kind", None), **values)


# --- output ----------------------------------------------------------------------


def _tsv_value(v: Any) -> str:
    return v if isinstance(v, str) else json.dumps(v, sort_keys=True, separators=(",", ":"))


def render(cfg: RunConfig, result: Any, meta: dict) -> str:
    if cfg.format == "json":
        return json.dumps({"meta": meta, "result": result}, indent=2, sort_keys=True) + "\n"
    head = "".join(f"# {k}\t{_tsv_value(v)}\n" for k, v in sorted(meta.items()))
    if isinstance(result, str):
        return head + result
    if isinstance(result, list):
        if not result:
            return head
        cols = list(result[0])
        body = "\t".join(cols) + "\n"
        body += "".join("\t".join(_tsv_value(row[c]) for c in cols) + "\n" for row in result)
        return head + body
    return head + "".join(f"{k}\t{_tsv_value(v)}\n" for k, v in sorted(result.items()))


def result_body(text: str, fmt: str) -> str:
    """The contract-stable part of a rendered document."""
    if fmt == "json":
        return json.dumps(json.loads(text)["result"], indent=2, sort_keys=True)
    return "".join(line for line in text.splitlines(keepends=True) if not line.startswith("# "))


def execute(cfg: RunConfig) -> tuple[Any, bool]:
    if cfg.command == "verify":
        rep = run_check(cfg)
        return rep.to_json(), rep.passed
    if cfg.command == "enumerate":
        return run_enumerate(cfg), True
    if cfg.command == "series":
        s = series_emit(cfg)
        if cfg.format == "tsv":
            return s.to_tsv(), True
        return {"cap": s.cap, "terms": [[str(m), v] for m, v in s.sorted_terms()]}, True
    if cfg.command == "corpus":
        cfg.need("max_size")
        summary = run_corpus(cfg.max_size, cfg.cap if cfg.cap is not None else cfg.max_size, cfg.jobs)
        return summary, summary["pass"]
    raise UsageError(f"unknown command {cfg.command}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    start = time.perf_counter()
    try:
        cfg = make_config(ns)
        result, ok = execute(cfg)
    except (UsageError, PartitionError, SeriesError) as exc:
        print(f"hookforge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    meta = {
        "version": __version__,
        "command": " ".join(x for x in (cfg.command, cfg.kind) if x),
        "elapsed_seconds": round(time.perf_counter() - start, 3),
        "jobs": cfg.jobs,
    }
    text = render(cfg, result, meta)
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_FAIL
