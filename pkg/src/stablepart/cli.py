"""Command-line interface.

Exit codes: 0 success, 1 invalid input (or an unstable partition for
``verify``), 2 refusal because a size cap was exceeded.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import CapExceeded

EXIT_OK, EXIT_INVALID, EXIT_CAP = 0, 1, 2


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_instance(path: str):
    from .instance import PreferenceInstance

    return PreferenceInstance.loads(_read(path))


def _require_even(n: int, allow_odd: bool) -> None:
    if n % 2 and not allow_odd:
        raise UsageError(f"n={n} is odd; experiments use even n (pass --allow-odd to override)")


def _workers(w: int | None) -> int:
    return w if w else (os.cpu_count() or 1)


# -- experiment config ------------------------------------------------------


@dataclass
class ExperimentConfig:
    n: list = field(default_factory=lambda: [10])
    trials: int = 100
    seed: int = 0
    stats: list | None = None
    enum_cap: int = 10
    workers: int | None = None
    csv: str | None = None
    summary: str | None = None
    allow_odd: bool = False

    @classmethod
    def from_dict(cls, data: dict) -> ExperimentConfig:
        names = {f.name for f in dataclasses.fields(cls)}
        unknown = set(data) - names
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
        cfg = cls(**data)
        if isinstance(cfg.n, int):
            cfg.n = [cfg.n]
        return cfg

    @classmethod
    def load(cls, path: str) -> ExperimentConfig:
        try:
            data = json.loads(_read(path))
        except json.JSONDecodeError as exc:
            raise UsageError(f"config {path} is not valid JSON: {exc}") from None
        if not isinstance(data, dict):
            raise UsageError("config must be a JSON object")
        return cls.from_dict(data)


# -- subcommands ------------------------------------------------------------


def cmd_gen(a) -> int:
    from .instance import generate_uniform

    _require_even(a.n, a.allow_odd)
    stream = () if a.trial is None else (a.trial,)
    inst = generate_uniform(a.n, a.seed, *stream)
    text = inst.to_text() if a.format == "text" else inst.to_json() + "\n"
    _emit(text, a.out)
    return EXIT_OK


def cmd_solve(a) -> int:
    from .mc import dumps_json
    from .solver import complete_matching_heuristic, max_stable_matching, tan_solve

    inst = _load_instance(a.inp)
    res = tan_solve(inst)
    blocking = complete_matching_heuristic(inst, res)[1] if inst.n % 2 == 0 else None
    out = {
        "partition": json.loads(res.partition.to_json()),
        "cycles": str(res.partition),
        "odd_parties": [[v + 1 for v in c] for c in res.partition.odd_parties],
        "solvable": res.solvable,
        "max_matching_size": max_stable_matching(inst, res).size,
        "heuristic_blocking_count": blocking,
    }
    _emit(dumps_json(out), a.out)
    return EXIT_OK


def cmd_verify(a) -> int:
    from .partition import CyclicPartition, is_doubly_stable, is_exchange_stable, is_stable

    inst = _load_instance(a.inp)
    try:
        part = CyclicPartition.from_json(_read(a.partition))
    except json.JSONDecodeError as exc:
        raise UsageError(f"partition file is not valid JSON: {exc}") from None
    check = {"stable": is_stable, "exchange": is_exchange_stable, "double": is_doubly_stable}[a.notion]
    word = {"stable": "stable", "exchange": "exchange-stable", "double": "doubly stable"}[a.notion]
    verdict = check(inst, part)
    if verdict.stable:
        print(f"{word}: {part}")
        return EXIT_OK
    print(f"not {word}: {verdict.witness}")
    return EXIT_INVALID


def cmd_enumerate(a) -> int:
    from .enumeration import enumerate_stable_matchings, enumerate_stable_partitions, shape_counts

    inst = _load_instance(a.inp)
    if a.matchings:
        parts = enumerate_stable_matchings(inst, a.cap, a.allow_large)
    else:
        parts = enumerate_stable_partitions(inst, a.fixed_point, a.cap, a.allow_large)
    counts = shape_counts(parts)
    if a.csv:
        lines = ["index,partition,shape"] + [
            f'{k},{p},"{s}"' for k, (p, s) in enumerate(
                (p, ",".join(str(c) for c in sorted(p.shape(), reverse=True))) for p in parts)
        ]
        text = "\n".join(lines) + "\n"
    else:
        label = "stable matchings" if a.matchings else (
            "stable partitions (fixed point allowed)" if a.fixed_point else "stable partitions (fixed-point-free)")
        lines = [str(p) for p in parts]
        summary = ", ".join(f"{k}: {v}" for k, v in counts.items()) or "none"
        lines.append(f"# {label}: {len(parts)}; by shape: {summary}")
        text = "\n".join(lines) + "\n"
    _emit(text, a.out)
    return EXIT_OK


def cmd_exact(a) -> int:
    from . import exact
    from .mc import dumps_json

    if a.what == "prob":
        val = exact.exact_stability_probability(a.shape, a.cap or exact.PAIR_CAP)
        _emit(f"{val}\n", a.out)
    elif a.what == "gf":
        gf = exact.exact_rank_gf(a.shape, a.cap or exact.GF_PAIR_CAP)
        if a.z is not None:
            _emit(f"{gf(Fraction(a.z))}\n", a.out)
        else:
            _emit(dumps_json({str(k): c for k, c in gf.coeffs}), a.out)
    elif a.what == "expected":
        if a.n is None:
            raise UsageError("exact expected needs --n")
        val = exact.exact_expected_partitions(a.n, a.fixed_point, a.cap or exact.PAIR_CAP)
        _emit(f"{val}\n", a.out)
    elif a.what == "constants":
        _emit(dumps_json(exact.constants()), a.out)
    return EXIT_OK


def cmd_constants(a) -> int:
    from . import exact
    from .mc import dumps_json

    out = exact.constants()
    if a.n:
        out["asymptotic_expected_partitions"] = exact.asymptotic_expected_partitions(a.n)
        out["qn_bound"] = exact.qn_bound(a.n, out["second_moment_constant"])
        out["asymptotic_p_stable_matching"] = exact.asymptotic_p_stable(a.n, 0)
    _emit(dumps_json(out), a.out)
    return EXIT_OK


def _partition_arg(text: str):
    from .partition import CyclicPartition

    try:
        cycles = json.loads(text)
    except json.JSONDecodeError:
        raise UsageError(f"partition {text!r} must be a JSON list of 1-based cycles") from None
    return CyclicPartition.from_cycles_1based(cycles)


def cmd_estimate(a) -> int:
    from . import mc

    w = _workers(a.workers)
    if a.kind == "stability":
        res = mc.mc_stability_probability(a.shape, a.samples, a.seed, a.proposal, a.beta, w).to_dict()
    elif a.kind == "latent":
        res = mc.latent_stability_frequency(a.shape, a.samples, a.seed, w).to_dict()
    elif a.kind == "rankgf":
        res = mc.mc_rank_gf_point(a.shape, a.z, a.samples, a.seed, w).to_dict()
    elif a.kind == "pair":
        if not (a.pi1 and a.pi2):
            raise UsageError("pair estimation needs --pi1 and --pi2")
        res = mc.mc_pair_probability(_partition_arg(a.pi1), _partition_arg(a.pi2), a.samples, a.seed, w).to_dict()
    elif a.kind == "bound-single":
        res = {"violations": mc.bound_check_single(a.samples, a.n, a.seed, a.spread, w)}
    else:
        res = {"violations": mc.bound_check_pair(a.samples, a.n, a.seed, a.spread, workers=w)}
    _emit(mc.dumps_json(res), a.out)
    return EXIT_OK


def cmd_experiment(a) -> int:
    from .mc import dumps_json, instance_experiment, rows_to_csv

    cfg = ExperimentConfig.load(a.config) if a.config else ExperimentConfig()
    for key in ("n", "trials", "seed", "stats", "enum_cap", "workers", "csv", "summary"):
        val = getattr(a, key)
        if val is not None:
            setattr(cfg, key, val)
    cfg.allow_odd = cfg.allow_odd or a.allow_odd
    rows, summaries, warnings = [], {}, []
    for n in cfg.n:
        _require_even(n, cfg.allow_odd)
        res = instance_experiment(n, cfg.trials, cfg.seed, cfg.stats, _workers(cfg.workers), cfg.enum_cap)
        rows.extend(res.rows)
        summaries[str(n)] = res.summary
        warnings.extend(res.warnings)
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    _emit(rows_to_csv(rows), cfg.csv)
    if cfg.summary:
        meta = {"config": dataclasses.asdict(cfg) | {"workers": None}, "warnings": warnings}
        Path(cfg.summary).write_text(dumps_json({"summary": summaries, "meta": meta}))
    return EXIT_OK


def cmd_repro(a) -> int:
    from .repro import bundled_config, run_repro

    if a.config:
        try:
            cfg = json.loads(_read(a.config))
        except json.JSONDecodeError as exc:
            raise UsageError(f"config {a.config} is not valid JSON: {exc}") from None
    else:
        cfg = bundled_config("repro_quick") if a.quick else {}
    only = set(a.only) if a.only else None
    res = run_repro(cfg, a.out, _workers(a.workers), only, log=lambda s: print(s, file=sys.stderr))
    failed = [k for k, v in res["results"].items() if not v.get("report_only") and not v["passed"]]
    print(f"{len(res['results']) - len(failed)} of {len(res['results'])} sections passed or reported"
          + (f"; failed: {', '.join(failed)}" if failed else ""))
    return EXIT_OK


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="stablepart", description="Stable partitions of random roommates instances.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate a uniform random instance")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--trial", type=int, help="stream index (as used by experiments)")
    g.add_argument("--format", choices=("text", "json"), default="text")
    g.add_argument("--allow-odd", action="store_true")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="find a stable partition")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a partition against an instance")
    v.add_argument("--in", dest="inp", required=True)
    v.add_argument("--partition", required=True)
    v.add_argument("--notion", choices=("stable", "exchange", "double"), default="stable")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", help="list all stable partitions (small n)")
    e.add_argument("--in", dest="inp", required=True)
    e.add_argument("--fixed-point", action="store_true", help="include partitions with a fixed point")
    e.add_argument("--matchings", action="store_true", help="stable perfect matchings only")
    e.add_argument("--csv", action="store_true")
    e.add_argument("--cap", type=int)
    e.add_argument("--allow-large", action="store_true", help="raise the cap to 12")
    e.add_argument("--out")
    e.set_defaults(func=cmd_enumerate)

    x = sub.add_parser("exact", help="exact rational evaluations")
    x.add_argument("what", choices=("prob", "gf", "expected", "constants"))
    x.add_argument("--shape", default="2,2", help='cycle lengths, e.g. "2,2" or "3+fp"')
    x.add_argument("--z", help="evaluate the rank GF at this rational")
    x.add_argument("--n", type=int)
    x.add_argument("--fixed-point", action="store_true")
    x.add_argument("--cap", type=int)
    x.add_argument("--out")
    x.set_defaults(func=cmd_exact)

    c = sub.add_parser("constants", help="asymptotic constants")
    c.add_argument("--n", type=int, help="also evaluate the n-dependent asymptotics")
    c.add_argument("--out")
    c.set_defaults(func=cmd_constants)

    m = sub.add_parser("estimate", help="Monte Carlo estimates")
    m.add_argument("kind", choices=("stability", "latent", "rankgf", "pair", "bound-single", "bound-pair"))
    m.add_argument("--shape", default="2,2")
    m.add_argument("--samples", type=int, default=100_000)
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--proposal", choices=("uniform", "exponential"), default="exponential")
    m.add_argument("--beta", type=float)
    m.add_argument("--z", type=float, default=0.5)
    m.add_argument("--pi1", help="first partition as JSON cycles, e.g. [[1,2],[3,4]]")
    m.add_argument("--pi2")
    m.add_argument("--n", type=int, default=50, help="size for the bound harnesses")
    m.add_argument("--spread", choices=("uniform", "scaled"), default="uniform")
    m.add_argument("--workers", type=int)
    m.add_argument("--out")
    m.set_defaults(func=cmd_estimate)

    r = sub.add_parser("experiment", help="per-instance statistics over many trials")
    r.add_argument("--config")
    r.add_argument("--n", type=int, nargs="+")
    r.add_argument("--trials", type=int)
    r.add_argument("--seed", type=int)
    r.add_argument("--stats", nargs="+")
    r.add_argument("--enum-cap", type=int)
    r.add_argument("--workers", type=int)
    r.add_argument("--csv", help="CSV output path (default stdout)")
    r.add_argument("--summary", help="summary JSON path")
    r.add_argument("--allow-odd", action="store_true")
    r.set_defaults(func=cmd_experiment)

    q = sub.add_parser("repro", help="run the bundled reproduction config")
    q.add_argument("--config", help="JSON overrides of the bundled config")
    q.add_argument("--quick", action="store_true", help="small sample sizes (smoke run)")
    q.add_argument("--only", nargs="+")
    q.add_argument("--workers", type=int)
    q.add_argument("--out", required=True, help="artifact directory")
    q.set_defaults(func=cmd_repro)
    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, ValueError, TypeError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())
