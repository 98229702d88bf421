"""End-to-end reproduction runs, one function per acceptance criterion.

Each ``run_*`` function takes its parameter dict and returns
``(measurements, artifacts)``. Measurements are JSON-ready and include a
``passed`` flag. Artifacts are ``{filename: text}`` (CSV tables). Nothing
time-dependent is written, so two runs with one config are byte-identical.
"""

from __future__ import annotations

import copy
import json
import math
import time
from fractions import Fraction
from importlib import resources
from pathlib import Path

import numpy as np

from .enumeration import (
    enumerate_stable_matchings,
    enumerate_stable_partitions,
    enumerate_stable_permutations,
)
from .exact import (
    double_factorial,
    exact_expected_partitions,
    exact_rank_gf,
    exact_stability_probability,
    leading_constant,
    second_moment_constant,
)
from .instance import generate_uniform
from .mc import (
    dumps_json,
    instance_experiment,
    joint_agreement,
    latent_pair_frequency,
    latent_stability_frequency,
    mc_pair_probability,
    mc_rank_gf_point,
    mc_stability_probability,
    rows_to_csv,
    bound_check_pair,
    bound_check_single,
)
from .partition import CyclicPartition, is_stable, reduce
from .solver import internal_blocking_pairs, max_stable_matching, tan_solve

EXP_HALF = math.exp(0.5)


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _est(e) -> dict:
    return {"mean": e.mean, "std_error": e.std_error, "n_samples": e.n_samples}


# -- criteria ---------------------------------------------------------------


def run_exact_formula(p: dict, workers: int = 1):
    values = {sh: exact_stability_probability(sh) for sh in p["shapes"]}
    out = {sh: _frac(v) for sh, v in values.items()}
    passed = values.get("2") == 1 and values.get("2,2") == Fraction(233, 648)
    return {"values": out, "passed": bool(passed)}, {}


def run_latent_vs_exact(p: dict, workers: int = 1):
    rows = {}
    ok = True
    for k, sh in enumerate(p["shapes"]):
        exact = exact_stability_probability(sh)
        est = latent_stability_frequency(sh, p["samples"], p["seed"] + k, workers)
        z = est.z_score(exact)
        ok &= abs(z) <= 3
        rows[sh] = {"exact": _frac(exact), **_est(est), "z": z}
    return {"shapes": rows, "passed": bool(ok)}, {}


def run_expected_count(p: dict, workers: int = 1):
    rows = {}
    arts = {}
    ok = True
    for n in p["ns"]:
        exact = exact_expected_partitions(n)
        res = instance_experiment(n, p["trials"], p["seed"], ("s_count",), workers)
        s = res.summary["s_count"]
        z = (s["mean"] - float(exact)) / s["std_error"]
        ok &= abs(z) <= 3
        rows[str(n)] = {"exact": _frac(exact), "exact_float": float(exact),
                        "mean": s["mean"], "std_error": s["std_error"], "trials": p["trials"], "z": z}
        arts[f"expected_count_n{n}.csv"] = rows_to_csv(res.rows)
    return {"ns": rows, "passed": bool(ok)}, arts


def run_exp_half_limit(p: dict, workers: int = 1):
    rows = {}
    scaled = []
    for n in p["ns"]:
        shape = ",".join(["2"] * (n // 2))
        est = mc_stability_probability(shape, p["samples"], p["seed"] + n, "exponential", None, workers)
        df = double_factorial(n - 1)
        scaled.append(est.mean * df)
        rows[str(n)] = {"scaled": est.mean * df, "scaled_se": est.std_error * df, **_est(est)}
    increasing = all(a < b for a, b in zip(scaled, scaled[1:]))
    below = all(v < EXP_HALF for v in scaled)
    last = scaled[-1]
    lo, hi = p["final_range"]
    passed = increasing and below and lo <= last <= hi
    return {"ns": rows, "increasing": increasing, "below_limit": below, "limit": EXP_HALF,
            "passed": bool(passed)}, {}


def _structure_one(inst) -> dict:
    """Failure flags of the structure checks on one instance."""
    fails = {k: 0 for k in ("solver", "odd_parties", "solvability", "reductions", "max_matching")}
    res = tan_solve(inst)
    if not is_stable(inst, res.partition).stable or not res.partition.is_reduced:
        fails["solver"] = 1
    target = res.partition.odd_parties
    parts = enumerate_stable_partitions(inst, True)
    perms = enumerate_stable_permutations(inst)
    if any(q.odd_parties != target for q in parts) or any(q.odd_parties != target for q in perms):
        fails["odd_parties"] = 1
    has_matching = bool(enumerate_stable_matchings(inst)) if inst.n % 2 == 0 else False
    if not (res.solvable == (len(target) == 0) == has_matching):
        fails["solvability"] = 1
    for q in perms:
        if not (is_stable(inst, reduce(q, "even-start")).stable
                and is_stable(inst, reduce(q, "odd-start")).stable):
            fails["reductions"] = 1
            break
    mm = max_stable_matching(inst, res)
    if 2 * mm.size != inst.n - res.odd_party_count or internal_blocking_pairs(inst, mm):
        fails["max_matching"] = 1
    return fails


def run_structure(p: dict, workers: int = 1):
    rows = {}
    ok = True
    for n in p["ns"]:
        totals = {}
        examples = []
        for t in range(p["instances"]):
            inst = generate_uniform(n, p["seed"], t)
            f = _structure_one(inst)
            for k, v in f.items():
                totals[k] = totals.get(k, 0) + v
            if any(f.values()) and len(examples) < 5:
                examples.append({"trial": t, "failed": [k for k, v in f.items() if v]})
        rows[str(n)] = {"failures": totals, "counterexamples": examples, "instances": p["instances"]}
        ok &= sum(totals.values()) == 0
    return {"ns": rows, "passed": bool(ok)}, {}


def run_second_moment(p: dict, workers: int = 1):
    c = second_moment_constant()
    target = p["target"]
    return {"value": c, "target": target, "tolerance": p["tolerance"],
            "passed": abs(c - target) <= p["tolerance"]}, {}


def run_leading_constant(p: dict, workers: int = 1):
    k = leading_constant()
    return {"value": k, "target": p["target"], "tolerance": p["tolerance"],
            "passed": abs(k - p["target"]) <= p["tolerance"]}, {}


def run_bounds(p: dict, workers: int = 1):
    single = bound_check_single(p["single_vectors"], p["single_n"], p["seed"], workers=workers)
    pair = bound_check_pair(p["pair_vectors"], p["pair_n"], p["seed"] + 1, workers=workers)
    return {"single_violations": single, "pair_violations": pair,
            "passed": single == 0 and pair == 0}, {}


def run_rank_trend(p: dict, workers: int = 1):
    rows = {}
    arts = {}
    for n in p["ns"]:
        res = instance_experiment(n, p["trials"], p["seed"], ("rank_sum", "rank_ratio", "r_max"), workers)
        r = np.array([row["r_max"] for row in res.rows], dtype=float)
        scale = math.sqrt(n) * math.log(n) ** 2
        frac = float(np.mean(r / scale <= p["rmax_ratio"]))
        rr = res.summary["rank_ratio"]
        rows[str(n)] = {"rank_ratio": rr["mean"], "rank_ratio_se": rr["std_error"],
                        "rmax_fraction_within": frac, "rmax_scaled_max": float(np.max(r / scale))}
        arts[f"rank_n{n}.csv"] = rows_to_csv(res.rows)
    ns = [str(n) for n in p["ns"]]
    ratios = [rows[k]["rank_ratio"] for k in ns]
    lo, hi = p["ratio_range"]
    in_range = all(lo <= v <= hi for v in ratios)
    closer = abs(ratios[-1] - 1) < abs(ratios[0] - 1)
    rmax_ok = rows[ns[-1]]["rmax_fraction_within"] >= p["rmax_fraction"]
    return {"ns": rows, "in_range": in_range, "closer_at_largest": closer, "rmax_ok": rmax_ok,
            "passed": bool(in_range and closer and rmax_ok)}, arts


def _freq_rows(ns, trials, seed, column, workers, stats):
    rows = {}
    arts = {}
    for n in ns:
        res = instance_experiment(n, trials, seed, stats, workers)
        s = res.summary[column]
        half = 1.96 * s["std_error"]
        rows[str(n)] = {"frequency": s["mean"], "std_error": s["std_error"],
                        "ci95": [s["mean"] - half, s["mean"] + half], "trials": trials}
        arts[f"{column}_n{n}.csv"] = rows_to_csv(res.rows)
    return rows, arts


def run_mertens(p: dict, workers: int = 1):
    stats = ("m", "odd_parties", "has_fixed_point", "solvable", "max_matching_size", "blocking_count")
    rows, arts = _freq_rows(p["ns"], p["trials"], p["seed"], "solvable", workers, stats)
    freqs = [rows[str(n)]["frequency"] for n in p["ns"]]
    nonincreasing = all(a >= b for a, b in zip(freqs, freqs[1:]))
    first, last = rows[str(p["ns"][0])]["ci95"], rows[str(p["ns"][-1])]["ci95"]
    separated = first[0] > last[1] or last[0] > first[1]
    pos = [(math.log(n), math.log(f)) for n, f in zip(p["ns"], freqs) if f > 0]
    slope = float(np.polyfit(*zip(*pos), 1)[0]) if len(pos) >= 2 else None
    return {"ns": rows, "nonincreasing": nonincreasing, "ci_separated": separated,
            "loglog_slope": slope, "passed": bool(nonincreasing and separated)}, arts


def run_fixed_point(p: dict, workers: int = 1):
    rows, arts = _freq_rows(p["ns"], p["trials"], p["seed"], "has_fixed_point", workers,
                            ("has_fixed_point", "odd_parties"))
    freqs = [rows[str(n)]["frequency"] for n in p["ns"]]
    decreasing = all(a > b for a, b in zip(freqs, freqs[1:]))
    return {"ns": rows, "strictly_decreasing": decreasing, "passed": decreasing}, arts


def run_pair(p: dict, workers: int = 1):
    pi1 = CyclicPartition.from_cycles_1based(p["partition_1"])
    pi2 = CyclicPartition.from_cycles_1based(p["partition_2"])
    est = mc_pair_probability(pi1, pi2, p["samples"], p["seed"], workers)
    lat = latent_pair_frequency(pi1, pi2, p["samples"], p["seed"] + 1, workers)
    joint = math.hypot(est.std_error, lat.std_error)
    return {"integrand": _est(est), "latent": _est(lat), "joint_se": joint,
            "z": (est.mean - lat.mean) / joint, "passed": joint_agreement(est, lat)}, {}


def run_rank_gf(p: dict, workers: int = 1):
    shape = p["shape"]
    gf = exact_rank_gf(shape)
    z = Fraction(p["z"])
    at1 = gf(1)
    atz = gf(z)
    exact1 = exact_stability_probability(shape)
    est = mc_rank_gf_point(shape, float(z), p["samples"], p["seed"], workers)
    zsc = est.z_score(atz)
    from .exact import _as_partition

    part = _as_partition(shape)
    min_ok = gf.min_power >= part.n + part.m
    passed = at1 == exact1 and abs(zsc) <= 3 and min_ok
    return {"coefficients": {str(k): _frac(c) for k, c in gf.coeffs}, "at_1": _frac(at1),
            "exact_probability": _frac(exact1), "at_z": _frac(atz), "z": str(z),
            "estimate": _est(est), "z_score": zsc, "min_power": gf.min_power,
            "passed": bool(passed)}, {}


def run_blocking_trend(p: dict, workers: int = 1):
    """Report-only: heuristic blocking counts against n."""
    rows = {}
    arts = {}
    for n in p["ns"]:
        res = instance_experiment(n, p["trials"], p["seed"], ("odd_parties", "blocking_count"), workers)
        s = res.summary["blocking_count"]
        rows[str(n)] = {"mean": s["mean"], "std_error": s["std_error"], "per_n": s["mean"] / n}
        arts[f"blocking_n{n}.csv"] = rows_to_csv(res.rows)
    return {"ns": rows, "report_only": True}, arts


def run_small_n_counts(p: dict, workers: int = 1):
    """Report-only: S_n moments and multiple-predecessor fraction at small n."""
    from .exact import qn_bound

    rows = {}
    for n in p["ns"]:
        res = instance_experiment(n, p["trials"], p["seed"], ("s_count", "q_fraction"), workers)
        sm = res.summary
        rows[str(n)] = {
            "s_count": sm["s_count"]["mean"],
            "s_count_sq": sm["s_count_sq"]["mean"],
            "s_count_falling2": sm["s_count_falling2"]["mean"],
            "q_fraction": sm["q_fraction"]["mean"],
            "q_fraction_se": sm["q_fraction"]["std_error"],
            "qn_bound": qn_bound(n),
        }
    return {"ns": rows, "report_only": True}, {}


CRITERIA = {
    "c01_exact_formula": run_exact_formula,
    "c02_latent_vs_exact": run_latent_vs_exact,
    "c03_expected_count": run_expected_count,
    "c04_exp_half_limit": run_exp_half_limit,
    "c05_structure": run_structure,
    "c06_second_moment": run_second_moment,
    "c07_leading_constant": run_leading_constant,
    "c08_bounds": run_bounds,
    "c09_rank_trend": run_rank_trend,
    "c10_mertens": run_mertens,
    "c11_fixed_point": run_fixed_point,
    "c12_pair": run_pair,
    "c13_rank_gf": run_rank_gf,
    "r01_blocking_trend": run_blocking_trend,
    "r02_small_n_counts": run_small_n_counts,
}


# -- configuration ----------------------------------------------------------


def bundled_config(name: str = "repro") -> dict:
    text = resources.files("stablepart").joinpath("data", f"{name}.json").read_text()
    return json.loads(text)


def validate_config(cfg: dict) -> dict:
    """Fill defaults from the bundled config and reject unknown sections or keys."""
    base = bundled_config("repro")
    if not isinstance(cfg, dict):
        raise ValueError("repro config must be a JSON object")
    unknown = set(cfg) - set(base)
    if unknown:
        raise ValueError(f"unknown config sections: {', '.join(sorted(unknown))}")
    out = copy.deepcopy(base)
    for sec, params in cfg.items():
        if not isinstance(params, dict):
            raise ValueError(f"section {sec!r} must be an object")
        bad = set(params) - set(base[sec])
        if bad:
            raise ValueError(f"unknown keys in {sec!r}: {', '.join(sorted(bad))}")
        out[sec].update(params)
    return out


def run_repro(cfg: dict, out_dir: str | Path | None = None, workers: int = 1, only=None,
              log=None) -> dict:
    """Run every (or the selected) section; write artifacts when ``out_dir`` is given."""
    cfg = validate_config(cfg)
    results = {}
    timings = {}
    for name, fn in CRITERIA.items():
        if only and name not in only:
            continue
        t0 = time.perf_counter()
        measured, arts = fn(cfg[name], workers)
        timings[name] = time.perf_counter() - t0
        results[name] = measured
        if log:
            verdict = "report" if measured.get("report_only") else ("PASS" if measured["passed"] else "FAIL")
            log(f"{name}: {verdict} ({timings[name]:.1f}s)")
        if out_dir is not None:
            base = Path(out_dir)
            (base / "csv").mkdir(parents=True, exist_ok=True)
            for fname, text in arts.items():
                (base / "csv" / fname).write_text(text)
            (base / f"{name}.json").write_text(dumps_json(measured))
    if out_dir is not None:
        Path(out_dir, "summary.json").write_text(dumps_json({"config": cfg, "results": results}))
    return {"results": results, "timings": timings}
