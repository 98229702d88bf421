"""Acceptance suite: every criterion at its stated tolerance and time limit.

The full bundled reproduction config runs once (module fixture); each test
re-checks its criterion from the recorded measurements and its wall time.
Criterion 14 runs the full config a second time and compares artifacts
byte for byte. One PASS/FAIL line per criterion is printed at the end of
the session (see conftest.py), or directly when run as a script.
"""

import math
import time
from fractions import Fraction
from pathlib import Path

import pytest

from oracles import stability_integral_by_expansion
from stablepart.repro import bundled_config, run_repro

RESULTS = {}  # criterion number -> (passed, seconds, note)

LIMITS = {  # seconds
    1: 1, 2: 300, 3: 900, 4: 600, 5: 1200, 6: 1, 7: 1, 8: 300,
    9: 1200, 10: 1200, 11: 600, 12: 120, 13: 120,
}
NAMES = {
    1: "c01_exact_formula", 2: "c02_latent_vs_exact", 3: "c03_expected_count",
    4: "c04_exp_half_limit", 5: "c05_structure", 6: "c06_second_moment",
    7: "c07_leading_constant", 8: "c08_bounds", 9: "c09_rank_trend", 10: "c10_mertens",
    11: "c11_fixed_point", 12: "c12_pair", 13: "c13_rank_gf",
}


@pytest.fixture(scope="module")
def full_run(tmp_path_factory):
    out = tmp_path_factory.mktemp("repro_a")
    t0 = time.perf_counter()
    res = run_repro({}, out, workers=1)
    res["total"] = time.perf_counter() - t0
    res["dir"] = out
    return res


def _check(k, full_run, ok, note=""):
    secs = full_run["timings"][NAMES[k]]
    in_time = secs < LIMITS[k]
    passed = bool(ok and in_time)
    if not in_time:
        note = f"{note} over time limit {LIMITS[k]}s".strip()
    RESULTS[k] = (passed, secs, note)
    assert ok, note
    assert in_time, note


def _m(full_run, k):
    return full_run["results"][NAMES[k]]


def test_criterion_01_exact_formula(full_run):
    m = _m(full_run, 1)
    v2, v22 = Fraction(m["values"]["2"]), Fraction(m["values"]["2,2"])
    oracle = stability_integral_by_expansion(4, [[0, 1], [2, 3]])
    ok = v2 == 1 and v22 == Fraction(233, 648) == oracle
    _check(1, full_run, ok, f"P(2)={v2} P(2,2)={v22} oracle={oracle}")


def test_criterion_02_latent_vs_exact(full_run):
    m = _m(full_run, 2)
    ok = set(m["shapes"]) == {"2,2", "3+fp", "2,2,2", "3,3"}
    zs = []
    for sh, r in m["shapes"].items():
        ok &= r["n_samples"] >= 10**6
        z = (r["mean"] - float(Fraction(r["exact"]))) / r["std_error"]
        zs.append(f"{sh}:{z:+.2f}")
        ok &= abs(z) <= 3
    _check(2, full_run, ok, "z " + " ".join(zs))


def test_criterion_03_expected_count(full_run):
    m = _m(full_run, 3)
    ok = sorted(int(n) for n in m["ns"]) == [4, 6, 8]
    ok &= Fraction(m["ns"]["4"]["exact"]) == Fraction(233, 216)
    zs = []
    for n, r in m["ns"].items():
        ok &= r["trials"] >= 20000
        z = (r["mean"] - r["exact_float"]) / r["std_error"]
        zs.append(f"n={n}:{z:+.2f}")
        ok &= abs(z) <= 3
    _check(3, full_run, ok, "z " + " ".join(zs))


def test_criterion_04_exp_half_limit(full_run):
    m = _m(full_run, 4)
    scaled = [m["ns"][str(n)]["scaled"] for n in (8, 12, 16)]
    ok = all(a < b for a, b in zip(scaled, scaled[1:]))
    ok &= all(v < math.exp(0.5) for v in scaled)
    ok &= 1.0 <= scaled[-1] <= 1.9
    ok &= all(m["ns"][str(n)]["n_samples"] >= 10**7 for n in (8, 12, 16))
    _check(4, full_run, ok, "scaled " + " ".join(f"{v:.4f}" for v in scaled))


def test_criterion_05_structure(full_run):
    m = _m(full_run, 5)
    ok = sorted(int(n) for n in m["ns"]) == [4, 6, 8]
    fails = 0
    for r in m["ns"].values():
        ok &= r["instances"] >= 10**4
        fails += sum(r["failures"].values())
    _check(5, full_run, ok and fails == 0, f"failures {fails}")


def test_criterion_06_second_moment(full_run):
    m = _m(full_run, 6)
    ok = abs(m["value"] - 0.617) <= 0.002
    _check(6, full_run, ok, f"value {m['value']:.6f} vs 0.617 +- 0.002")


def test_criterion_07_leading_constant(full_run):
    m = _m(full_run, 7)
    ok = abs(m["value"] - 1.04325) <= 1e-4
    _check(7, full_run, ok, f"value {m['value']:.7f}")


def test_criterion_08_bounds(full_run):
    m = _m(full_run, 8)
    cfg = bundled_config()["c08_bounds"]
    ok = cfg["single_vectors"] >= 10**6 and cfg["single_n"] == 50
    ok &= cfg["pair_vectors"] >= 10**5 and cfg["pair_n"] == 30
    ok &= m["single_violations"] == 0 and m["pair_violations"] == 0
    _check(8, full_run, ok, f"violations {m['single_violations']}/{m['pair_violations']}")


def test_criterion_09_rank_trend(full_run):
    m = _m(full_run, 9)
    r200, r800 = m["ns"]["200"], m["ns"]["800"]
    ok = all(0.5 <= r["rank_ratio"] <= 1.5 for r in (r200, r800))
    ok &= abs(r800["rank_ratio"] - 1) < abs(r200["rank_ratio"] - 1)
    ok &= r800["rmax_fraction_within"] >= 0.99
    _check(9, full_run, ok, f"ratio {r200['rank_ratio']:.4f} -> {r800['rank_ratio']:.4f}, "
                            f"rmax within {r800['rmax_fraction_within']:.3f}")


def test_criterion_10_mertens(full_run):
    m = _m(full_run, 10)
    ns = (10, 20, 40, 80)
    f = [m["ns"][str(n)]["frequency"] for n in ns]
    ok = all(a >= b for a, b in zip(f, f[1:]))
    ok &= all(m["ns"][str(n)]["trials"] >= 2000 for n in ns)
    a, b = m["ns"]["10"]["ci95"], m["ns"]["80"]["ci95"]
    ok &= a[0] > b[1] or b[0] > a[1]
    _check(10, full_run, ok, "freq " + " ".join(f"{v:.4f}" for v in f) + f", slope {m['loglog_slope']:.3f}")


def test_criterion_11_fixed_point(full_run):
    m = _m(full_run, 11)
    f = [m["ns"][str(n)]["frequency"] for n in (10, 20, 40)]
    ok = all(a > b for a, b in zip(f, f[1:]))
    ok &= all(m["ns"][str(n)]["trials"] >= 10**4 for n in (10, 20, 40))
    _check(11, full_run, ok, "freq " + " ".join(f"{v:.4f}" for v in f))


def test_criterion_12_pair(full_run):
    m = _m(full_run, 12)
    a, b = m["integrand"], m["latent"]
    joint = math.hypot(a["std_error"], b["std_error"])
    ok = abs(a["mean"] - b["mean"]) <= 3 * joint
    ok &= a["n_samples"] >= 10**6 and b["n_samples"] >= 10**6
    _check(12, full_run, ok, f"z {(a['mean'] - b['mean']) / joint:+.2f}")


def test_criterion_13_rank_gf(full_run):
    m = _m(full_run, 13)
    ok = Fraction(m["at_1"]) == Fraction(233, 648) == Fraction(m["exact_probability"])
    est = m["estimate"]
    z = (est["mean"] - float(Fraction(m["at_z"]))) / est["std_error"]
    ok &= abs(z) <= 3 and m["min_power"] >= 4
    _check(13, full_run, ok, f"G(1/2)={m['at_z']} z {z:+.2f} min power {m['min_power']}")


def test_criterion_14_determinism(full_run, tmp_path):
    t0 = time.perf_counter()
    run_repro({}, tmp_path, workers=1)
    secs = time.perf_counter() - t0

    def files(d):
        return {p.relative_to(d).as_posix(): p.read_bytes() for p in sorted(Path(d).rglob("*")) if p.is_file()}

    a, b = files(full_run["dir"]), files(tmp_path)
    ok = a == b and len(a) > 14
    diff = sorted(k for k in set(a) | set(b) if a.get(k) != b.get(k))
    RESULTS[14] = (ok, secs, f"{len(a)} files" + (f", differing: {diff}" if diff else ", identical"))
    assert ok, diff


def summary_lines():
    lines = []
    for k in range(1, 15):
        if k in RESULTS:
            passed, secs, note = RESULTS[k]
            lines.append(f"criterion {k:2d}: {'PASS' if passed else 'FAIL'} ({secs:.1f}s) {note}")
        else:
            lines.append(f"criterion {k:2d}: not run")
    return lines


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
