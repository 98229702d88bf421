"""Seeded Monte Carlo estimators and experiment drivers.

Every estimator splits its samples into fixed-size batches. Batch ``b`` draws
from ``make_rng(seed, tag, b)`` and is reduced to ``(count, mean, M2)``; the
batch summaries are merged in index order. The result therefore does not
depend on how many worker processes ran the batches.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from .enumeration import ShapeSpec
from .exact import _as_partition, exact_stability_probability
from .instance import generate_uniform, make_rng
from .partition import CyclicPartition, max_predecessor_rank, rank_sum
from .solver import complete_matching_heuristic, max_stable_matching, tan_solve

BATCH = 20_000

# stream tags keep estimators independent when they share a seed
_TAG_STABILITY = 1
_TAG_PAIR = 2
_TAG_LATENT = 3
_TAG_BOUND1 = 4
_TAG_BOUND2 = 5


@dataclass(frozen=True)
class EstimateResult:
    mean: float
    std_error: float
    n_samples: int
    seed: int | None
    label: str

    def __post_init__(self):
        if self.n_samples < 2:
            raise ValueError("an estimate needs at least two samples")

    def z_score(self, target) -> float:
        diff = self.mean - float(target)
        if self.std_error == 0:
            return 0.0 if diff == 0 else math.copysign(math.inf, diff)
        return diff / self.std_error

    def agrees_with(self, target, k: float = 3.0) -> bool:
        return abs(self.mean - float(target)) <= k * self.std_error

    def to_dict(self) -> dict:
        return asdict(self)


def joint_agreement(a: EstimateResult, b: EstimateResult, k: float = 3.0) -> bool:
    """|a - b| within k joint standard errors (independent estimates)."""
    return abs(a.mean - b.mean) <= k * math.hypot(a.std_error, b.std_error)


# -- batch plumbing ------------------------------------------------------


def _summarise(values: np.ndarray) -> tuple:
    values = np.asarray(values, dtype=float)
    n = len(values)
    mean = math.fsum(values) / n
    m2 = math.fsum((values - mean) ** 2)
    return n, mean, m2


def _merge(parts) -> tuple:
    # Chan et al. pairwise update, applied in batch order
    n, mean, m2 = 0, 0.0, 0.0
    for nb, mb, m2b in parts:
        if nb == 0:
            continue
        tot = n + nb
        delta = mb - mean
        mean = mean + delta * nb / tot
        m2 = m2 + m2b + delta * delta * n * nb / tot
        n = tot
    return n, mean, m2


def _batch_sizes(n_samples: int, batch: int) -> list:
    full, rem = divmod(n_samples, batch)
    return [batch] * full + ([rem] if rem else [])


def _call(job):
    fn, args, size, seed, tag, b = job
    return _summarise(fn(args, size, make_rng(seed, tag, b)))


def _run(fn, args, n_samples: int, seed: int, tag: int, label: str,
         workers: int = 1, batch: int = BATCH) -> EstimateResult:
    if n_samples < 2:
        raise ValueError("n_samples must be at least 2")
    jobs = [(fn, args, size, seed, tag, b) for b, size in enumerate(_batch_sizes(n_samples, batch))]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_call, jobs))
    else:
        parts = [_call(j) for j in jobs]
    n, mean, m2 = _merge(parts)
    sd = math.sqrt(m2 / (n - 1))
    return EstimateResult(mean, sd / math.sqrt(n), n, seed, label)


# -- integrand estimator for a single partition ---------------------------


@dataclass(frozen=True)
class _StabilityIntegrand:
    k: int
    odd: np.ndarray  # variable indices with an x_h factor
    pa: np.ndarray
    pb: np.ndarray
    unary: bool
    proposal: str
    beta: float


def _stability_integrand(pi: CyclicPartition, proposal: str, beta: float | None) -> _StabilityIntegrand:
    h = pi.fixed_point
    members = [v for v in range(pi.n) if v != h]
    index = {v: t for t, v in enumerate(members)}
    odd = np.array([index[v] for v in pi.odd_members], dtype=np.int64)
    adj = pi.adjacent_pairs
    pairs = [(index[a], index[b]) for ia, a in enumerate(members) for b in members[ia + 1:]
             if (a, b) not in adj]
    pa = np.array([p[0] for p in pairs], dtype=np.int64)
    pb = np.array([p[1] for p in pairs], dtype=np.int64)
    if proposal not in ("uniform", "exponential"):
        raise ValueError(f"unknown proposal {proposal!r}")
    if beta is None:
        beta = math.sqrt(pi.n + pi.m)
    if proposal == "exponential" and not (beta > 0 and math.isfinite(beta)):
        raise ValueError(f"beta must be positive and finite, got {beta}")
    return _StabilityIntegrand(len(members), odd, pa, pb, h is not None, proposal, float(beta))


def _log_f(x: np.ndarray, odd, pa, pb, unary: bool) -> np.ndarray:
    with np.errstate(divide="ignore"):
        out = np.log(x[:, odd]).sum(axis=1)
        if len(pa):
            out += np.log1p(-x[:, pa] * x[:, pb]).sum(axis=1)
        if unary:
            out += np.log1p(-x).sum(axis=1)
    return out


def _stability_batch(itg: _StabilityIntegrand, size: int, rng: np.random.Generator) -> np.ndarray:
    u = rng.random((size, itg.k))
    if itg.proposal == "uniform":
        x = u
        logw = 0.0
    else:
        b = itg.beta
        # inverse CDF of the exponential density truncated to [0, 1]
        x = -np.log1p(-u * -np.expm1(-b)) / b
        log_g = math.log(b) - b * x - math.log(-math.expm1(-b))
        logw = -log_g.sum(axis=1)
    return np.exp(_log_f(x, itg.odd, itg.pa, itg.pb, itg.unary) + logw)


def mc_stability_probability(shape, n_samples: int, seed: int, proposal: str = "exponential",
                             beta: float | None = None, workers: int = 1,
                             batch: int = BATCH) -> EstimateResult:
    """Importance-sampling estimate of the stability integral of ``shape``."""
    pi = _as_partition(shape)
    itg = _stability_integrand(pi, proposal, beta)
    label = f"stability[{ShapeSpec.of(pi)}|{proposal}]"
    return _run(_stability_batch, itg, n_samples, seed, _TAG_STABILITY, label, workers, batch)


# -- pairs of partitions --------------------------------------------------


@dataclass(frozen=True)
class CircuitStructure:
    common_pairs: tuple
    circuits: tuple  # each circuit as a vertex tuple i1, i2, ... with (i1, i2) in M1
    A: tuple  # y > x on these vertices
    B: tuple  # y < x on these vertices

    @property
    def mu(self) -> int:
        return len(self.circuits)

    @property
    def nu(self) -> int:
        return sum(len(c) for c in self.circuits) // 2


def circuit_structure(pi1: CyclicPartition, pi2: CyclicPartition) -> CircuitStructure:
    """Alternating circuits of the two matchings on the even-cycle members.

    Each circuit starts at its smallest vertex i1 and follows the first
    partition's pair (i1, i2) first; odd positions go to B and even ones to A.
    """
    if pi1.n != pi2.n:
        raise ValueError("partitions differ in size")
    for p in (pi1, pi2):
        if not p.is_reduced or p.has_fixed_point:
            raise ValueError("pair estimation needs reduced, fixed-point-free partitions")
    if pi1.odd_parties != pi2.odd_parties:
        raise ValueError("partitions have different odd parties")
    m1 = {v: u for c in pi1.cycles if len(c) == 2 for v, u in (c, c[::-1])}
    m2 = {v: u for c in pi2.cycles if len(c) == 2 for v, u in (c, c[::-1])}
    common = tuple(sorted(c for c in pi1.cycles if len(c) == 2 and m2[c[0]] == c[1]))
    seen = {v for c in common for v in c}
    circuits, A, B = [], [], []
    for v in sorted(m1):
        if v in seen:
            continue
        cyc = []
        w = v
        while True:
            cyc.append(w)
            seen.add(w)
            w = m1[w] if len(cyc) % 2 == 1 else m2[w]
            if w == v:
                break
        circuits.append(tuple(cyc))
        B.extend(cyc[0::2])
        A.extend(cyc[1::2])
    return CircuitStructure(common, tuple(circuits), tuple(sorted(A)), tuple(sorted(B)))


@dataclass(frozen=True)
class _PairIntegrand:
    n: int
    odd: np.ndarray
    A: np.ndarray
    B: np.ndarray
    pa: np.ndarray
    pb: np.ndarray
    log_orient: float  # log 2^mu


def _pair_mask(pi1: CyclicPartition, pi2: CyclicPartition):
    n = pi1.n
    d = pi1.adjacent_pairs | pi2.adjacent_pairs
    iu, ju = np.triu_indices(n, 1)
    keep = np.array([(int(a), int(b)) not in d for a, b in zip(iu, ju)], dtype=bool)
    return iu[keep], ju[keep]


def _pair_factor_log(x, y, pa, pb) -> np.ndarray:
    lo = np.minimum(x, y)
    f = 1 - x[:, pa] * x[:, pb] - y[:, pa] * y[:, pb] + lo[:, pa] * lo[:, pb]
    with np.errstate(divide="ignore"):
        return np.log(np.maximum(f, 0.0)).sum(axis=1)


def _sample_cone(x, A, B, rng):
    """y equal to x off the circuits, above x on A and below x on B; returns y, log weight."""
    y = x.copy()
    if len(A):
        u = rng.random((len(x), len(A)))
        xa = x[:, A]
        y[:, A] = xa + (1 - xa) * u
    if len(B):
        u = rng.random((len(x), len(B)))
        xb = x[:, B]
        y[:, B] = xb * u
    with np.errstate(divide="ignore"):
        logw = np.log1p(-x[:, A]).sum(axis=1) + np.log(x[:, B]).sum(axis=1)
    return y, logw


def _pair_batch(itg: _PairIntegrand, size: int, rng: np.random.Generator) -> np.ndarray:
    x = rng.random((size, itg.n))
    y, logw = _sample_cone(x, itg.A, itg.B, rng)
    with np.errstate(divide="ignore"):
        logf = np.log(x[:, itg.odd]).sum(axis=1)
    logf = logf + _pair_factor_log(x, y, itg.pa, itg.pb)
    return np.exp(logf + logw + itg.log_orient)


def mc_pair_probability(pi1: CyclicPartition, pi2: CyclicPartition, n_samples: int, seed: int,
                        workers: int = 1, batch: int = BATCH) -> EstimateResult:
    """Estimate P(both partitions stable).

    Partitions with different odd parties can never be simultaneously stable;
    that case returns an exact zero with zero standard error.
    """
    if pi1 == pi2:
        raise ValueError("the two partitions must differ")
    if pi1.odd_parties != pi2.odd_parties:
        return EstimateResult(0.0, 0.0, max(n_samples, 2), seed, "pair[exact zero: odd parties differ]")
    cs = circuit_structure(pi1, pi2)
    pa, pb = _pair_mask(pi1, pi2)
    itg = _PairIntegrand(
        pi1.n,
        np.array(pi1.odd_members, dtype=np.int64),
        np.array(cs.A, dtype=np.int64),
        np.array(cs.B, dtype=np.int64),
        pa,
        pb,
        cs.mu * math.log(2),
    )
    label = f"pair[mu={cs.mu},nu={cs.nu}]"
    return _run(_pair_batch, itg, n_samples, seed, _TAG_PAIR, label, workers, batch)


# -- latent-instance simulation ------------------------------------------


def latent_batch(n: int, size: int, rng: np.random.Generator) -> np.ndarray:
    """(size, n, n) latent matrices with the diagonal set above every entry."""
    x = rng.random((size, n, n))
    idx = np.arange(n)
    x[:, idx, idx] = 2.0
    return x


def latent_stability(x: np.ndarray, pi: CyclicPartition):
    """Stability indicator and rank sum of ``pi`` under each latent matrix.

    Ranking by latent value is exactly what from_latent does, and the large
    diagonal reproduces the self-is-last convention.
    """
    n = pi.n
    idx = np.arange(n)
    pred = np.asarray(pi.pred)
    succ = pi.succ_array
    pv = x[:, idx, pred]  # (B, n)
    sv = x[:, idx, succ]
    ok = np.all(sv <= pv, axis=1)
    below = x < pv[:, :, None]
    block = below & np.swapaxes(below, 1, 2)
    ok &= ~block.any(axis=(1, 2))
    ranks = 1 + below.sum(axis=2)
    return ok, ranks.sum(axis=1)


def _latent_batch(args, size, rng):
    kind, parts, z = args
    n = parts[0].n
    x = latent_batch(n, size, rng)
    ok, rsum = latent_stability(x, parts[0])
    if kind == "stable":
        return ok.astype(float)
    if kind == "pair":
        ok2, _ = latent_stability(x, parts[1])
        return (ok & ok2).astype(float)
    if kind == "rankgf":
        return np.where(ok, float(z) ** rsum.astype(float), 0.0)
    raise ValueError(kind)


def latent_stability_frequency(shape, n_samples: int, seed: int, workers: int = 1,
                               batch: int = 50_000) -> EstimateResult:
    pi = _as_partition(shape)
    return _run(_latent_batch, ("stable", (pi,), None), n_samples, seed, _TAG_LATENT,
                f"latent-stable[{ShapeSpec.of(pi)}]", workers, batch)


def latent_pair_frequency(pi1: CyclicPartition, pi2: CyclicPartition, n_samples: int, seed: int,
                          workers: int = 1, batch: int = 50_000) -> EstimateResult:
    return _run(_latent_batch, ("pair", (pi1, pi2), None), n_samples, seed, _TAG_LATENT,
                "latent-pair", workers, batch)


def mc_rank_gf_point(shape, z: float, n_samples: int, seed: int, workers: int = 1,
                     batch: int = 50_000) -> EstimateResult:
    """Latent-instance estimate of E[z^(rank sum) ; stable]."""
    z = float(z)
    if not 0 < z <= 1:
        raise ValueError(f"z must lie in (0, 1], got {z}")
    pi = _as_partition(shape)
    if pi.has_fixed_point:
        raise ValueError("the rank generating function is defined for fixed-point-free shapes")
    return _run(_latent_batch, ("rankgf", (pi,), z), n_samples, seed, _TAG_LATENT,
                f"rankgf[{ShapeSpec.of(pi)},z={z!r}]", workers, batch)


# -- product-bound harnesses ---------------------------------------------


def random_reduced_partition(n: int, rng: np.random.Generator) -> CyclicPartition:
    """A random fixed-point-free reduced partition with 0, 2 or 4 odd cycles (as room allows)."""
    if n % 2:
        raise ValueError("n must be even")
    ks = [k for k in (0, 2, 4) if 3 * k <= n]
    k = int(rng.choice(ks))
    lengths = [3] * k
    spare = (n - 3 * k) // 2
    if k:
        extra = int(rng.integers(0, spare + 1))
        for slot in rng.integers(0, k, size=extra):
            lengths[slot] += 2
    perm = rng.permutation(n).tolist()
    cycles = []
    pos = 0
    for c in lengths:
        cycles.append(perm[pos:pos + c])
        pos += c
    rest = perm[pos:]
    cycles += [rest[t:t + 2] for t in range(0, len(rest), 2)]
    return CyclicPartition.from_cycles(cycles, n)


def random_partner(pi: CyclicPartition, rng: np.random.Generator) -> CyclicPartition:
    """Another reduced partition with the same odd cycles and a fresh random matching."""
    odd = [c for c in pi.cycles if len(c) % 2]
    even = [v for c in pi.cycles if len(c) == 2 for v in c]
    perm = rng.permutation(even).tolist()
    pairs = [perm[t:t + 2] for t in range(0, len(perm), 2)]
    return CyclicPartition.from_cycles(odd + pairs, pi.n)


def _spread(x: np.ndarray, spread: str, rng) -> np.ndarray:
    if spread == "uniform":
        return x
    if spread == "scaled":
        # shrink each vector by a random factor to probe small-s regions
        return x * rng.random((len(x), 1))
    raise ValueError(f"unknown spread {spread!r}")


TOL = 1e-9


def _bound1_batch(args, size, rng):
    n, spread = args
    pi = random_reduced_partition(n, rng)
    x = _spread(rng.random((size, n)), spread, rng)
    iu, ju = np.triu_indices(n, 1)
    keep = np.array([(int(a), int(b)) not in pi.adjacent_pairs for a, b in zip(iu, ju)])
    with np.errstate(divide="ignore"):
        lhs = np.log1p(-x[:, iu[keep]] * x[:, ju[keep]]).sum(axis=1)
    s = x.sum(axis=1)
    rhs = -s * s / 2 + 4.5
    return (lhs > rhs + TOL).astype(float)


def bound_check_single(n_vectors: int, n: int, seed: int, spread: str = "uniform",
                       workers: int = 1, batch: int = 10_000) -> int:
    """Number of sampled (x, partition) configurations violating the single-partition bound."""
    est = _run(_bound1_batch, (n, spread), n_vectors, seed, _TAG_BOUND1, "bound1", workers, batch)
    return int(round(est.mean * est.n_samples))


def pair_bound_log_sides(x, y, pi1, pi2):
    pa, pb = _pair_mask(pi1, pi2)
    lhs = _pair_factor_log(x, y, pa, pb)
    s1 = x.sum(axis=1)
    s2 = y.sum(axis=1)
    s12 = np.minimum(x, y).sum(axis=1)
    rhs = 256 - s1**2 / 2 - s2**2 / 2 + s12**2 / 2
    return lhs, rhs


def _bound2_batch(args, size, rng):
    n, spread, same = args
    pi1 = random_reduced_partition(n, rng)
    pi2 = pi1 if same else random_partner(pi1, rng)
    x = _spread(rng.random((size, n)), spread, rng)
    if pi1 == pi2:
        y = x
    else:
        cs = circuit_structure(pi1, pi2)
        y, _ = _sample_cone(x, np.array(cs.A, dtype=np.int64), np.array(cs.B, dtype=np.int64), rng)
    lhs, rhs = pair_bound_log_sides(x, y, pi1, pi2)
    return (lhs > rhs + TOL).astype(float)


def bound_check_pair(n_vectors: int, n: int, seed: int, spread: str = "uniform",
                     same: bool = False, workers: int = 1, batch: int = 5_000) -> int:
    """Violations of the two-partition bound over sampled cone configurations.

    ``same=True`` uses identical partitions and y = x.
    """
    est = _run(_bound2_batch, (n, spread, same), n_vectors, seed, _TAG_BOUND2, "bound2", workers, batch)
    return int(round(est.mean * est.n_samples))


# -- per-instance experiments ---------------------------------------------

COLUMNS = (
    "n", "trial", "m", "odd_parties", "has_fixed_point", "solvable", "rank_sum", "rank_ratio",
    "r_max", "max_matching_size", "blocking_count", "s_count", "q_fraction",
)
STATS = COLUMNS[2:]
ENUM_STATS = ("s_count", "q_fraction")


def _trial_row(n: int, trial: int, seed: int, stats: tuple, enum_cap: int) -> dict:
    from .enumeration import count_stable_partitions, multiple_predecessor_members

    inst = generate_uniform(n, seed, trial)
    res = tan_solve(inst)
    part = res.partition
    row = {"n": n, "trial": trial}
    if "m" in stats:
        row["m"] = part.m
    if "odd_parties" in stats:
        row["odd_parties"] = res.odd_party_count
    if "has_fixed_point" in stats:
        row["has_fixed_point"] = int(part.has_fixed_point)
    if "solvable" in stats:
        row["solvable"] = int(res.solvable)
    if "rank_sum" in stats or "rank_ratio" in stats:
        rs = rank_sum(inst, part)
        if "rank_sum" in stats:
            row["rank_sum"] = rs
        if "rank_ratio" in stats:
            row["rank_ratio"] = rs / n**1.5
    if "r_max" in stats:
        row["r_max"] = max_predecessor_rank(inst, part)
    if "max_matching_size" in stats:
        row["max_matching_size"] = max_stable_matching(inst, res).size
    if "blocking_count" in stats and n % 2 == 0:
        row["blocking_count"] = complete_matching_heuristic(inst, res)[1]
    if n <= enum_cap:
        if "s_count" in stats:
            row["s_count"] = count_stable_partitions(inst, False, cap=enum_cap)
        if "q_fraction" in stats:
            row["q_fraction"] = len(multiple_predecessor_members(inst, cap=enum_cap)) / n
    return row


def _trial_chunk(job):
    n, trials, seed, stats, enum_cap = job
    return [_trial_row(n, t, seed, stats, enum_cap) for t in trials]


@dataclass
class ExperimentResult:
    rows: list
    summary: dict
    warnings: list


def instance_experiment(n: int, trials: int, seed: int, stats=None, workers: int = 1,
                        enum_cap: int = 10, chunk: int = 200) -> ExperimentResult:
    """Solve ``trials`` uniform instances of size ``n`` and collect per-trial statistics."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    stats = tuple(STATS if stats is None else stats)
    unknown = [s for s in stats if s not in STATS]
    if unknown:
        raise ValueError(f"unknown statistics: {', '.join(unknown)}")
    warnings = []
    if n > enum_cap:
        for s in stats:
            if s in ENUM_STATS:
                warnings.append(f"{s} needs enumeration, unavailable at n={n} (cap {enum_cap})")
    if n % 2 and "blocking_count" in stats:
        warnings.append(f"blocking_count needs even n, unavailable at n={n}")
    ranges = [range(lo, min(lo + chunk, trials)) for lo in range(0, trials, chunk)]
    jobs = [(n, r, seed, stats, enum_cap) for r in ranges]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            chunks = list(ex.map(_trial_chunk, jobs))
    else:
        chunks = [_trial_chunk(j) for j in jobs]
    rows = [r for c in chunks for r in c]
    return ExperimentResult(rows, summarise_rows(rows, seed, n), warnings)


def summarise_rows(rows: list, seed: int, n: int) -> dict:
    out = {}
    for col in STATS:
        vals = [r[col] for r in rows if col in r]
        if len(vals) < 2:
            continue
        count, mean, m2 = _summarise(np.array(vals, dtype=float))
        se = math.sqrt(m2 / (count - 1)) / math.sqrt(count)
        out[col] = EstimateResult(mean, se, count, seed, f"{col}[n={n}]").to_dict()
    s = [r["s_count"] for r in rows if "s_count" in r]
    if len(s) >= 2:
        # second moment and second factorial moment of the stable-partition count
        sq = np.array(s, dtype=float)
        for name, vals in (("s_count_sq", sq * sq), ("s_count_falling2", sq * (sq - 1))):
            count, mean, m2 = _summarise(vals)
            se = math.sqrt(m2 / (count - 1)) / math.sqrt(count)
            out[name] = EstimateResult(mean, se, count, seed, f"{name}[n={n}]").to_dict()
    return out


def _fmt(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def rows_to_csv(rows: list) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in rows:
        w.writerow([_fmt(r[c]) if c in r else "" for c in COLUMNS])
    return buf.getvalue()


def dumps_json(obj) -> str:
    """Canonical JSON: sorted keys, Fractions as "p/q" strings, floats shortest round-trip."""

    def default(o):
        if isinstance(o, Fraction):
            return f"{o.numerator}/{o.denominator}"
        if isinstance(o, np.integer):
            return int(o)
        if isinstance(o, np.floating):
            return float(o)
        raise TypeError(f"not serialisable: {type(o).__name__}")

    return json.dumps(obj, sort_keys=True, indent=2, default=default) + "\n"


def compare_with_exact(shape, est: EstimateResult) -> dict:
    exact = exact_stability_probability(shape)
    return {"exact": exact, "estimate": est.mean, "z": est.z_score(exact)}


__all__ = [
    "EstimateResult",
    "CircuitStructure",
    "ExperimentResult",
    "joint_agreement",
    "mc_stability_probability",
    "circuit_structure",
    "mc_pair_probability",
    "latent_batch",
    "latent_stability",
    "latent_stability_frequency",
    "latent_pair_frequency",
    "mc_rank_gf_point",
    "random_reduced_partition",
    "random_partner",
    "bound_check_single",
    "bound_check_pair",
    "pair_bound_log_sides",
    "instance_experiment",
    "summarise_rows",
    "rows_to_csv",
    "dumps_json",
    "COLUMNS",
    "STATS",
]
