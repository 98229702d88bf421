"""Brute-force enumeration of stable partitions at small n.

Candidates (reduced permutations, optionally with one fixed point) are
generated once per ``(n, allow_fixed_point)`` and kept as an integer array
of successor maps, so filtering an instance is a handful of numpy operations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .errors import CapExceeded
from .instance import PreferenceInstance
from .partition import CyclicPartition

DEFAULT_CAP = 10
OVERRIDE_CAP = 12
PERMUTATION_CAP = 9
_CHUNK = 4096


@dataclass(frozen=True)
class ShapeSpec:
    """Cycle type of a reduced partition: 2's, odd lengths >= 3 and at most one 1."""

    cycle_lengths: tuple

    def __post_init__(self):
        lengths = tuple(sorted(int(c) for c in self.cycle_lengths))
        object.__setattr__(self, "cycle_lengths", lengths)
        if not lengths:
            raise ValueError("empty shape")
        for c in lengths:
            if c < 1 or (c % 2 == 0 and c != 2):
                raise ValueError(f"cycle length {c} is not 1, 2 or odd >= 3")
        if lengths.count(1) > 1:
            raise ValueError("at most one fixed point is allowed")

    @property
    def n(self) -> int:
        return sum(self.cycle_lengths)

    @property
    def has_fixed_point(self) -> bool:
        return 1 in self.cycle_lengths

    @property
    def m(self) -> int:
        return sum(c for c in self.cycle_lengths if c >= 3)

    @classmethod
    def parse(cls, text: str) -> ShapeSpec:
        """Parse ``"2,2"`` or ``"3+fp"`` style shape strings."""
        text = text.strip().replace(" ", "")
        fp = text.endswith("+fp")
        if fp:
            text = text[:-3]
        try:
            lengths = [int(tok) for tok in text.split(",") if tok]
        except ValueError:
            raise ValueError(f"bad shape {text!r}: expected comma-separated cycle lengths") from None
        if fp:
            lengths.append(1)
        return cls(tuple(lengths))

    def to_partition(self) -> CyclicPartition:
        """Canonical labelling: odd cycles first, then 2-cycles, fixed point last."""
        order = sorted(self.cycle_lengths, key=lambda c: (c == 1, c == 2, -c))
        cycles = []
        start = 0
        for c in order:
            cycles.append(tuple(range(start, start + c)))
            start += c
        return CyclicPartition.from_cycles(cycles, self.n)

    @classmethod
    def of(cls, pi: CyclicPartition) -> ShapeSpec:
        return cls(pi.shape())

    def __str__(self):
        body = ",".join(str(c) for c in sorted(self.cycle_lengths, reverse=True) if c != 1)
        return body + ("+fp" if self.has_fixed_point else "")


# -- counting ------------------------------------------------------------


def _f_odd(m: int) -> int:
    from .exact import f_odd

    return f_odd(m)


def _dfact(k: int) -> int:
    from .exact import double_factorial

    return double_factorial(k)


def count_shapes(n: int, m: int) -> int:
    """Number of fixed-point-free reduced permutations of [n] with m odd-cycle members."""
    if n < 0 or m < 0 or m > n or (n - m) % 2:
        raise ValueError(f"need 0 <= m <= n with n - m even, got n={n}, m={m}")
    return comb(n, m) * _f_odd(m) * _dfact(n - m - 1)


def count_shapes_fixed_point(n: int, m: int) -> int:
    """Same with exactly one fixed point (n choices for it)."""
    if n < 1 or m < 0 or m > n - 1 or (n - 1 - m) % 2:
        raise ValueError(f"need 0 <= m <= n-1 with n-1-m even, got n={n}, m={m}")
    return n * comb(n - 1, m) * _f_odd(m) * _dfact(n - 2 - m)


def total_candidates(n: int, allow_fixed_point: bool) -> int:
    total = sum(count_shapes(n, m) for m in range(n % 2, n + 1, 2))
    if allow_fixed_point:
        total += sum(count_shapes_fixed_point(n, m) for m in range((n - 1) % 2, n, 2))
    return total


# -- candidate generation ------------------------------------------------


def _odd_cycle_covers(elems: tuple):
    """All ways to cover ``elems`` by odd cycles of length >= 3."""
    if not elems:
        yield []
        return
    first, rest = elems[0], elems[1:]
    for length in range(3, len(elems) + 1, 2):
        for others in itertools.combinations(rest, length - 1):
            remaining = tuple(v for v in rest if v not in others)
            if len(remaining) in (1, 2):
                continue
            for order in itertools.permutations(others):
                cyc = (first,) + order
                for tail in _odd_cycle_covers(remaining):
                    yield [cyc] + tail


def _matchings(elems: tuple):
    if not elems:
        yield []
        return
    first = elems[0]
    for k in range(1, len(elems)):
        rest = elems[1:k] + elems[k + 1:]
        for tail in _matchings(rest):
            yield [(first, elems[k])] + tail


def _check_cap(n: int, cap: int | None, override: bool) -> None:
    limit = OVERRIDE_CAP if override else DEFAULT_CAP
    if cap is not None:
        limit = cap
    if n > limit:
        raise CapExceeded(
            f"n={n} is over the enumeration cap {limit}; pass a larger cap or the override flag"
        )
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")


def iter_candidate_cycles(n: int, allow_fixed_point: bool):
    """Cycle lists of every candidate, in enumeration order.

    Fixed-point-free shapes come first by increasing m, then shapes with a
    fixed point by increasing m and fixed point label; inside a shape the
    odd-member set, odd cycles and matching are assembled lexicographically.
    """
    everyone = tuple(range(n))
    for m in range(n % 2, n + 1, 2):
        for odd in itertools.combinations(everyone, m):
            rest = tuple(v for v in everyone if v not in odd)
            for cover in _odd_cycle_covers(odd):
                for mt in _matchings(rest):
                    yield cover + mt
    if not allow_fixed_point:
        return
    for m in range((n - 1) % 2, n, 2):
        for h in everyone:
            others = tuple(v for v in everyone if v != h)
            for odd in itertools.combinations(others, m):
                rest = tuple(v for v in others if v not in odd)
                for cover in _odd_cycle_covers(odd):
                    for mt in _matchings(rest):
                        yield cover + mt + [(h,)]


@lru_cache(maxsize=16)
def _candidate_array(n: int, allow_fixed_point: bool) -> np.ndarray:
    rows = []
    for cycles in iter_candidate_cycles(n, allow_fixed_point):
        succ = [0] * n
        for cyc in cycles:
            for k, v in enumerate(cyc):
                succ[v] = cyc[(k + 1) % len(cyc)]
        rows.append(succ)
    arr = np.array(rows, dtype=np.int64).reshape(-1, n)
    arr.setflags(write=False)
    return arr


def enumerate_candidates(n: int, allow_fixed_point: bool = False, cap: int | None = None,
                         override: bool = False):
    """Yield every reduced candidate partition of [n] exactly once."""
    _check_cap(n, cap, override)
    for row in _candidate_array(n, allow_fixed_point):
        yield CyclicPartition(n, tuple(row.tolist()))


# -- vectorised filtering ------------------------------------------------


def stable_mask(inst: PreferenceInstance, succ: np.ndarray) -> np.ndarray:
    """Stability of each successor map (rows of ``succ``) for ``inst``."""
    n = inst.n
    r = inst.rank
    out = np.zeros(len(succ), dtype=bool)
    idx = np.arange(n)
    for lo in range(0, len(succ), _CHUNK):
        s = succ[lo:lo + _CHUNK]
        pred = np.empty_like(s)
        np.put_along_axis(pred, s, np.broadcast_to(idx, s.shape), axis=1)
        pr = r[idx, pred]
        sr = r[idx, s]
        ok = np.all(sr <= pr, axis=1)
        cand = np.flatnonzero(ok)
        if len(cand):
            p = pr[cand]
            block = (r[None] < p[:, :, None]) & (r.T[None] < p[:, None, :])
            ok[cand] = ~block.any(axis=(1, 2))
        out[lo:lo + len(s)] = ok
    return out


def stable_successors(inst: PreferenceInstance, allow_fixed_point: bool = False,
                      cap: int | None = None, override: bool = False) -> np.ndarray:
    _check_cap(inst.n, cap, override)
    cands = _candidate_array(inst.n, allow_fixed_point)
    return cands[stable_mask(inst, cands)]


def enumerate_stable_partitions(inst: PreferenceInstance, allow_fixed_point: bool = False,
                                cap: int | None = None, override: bool = False) -> list:
    rows = stable_successors(inst, allow_fixed_point, cap, override)
    return [CyclicPartition(inst.n, tuple(r)) for r in rows.tolist()]


def count_stable_partitions(inst: PreferenceInstance, allow_fixed_point: bool = False,
                            cap: int | None = None, override: bool = False) -> int:
    return len(stable_successors(inst, allow_fixed_point, cap, override))


def enumerate_stable_matchings(inst: PreferenceInstance, cap: int | None = None,
                               override: bool = False) -> list:
    if inst.n % 2:
        raise ValueError("stable matchings need an even number of members")
    return [p for p in enumerate_stable_partitions(inst, False, cap, override) if p.is_matching]


def multiple_predecessor_members(inst: PreferenceInstance, cap: int | None = None,
                                 override: bool = False) -> set:
    """Members with two or more distinct predecessors across the stable,
    reduced, fixed-point-free partitions."""
    rows = stable_successors(inst, False, cap, override)
    if len(rows) < 2:
        return set()
    # a member has several predecessors iff its column of predecessors varies
    preds = np.argsort(rows, axis=1)
    varies = (preds != preds[:1]).any(axis=0)
    return set(np.flatnonzero(varies).tolist())


@lru_cache(maxsize=4)
def _all_permutations(n: int) -> np.ndarray:
    arr = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    arr.setflags(write=False)
    return arr


def enumerate_stable_permutations(inst: PreferenceInstance, cap: int = PERMUTATION_CAP) -> list:
    """Every stable permutation, reduced or not (all n! permutations are scanned)."""
    if inst.n > cap:
        raise CapExceeded(f"n={inst.n} is over the permutation-scan cap {cap}")
    perms = _all_permutations(inst.n)
    rows = perms[stable_mask(inst, perms)]
    return [CyclicPartition(inst.n, tuple(r)) for r in rows.tolist()]


def shape_counts(partitions) -> dict:
    """Number of partitions per shape string, in first-seen order."""
    out = {}
    for p in partitions:
        key = str(ShapeSpec.of(p))
        out[key] = out.get(key, 0) + 1
    return out


__all__ = [
    "ShapeSpec",
    "count_shapes",
    "count_shapes_fixed_point",
    "total_candidates",
    "enumerate_candidates",
    "enumerate_stable_partitions",
    "count_stable_partitions",
    "enumerate_stable_matchings",
    "enumerate_stable_permutations",
    "multiple_predecessor_members",
    "stable_mask",
    "shape_counts",
]
