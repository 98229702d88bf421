"""Cyclic partitions (permutations) and the stability predicates on them."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Union

import numpy as np

from .instance import PreferenceInstance


@dataclass(frozen=True)
class CyclicPartition:
    """A permutation of ``range(n)`` given by its successor map.

    ``succ[i]`` is the member ``i`` proposes to; ``pred[i]`` is the member
    whose proposal ``i`` holds.
    """

    n: int
    succ: tuple

    def __post_init__(self):
        succ = tuple(int(s) for s in self.succ)
        object.__setattr__(self, "succ", succ)
        if len(succ) != self.n or sorted(succ) != list(range(self.n)):
            raise ValueError("successor map is not a permutation of range(n)")

    @classmethod
    def from_succ(cls, succ: Sequence[int]) -> CyclicPartition:
        return cls(len(succ), tuple(succ))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int | None = None) -> CyclicPartition:
        cycles = [tuple(c) for c in cycles]
        if n is None:
            n = sum(len(c) for c in cycles)
        succ = [-1] * n
        for cyc in cycles:
            for k, v in enumerate(cyc):
                if succ[v] != -1:
                    raise ValueError(f"member {v + 1} appears twice")
                succ[v] = cyc[(k + 1) % len(cyc)]
        if -1 in succ:
            raise ValueError("cycles do not cover every member")
        return cls(n, tuple(succ))

    @classmethod
    def from_cycles_1based(cls, cycles, n: int | None = None) -> CyclicPartition:
        return cls.from_cycles([[v - 1 for v in c] for c in cycles], n)

    @classmethod
    def matching(cls, pairs: Iterable[Sequence[int]], n: int | None = None) -> CyclicPartition:
        return cls.from_cycles(pairs, n)

    # -- derived structure ---------------------------------------------

    @cached_property
    def pred(self) -> np.ndarray:
        p = np.empty(self.n, dtype=np.int64)
        p[list(self.succ)] = np.arange(self.n)
        p.setflags(write=False)
        return p

    @cached_property
    def succ_array(self) -> np.ndarray:
        s = np.array(self.succ, dtype=np.int64)
        s.setflags(write=False)
        return s

    @cached_property
    def cycles(self) -> tuple:
        """Cycles rotated to start at their minimum, sorted by that minimum."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = []
            v = start
            while not seen[v]:
                seen[v] = True
                cyc.append(v)
                v = self.succ[v]
            out.append(tuple(cyc))
        return tuple(out)

    @cached_property
    def odd_parties(self) -> tuple:
        return tuple(c for c in self.cycles if len(c) % 2 == 1)

    @cached_property
    def fixed_point(self) -> int | None:
        for c in self.cycles:
            if len(c) == 1:
                return c[0]
        return None

    @property
    def has_fixed_point(self) -> bool:
        return self.fixed_point is not None

    @cached_property
    def odd_members(self) -> tuple:
        """Members of odd cycles of length >= 3 (a fixed point is excluded)."""
        return tuple(sorted(v for c in self.odd_parties if len(c) > 1 for v in c))

    @property
    def m(self) -> int:
        return len(self.odd_members)

    @cached_property
    def adjacent_pairs(self) -> frozenset:
        """D(Pi): unordered pairs {i, j}, i != j, adjacent under the permutation."""
        return frozenset(
            (min(i, s), max(i, s)) for i, s in enumerate(self.succ) if i != s
        )

    @property
    def is_reduced(self) -> bool:
        return all(len(c) % 2 == 1 or len(c) == 2 for c in self.cycles)

    @property
    def is_matching(self) -> bool:
        return all(len(c) == 2 for c in self.cycles)

    def shape(self) -> tuple:
        return tuple(sorted(len(c) for c in self.cycles))

    # -- presentation --------------------------------------------------

    def __str__(self) -> str:
        return "".join("(" + " ".join(str(v + 1) for v in c) + ")" for c in self.cycles)

    def cycles_1based(self) -> list:
        return [[v + 1 for v in c] for c in self.cycles]

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "succ": [s + 1 for s in self.succ]})

    @classmethod
    def from_json(cls, text: str) -> CyclicPartition:
        data = json.loads(text)
        if not isinstance(data, dict) or set(data) != {"n", "succ"}:
            raise ValueError('partition JSON must have exactly the keys "n" and "succ"')
        succ = [int(s) - 1 for s in data["succ"]]
        if len(succ) != data["n"]:
            raise ValueError('"succ" length does not match "n"')
        return cls(data["n"], tuple(succ))


# -- verdicts ------------------------------------------------------------


@dataclass(frozen=True)
class Condition1Violation:
    member: int

    def __str__(self):
        return f"member {self.member + 1} prefers predecessor to successor"


@dataclass(frozen=True)
class BlockingPair:
    i: int
    j: int

    def __str__(self):
        return f"blocking pair ({self.i + 1}, {self.j + 1})"


@dataclass(frozen=True)
class ExchangeBlockingPair:
    i: int
    j: int

    def __str__(self):
        return f"exchange-blocking pair ({self.i + 1}, {self.j + 1})"


Witness = Union[Condition1Violation, BlockingPair, ExchangeBlockingPair]


@dataclass(frozen=True)
class StabilityVerdict:
    stable: bool
    witness: Witness | None = None

    def __post_init__(self):
        if self.stable != (self.witness is None):
            raise ValueError("a verdict carries a witness exactly when unstable")

    def __bool__(self):
        return self.stable


def _check_sizes(inst: PreferenceInstance, pi: CyclicPartition) -> None:
    if inst.n != pi.n:
        raise ValueError(f"instance has {inst.n} members but partition has {pi.n}")


def _first_pair(mask: np.ndarray):
    idx = np.argwhere(np.triu(mask, 1))
    if len(idx) == 0:
        return None
    return int(idx[0, 0]), int(idx[0, 1])


def predecessor_ranks(inst: PreferenceInstance, pi: CyclicPartition) -> np.ndarray:
    return inst.rank[np.arange(inst.n), pi.pred]


def is_stable(inst: PreferenceInstance, pi: CyclicPartition) -> StabilityVerdict:
    """Check both stability conditions.

    Condition (2) is evaluated as "no pair prefers each other to their
    predecessors"; pairs adjacent under the permutation can never satisfy that
    on both sides, which is exactly the exclusion of D(Pi).
    """
    _check_sizes(inst, pi)
    r = inst.rank
    idx = np.arange(inst.n)
    pr = r[idx, pi.pred]
    sr = r[idx, pi.succ_array]
    bad = np.flatnonzero(sr > pr)
    if len(bad):
        return StabilityVerdict(False, Condition1Violation(int(bad[0])))
    block = (r < pr[:, None]) & (r.T < pr[None, :])
    pair = _first_pair(block)
    if pair is not None:
        return StabilityVerdict(False, BlockingPair(*pair))
    return StabilityVerdict(True)


def is_exchange_stable(inst: PreferenceInstance, pi: CyclicPartition) -> StabilityVerdict:
    """No two members each prefer the other's predecessor to their own."""
    _check_sizes(inst, pi)
    r = inst.rank
    idx = np.arange(inst.n)
    pr = r[idx, pi.pred]
    # wants[i, j]: i ranks pred(j) above pred(i)
    wants = r[:, pi.pred] < pr[:, None]
    pair = _first_pair(wants & wants.T)
    if pair is not None:
        return StabilityVerdict(False, ExchangeBlockingPair(*pair))
    return StabilityVerdict(True)


def is_doubly_stable(inst: PreferenceInstance, pi: CyclicPartition) -> StabilityVerdict:
    v = is_stable(inst, pi)
    if not v.stable:
        return v
    return is_exchange_stable(inst, pi)


def witness_holds(inst: PreferenceInstance, pi: CyclicPartition, w: Witness) -> bool:
    """Re-evaluate a witness directly from the definitions, one member at a time."""
    R = inst.rank
    pred = [int(p) for p in pi.pred]
    if isinstance(w, Condition1Violation):
        i = w.member
        return R[i, pi.succ[i]] > R[i, pred[i]]
    if isinstance(w, BlockingPair):
        i, j = w.i, w.j
        if i == j or pi.succ[i] == j or pi.succ[j] == i:
            return False
        return R[i, j] < R[i, pred[i]] and not R[j, i] > R[j, pred[j]]
    if isinstance(w, ExchangeBlockingPair):
        i, j = w.i, w.j
        return i != j and R[i, pred[j]] < R[i, pred[i]] and R[j, pred[i]] < R[j, pred[j]]
    raise TypeError(f"unknown witness {w!r}")


# -- rewrites and statistics ---------------------------------------------


def reduce(pi: CyclicPartition, choice: Union[str, Sequence[int]] = "even-start") -> CyclicPartition:
    """Split every even cycle of length >= 4 into transpositions.

    ``choice`` is ``"even-start"`` (pairs (i1 i2)(i3 i4)...), ``"odd-start"``
    (pairs (i2 i3)...(i2m i1)), or one 0/1 flag per long even cycle in
    canonical order, 1 meaning odd-start.
    """
    long_even = [c for c in pi.cycles if len(c) % 2 == 0 and len(c) > 2]
    if isinstance(choice, str):
        if choice not in ("even-start", "odd-start"):
            raise ValueError(f"unknown selector {choice!r}")
        flags = [choice == "odd-start"] * len(long_even)
    else:
        flags = [bool(f) for f in choice]
        if len(flags) != len(long_even):
            raise ValueError(f"need {len(long_even)} selector flags, got {len(flags)}")
    out = []
    k = 0
    for c in pi.cycles:
        if len(c) % 2 == 0 and len(c) > 2:
            c2 = c[1:] + c[:1] if flags[k] else c
            out.extend((c2[t], c2[t + 1]) for t in range(0, len(c2), 2))
            k += 1
        else:
            out.append(c)
    return CyclicPartition.from_cycles(out, pi.n)


def rank_sum(inst: PreferenceInstance, pi: CyclicPartition) -> int:
    _check_sizes(inst, pi)
    return int(predecessor_ranks(inst, pi).sum())


def max_predecessor_rank(inst: PreferenceInstance, pi: CyclicPartition) -> int:
    _check_sizes(inst, pi)
    return int(predecessor_ranks(inst, pi).max())


def blocking_pairs(inst: PreferenceInstance, matching: CyclicPartition) -> list:
    """Unordered pairs not matched together that prefer each other to their partners."""
    _check_sizes(inst, matching)
    if not matching.is_matching:
        raise ValueError("blocking_pairs needs a perfect matching (2-cycles only)")
    r = inst.rank
    pr = r[np.arange(inst.n), matching.pred]
    block = (r < pr[:, None]) & (r.T < pr[None, :])
    return [(int(i), int(j)) for i, j in np.argwhere(np.triu(block, 1))]


def odd_parties(pi: CyclicPartition) -> list:
    return list(pi.odd_parties)
