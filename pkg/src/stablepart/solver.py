"""Polynomial-time construction of a stable partition.

Phase 1 is the usual proposal sequence, with every member's own name appended
to the end of their list so that a member rejected by everyone ends up
holding their own proposal (a fixed point). Phase 2 eliminates exposed
rotations, but only while some reduced list still has three or more entries;
a table whose lists all have at most two entries already describes a stable
partition (each member proposes to their first entry and holds their last).

Lists are never materialised. Member ``j`` is on ``i``'s reduced list iff
``pos[i][j] <= tail[i]`` and ``pos[j][i] <= tail[j]``, where ``tail[i]`` is
the position of the proposal ``i`` currently holds; every deletion in either
phase is a truncation after a newly held proposal.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .instance import PreferenceInstance
from .partition import CyclicPartition, blocking_pairs, is_stable, reduce


@dataclass(frozen=True)
class SolveResult:
    partition: CyclicPartition
    odd_party_count: int
    solvable: bool
    phase_stats: dict = field(default_factory=dict, compare=False)

    @property
    def odd_parties(self) -> tuple:
        return self.partition.odd_parties


class _Table:
    def __init__(self, inst: PreferenceInstance):
        n = inst.n
        self.n = n
        self.pos = (inst.rank - 1).tolist()
        self.pref = [row + [i] for i, row in enumerate(inst.pref.tolist())]
        self.tail = [n - 1] * n
        self.holder = [-1] * n
        self.head = [0] * n
        self.proposals = 0

    def phase1(self) -> None:
        pos, pref, tail, holder, head = self.pos, self.pref, self.tail, self.holder, self.head
        free = list(range(self.n - 1, -1, -1))
        while free:
            i = free.pop()
            while True:
                j = pref[i][head[i]]
                self.proposals += 1
                if j == i:
                    holder[i] = i
                    break
                if pos[j][i] < tail[j]:
                    old = holder[j]
                    holder[j] = i
                    tail[j] = pos[j][i]
                    if old >= 0:
                        free.append(old)
                    break
                head[i] += 1

    def entries(self, i: int, k: int) -> list:
        """First ``k`` entries of ``i``'s reduced list (fewer if it is shorter)."""
        pref_i, tail, pos = self.pref[i], self.tail, self.pos
        out = []
        h = self.head[i]
        limit = tail[i]
        while h <= limit:
            j = pref_i[h]
            if j == i or pos[j][i] <= tail[j]:
                if not out:
                    self.head[i] = h
                out.append(j)
                if len(out) == k:
                    break
            h += 1
        return out

    def first(self, i: int) -> int:
        return self.entries(i, 1)[0]

    def phase2(self) -> int:
        rotations = 0
        cur = 0
        n = self.n
        while True:
            while cur < n and len(self.entries(cur, 3)) < 3:
                cur += 1
            if cur == n:
                return rotations
            # trace x -> last(second(x)) until a member repeats
            seen = {}
            seq = []
            p = cur
            while p not in seen:
                seen[p] = len(seq)
                seq.append(p)
                p = self.holder[self.entries(p, 2)[1]]
            xs = seq[seen[p]:]
            seconds = [self.entries(x, 2)[1] for x in xs]
            for x, q in zip(xs, seconds):
                self.tail[q] = self.pos[q][x]
                self.holder[q] = x
            rotations += 1


def tan_solve(inst: PreferenceInstance) -> SolveResult:
    """Return a stable, reduced partition of ``inst``.

    Even cycles of length 4 or more left by phase 2 are split with the
    "even-start" selector.
    """
    table = _Table(inst)
    table.phase1()
    rotations = table.phase2()
    raw = CyclicPartition.from_succ([table.first(i) for i in range(inst.n)])
    part = reduce(raw)
    odd = len(part.odd_parties)
    stats = {
        "proposals": table.proposals,
        "rotations": rotations,
        "long_even_cycles": sum(1 for c in raw.cycles if len(c) % 2 == 0 and len(c) > 2),
    }
    return SolveResult(part, odd, odd == 0, stats)


def is_solvable(inst: PreferenceInstance) -> bool:
    return tan_solve(inst).solvable


@dataclass(frozen=True)
class PartialMatching:
    n: int
    pairs: tuple  # sorted (i, j), i < j
    unmatched: tuple

    @property
    def size(self) -> int:
        return len(self.pairs)

    def partner(self) -> dict:
        out = {}
        for i, j in self.pairs:
            out[i] = j
            out[j] = i
        return out


def _matching_from_partition(part: CyclicPartition) -> PartialMatching:
    pairs = []
    unmatched = []
    for c in part.cycles:
        if len(c) == 2:
            pairs.append(tuple(sorted(c)))
        else:
            for t in range(0, len(c) - 1, 2):
                pairs.append(tuple(sorted((c[t], c[t + 1]))))
            unmatched.append(c[-1])
    return PartialMatching(part.n, tuple(sorted(pairs)), tuple(sorted(unmatched)))


def max_stable_matching(inst: PreferenceInstance, result: SolveResult | None = None) -> PartialMatching:
    """Internally stable matching of size (n - number of odd parties) / 2."""
    if result is None:
        result = tan_solve(inst)
    return _matching_from_partition(result.partition)


def internal_blocking_pairs(inst: PreferenceInstance, matching: PartialMatching) -> list:
    """Pairs of matched members, not matched together, that block ``matching``."""
    r = inst.rank
    partner = matching.partner()
    members = sorted(partner)
    out = []
    for a_idx, a in enumerate(members):
        for b in members[a_idx + 1:]:
            if partner[a] == b:
                continue
            if r[a, b] < r[a, partner[a]] and r[b, a] < r[b, partner[b]]:
                out.append((a, b))
    return out


def complete_matching_heuristic(
    inst: PreferenceInstance, result: SolveResult | None = None
) -> tuple[CyclicPartition, int]:
    """Perfect matching from the maximum stable matching plus index-order pairing
    of the leftover members, and its number of blocking pairs."""
    if inst.n % 2:
        raise ValueError("a perfect matching needs an even number of members")
    mm = max_stable_matching(inst, result)
    left = list(mm.unmatched)
    pairs = list(mm.pairs) + [(left[t], left[t + 1]) for t in range(0, len(left), 2)]
    matching = CyclicPartition.from_cycles(pairs, inst.n)
    return matching, len(blocking_pairs(inst, matching))


def check_result(inst: PreferenceInstance, result: SolveResult) -> None:
    """Raise AssertionError if ``result`` breaks its contract."""
    verdict = is_stable(inst, result.partition)
    assert verdict.stable, f"solver output unstable: {verdict.witness}"
    assert result.partition.is_reduced, "solver output not reduced"
    assert result.solvable == (result.odd_party_count == 0)


__all__ = [
    "SolveResult",
    "PartialMatching",
    "tan_solve",
    "is_solvable",
    "max_stable_matching",
    "internal_blocking_pairs",
    "complete_matching_heuristic",
    "check_result",
]
