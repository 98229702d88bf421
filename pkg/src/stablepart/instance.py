"""Random roommates instances.

Members are 0-based internally. Ranks are 1-based: ``rank[i, j]`` is the
position of ``j`` in ``i``'s list, and ``rank[i, i] == n`` (self is last).
Text and JSON files use 1-based member labels.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from .partition import CyclicPartition


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """Generator for ``(seed, *stream)``.

    Streams with different keys are statistically independent, so trial ``t``
    of an experiment seeded with ``s`` uses ``make_rng(s, t)`` regardless of
    which worker runs it.
    """
    if seed < 0 or any(k < 0 for k in stream):
        raise ValueError("seed and stream keys must be non-negative")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, *stream])))


@dataclass(frozen=True, eq=False)
class PreferenceInstance:
    n: int
    pref: np.ndarray  # (n, n-1) int, row i is sigma_i
    rank: np.ndarray  # (n, n) int

    def __post_init__(self):
        self.pref.setflags(write=False)
        self.rank.setflags(write=False)

    @classmethod
    def from_prefs(cls, pref) -> PreferenceInstance:
        """Build from 0-based preference rows, validating every invariant."""
        pref = np.asarray(pref, dtype=np.int64)
        if pref.ndim != 2:
            raise ValueError("preference table must be 2-dimensional")
        n = pref.shape[0]
        if n < 2:
            raise ValueError(f"need at least 2 members, got {n}")
        if pref.shape[1] != n - 1:
            raise ValueError(f"each list must have {n - 1} entries, got {pref.shape[1]}")
        everyone = np.arange(n)
        for i in range(n):
            row = pref[i]
            if sorted(row.tolist()) != [j for j in range(n) if j != i]:
                raise ValueError(f"list of member {i + 1} is not a permutation of the others")
        rank = np.empty((n, n), dtype=np.int64)
        rows = np.repeat(everyone, n - 1)
        rank[rows, pref.ravel()] = np.tile(np.arange(1, n), n)
        rank[everyone, everyone] = n
        return cls(n, pref.copy(), rank)

    @classmethod
    def from_prefs_1based(cls, pref) -> PreferenceInstance:
        return cls.from_prefs(np.asarray(pref, dtype=np.int64) - 1)

    def prefers(self, i: int, j: int, k: int) -> bool:
        """True if ``i`` ranks ``j`` strictly above ``k``."""
        return self.rank[i, j] < self.rank[i, k]

    def __eq__(self, other):
        if not isinstance(other, PreferenceInstance):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.pref, other.pref)

    def __hash__(self):
        return hash((self.n, self.pref.tobytes()))

    # -- serialization -------------------------------------------------

    def to_text(self) -> str:
        lines = [str(self.n)]
        lines += [" ".join(str(j + 1) for j in row) for row in self.pref.tolist()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> PreferenceInstance:
        lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
        if not lines or len(lines[0]) != 1:
            raise ValueError("first line must hold the member count")
        try:
            n = int(lines[0][0])
            rows = [[int(tok) for tok in ln] for ln in lines[1:]]
        except ValueError as exc:
            raise ValueError(f"non-integer token in instance file: {exc}") from None
        if len(rows) != n:
            raise ValueError(f"expected {n} preference lines, got {len(rows)}")
        if any(len(r) != n - 1 for r in rows):
            raise ValueError(f"every preference line needs {n - 1} entries")
        return cls.from_prefs_1based(rows)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "pref": (self.pref + 1).tolist()})

    @classmethod
    def from_json(cls, text: str) -> PreferenceInstance:
        data = json.loads(text)
        if not isinstance(data, dict) or set(data) != {"n", "pref"}:
            raise ValueError('instance JSON must have exactly the keys "n" and "pref"')
        inst = cls.from_prefs_1based(data["pref"])
        if inst.n != data["n"]:
            raise ValueError(f'"n" is {data["n"]} but {inst.n} lists were given')
        return inst

    @classmethod
    def loads(cls, text: str) -> PreferenceInstance:
        """Parse either the text or the JSON form."""
        if text.lstrip().startswith("{"):
            return cls.from_json(text)
        return cls.from_text(text)


@dataclass(frozen=True, eq=False)
class LatentMatrix:
    n: int
    x: np.ndarray  # (n, n) float, diagonal unused (NaN)

    def __post_init__(self):
        self.x.setflags(write=False)


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")


def generate_uniform(n: int, seed: int, *stream: int) -> PreferenceInstance:
    """Uniform random instance: every row an independent uniform permutation."""
    _check_n(n)
    rng = make_rng(seed, *stream)
    return _uniform_from_rng(n, rng)


def _uniform_from_rng(n: int, rng: np.random.Generator) -> PreferenceInstance:
    # rank of the others by i.i.d. keys; a permutation of n-1 labels per row
    perms = np.argsort(rng.random((n, n - 1)), axis=1)
    others = np.array([[j for j in range(n) if j != i] for i in range(n)], dtype=np.int64)
    pref = np.take_along_axis(others, perms, axis=1)
    return PreferenceInstance.from_prefs(pref)


def sample_latent(n: int, seed: int, *stream: int) -> LatentMatrix:
    _check_n(n)
    rng = make_rng(seed, *stream)
    x = rng.random((n, n))
    np.fill_diagonal(x, np.nan)
    return LatentMatrix(n, x)


def from_latent(lm: LatentMatrix) -> PreferenceInstance:
    """Each member ranks the others by increasing latent value."""
    n = lm.n
    x = np.array(lm.x, dtype=float)
    off = ~np.eye(n, dtype=bool)
    vals = x[off].reshape(n, n - 1)
    if np.any(vals < 0) or np.any(vals > 1) or np.isnan(vals).any():
        raise ValueError("latent entries must lie in [0, 1]")
    srt = np.sort(vals, axis=1)
    if np.any(srt[:, 1:] == srt[:, :-1]):
        raise ValueError("tie within a latent row; regenerate or perturb")
    np.fill_diagonal(x, np.inf)
    pref = np.argsort(x, axis=1)[:, : n - 1]
    return PreferenceInstance.from_prefs(pref)


def rank_profile_within(inst: PreferenceInstance, pi: CyclicPartition, d: int) -> bool:
    """True iff every member's predecessor rank is at most ``d``."""
    return bool(np.all(inst.rank[np.arange(inst.n), pi.pred] <= d))
