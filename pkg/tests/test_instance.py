import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stablepart import (
    CyclicPartition,
    LatentMatrix,
    PreferenceInstance,
    from_latent,
    generate_uniform,
    rank_profile_within,
    sample_latent,
)
from stablepart.instance import make_rng


def test_n2_is_the_unique_instance():
    for seed in range(5):
        inst = generate_uniform(2, seed)
        assert inst.pref.tolist() == [[1], [0]]


def test_generation_is_deterministic():
    a = generate_uniform(4, 42)
    b = generate_uniform(4, 42)
    assert a == b
    assert a.to_text() == b.to_text()
    assert a.pref.tobytes() == b.pref.tobytes()


def test_small_n_rejected():
    with pytest.raises(ValueError):
        generate_uniform(1, 0)
    with pytest.raises(ValueError):
        sample_latent(1, 0)


def test_rank_is_inverse_of_pref():
    inst = generate_uniform(9, 3)
    for i in range(9):
        assert inst.rank[i, i] == 9
        for k, j in enumerate(inst.pref[i]):
            assert inst.rank[i, j] == k + 1


def test_row_distribution_uniform():
    # member 1's list at n=4 takes six equally likely orders
    trials = 100_000
    rows = np.array([generate_uniform(4, 100, t).pref[0] for t in range(trials)])
    keys, counts = np.unique(rows, axis=0, return_counts=True)
    assert len(keys) == 6
    p = 1 / 6
    se = np.sqrt(p * (1 - p) / trials)
    assert np.all(np.abs(counts / trials - p) <= 3 * se)


def test_generated_first_choice_frequencies():
    trials = 20_000
    firsts = np.array([generate_uniform(4, 11, t).pref[0, 0] for t in range(trials)])
    for j in (1, 2, 3):
        p = 1 / 3
        se = np.sqrt(p * (1 - p) / trials)
        assert abs(np.mean(firsts == j) - p) <= 3 * se


def test_from_latent_examples():
    x = np.full((2, 2), np.nan)
    x[0, 1], x[1, 0] = 0.3, 0.9
    assert from_latent(LatentMatrix(2, x)).pref.tolist() == [[1], [0]]
    x = np.random.default_rng(0).random((4, 4))
    x[0, 1:] = [0.7, 0.1, 0.4]
    inst = from_latent(LatentMatrix(4, x))
    assert (inst.pref[0] + 1).tolist() == [3, 4, 2]


def test_from_latent_rejects_ties_and_range():
    x = np.random.default_rng(0).random((3, 3))
    x[0, 1] = x[0, 2] = 0.5
    with pytest.raises(ValueError):
        from_latent(LatentMatrix(3, x))
    x = np.random.default_rng(0).random((3, 3))
    x[1, 0] = 1.5
    with pytest.raises(ValueError):
        from_latent(LatentMatrix(3, x))


def test_latent_first_choice_matches_uniform():
    trials = 100_000
    x = make_rng(5).random((trials, 4, 4))
    x[:, np.arange(4), np.arange(4)] = np.inf
    first = np.argmin(x[:, 0, :], axis=1)
    for j in (1, 2, 3):
        p = 1 / 3
        assert abs(np.mean(first == j) - p) <= 3 * np.sqrt(p * (1 - p) / trials)


def test_latent_mean():
    vals = np.concatenate([sample_latent(32, 1, t).x for t in range(1100)]).ravel()
    vals = vals[~np.isnan(vals)]
    assert len(vals) > 10**6
    se = np.sqrt(1 / 12 / len(vals))
    assert abs(vals.mean() - 0.5) <= 3 * se


def test_latent_seeds_differ_and_reproduce():
    a, b = sample_latent(2, 1), sample_latent(2, 2)
    assert not np.array_equal(a.x, b.x, equal_nan=True)
    assert np.array_equal(a.x, sample_latent(2, 1).x, equal_nan=True)
    off = a.x[~np.isnan(a.x)]
    assert np.all((off >= 0) & (off <= 1))


@settings(max_examples=300, deadline=None)
@given(n=st.integers(2, 64), seed=st.integers(0, 2**32))
def test_latent_round_trip_and_monotone_invariance(n, seed):
    lm = sample_latent(n, seed)
    inst = from_latent(lm)
    assert inst == PreferenceInstance.from_prefs(inst.pref)
    cubed = LatentMatrix(n, lm.x**3)
    assert from_latent(cubed) == inst


@settings(max_examples=100, deadline=None)
@given(n=st.integers(2, 20), seed=st.integers(0, 2**32))
def test_serialisation_round_trip(n, seed):
    inst = generate_uniform(n, seed)
    assert PreferenceInstance.from_text(inst.to_text()) == inst
    assert PreferenceInstance.from_json(inst.to_json()) == inst
    assert PreferenceInstance.loads(inst.to_json()) == inst


@pytest.mark.parametrize("text", [
    "3\n2 3\n1 3\n",  # missing a line
    "3\n2 3\n1 1\n1 2\n",  # repeated member
    "3\n2 3\n1 3\n1 x\n",  # non-integer
    "3\n2 3 1\n1 3\n1 2\n",  # self listed
])
def test_malformed_text_rejected(text):
    with pytest.raises(ValueError):
        PreferenceInstance.from_text(text)


def test_json_keys_checked():
    with pytest.raises(ValueError):
        PreferenceInstance.from_json('{"n": 2, "pref": [[2], [1]], "extra": 1}')


def test_rank_profile_within(classic, classic_tri):
    assert rank_profile_within(classic, classic_tri, 4)
    assert not rank_profile_within(classic, classic_tri, 1)
    inst = generate_uniform(10, 3)
    pi = CyclicPartition.from_succ(list(np.random.default_rng(1).permutation(10)))
    assert rank_profile_within(inst, pi, 10)
