import math

import numpy as np
import pytest
from scipy import stats

from pivotlab.rng import RandomStream


def test_reproducibility_first_1e4_draws():
    a = RandomStream(seed=42, stream_id=3)
    b = RandomStream(seed=42, stream_id=3)
    xa = np.array([a.next_normal(1.0) for _ in range(10_000)])
    xb = np.array([b.next_normal(1.0) for _ in range(10_000)])
    assert np.array_equal(xa, xb)


def test_distinct_stream_ids_differ():
    a = RandomStream(seed=42, stream_id=0).normal(1.0, 100)
    b = RandomStream(seed=42, stream_id=1).normal(1.0, 100)
    assert not np.array_equal(a, b)


def test_child_streams_are_deterministic_and_distinct():
    root = RandomStream(seed=9)
    x = root.child(5).normal(1.0, 50)
    y = RandomStream(seed=9).child(5).normal(1.0, 50)
    z = root.child(6).normal(1.0, 50)
    assert np.array_equal(x, y)
    assert not np.array_equal(x, z)
    # nested derivation also reproducible
    assert np.array_equal(root.child(1).child(2).normal(1.0, 8),
                          RandomStream(9).child(1).child(2).normal(1.0, 8))


def test_scalar_and_array_draws_share_one_stream():
    """next_* ops and the array methods walk the same generator sequence."""
    s = RandomStream(5)
    seq = np.array([s.next_normal(1.0) for _ in range(64)])
    assert np.array_equal(seq, RandomStream(5).normal(1.0, 64))
    t = RandomStream(5)
    chis = np.array([t.next_chi(2.5) for _ in range(32)])
    assert np.array_equal(chis, RandomStream(5).chi(2.5, 32))


def test_normal_moments():
    x = RandomStream(1).normal(1.0, 1_000_000)
    assert abs(x.mean()) < 0.004  # 4 sigma of sigma/sqrt(N)
    y = RandomStream(2).normal(2.0, 1_000_000)
    assert abs(y.var(ddof=1) - 2.0) < 0.012


def test_normal_rejects_bad_variance():
    s = RandomStream(0)
    with pytest.raises(ValueError):
        s.next_normal(0.0)
    with pytest.raises(ValueError):
        s.next_normal(-1.0)
    with pytest.raises(ValueError):
        s.normal(math.inf, 4)


def test_chi_square_mean():
    x = RandomStream(3).chi(2.0, 1_000_000)
    assert np.all(x >= 0)
    assert abs((x**2).mean() - 2.0) < 0.01


def test_chi_rejects_bad_dof():
    with pytest.raises(ValueError):
        RandomStream(0).next_chi(0.0)
    with pytest.raises(ValueError):
        RandomStream(0).chi(-2.0, 10)


def test_chi_dof1_matches_half_normal():
    x = RandomStream(4).chi(1.0, 100_000)
    y = np.abs(RandomStream(5).normal(1.0, 100_000))
    assert stats.ks_2samp(x, y).pvalue > 0.001


@pytest.mark.parametrize("beta", [1, 2, 4])
def test_chi_matches_root_sum_of_squares(beta):
    x = RandomStream(6).child(beta).chi(float(beta), 100_000)
    z = RandomStream(7).child(beta).normal(1.0, (100_000, beta))
    y = np.sqrt((z**2).sum(axis=1))
    assert stats.ks_2samp(x, y).pvalue > 0.001


def test_chi_accepts_non_integer_dof():
    x = RandomStream(8).chi(0.7, 100_000)
    # E[chi^2_k] = k holds for real k as well
    assert abs((x**2).mean() - 0.7) < 0.01


def test_complex_normal_unit_second_moment():
    z = RandomStream(10).complex_normal(1_000_000)
    sq = (z**2).sum(axis=1)
    assert abs(sq.mean() - 1.0) < 0.004


def test_complex_normal_modulus_squared_is_exponential():
    z = RandomStream(11).complex_normal(100_000)
    sq = (z**2).sum(axis=1)
    assert stats.ks_1samp(sq, stats.expon.cdf).pvalue > 0.001


def test_quaternion_component_variance():
    q = RandomStream(12).quaternion_normal(1_000_000)
    for c in range(4):
        assert abs(q[:, c].var(ddof=1) - 0.25) < 0.002


def test_scalar_constructors_have_right_kinds():
    s = RandomStream(13)
    z = s.next_complex_normal()
    q = s.next_quaternion_normal()
    assert z.kind.name == "COMPLEX" and z.u == z.v == 0
    assert q.kind.name == "QUATERNION"


def test_uniform_sphere_is_unit_norm_and_uniform():
    pts = RandomStream(14).uniform_sphere(100_000)
    norms = np.sqrt((pts**2).sum(axis=1))
    assert np.allclose(norms, 1.0, atol=1e-12)
    # each coordinate of a uniform S^2 point is Uniform[-1, 1]
    assert stats.ks_1samp(pts[:, 2], stats.uniform(loc=-1, scale=2).cdf).pvalue > 0.001


def test_seed_validation():
    with pytest.raises(ValueError):
        RandomStream(-1)
    with pytest.raises(ValueError):
        RandomStream(0, stream_id=-2)
