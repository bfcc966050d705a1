import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hdoracle.convolution import (MAX_ENTRY, SCHOOLBOOK_CUTOFF, NTT_PRIMES,
                                  _ntt_convolve, _select_primes, choose_method,
                                  convolve, correlate_matches)
from hdoracle.counters import WorkCounters

from conftest import schoolbook_convolve, sliding_matches


def test_convolve_identity():
    assert convolve([1], [1]).tolist() == [1]


def test_convolve_hand_example():
    assert convolve([1, 1, 0, 1], [1, 1]).tolist() == [1, 2, 1, 1, 1]


def test_convolve_zeros():
    assert convolve([0, 0], [0, 0, 0]).tolist() == [0, 0, 0, 0]


def test_convolve_rejects_empty():
    with pytest.raises(ValueError):
        convolve([], [1])
    with pytest.raises(ValueError):
        convolve([1], [])


def test_convolve_rejects_negative_and_huge_entries():
    with pytest.raises(ValueError):
        convolve([-1], [1])
    with pytest.raises(ValueError):
        convolve([MAX_ENTRY + 1], [1])


def test_convolve_overflow_guard():
    # min-length * max(a) * max(b) would reach 2^63
    big = MAX_ENTRY
    n = (1 << 63) // (big * big) + 1
    a = np.full(n, big, dtype=np.int64)
    with pytest.raises(ValueError):
        convolve(a, a)


def test_correlate_singleton_pattern():
    assert correlate_matches([1, 0, 1, 0], [1]).tolist() == [1, 0, 1, 0]


def test_correlate_hand_example():
    assert correlate_matches([1, 1, 1], [1, 1]).tolist() == [2, 2, 1]


def test_correlate_zero_text():
    assert correlate_matches([0, 0, 0], [1, 1]).tolist() == [0, 0, 0]


def test_correlate_pattern_too_long():
    with pytest.raises(ValueError):
        correlate_matches([1], [1, 1])


def test_correlate_rejects_nonmask():
    with pytest.raises(ValueError):
        correlate_matches([2, 0], [1])


def test_choose_method_boundaries():
    # Short results go schoolbook regardless of entries.
    assert choose_method(32, 32, MAX_ENTRY, MAX_ENTRY) == "schoolbook"
    assert choose_method(SCHOOLBOOK_CUTOFF, 1, 1, 1) == "schoolbook"
    # 0/1 masks take the float path at any supported size.
    assert choose_method(1 << 20, 1 << 20, 1, 1) == "fft"
    # Large entries at length 4096 blow the float error bound.
    assert choose_method(4096, 4096, MAX_ENTRY, MAX_ENTRY) == "ntt"


def test_float_guard_forces_ntt_exactness_at_boundary():
    # Scan entry magnitudes until the method flips, checking exactness on
    # both sides of the flip.
    rng = np.random.default_rng(7)
    la = lb = 80
    flipped = False
    for bits in range(14, 21):
        hi = 1 << bits
        method = choose_method(la, lb, hi - 1, hi - 1)
        a = rng.integers(0, hi, size=la)
        b = rng.integers(0, hi, size=lb)
        a[rng.integers(0, la)] = hi - 1
        b[rng.integers(0, lb)] = hi - 1
        got = convolve(a, b)
        assert got.tolist() == schoolbook_convolve(a, b)
        if method == "ntt":
            flipped = True
    assert flipped, "expected the error guard to force the modular path"


def test_prime_selection_tracks_bound():
    p1, p2 = NTT_PRIMES[0][0], NTT_PRIMES[1][0]
    assert len(_select_primes(10)) == 1
    assert len(_select_primes(p1 - 1)) == 1
    assert len(_select_primes(p1)) == 2
    assert len(_select_primes(p1 * p2)) == 3
    assert len(_select_primes((1 << 63) - 1)) == 3


@pytest.mark.parametrize("n_primes", [1, 2, 3])
def test_ntt_recombination_paths(n_primes):
    rng = np.random.default_rng(100 + n_primes)
    a = rng.integers(0, MAX_ENTRY + 1, size=90)
    b = rng.integers(0, MAX_ENTRY + 1, size=70)
    got = _ntt_convolve(a, b, None, force_primes=n_primes)
    expected = schoolbook_convolve(a, b)
    if n_primes == 1:
        # One prime only recovers residues; reduce the reference.
        expected = [v % NTT_PRIMES[0][0] for v in expected]
    assert got.tolist() == expected


def test_ntt_path_matches_schoolbook():
    rng = np.random.default_rng(11)
    for _ in range(10):
        la = int(rng.integers(40, 200))
        lb = int(rng.integers(40, 200))
        a = rng.integers(0, MAX_ENTRY + 1, size=la)
        b = rng.integers(0, MAX_ENTRY + 1, size=lb)
        assert choose_method(la, lb, int(a.max()), int(b.max())) == "ntt"
        assert convolve(a, b).tolist() == schoolbook_convolve(a, b)


def test_transform_length_counter():
    c = WorkCounters()
    convolve(np.ones(100, dtype=np.int64), np.ones(100, dtype=np.int64), counters=c)
    # result length 199 -> transform 256, three passes
    assert c.conv_transform_length_total == 3 * 256
    c2 = WorkCounters()
    convolve([1, 1], [1, 1], counters=c2)  # schoolbook: no transform
    assert c2.conv_transform_length_total == 0


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=1, max_size=200),
       st.lists(st.integers(0, 1), min_size=1, max_size=200))
def test_convolve_matches_schoolbook_binary(a, b):
    assert convolve(a, b).tolist() == schoolbook_convolve(a, b)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 1000), min_size=1, max_size=120),
       st.lists(st.integers(0, 1000), min_size=1, max_size=120))
def test_convolve_matches_schoolbook_small_ints(a, b):
    assert convolve(a, b).tolist() == schoolbook_convolve(a, b)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_correlate_matches_sliding_dot(data):
    t = data.draw(st.lists(st.integers(0, 1), min_size=1, max_size=150))
    p = data.draw(st.lists(st.integers(0, 1), min_size=1, max_size=len(t)))
    assert correlate_matches(t, p).tolist() == sliding_matches(t, p)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 9), min_size=1, max_size=90),
       st.lists(st.integers(0, 9), min_size=1, max_size=90))
def test_convolve_commutative(a, b):
    assert convolve(a, b).tolist() == convolve(b, a).tolist()


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_convolve_linear(data):
    n = data.draw(st.integers(1, 60))
    a = data.draw(st.lists(st.integers(0, 50), min_size=1, max_size=60))
    b = np.array(data.draw(st.lists(st.integers(0, 50), min_size=n, max_size=n)))
    c = np.array(data.draw(st.lists(st.integers(0, 50), min_size=n, max_size=n)))
    lhs = convolve(a, b + c)
    rhs = convolve(a, b) + convolve(a, c)
    assert lhs.tolist() == rhs.tolist()
