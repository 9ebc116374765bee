from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

import hurwitz.engine as engine
from hurwitz import (
    connected_from_log,
    disconnected_count_charsum,
    disconnected_count_operator,
    hurwitz_normalized,
    hurwitz_number,
    one_part_closed,
    one_part_closed_stirling,
    one_part_genus0,
    partitions_of,
    ramification,
    signed_surjection_count,
    stirling2,
    two_part_genus0,
)


def test_disconnected_charsum_examples():
    assert disconnected_count_charsum(3, 2, (3,)) == 1
    assert disconnected_count_charsum(1, 0, (1,)) == 1
    assert disconnected_count_charsum(2, 0, (1, 1)) == Fraction(1, 2)
    assert disconnected_count_charsum(3, 4, (3,)) == 9
    with pytest.raises(ValueError):
        disconnected_count_charsum(3, 1, (2,))


def test_disconnected_bruteforce_weight_oracle():
    # degree-2 weighted counts enumerated by hand: sigma = id needs an even
    # number of transpositions, sigma = (01) an odd number; one transposition
    # available, so exactly one tuple exists either way, weight 1/2!
    for r in range(5):
        expect_id = Fraction(1, 2) if r % 2 == 0 else Fraction(0)
        expect_swap = Fraction(1, 2) if r % 2 == 1 else Fraction(0)
        assert disconnected_count_charsum(2, r, (1, 1)) == expect_id
        assert disconnected_count_charsum(2, r, (2,)) == expect_swap


def test_disconnected_operator_examples():
    assert disconnected_count_operator(2, 1, (2,)) == Fraction(1, 2)
    assert disconnected_count_operator(2, 1, (1, 1)) == 0
    assert disconnected_count_operator(3, 2, (3,)) == 1


def test_disconnected_methods_agree():
    for d in range(1, 7):
        for mu in partitions_of(d):
            for r in range(9):
                assert disconnected_count_operator(d, r, mu) == disconnected_count_charsum(d, r, mu)


def test_hurwitz_base_and_spot_values(shared_cache):
    assert hurwitz_number(0, (1,), shared_cache) == 1
    assert hurwitz_number(2, (4,), shared_cache) == 5824
    assert hurwitz_number(6, (1,) * 6, shared_cache) == 287353806073982746560
    assert hurwitz_number(2, (1, 1, 1), shared_cache) == 364


def test_one_point_profiles_vanish(shared_cache):
    for g in range(1, 9):
        assert hurwitz_number(g, (1,), shared_cache) == 0


def test_half_values(shared_cache):
    for g in range(9):
        assert hurwitz_number(g, (2,), shared_cache) == Fraction(1, 2)
        assert hurwitz_number(g, (1, 1), shared_cache) == Fraction(1, 2)


def test_merge_identity(shared_cache):
    for n in range(2, 7):
        for g in range(5):
            assert hurwitz_number(g, (2,) + (1,) * (n - 2), shared_cache) == hurwitz_number(
                g, (1,) * n, shared_cache
            )


def test_recursion_termination_metric(shared_cache, monkeypatch):
    original = engine._h_rec
    stack = []
    seen_pairs = []

    def instrumented(g, lam, store):
        r = 2 * g - 2 + len(lam) + sum(lam)
        if stack:
            seen_pairs.append((stack[-1], r))
        stack.append(r)
        try:
            return original(g, lam, store)
        finally:
            stack.pop()

    monkeypatch.setattr(engine, "_h_rec", instrumented)
    engine.hurwitz_number(2, (3, 2), engine.HurwitzCache())
    assert seen_pairs, "recursion was expected to recurse"
    assert all(child < parent for parent, child in seen_pairs)


@given(st.randoms(use_true_random=False))
@settings(deadline=None, max_examples=25)
def test_hurwitz_is_permutation_invariant(rng):
    mu = [rng.randint(1, 4) for _ in range(rng.randint(1, 4))]
    g = rng.randint(0, 2)
    shuffled = list(mu)
    rng.shuffle(shuffled)
    assert hurwitz_number(g, shuffled) == hurwitz_number(g, mu)


def test_concurrent_recursion_into_shared_cache():
    from concurrent.futures import ThreadPoolExecutor

    cache = engine.HurwitzCache()
    keys = [(g, mu) for g in range(4) for mu in [(3, 1), (2, 2), (4,), (2, 1, 1), (1, 1, 1, 1)]]
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(lambda key: hurwitz_number(*key, cache), keys))
    fresh = engine.HurwitzCache()
    assert results == [hurwitz_number(g, mu, fresh) for g, mu in keys]


def test_connected_from_log_examples():
    assert connected_from_log(0, (3,)) == 1
    assert connected_from_log(1, (1,)) == 0
    assert connected_from_log(1, (2, 1)) == 40
    assert connected_from_log(1, (2, 1), method="charsum") == 40


def test_cross_method_equality_small(shared_cache):
    for n in range(1, 6):
        for mu in partitions_of(n):
            for g in range(3):
                h = hurwitz_number(g, mu, shared_cache)
                assert connected_from_log(g, mu, method="operator") == h
                assert connected_from_log(g, mu, method="charsum") == h


def test_hurwitz_normalized():
    assert hurwitz_normalized(0, (1,), Fraction(1)) == 1
    assert hurwitz_normalized(0, (1, 1), Fraction(1, 2)) == Fraction(1, 2)
    assert hurwitz_normalized(0, (3,), Fraction(1)) == Fraction(1, 2)


def test_normalized_form_of_recursion(shared_cache):
    # merge identity for flat profiles in normalized form:
    # r H(1^n) = binom(n,2) 2 H(2,1^(n-2))
    for n in range(2, 6):
        for g in range(3):
            flat = (1,) * n
            r = ramification(g, flat)
            lhs = r * hurwitz_normalized(g, flat, hurwitz_number(g, flat, shared_cache))
            merged = (2,) + (1,) * (n - 2)
            rhs = n * (n - 1) * hurwitz_normalized(g, merged, hurwitz_number(g, merged, shared_cache))
            assert lhs == rhs


def test_one_part_genus0():
    assert one_part_genus0(3) == 1
    assert one_part_genus0(4) == 4
    assert one_part_genus0(2) == Fraction(1, 2)
    assert one_part_genus0(1) == 1


def test_one_part_closed_examples():
    assert one_part_closed(1, 3) == 9
    assert one_part_closed(2, 5) == 328125
    for n in range(1, 9):
        assert one_part_closed(0, n) == one_part_genus0(n)


def test_one_part_closed_forms_agree_and_match_recursion(shared_cache):
    for n in range(1, 8):
        for g in range(5):
            closed = one_part_closed(g, n)
            assert closed == one_part_closed_stirling(g, n)
            if n >= 3:
                assert closed.denominator == 1 and closed > 0
    for n in range(3, 8):
        for g in range(5):
            assert one_part_closed(g, n) == hurwitz_number(g, (n,), shared_cache)


def test_stirling2():
    for p in range(8):
        assert stirling2(p, p) == 1
    assert stirling2(3, 2) == 3
    assert stirling2(4, 2) == 7
    # independent oracle: the explicit alternating-sum formula
    for p in range(9):
        for m in range(9):
            explicit = sum(
                (-1) ** (m - i) * factorial(m) // (factorial(i) * factorial(m - i)) * i**p
                for i in range(m + 1)
            )
            assert stirling2(p, m) * factorial(m) == explicit


def test_signed_surjection_count():
    assert signed_surjection_count(3, 2) == 0
    assert signed_surjection_count(3, 3) == -6
    assert signed_surjection_count(2, 4) == 14
    for m in range(8):
        for p in range(1, m):
            assert signed_surjection_count(m, p) == 0
        assert signed_surjection_count(m, m) == (-1) ** m * factorial(m)
        for p in range(9):
            assert signed_surjection_count(m, p) == stirling2(p, m) * (-1) ** m * factorial(m)


def test_two_part_genus0_examples(shared_cache):
    assert two_part_genus0(1, 1) == Fraction(1, 2)
    assert two_part_genus0(2, 2) == 12
    assert two_part_genus0(3, 2) == 216
    with pytest.raises(ValueError):
        two_part_genus0(1, 2)
    for a in range(1, 10):
        for b in range(1, a + 1):
            if a + b <= 10:
                assert two_part_genus0(a, b) == hurwitz_number(0, (a, b), shared_cache)
