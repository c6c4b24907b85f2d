import pytest
from hypothesis import given, strategies as hst

from frobkit.veronese import (
    VeroneseModule,
    canonical_class,
    decompose,
    decompose_brute,
    dual_b_lower,
    dual_b_upper,
    residue_pair_counts,
    splitting_number,
)


@hst.composite
def veronese_modules(draw, max_n=6):
    n = draw(hst.integers(2, max_n))
    p = draw(hst.sampled_from([p for p in (2, 3, 5, 7, 11, 13) if n % p]))
    l = draw(hst.integers(0, n - 1))
    return VeroneseModule(n, l, p)


def test_construction_rejects_bad_input():
    with pytest.raises(ValueError, match="divides"):
        VeroneseModule(4, 1, 2)
    with pytest.raises(ValueError):
        VeroneseModule(3, 3, 2)
    with pytest.raises(ValueError):
        VeroneseModule(1, 0, 2)
    with pytest.raises(ValueError, match="prime"):
        VeroneseModule(3, 0, 4)


@pytest.mark.parametrize(
    "n, l, p, e, mult",
    [
        (3, 0, 2, 1, (1, 2, 1)),
        (3, 1, 2, 1, (2, 1, 1)),
        (4, 2, 3, 1, (3, 2, 2, 2)),
        (2, 0, 3, 2, (41, 40)),
    ],
)
def test_decompose_examples(n, l, p, e, mult):
    V = VeroneseModule(n, l, p)
    assert decompose(V, e).mult == mult
    assert decompose_brute(V, e).mult == mult


@given(veronese_modules())
def test_identity_level(V):
    assert decompose(V, 0).mult == tuple(int(i == V.l) for i in range(V.n))


def test_residue_counts_against_enumeration():
    for q in range(1, 20):
        for n in range(2, 7):
            brute = [0] * n
            for a in range(q):
                for b in range(q):
                    brute[(a + b) % n] += 1
            assert residue_pair_counts(q, n) == brute


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_closed_form_matches_brute_force(n, p):
    if n % p == 0:
        pytest.skip("p divides n")
    for l in range(n):
        V = VeroneseModule(n, l, p)
        e = 0
        while p**e <= 9:
            assert decompose(V, e).mult == decompose_brute(V, e).mult
            e += 1


@given(veronese_modules(), hst.integers(0, 30))
def test_rank_and_equidistribution(V, e):
    dec = decompose(V, e)
    q = dec.q
    assert dec.rank == q * q
    assert all(abs(a * V.n - q * q) <= q * V.n for a in dec.mult)


def test_splitting_number_examples():
    assert splitting_number(VeroneseModule(3, 0, 2), 1) == 1
    assert splitting_number(VeroneseModule(2, 0, 3), 1) == 5
    assert [splitting_number(VeroneseModule(2, 0, 3), e) for e in (1, 2)] == [5, 41]


def test_splitting_tends_to_one_over_n():
    V = VeroneseModule(2, 0, 3)
    e = 20
    assert abs(splitting_number(V, e) / 3 ** (2 * e) - 0.5) < 1e-9


def test_dual_bound_examples():
    V = VeroneseModule(3, 1, 2)
    assert dual_b_lower(V, 1) == 2 and dual_b_upper(V, 1) == 2
    V = VeroneseModule(4, 2, 3)
    assert dual_b_lower(V, 1) == 4 and dual_b_upper(V, 1) == 4


@given(veronese_modules(), hst.integers(0, 25))
def test_bound_sandwich(V, e):
    lo, hi = dual_b_lower(V, e), dual_b_upper(V, e)
    q = V.p**e
    assert lo <= hi <= q * q


@given(veronese_modules(), hst.integers(0, 25))
def test_free_class_bounds_coincide(V, e):
    R = VeroneseModule(V.n, 0, V.p)
    a = splitting_number(R, e)
    assert dual_b_lower(R, e) == dual_b_upper(R, e) == a


@given(veronese_modules(), hst.integers(0, 25))
def test_canonical_dominates_free(V, e):
    omega = VeroneseModule(V.n, canonical_class(V.n), V.p)
    assert dual_b_lower(omega, e) >= splitting_number(VeroneseModule(V.n, 0, V.p), e)


@given(veronese_modules(), hst.integers(4, 30))
def test_bounds_approach_limit(V, e):
    q = V.p**e
    target = (V.l + 2) / (2 * V.n)
    for b in (dual_b_lower(V, e), dual_b_upper(V, e)):
        assert abs(b / q**2 - target) <= (V.l + 2) / q


def test_canonical_class():
    assert [canonical_class(n) for n in (2, 3, 6)] == [0, 1, 4]
