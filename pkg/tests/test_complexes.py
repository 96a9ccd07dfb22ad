"""Minimal and reduced-bar cochain models and the comparison morphisms."""

import random
from itertools import product

import pytest

from hhbv.algebra import AlgebraParams
from hhbv.cohomology import HochschildCohomology
from hhbv.complexes import (MinimalCochain, bar_diff, cochain_add, cochain_eq,
                            enumerate_bar_tuples, minimal_diff, mu_expand,
                            omega_summands, pair_indices, pullback,
                            pushforward, verify_chain_maps)
from hhbv.fields import Field, QQ

P23 = AlgebraParams(2, 3, QQ)

DESK = [AlgebraParams(2, 3, QQ), AlgebraParams(3, 2, QQ),
        AlgebraParams(2, 4, Field(2)), AlgebraParams(1, 3, QQ),
        AlgebraParams(3, 4, Field(3))]


def test_even_differential_example():
    d = minimal_diff(P23, MinimalCochain(0, {(1, 0): 1}))
    assert d.coeffs == {(2, 1): -1, (1, 1): 1}


def test_rotation_sums_are_cocycles():
    # sum_l (alpha_l^{kN}, alpha_l^i) dies under the even differential
    for par in DESK:
        for k in (0, 1):
            n = 2 * k
            for (l, i) in pair_indices(par, n):
                if i > par.N - 2:
                    continue
                f = MinimalCochain(n, {(l2, i): 1 for l2 in range(1, par.e + 1)})
                assert minimal_diff(par, f).is_zero()


def test_odd_differential_example():
    d = minimal_diff(P23, MinimalCochain(1, {(1, 0): 1}))
    assert d.degree == 2 and d.coeffs == {(1, 2): 2, (2, 2): 1}


def test_differential_squares_to_zero():
    for par in DESK:
        for n in range(6):
            for key in pair_indices(par, n):
                f = MinimalCochain(n, {key: 1})
                assert minimal_diff(par, minimal_diff(par, f)).is_zero()


def test_top_layer_killed():
    f = MinimalCochain(0, {(1, P23.N - 1): 1})
    assert minimal_diff(P23, f).is_zero()


def test_mu_degree_one():
    assert mu_expand(P23, 1, 1) == [(((1, 1),), (2, 0))]


def test_mu_degree_two_example():
    # N=3, generator at vertex 1: splits (1,1) with tail length 1 and (2,1)
    # with an empty tail, in lexicographic order
    assert mu_expand(P23, 2, 1) == [
        ((((1, 1)), (2, 1)), (1, 1)),
        ((((1, 2)), (1, 1)), (2, 0)),
    ]


def test_mu_forced_split_when_N_is_two():
    par = AlgebraParams(3, 2, QQ)
    terms = mu_expand(par, 3, 1)
    assert terms == [(((1, 1), (2, 1), (3, 1)), (1, 0))]


def test_mu_expansion_count():
    # before tail truncation the index tuples number exactly (N-1)^k
    for par in DESK:
        for n in range(7):
            k = n // 2
            raw = 0
            for xs in product(range(1, par.N), repeat=k):
                raw += 1
            assert raw == (par.N - 1) ** k
            assert len(mu_expand(par, n, 1)) <= raw


def test_omega_examples():
    assert omega_summands(P23, ((1, 1),)) == [((1, 0), (1, 1), (2, 0))]
    assert omega_summands(P23, ((1, 1), (2, 1))) == []       # product survives
    assert omega_summands(P23, ((1, 2), (1, 1))) == [((1, 0), (1, 3), (2, 0))]
    with pytest.raises(ValueError):
        omega_summands(P23, ())


def test_pullback_degree_zero_and_two():
    f0 = pullback(P23, MinimalCochain(0, {(1, 2): 1}))
    assert f0.evaluate(()) == {(1, 2): 1}
    x31 = MinimalCochain(2, {(1, 1): 1, (2, 1): 1})
    g = pullback(P23, x31)
    assert g.evaluate(((1, 2), (1, 1))) == {(1, 1): 1}
    assert g.evaluate(((1, 1), (2, 1))) == {}


def test_bar_differential_degree_zero():
    # b(a) sends a_1 to a*a_1 - a_1*a
    a = pullback(P23, MinimalCochain(0, {(1, 1): 1}))   # the element alpha_1
    da = bar_diff(P23, a)
    assert da.evaluate(((2, 1),)) == {(1, 2): 1, (2, 2): -1}
    assert da.evaluate(((1, 1),)) == {}                 # neither composes
    center = pullback(P23, MinimalCochain(0, {(1, 0): 1, (2, 0): 1}))
    dc = bar_diff(P23, center)
    for t in enumerate_bar_tuples(P23, 1):
        assert dc.evaluate(t) == {}


def test_bar_differential_squares_to_zero():
    rng = random.Random(7)
    par = P23
    for n in range(5):
        keys = pair_indices(par, n)
        coeffs = {k: rng.randrange(-3, 4) for k in keys}
        g = pullback(par, MinimalCochain(n, {k: c for k, c in coeffs.items() if c}))
        bb = bar_diff(par, bar_diff(par, g))
        for t in enumerate_bar_tuples(par, n + 2):
            assert bb.evaluate(t) == {}


def test_pushforward_inverts_pullback():
    for par in (P23, AlgebraParams(2, 4, QQ)):
        for n in range(5):
            for key in pair_indices(par, n):
                f = MinimalCochain(n, {key: 1})
                assert cochain_eq(par, pushforward(par, pullback(par, f)), f)


def test_chain_maps_desk():
    for par in DESK:
        assert verify_chain_maps(par, 5) == []


def test_mu_omega_identity_on_cohomology():
    # pushforward(pullback(f)) - f is a coboundary for every cocycle, ensured
    # here by invariance of the reduced class
    for par in (P23, AlgebraParams(2, 4, Field(2)), AlgebraParams(3, 2, Field(2))):
        hh = HochschildCohomology(par)
        for n in range(5):
            mat = hh.diff_matrix(n)
            for vec in mat.kernel_basis():
                f = hh.from_vector(n, vec)
                g = pushforward(par, pullback(par, f))
                diff = cochain_add(par, g, f, -1)
                cls, pre = hh.reduce_full(diff)
                assert cls.is_zero()
                assert cochain_eq(par, minimal_diff(par, pre), diff)
