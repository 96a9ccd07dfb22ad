"""Acceptance suite: one test per criterion, exact arithmetic, zero tolerance.

Each test prints a single pass line on success (run with -s to see them);
any failure carries the offending parameter set and witness.  The desk grid
is e in 1..5, N in 2..7 over Q, F_2, F_3, F_5.
"""

from hhbv.algebra import AlgebraParams
from hhbv.bv import criterion_check, delta_closed, verify_bv
from hhbv.cohomology import HHBasisElement, HochschildCohomology
from hhbv.complexes import verify_chain_maps
from hhbv.fields import Field, QQ
from hhbv.products import (bracket_closed, chain_jacobi_counterexample,
                           cup_closed, presentation, verify_gerstenhaber,
                           verify_presentation, verify_products_closed,
                           yoneda_lift_check)

FIELDS = (QQ, Field(2), Field(3), Field(5))
GRID = [(e, N, f) for e in range(1, 6) for N in range(2, 8) for f in FIELDS]

_CACHE: dict = {}


def hh_for(e, N, f) -> HochschildCohomology:
    key = (e, N, f)
    if key not in _CACHE:
        _CACHE[key] = HochschildCohomology(AlgebraParams(e, N, f))
    return _CACHE[key]


def test_criterion_01_dimension_agreement():
    """Closed dimension formula vs kernel/image computation, n <= 10."""
    for e, N, f in GRID:
        hh = hh_for(e, N, f)
        for n in range(11):
            computed = hh.dim_computed(n)
            formula = hh.dim_formula(n)
            assert computed == formula, (e, N, str(f), n, computed, formula)
    print("criterion 1 (dimension agreement, 120 parameter sets, n <= 10): PASS")


def test_criterion_02_bar_complex_oracle():
    """Reduced-bar brute force vs minimal-complex dimensions, n <= 4."""
    for (e, N) in ((2, 3), (2, 4), (3, 2)):
        for f in (QQ, Field(2), Field(3)):
            hh = hh_for(e, N, f)
            for n in range(5):
                assert hh.brute_force_dim(n) == hh.dim(n), (e, N, str(f), n)
    print("criterion 2 (bar-complex brute force, n <= 4): PASS")


def test_criterion_03_example_regime():
    """e=2, N=4 over F_2: presentation, brackets and the Delta table."""
    hh = hh_for(2, 4, Field(2))
    x = HHBasisElement("x", 0, 0, 2)      # (e_1, ab) + (e_2, ba)
    y = HHBasisElement("v", 1, 0, 1)      # (a, a)
    z = HHBasisElement("x", 2, 1, 0)      # ((ab)^2, e_1) + ((ba)^2, e_2)
    assert verify_presentation(hh, 8) == []
    pres = presentation(hh)
    images = {name: elem for name, _, elem in pres.generators}
    assert images["x0"] == x and images["y"] == y and images["z0"] == z
    # brackets: [x, y] = -x, everything else between generators vanishes
    assert hh.pretty(bracket_closed(hh, x, y)[0]) == "x[0,2]"
    for a, b in ((x, z), (y, z), (y, y), (x, x), (z, z)):
        assert bracket_closed(hh, a, b)[0].is_zero(), (a.name(), b.name())
    # Delta table: Delta(xy) = -x, all other listed values 0
    xy = HHBasisElement("v", 1, 0, 3)
    assert hh.pretty(delta_closed(hh, xy)) == "x[0,2]"
    assert delta_closed(hh, y).is_zero()
    assert delta_closed(hh, HHBasisElement("x", 2, 1, 2)).is_zero()   # xz
    assert delta_closed(hh, HHBasisElement("v", 3, 1, 1)).is_zero()   # yz
    assert delta_closed(hh, z).is_zero()
    assert delta_closed(hh, HHBasisElement("x", 4, 2, 0)).is_zero()   # z^2
    print("criterion 3 (e=2, N=4, F_2 example regime): PASS")


def test_criterion_04_05_closed_product_tables():
    """reduce(cup) == cup_closed and reduce(bracket) == bracket_closed for
    every basis pair of total degree <= 6, across the whole desk grid."""
    for e, N, f in GRID:
        hh = hh_for(e, N, f)
        failures = verify_products_closed(hh, 6)
        assert failures == [], (e, N, str(f), failures[:3])
    # the nonzero odd-odd witness is part of the sweep; pin it explicitly
    hh = hh_for(3, 2, Field(2))
    cls, _ = cup_closed(hh, HHBasisElement("y", 1, 0, 1),
                        HHBasisElement("y", 3, 1, 0))
    assert hh.pretty(cls) == "x[2,1]"
    print("criteria 4+5 (cup and bracket closed forms, full grid, "
          "total degree <= 6): PASS")


def test_criterion_06_gerstenhaber_axioms():
    """Axioms on cohomology to total degree 6 across the desk grid, and the
    recorded chain-level Jacobi failure at (2, 3, char 2)."""
    for e, N, f in GRID:
        hh = hh_for(e, N, f)
        failures = verify_gerstenhaber(hh, 6)
        assert failures == [], (e, N, str(f), failures[:3])
    ok, detail = chain_jacobi_counterexample(AlgebraParams(2, 3, Field(2)))
    assert ok, detail
    print("criterion 6 (Gerstenhaber axioms on 120 parameter sets + "
          "chain-level Jacobi counterexample): PASS")


def test_criterion_07_semisimplicity_agreement():
    """Criterion branch vs squarefree-minimal-polynomial oracle; the call
    raises internally on any disagreement."""
    count = 0
    for e, N, f in GRID:
        AlgebraParams(e, N, f).is_semisimple()
        count += 1
    assert count == 120
    print("criterion 7 (semisimplicity criterion vs minimal-polynomial "
          "oracle, 120 combos): PASS")


def test_criterion_08_bv_semisimple():
    """Duality-route oracle == closed Delta on odd degrees <= 5, Delta^2 = 0,
    and the BV identity to total degree 6, in every semisimple desk regime."""
    regimes = 0
    for e, N, f in GRID:
        par = AlgebraParams(e, N, f)
        if not par.is_semisimple():
            continue
        regimes += 1
        hh = hh_for(e, N, f)
        report = verify_bv(hh, 6, oracle_cutoff=5)
        assert report.ok, (e, N, str(f), report.failures[:3])
        assert report.oracle_checked, (e, N, str(f))
    print(f"criterion 8 (semisimple BV: oracle, Delta^2, identity; "
          f"{regimes} regimes): PASS")


def test_criterion_09_bv_nonsemisimple():
    """Criterion assumptions (1)-(3) and the BV identity with the canonical
    nonsemisimple Delta, in every nonsemisimple desk regime."""
    regimes = 0
    for e, N, f in GRID:
        par = AlgebraParams(e, N, f)
        if par.is_semisimple():
            continue
        regimes += 1
        hh = hh_for(e, N, f)
        assert criterion_check(hh, 6) == [], (e, N, str(f))
        report = verify_bv(hh, 6)
        assert report.ok, (e, N, str(f), report.failures[:3])
    assert regimes > 0
    print(f"criterion 9 (nonsemisimple criterion + BV identity; "
          f"{regimes} regimes): PASS")


PRESENTATION_INSTANCES = [
    ("r1", 3, 2, QQ), ("r2", 3, 2, Field(2)),
    ("r3", 2, 4, QQ), ("r4", 3, 5, Field(5)),
    ("r5", 2, 3, QQ), ("r6", 2, 3, Field(3)),
    ("r7", 2, 5, QQ), ("r8", 2, 5, Field(5)),
    ("loop-coprime", 1, 3, QQ), ("loop-divides", 1, 3, Field(3)),
    ("loop-coprime", 1, 4, QQ), ("loop-divides", 1, 4, Field(2)),
]


def test_criterion_10_presentations():
    """One desk instance per regime (plus both e=1 branches): relations
    vanish and normal-form counts match dimensions for n <= 8."""
    seen = set()
    for regime, e, N, f in PRESENTATION_INSTANCES:
        par = AlgebraParams(e, N, f)
        assert par.regime.presentation == regime, (regime, e, N, str(f))
        seen.add(regime)
        hh = hh_for(e, N, f)
        assert verify_presentation(hh, 8) == [], (regime, e, N, str(f))
    assert seen == {"r1", "r2", "r3", "r4", "r5", "r6", "r7", "r8",
                    "loop-coprime", "loop-divides"}
    print("criterion 10 (ring presentations, all regimes, n <= 8): PASS")


def test_criterion_11_comparison_morphisms():
    """Chain maps and omega*mu = id to degree 5; mu*omega induces the
    identity on cohomology to degree 4."""
    from hhbv.complexes import cochain_add, cochain_eq, minimal_diff, \
        pullback, pushforward
    for (e, N) in ((2, 3), (2, 4), (3, 2)):
        for f in (QQ, Field(2)):
            par = AlgebraParams(e, N, f)
            assert verify_chain_maps(par, 5) == [], (e, N, str(f))
            hh = hh_for(e, N, f)
            for n in range(5):
                for vec in hh.diff_matrix(n).kernel_basis():
                    c = hh.from_vector(n, vec)
                    rt = pushforward(par, pullback(par, c))
                    diff = cochain_add(par, rt, c, -1)
                    cls, pre = hh.reduce_full(diff)
                    assert cls.is_zero(), (e, N, str(f), n)
                    assert cochain_eq(par, minimal_diff(par, pre), diff)
    print("criterion 11 (comparison morphisms): PASS")


def test_criterion_12_yoneda_cross_check():
    """Composition product via explicit liftings equals the cup product."""
    hh = hh_for(3, 2, Field(2))
    assert yoneda_lift_check(hh, 5) == []
    print("criterion 12 (Yoneda lifting cross-check at (3, 2, F_2)): PASS")
