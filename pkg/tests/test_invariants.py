"""Milnor numbers, Betti numbers, torsion, closed forms, branched covers."""

import random
from fractions import Fraction
from math import gcd

import pytest

from bhlink import (
    DiffeoType,
    WeightSystem,
    alpha,
    beta,
    betti,
    betti_subset_sum,
    branched_cover,
    coprime_profile,
    homology_profile,
    is_rational_homology_sphere,
    link_divisor,
    milnor_number,
    orlik_torsion,
)
from bhlink.errors import NonIntegralMilnor, PreconditionFailed

from generators import random_weight_system


def test_milnor_number_examples():
    assert milnor_number(WeightSystem((1, 1, 1, 1, 1), 2)) == 1
    assert milnor_number(WeightSystem((15, 35, 14, 7, 35), 105)) == 2184
    assert milnor_number(WeightSystem((576, 1399, 82, 256, 576), 2880)) == 5924


def test_milnor_number_rejects_non_integral():
    with pytest.raises(NonIntegralMilnor):
        milnor_number(WeightSystem((2, 3, 4, 5, 6), 7))


def test_betti_examples():
    assert betti(WeightSystem((15, 35, 15, 9, 32), 105)) == 24
    assert betti(WeightSystem((5, 35, 57, 64, 160), 320)) == 36
    assert betti(WeightSystem((73, 73, 95, 45, 80), 365)) == 0


def test_betti_routes_agree_on_random_systems():
    rng = random.Random(9)
    count = 0
    while count < 60:
        got = random_weight_system(rng)
        if got is None:
            continue
        count += 1
        _, ws = got
        assert link_divisor(ws).coefficient_sum() == betti_subset_sum(ws)


def test_orlik_torsion_examples():
    _, torsion = orlik_torsion(WeightSystem((15, 35, 14, 7, 35), 105))
    assert torsion == (7,) * 26
    _, torsion = orlik_torsion(WeightSystem((576, 1399, 82, 256, 576), 2880))
    assert torsion == (90, 18, 18, 18)
    _, torsion = orlik_torsion(WeightSystem((13, 13, 125, 100, 75), 325))
    assert torsion == (13,) * 24


def test_orlik_worksheet_structure():
    ws = WeightSystem((15, 35, 14, 7, 35), 105)
    sheet, torsion = orlik_torsion(ws)
    assert sheet.c[()] == gcd(*ws.reduced().u)
    assert all(value >= 1 for value in sheet.c.values())
    assert sheet.r == 26
    # divisibility chain
    for a, b in zip(torsion, torsion[1:]):
        assert a % b == 0


def test_homology_profile_examples():
    p = homology_profile(WeightSystem((219, 365, 420, 200, 260), 1460))
    assert (p.b3, p.torsion, p.mu) == (0, (73,), 1224)
    p = homology_profile(WeightSystem((1858, 6503, 9597, 315, 1239), 19509))
    assert (p.b3, p.torsion, p.mu) == (0, (929,), 17632)
    p = homology_profile(WeightSystem((1, 1, 1, 1, 1), 2))
    assert (p.b3, p.torsion, p.mu) == (0, (2,), 1)


def test_torsion_order_equals_delta_order_for_rhs():
    for w, d in [
        ((15, 35, 14, 7, 35), 105),
        ((13, 13, 125, 100, 75), 325),
        ((177, 295, 270, 370, 70), 1180),
    ]:
        ws = WeightSystem(w, d)
        profile = homology_profile(ws)
        assert profile.b3 == 0
        assert profile.torsion_order() == link_divisor(ws).delta_order_at_one()


def test_is_rational_homology_sphere():
    assert is_rational_homology_sphere(WeightSystem((73, 73, 95, 45, 80), 365))
    assert not is_rational_homology_sphere(WeightSystem((15, 35, 15, 9, 32), 105))
    assert not is_rational_homology_sphere(WeightSystem((1, 1, 1, 1, 1), 5))


def test_alpha_beta_closed_forms():
    ws = WeightSystem((881, 881, 465, 99, 318), 2643)
    split = ws.split()
    assert alpha(split) == 1
    assert beta(split) == 1
    _, torsion = orlik_torsion(ws)
    assert torsion == (881,) * (int(alpha(split)) + 1)

    ws = WeightSystem((73, 73, 95, 45, 80), 365)
    split = ws.split()
    assert alpha(split) == 3
    assert beta(split) == 1
    _, torsion = orlik_torsion(ws)
    assert torsion == (73,) * 4


def test_beta_is_one_for_rhs_splits():
    for w in [(65, 650, 1581, 867, 153), (118, 118, 185, 135, 35), (13, 13, 125, 100, 75)]:
        ws = WeightSystem(w, sum(w) - 1)
        assert betti(ws) == 0
        assert beta(ws.split()) == 1


def test_coprime_profile_quadric():
    p = coprime_profile(WeightSystem((1, 1, 1, 1, 1), 2))
    assert (p.torsion, p.mu) == ((2,), 1)


def test_coprime_profile_identity_with_positive_betti():
    # the identity mu + 1 = d (b + 1) holds even off the sphere case
    p = coprime_profile(WeightSystem((1, 1, 1, 1, 1), 5))
    assert p.b3 == 204
    assert p.mu + 1 == 5 * (p.b3 + 1)


def test_coprime_profile_identity_on_random_coprime_systems():
    rng = random.Random(10)
    count = 0
    while count < 40:
        got = random_weight_system(rng)
        if got is None:
            continue
        _, ws = got
        if any(gcd(ws.degree, w) != 1 for w in ws.weights):
            continue
        count += 1
        p = coprime_profile(ws)
        assert p.mu + 1 == ws.degree * (p.b3 + 1)


def test_coprime_profile_precondition():
    with pytest.raises(PreconditionFailed):
        coprime_profile(WeightSystem((15, 35, 14, 7, 35), 105))


def test_branched_cover_kervaire():
    # triple cover of the five-fold A1 quadric: exponents (3,2,2,2,2,2)
    cover, label = branched_cover(WeightSystem((1, 1, 1, 1, 1), 2), 3)
    assert cover == WeightSystem((2, 3, 3, 3, 3, 3), 6)
    assert label is DiffeoType.KERVAIRE
    assert link_divisor(cover).delta_eval(-1) % 8 == 3


def test_branched_cover_double_cover_not_homotopy_sphere():
    cover, label = branched_cover(WeightSystem((1, 1, 1, 1, 1), 2), 2)
    assert cover == WeightSystem((1, 1, 1, 1, 1, 1), 2)
    assert label is DiffeoType.NOT_HOMOTOPY_SPHERE


def test_branched_cover_guard_on_non_spheres():
    # covering a link with b3 > 0 never reaches the mod-8 classification
    _, label = branched_cover(WeightSystem((15, 35, 15, 9, 32), 105), 2)
    assert label is DiffeoType.NOT_HOMOTOPY_SPHERE


def test_branched_cover_standard_sphere_example():
    # 7-fold cover of the A1 five-fold: exponents (7,2,2,2,2,2) give
    # Delta(-1) = 7, congruent to -1 mod 8, hence the standard 9-sphere
    cover, label = branched_cover(WeightSystem((1, 1, 1, 1, 1), 2), 7)
    assert cover == WeightSystem((2, 7, 7, 7, 7, 7), 14)
    assert link_divisor(cover).delta_eval(-1) == 7
    assert label is DiffeoType.STANDARD


def test_six_variable_profile_with_torsion():
    # classical nine-dimensional example: exponents (3,3,3,2,2,2) give a
    # rational homology sphere with H = Z_2 + Z_2 and mu = 8
    ws = WeightSystem((2, 2, 2, 3, 3, 3), 6)
    profile = homology_profile(ws)
    assert (profile.b3, profile.torsion, profile.mu) == (0, (2, 2), 8)
    divisor = link_divisor(ws)
    assert divisor.delta_order_at_one() == 4

    from fractions import Fraction as F

    from oracles import characteristic_polynomial, poly_eval

    poly = characteristic_polynomial(divisor)
    # Delta has no root at 1 and |Delta(1)| equals the torsion order
    assert abs(poly_eval(poly, F(1))) == 4
    assert len(poly) - 1 == 8


def test_milnor_equals_root_count_on_random_systems():
    rng = random.Random(11)
    count = 0
    while count < 60:
        got = random_weight_system(rng)
        if got is None:
            continue
        count += 1
        _, ws = got
        assert milnor_number(ws) == link_divisor(ws).root_count()
