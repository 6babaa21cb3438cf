import cmath
import math
import random
from fractions import Fraction

import pytest

from parawheel import (
    ELLIPTIC,
    HYPERBOLIC,
    PARABOLIC,
    SL2,
    BranchCut,
    DualAffineMap,
    HyperNumber,
    IdealPoint,
    MoebiusPoint,
    NoDecomposition,
    OmegaPoint,
    ReprParams,
    Subgroup,
    ZeroDivisor,
    character,
    decompose,
    g_action,
    moebius_apply,
    r_factor,
    rep_apply,
    s_map,
    subgroup_element,
)
from support import rand_fraction, rand_sl2

F = Fraction
INDUCING = (Subgroup.K, Subgroup.A, Subgroup.NP)


def rand_upper_point(rng):
    u = rand_fraction(rng)
    v = rand_fraction(rng, lo=1, hi=9)
    return OmegaPoint(u, v)


# -- the section map ----------------------------------------------------------


def test_section_at_base_point_is_identity():
    assert s_map(OmegaPoint(0, 1)) == SL2.identity()


def test_section_example():
    assert s_map(OmegaPoint(F(1), F(4))).entries == (2, F(1, 2), 0, F(1, 2))


def test_section_determinant_is_one():
    rng = random.Random(3)
    for _ in range(50):
        s_map(rand_upper_point(rng))  # the SL2 constructor checks det == 1


def test_section_rejects_lower_half_plane():
    with pytest.raises(ValueError):
        s_map(OmegaPoint(0, -1))
    with pytest.raises(ValueError):
        s_map(OmegaPoint(2, 0))


# -- decomposition g = s(omega) h ------------------------------------------------


def test_decompose_section_itself():
    w = OmegaPoint(F(3), F(4))
    omega, h = decompose(s_map(w), Subgroup.K)
    assert omega == w
    assert h == SL2.identity()


def test_decompose_lower_shear():
    g = subgroup_element(Subgroup.NP, F(3))
    omega, h = decompose(g, Subgroup.NP)
    assert omega == OmegaPoint(0, 1)
    assert h == g


def test_decompose_reconstructs():
    rng = random.Random(5)
    done = 0
    while done < 80:
        g = rand_sl2(rng)
        sub = INDUCING[done % 3]
        try:
            omega, h = decompose(g, sub)
        except NoDecomposition:
            continue
        rec = s_map(omega) @ h
        assert all(
            abs(float(x) - float(y)) <= 1e-9 for x, y in zip(rec.entries, g.entries)
        )
        done += 1


def test_decompose_exact_on_rational_square_subdomain():
    # d = 1/sqrt(v) rational makes the N' decomposition exact
    g = SL2(F(5, 4), F(1, 2), F(3), F(2))
    omega, h = decompose(g, Subgroup.NP)
    assert omega == OmegaPoint(F(1, 4), F(1, 4))
    assert s_map(omega) @ h == g


def test_decompose_failure_cases():
    with pytest.raises(NoDecomposition):
        decompose(SL2(1, 0, 0, 1) @ SL2(-1, 0, 0, -1), Subgroup.NP)  # d < 0
    with pytest.raises(NoDecomposition):
        decompose(SL2(0, -1, 1, 0), Subgroup.A)  # d**2 - c**2 < 0


# -- the plane action --------------------------------------------------------------


def test_action_of_identity():
    w = OmegaPoint(F(2), F(3))
    for sub in INDUCING:
        assert g_action(SL2.identity(), w, sub) == w


def test_lower_action_is_translation_for_upper_shear():
    g = SL2(1, 1, 0, 1)
    assert g_action(g, OmegaPoint(F(5), F(7)), Subgroup.NP) == OmegaPoint(6, 7)


def test_action_matches_moebius_in_matching_zone():
    rng = random.Random(7)
    zones = {Subgroup.K: ELLIPTIC, Subgroup.A: HYPERBOLIC, Subgroup.NP: PARABOLIC}
    done = 0
    while done < 90:
        sub = INDUCING[done % 3]
        g = rand_sl2(rng)
        w = rand_upper_point(rng)
        try:
            moved = g_action(g, w, sub)
        except IdealPoint:
            continue
        z = HyperNumber(zones[sub], w.u, w.v)
        image = moebius_apply(g, MoebiusPoint.from_affine(z))
        if not image.is_finite():
            continue
        aff = image.as_affine()
        assert (aff.u, aff.v) == (moved.u, moved.v)
        done += 1


def test_action_is_left_action():
    rng = random.Random(11)
    done = 0
    while done < 90:
        sub = INDUCING[done % 3]
        g1, g2 = rand_sl2(rng), rand_sl2(rng)
        w = rand_upper_point(rng)
        try:
            lhs = g_action(g1 @ g2, w, sub)
            rhs = g_action(g1, g_action(g2, w, sub), sub)
        except IdealPoint:
            continue
        assert lhs == rhs
        done += 1


def test_action_preserves_upper_half_plane_for_k_and_lower():
    rng = random.Random(13)
    for _ in range(60):
        g = rand_sl2(rng)
        w = rand_upper_point(rng)
        assert g_action(g, w, Subgroup.K).v > 0
        try:
            assert g_action(g, w, Subgroup.NP).v > 0
        except IdealPoint:
            pass


def test_hyperbolic_action_produces_both_signs():
    rng = random.Random(17)
    signs = set()
    for _ in range(300):
        g = rand_sl2(rng)
        w = rand_upper_point(rng)
        try:
            signs.add(g_action(g, w, Subgroup.A).v > 0)
        except IdealPoint:
            continue
        if len(signs) == 2:
            break
    assert signs == {True, False}


def test_action_vanishing_denominator():
    with pytest.raises(IdealPoint):
        g_action(SL2(0, -1, 1, 0), OmegaPoint(F(0), F(1)), Subgroup.NP)


# -- the subgroup factor -------------------------------------------------------------


def test_r_factor_of_identity():
    w = OmegaPoint(F(1), F(2))
    for sub in INDUCING:
        assert r_factor(SL2.identity(), w, sub) == SL2.identity()


def test_r_factor_lower_example():
    g = SL2(1, 0, 1, 1).inverse()  # so that g^-1 = (1,0;1,1)
    assert r_factor(g, OmegaPoint(F(0), F(1)), Subgroup.NP) == SL2(1, 0, 1, 1)


def test_r_factor_agrees_with_decomposition():
    rng = random.Random(19)
    done = 0
    while done < 60:
        sub = INDUCING[done % 3]
        g = rand_sl2(rng)
        w = rand_upper_point(rng)
        try:
            factor = r_factor(g, w, sub)
            _, h = decompose(g.inverse() @ s_map(w), sub)
        except (IdealPoint, NoDecomposition):
            continue
        assert all(
            abs(float(x) - float(y)) <= 1e-9
            for x, y in zip(factor.entries, h.entries)
        )
        done += 1


# -- characters ------------------------------------------------------------------------


def test_trivial_rotation_character():
    assert character(ReprParams(Subgroup.K, 0), 0.7) == HyperNumber.one(ELLIPTIC)


def test_rotation_character_quarter_turn():
    got = character(ReprParams(Subgroup.K, 1), math.pi / 2)
    assert got.isclose(HyperNumber.unit(ELLIPTIC))


def test_hyperbolic_character_value():
    sigma, t = 1.5, 0.4
    got = character(ReprParams(Subgroup.A, sigma), t)
    assert got.isclose(
        HyperNumber(HYPERBOLIC, math.cosh(sigma * t), math.sinh(sigma * t))
    )


def test_parabolic_character_at_zero():
    # applying the affine character map to w = 0 exposes its shift part
    kappa, t = F(3, 2), F(5)
    chi = character(ReprParams(Subgroup.NP, kappa), t)
    kt = kappa * t
    assert chi(HyperNumber.zero(PARABOLIC)) == HyperNumber(PARABOLIC, kt, kt * kt)


def test_character_multiplicativity():
    t1, t2 = 0.3, -0.8
    for sub, par in ((Subgroup.K, 3), (Subgroup.A, 1.5)):
        params = ReprParams(sub, par)
        prod = character(params, t1) * character(params, t2)
        assert prod.isclose(character(params, t1 + t2))
    params = ReprParams(Subgroup.NP, F(2, 3))
    chi1, chi2 = character(params, F(1, 2)), character(params, F(5, 3))
    assert chi1.compose(chi2) == character(params, F(1, 2) + F(5, 3))


def test_k_character_needs_integer():
    with pytest.raises(ValueError):
        ReprParams(Subgroup.K, F(1, 2))


# -- pointwise induced operators ----------------------------------------------------------


def _poly(w: HyperNumber) -> HyperNumber:
    return w * w + 3 * w + 2


def test_rep_identity_evaluates_function():
    w = HyperNumber(ELLIPTIC, F(1), F(2))
    got = rep_apply(ReprParams(Subgroup.K, 2), SL2.identity(), _poly, w)
    assert got == _poly(w)


def test_rep_rotation_spot_value():
    # n = 2, g^-1 = (1,0;1,1), f = 1: the prefactor at w = i is
    # (conj(w)+1)/(w+1) = -i
    params = ReprParams(Subgroup.K, 2)
    g = SL2(1, 0, 1, 1).inverse()
    one = lambda z: HyperNumber.one(z.sigma)
    got = rep_apply(params, g, one, HyperNumber(ELLIPTIC, 0, 1))
    assert got == HyperNumber(ELLIPTIC, 0, -1)


def test_rep_odd_winding_uses_principal_branch():
    params = ReprParams(Subgroup.K, 1)
    g = SL2(1, 0, 1, 1).inverse()
    one = lambda z: HyperNumber.one(z.sigma)
    got = rep_apply(params, g, one, HyperNumber(ELLIPTIC, 0.0, 1.0))
    want = cmath.sqrt((complex(0, -1) + 1) / (complex(0, 1) + 1))
    assert abs(got.u - want.real) <= 1e-12 and abs(got.v - want.imag) <= 1e-12


def test_rep_parabolic_formula_spot():
    # kappa = 1, g^-1 = (1,0;1,1): at w = p (u=0, v=1) the image is
    # w/(w+1) and the corrections use q = v*c/(c*u+d) = 1
    params = ReprParams(Subgroup.NP, F(1))
    g = SL2(1, 0, 1, 1).inverse()
    w = HyperNumber(PARABOLIC, F(0), F(1))
    f = lambda z: z
    image = (w) * (w + 1).reciprocal()
    want = HyperNumber(PARABOLIC, 1, -2) * image + HyperNumber(PARABOLIC, -1, 1)
    assert rep_apply(params, g, f, w) == want


def test_rep_homomorphism_samples():
    rng = random.Random(23)
    cases = (
        (ReprParams(Subgroup.K, 2), ELLIPTIC),
        (ReprParams(Subgroup.A, 2), HYPERBOLIC),
        (ReprParams(Subgroup.NP, F(1)), PARABOLIC),
    )
    for params, zone in cases:
        done = 0
        while done < 10:
            g1, g2 = rand_sl2(rng), rand_sl2(rng)
            w = HyperNumber(zone, rand_fraction(rng), rand_fraction(rng, lo=1, hi=9))
            try:
                lhs = rep_apply(params, g1 @ g2, _poly, w)
                inner = lambda z: rep_apply(params, g2, _poly, z)
                rhs = rep_apply(params, g1, inner, w)
            except (ZeroDivisor, ValueError):
                continue
            assert lhs.isclose(rhs, 1e-7)
            done += 1


def test_rep_zone_and_domain_guards():
    params = ReprParams(Subgroup.K, 2)
    with pytest.raises(ValueError):
        rep_apply(params, SL2.identity(), _poly, HyperNumber(PARABOLIC, 1, 1))
    with pytest.raises(ValueError):
        rep_apply(params, SL2.identity(), _poly, HyperNumber(ELLIPTIC, 1, -1))


def test_rep_zero_divisor_denominator():
    params = ReprParams(Subgroup.NP, F(1))
    # choose g so that g^-1 = (a,b;c,d) has c*u + d = 0 at u = 2
    ginv = SL2(F(0), F(-1), F(1), F(-2))
    g = ginv.inverse()
    w = HyperNumber(PARABOLIC, F(2), F(3))
    with pytest.raises(ZeroDivisor):
        rep_apply(params, g, _poly, w)


def test_rep_hyperbolic_branch_cut():
    params = ReprParams(Subgroup.A, 1)  # odd parameter forces a half-power
    ginv = SL2(0, -1, 1, 0)
    g = ginv.inverse()
    w = HyperNumber(HYPERBOLIC, 1.0, 2.0)  # (conj(w))/w has negative real part
    with pytest.raises(BranchCut):
        rep_apply(params, g, lambda z: z, w)


def test_affine_map_algebra():
    m1 = DualAffineMap(HyperNumber(PARABOLIC, 1, 2), HyperNumber(PARABOLIC, 3, 4))
    m2 = DualAffineMap(HyperNumber(PARABOLIC, 1, -1), HyperNumber(PARABOLIC, 0, 1))
    w = HyperNumber(PARABOLIC, F(1), F(1))
    assert m1.compose(m2)(w) == m1(m2(w))
