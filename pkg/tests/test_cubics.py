import random
from fractions import Fraction

import pytest

from kleinfano.cubics import (
    CubicForm,
    KLEIN_WEIGHTS,
    ORDER11_X3_WEIGHTS,
    ORDER7_WEIGHTS,
    WeightSystem,
    admissible_weight_orbits,
    all_cubic_monomials,
    certify_singular_support,
    character_decomposition,
    coordinate_point,
    decomposition_multiplicities,
    format_monomial,
    is_smooth,
    order7_nonexistence,
    order11_x3_elimination,
    parse_cubic,
    parse_monomial,
    sample_members,
    scan_weight_system,
)


def klein():
    return CubicForm.klein()


# ---------------------------------------------------------------------------
# the Klein cubic and its invariances
# ---------------------------------------------------------------------------

def test_klein_has_five_unit_monomials():
    k = klein()
    assert len(k.terms) == 5
    assert all(c == 1 for c in k.terms.values())


def test_klein_invariant_under_order_five_permutation():
    assert klein().permute_variables((4, 0, 3, 1, 2)) == klein()


def test_klein_is_weight_zero_eigenvector():
    ws = WeightSystem(11, KLEIN_WEIGHTS)
    assert all(ws.character(m) == 0 for m in klein().monomials())


def test_klein_is_smooth_by_both_routes():
    assert is_smooth(klein(), prepass_prime=10007)
    assert is_smooth(klein(), prepass_prime=None)


# ---------------------------------------------------------------------------
# character decompositions
# ---------------------------------------------------------------------------

def test_monomial_universe():
    monos = all_cubic_monomials()
    assert len(monos) == 35
    assert all(sum(m) == 3 for m in monos)


def test_order7_first_case_multiplicities():
    ws = WeightSystem(7, (1, 2, 3, 0, 0))
    assert decomposition_multiplicities(ws) == (6, 4, 6, 6, 5, 4, 4)


def test_order7_first_case_chi0_monomials():
    ws = WeightSystem(7, (1, 2, 3, 0, 0))
    chi0 = character_decomposition(ws)[0]
    expected = {
        parse_monomial(s)
        for s in ("x4^3", "x4^2*x5", "x4*x5^2", "x5^3", "x2^2*x3", "x1*x3^2")
    }
    assert set(chi0) == expected


def test_decomposition_partitions_the_monomials():
    for modulus, weights in (
        (7, (1, 2, 3, 0, 0)),
        (7, (1, 2, 4, 0, 0)),
        (11, ORDER11_X3_WEIGHTS),
        (11, KLEIN_WEIGHTS),
    ):
        ws = WeightSystem(modulus, weights)
        dec = character_decomposition(ws)
        seen = [m for c in range(modulus) for m in dec[c]]
        assert len(seen) == 35 and len(set(seen)) == 35
        for c in range(modulus):
            assert all(ws.character(m) == c for m in dec[c])


def test_diagonal_action_scales_each_monomial_by_its_character():
    from kleinfano.scalars import CycElem

    ws = WeightSystem(11, KLEIN_WEIGHTS)
    rng = random.Random(0)
    for _ in range(10):
        mono = rng.choice(all_cubic_monomials())
        point = [CycElem.zeta(rng.randint(0, 10)) for _ in range(5)]
        scaled = [CycElem.zeta(w) * z for w, z in zip(ws.weights, point)]
        f = CubicForm({mono: Fraction(1)})
        assert f.evaluate(scaled) == CycElem.zeta(ws.character(mono)) * f.evaluate(point)


def test_admissible_weight_orbits_mod_seven():
    orbits = admissible_weight_orbits(7)
    assert orbits == {(1, 2, 3), (1, 2, 4)}


# ---------------------------------------------------------------------------
# singularity certificates
# ---------------------------------------------------------------------------

def test_chi0_certificate_for_first_order7_case():
    ws = WeightSystem(7, (1, 2, 3, 0, 0))
    chi0 = character_decomposition(ws)[0]
    cert = certify_singular_support(chi0)
    assert cert.kind == "coordinate-point"
    assert cert.witness == 0  # the list has x1*x3^2 but no x1^3 or x1^2*x_j


def test_full_support_has_no_certificate():
    assert certify_singular_support(all_cubic_monomials()).kind == "none"


def test_single_cube_certificate():
    cert = certify_singular_support([(3, 0, 0, 0, 0)])
    assert cert.kind == "coordinate-point" and cert.witness == 1


def test_certificate_soundness_on_sampled_members():
    ws = WeightSystem(7, (1, 2, 3, 0, 0))
    rng = random.Random(1)
    for character, monos in character_decomposition(ws).items():
        if not monos:
            continue
        cert = certify_singular_support(monos)
        assert cert.kind == "coordinate-point"
        point = coordinate_point(cert.witness)
        for member in sample_members(monos, 20, rng):
            assert member.evaluate(point) == 0
            # all five partials vanish at the witness coordinate point
            for partial in member.partials():
                total = Fraction(0)
                for mono, coeff in partial.items():
                    term = coeff
                    for x, e in zip(point, mono):
                        term *= x ** e
                    total += term
                assert total == 0


def test_oracle_agrees_with_certificates_on_certified_sets():
    ws = WeightSystem(7, (1, 2, 4, 0, 0))
    rng = random.Random(2)
    for monos in character_decomposition(ws).values():
        if not monos:
            continue
        if certify_singular_support(monos).kind != "coordinate-point":
            continue
        member = sample_members(monos, 1, rng)[0]
        assert not is_smooth(member)


# ---------------------------------------------------------------------------
# smoothness oracle battery
# ---------------------------------------------------------------------------

def fermat():
    return CubicForm({
        tuple(3 if i == j else 0 for i in range(5)): Fraction(1) for j in range(5)
    })


def test_oracle_battery():
    assert is_smooth(fermat(), None)
    assert not is_smooth(CubicForm({(3, 0, 0, 0, 0): Fraction(1)}), None)
    cone = parse_cubic("x1^3=1;x2^3=1;x3^3=1;x4^3=1")  # cone over a surface
    assert not is_smooth(cone, None)
    nodal = parse_cubic("x1*x2*x3=1;x4^3=1;x5^3=1;x1^3=1;x2^3=1;x3^3=1")
    assert is_smooth(nodal, None) == is_smooth(nodal, 10007)


def test_oracle_invariant_under_invertible_linear_changes():
    rng = random.Random(3)
    battery = [
        (klein(), True),
        (fermat(), True),
        (CubicForm({(3, 0, 0, 0, 0): Fraction(1)}), False),
        (parse_cubic("x1^3=1;x2^3=1;x3^3=1;x4^3=1"), False),
    ]
    changes = []
    while len(changes) < 3:
        m = [[rng.randint(-2, 2) for _ in range(5)] for _ in range(5)]
        from kleinfano.matrices import Matrix, det

        if det(Matrix(m)) != 0:
            changes.append(m)
    for form, smooth in battery:
        for m in changes:
            assert is_smooth(form.linear_substitution(m)) == smooth


def test_prepass_rejects_bad_primes():
    with pytest.raises(ValueError):
        is_smooth(klein(), prepass_prime=4)
    with pytest.raises(ValueError):
        is_smooth(klein(), prepass_prime=3)


def test_zero_form_rejected():
    with pytest.raises(ValueError):
        is_smooth(CubicForm({}), None)


# ---------------------------------------------------------------------------
# the order-7 and order-11 drivers
# ---------------------------------------------------------------------------

def test_order7_scan_certifies_all_fourteen_eigenspaces():
    report = order7_nonexistence(seed=0, samples=5)
    assert report.orbits == ((1, 2, 3), (1, 2, 4))
    assert len(report.scans) == 2
    for weights, scan in zip(ORDER7_WEIGHTS, report.scans):
        assert len(scan) == 7
        assert all(s.weights == weights for s in scan)
        assert all(s.certificate.kind == "coordinate-point" for s in scan)
    assert not report.smooth_member_found


def test_order11_scan_certifies_all_eigenspaces_with_klein_control():
    report = order11_x3_elimination(seed=0, samples=5)
    assert len(report.scan) == 11
    assert all(s.certificate.kind == "coordinate-point" for s in report.scan)
    assert not report.smooth_member_found
    assert report.klein_monomials_in_chi0
    assert report.klein_chi0_certificate == "none"
    assert report.klein_is_smooth
    assert set(report.klein_chi0) == klein().monomials()


def test_scan_falls_back_to_sampling_on_uncertified_support():
    # every member of this support is divisible by x1, hence singular,
    # but no coordinate-point certificate exists
    support = (
        (2, 1, 0, 0, 0), (1, 2, 0, 0, 0), (1, 0, 2, 0, 0),
        (1, 0, 0, 2, 0), (1, 0, 0, 0, 2),
    )
    assert certify_singular_support(support).kind == "none"
    rng = random.Random(4)
    members = sample_members(support, 6, rng)
    assert all(not is_smooth(m) for m in members)


def test_sampling_detects_smooth_members():
    support = (
        (3, 0, 0, 0, 0), (0, 3, 0, 0, 0), (0, 0, 3, 0, 0),
        (0, 0, 0, 3, 0), (0, 0, 0, 0, 3), (2, 1, 0, 0, 0),
    )
    rng = random.Random(5)
    members = sample_members(support, 3, rng)
    assert any(is_smooth(m) for m in members)


def test_scan_is_deterministic_for_fixed_seed():
    a = scan_weight_system(WeightSystem(7, (1, 2, 3, 0, 0)), seed=3, samples=4)
    b = scan_weight_system(WeightSystem(7, (1, 2, 3, 0, 0)), seed=3, samples=4)
    assert a == b


def test_sample_members_are_distinct_and_positive():
    rng = random.Random(6)
    monos = character_decomposition(WeightSystem(7, (1, 2, 3, 0, 0)))[0]
    for member in sample_members(monos, 10, rng):
        coeffs = list(member.terms.values())
        assert len(set(coeffs)) == len(coeffs)
        assert all(c > 0 for c in coeffs)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def test_parse_and_format_cubic():
    f = parse_cubic("x1^2*x2=1; x3^3=-1/2")
    assert f.terms == {(2, 1, 0, 0, 0): Fraction(1), (0, 0, 3, 0, 0): Fraction(-1, 2)}
    assert format_monomial((2, 1, 0, 0, 0)) == "x1^2*x2"


def test_parse_cubic_rejects_bad_degree():
    with pytest.raises(ValueError):
        parse_cubic("x1^2=1")
    with pytest.raises(ValueError):
        parse_cubic("x1*x2")
    with pytest.raises(ValueError):
        parse_cubic("x9^3=1")
