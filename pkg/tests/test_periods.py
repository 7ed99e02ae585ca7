import random
from fractions import Fraction

import pytest

from kleinfano.matrices import Matrix, det, invariant_chain_f11
from kleinfano.periods import (
    PeriodVector,
    alternating_form,
    build_quotient,
    claimed_dual_coordinate_matrix,
    claimed_quotient_action_t,
    claimed_quotient_action_w,
    claimed_r1_lattice,
    claimed_r2_lattice,
    claimed_unimodular_factor,
    diagonal_automorphism,
    difference_generators,
    dual_coordinate_matrix,
    dual_lattice,
    dual_vectors_ecoords,
    exponent_matrix,
    from_v_coords,
    gram_alternating,
    hermitian_invariance_check,
    homology_lattice,
    lattice_chain,
    orbit_z_span_matches_ring_span,
    permutation_automorphism,
    pfaffian_squared,
    quotient_image,
    span_lattice,
    stabilizes,
    t_representatives,
    tau_on_orbit_coords,
    to_v_coords,
    unimodular_scan,
    v_vector,
)
from kleinfano.scalars import CycElem, QuadInt, QuadRat


# ---------------------------------------------------------------------------
# orbit vectors and coordinates
# ---------------------------------------------------------------------------

def test_orbit_vector_basics():
    assert v_vector(0).e_coords == (CycElem.one(),) * 5
    assert v_vector(3) == v_vector(14)
    total = PeriodVector((CycElem.zero(),) * 5)
    for k in range(11):
        total = total + v_vector(k)
    assert total.is_zero()


def test_tau_shifts_the_orbit_and_sigma_multiplies_index_by_five():
    tau, sigma = diagonal_automorphism(), permutation_automorphism()
    for k in range(11):
        assert tau.apply(v_vector(k)) == v_vector(k + 1)
        assert sigma.apply(v_vector(k)) == v_vector((5 * k) % 11)


def test_automorphism_orders():
    assert diagonal_automorphism().order() == 11
    assert permutation_automorphism().order() == 5


def test_eleventh_power_of_tau_fixes_random_vectors():
    rng = random.Random(0)
    tau = diagonal_automorphism()
    v = PeriodVector(tuple(CycElem.zeta(rng.randint(0, 10)) for _ in range(5)))
    w = v
    for _ in range(11):
        w = tau.apply(w)
    assert w == v


def test_fifth_orbit_vector_relation():
    assert to_v_coords(v_vector(5)) == (
        QuadRat(1), QuadRat(1, 1), QuadRat(-1), QuadRat(1), QuadRat(0, 1)
    )


def test_nu_times_v0_is_an_orbit_sum():
    lhs = to_v_coords(v_vector(0).scale(QuadRat(0, 1)))
    acc = [QuadRat(0)] * 5
    for k in (1, 3, 4, 5, 9):
        acc = [a + c for a, c in zip(acc, to_v_coords(v_vector(k)))]
    assert list(lhs) == acc


def test_unit_orbit_coordinates():
    assert to_v_coords(v_vector(2)) == (
        QuadRat(0), QuadRat(0), QuadRat(1), QuadRat(0), QuadRat(0)
    )


def test_coordinates_round_trip_on_random_ring_combinations():
    rng = random.Random(1)
    for _ in range(10):
        coords = tuple(
            QuadRat(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(5)
        )
        assert to_v_coords(from_v_coords(coords)) == coords


def test_vector_outside_quadratic_span_is_rejected():
    e1 = PeriodVector((CycElem.one(), CycElem.zero(), CycElem.zero(),
                       CycElem.zero(), CycElem.zero()))
    with pytest.raises(ValueError):
        to_v_coords(e1)


def test_exponent_matrix_determinant_is_vandermonde_product():
    a = exponent_matrix()
    product = CycElem.one()
    roots = [CycElem.zeta(w) for w in (1, 9, 3, 4, 5)]
    for j in range(5):
        for k in range(j + 1, 5):
            product = product * (roots[k] - roots[j])
    assert det(a) == product
    assert det(a) != CycElem.zero()


def test_dual_vectors_solve_the_exponent_system():
    a = exponent_matrix()
    duals = dual_vectors_ecoords()
    assert a * duals == Matrix.identity(5, CycElem.one())


# ---------------------------------------------------------------------------
# the certified lattice presentations
# ---------------------------------------------------------------------------

def test_orbit_lattice_is_the_unit_lattice():
    assert span_lattice().basis == Matrix.identity(5, QuadRat(1))


def test_orbit_z_span_certification():
    assert orbit_z_span_matches_ring_span()


def test_dual_coordinate_matrix_matches_claim():
    assert dual_coordinate_matrix() == claimed_dual_coordinate_matrix()
    entry = dual_coordinate_matrix()[0, 1]
    assert entry == QuadRat(0, -1) / QuadInt(1, 2).to_quadrat()


def test_unimodular_factor_transforms_duals_to_difference_generators():
    p = dual_coordinate_matrix()
    b = claimed_unimodular_factor().map(lambda q: q.to_quadrat())
    assert p * b == Matrix(zip(*difference_generators()))
    assert det(claimed_unimodular_factor()) == QuadInt(1, 0)


def test_dual_lattice_equals_claimed_presentation():
    assert dual_lattice().same_lattice(claimed_r1_lattice())


def test_unit_scaling_of_generators_leaves_lattice_fixed():
    from kleinfano.matrices import hnf_znu
    from kleinfano.periods import DELTA

    cols = [list(c) for c in dual_coordinate_matrix().cols()]
    cols[2] = [-x for x in cols[2]]
    assert hnf_znu(cols, DELTA) == dual_lattice().basis


def test_tau_stabilizes_every_chain_member():
    for lat in lattice_chain():
        assert stabilizes(lat)


def test_tau_orbit_matrix_is_integral():
    t = tau_on_orbit_coords()
    assert all(x.is_integral() for row in t.rows for x in row)


# ---------------------------------------------------------------------------
# quotient model
# ---------------------------------------------------------------------------

def test_quotient_action_matrices_match_claims():
    q = build_quotient()
    assert q.mhat_t == claimed_quotient_action_t()
    assert q.mhat_w == claimed_quotient_action_w()


def test_quotient_kills_exactly_the_orbit_lattice():
    assert quotient_image([QuadRat(1), QuadRat(0), QuadRat(0), QuadRat(0), QuadRat(0)]) == (0, 0, 0, 0)
    rng = random.Random(2)
    for _ in range(10):
        coords = [QuadRat(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(5)]
        assert quotient_image(coords) == (0, 0, 0, 0)
    # representatives of the quotient basis map to unit vectors
    for i, rep in enumerate(t_representatives()):
        expected = tuple(1 if j == i else 0 for j in range(4))
        assert quotient_image(rep) == expected


def test_quotient_rejects_vectors_outside_dual_lattice():
    dq = QuadInt(1, 2).to_quadrat()
    with pytest.raises(ValueError):
        quotient_image([QuadRat(1) / dq, QuadRat(0), QuadRat(0), QuadRat(0), QuadRat(0)])
    with pytest.raises(ValueError):
        quotient_image([QuadRat(Fraction(1, 2)), QuadRat(0), QuadRat(0), QuadRat(0), QuadRat(0)])


def test_quotient_action_is_a_single_jordan_block():
    chain = invariant_chain_f11(build_quotient().mhat_t)
    assert [s.dimension for s in chain] == [0, 1, 2, 3, 4]


# ---------------------------------------------------------------------------
# the chain and the Pfaffian selection
# ---------------------------------------------------------------------------

def test_chain_endpoints_and_homology_member():
    chain = lattice_chain()
    assert chain[0].same_lattice(span_lattice())
    assert chain[4].same_lattice(dual_lattice())
    assert chain[2].same_lattice(claimed_r2_lattice())
    assert homology_lattice().same_lattice(claimed_r2_lattice())


def test_chain_is_increasing_with_index_eleven_steps():
    chain = lattice_chain()
    for j in range(4):
        for col in chain[j].basis_columns():
            assert chain[j + 1].contains(col)
        assert chain[j + 1].index_over(chain[j]) == 11
    assert [lat.index_over(chain[0]) for lat in chain] == [1, 11, 121, 1331, 14641]


def test_alternating_form_is_antisymmetric_and_rational():
    rng = random.Random(3)
    for _ in range(10):
        z = from_v_coords([QuadRat(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(5)])
        w = from_v_coords([QuadRat(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(5)])
        assert alternating_form(z, w) == -alternating_form(w, z)
        assert alternating_form(z, z) == 0


def test_pfaffian_table_and_uniqueness():
    expected = [Fraction(11) ** (4 - 2 * j) for j in range(5)]
    assert [pfaffian_squared(lat, 1) for lat in lattice_chain()] == expected
    assert unimodular_scan() == [(2, 1)]


def test_pfaffian_scale_homogeneity():
    for lat in lattice_chain():
        assert pfaffian_squared(lat, 2) == 1024 * pfaffian_squared(lat, 1)
        assert pfaffian_squared(lat, 3) == 3 ** 10 * pfaffian_squared(lat, 1)


def test_gram_integrality_boundary():
    chain = lattice_chain()
    for j in (0, 1, 2):
        g = gram_alternating(chain[j], 1)
        assert all(x.denominator == 1 for row in g.rows for x in row)
    for j in (3, 4):
        g = gram_alternating(chain[j], 1)
        assert any(x.denominator != 1 for row in g.rows for x in row)


def test_sublattice_determinant_index_law():
    chain = lattice_chain()
    for j in range(4):
        sub = det(gram_alternating(chain[j], 1))
        sup = det(gram_alternating(chain[j + 1], 1))
        assert sub == sup * 11 ** 2


def test_pfaffian_squares_are_rational_squares_when_expected():
    for j, lat in enumerate(lattice_chain()):
        value = pfaffian_squared(lat, 1)
        root = Fraction(11) ** (2 - j)
        assert root * root == value


# ---------------------------------------------------------------------------
# invariant Hermitian matrices
# ---------------------------------------------------------------------------

def test_hermitian_invariance_dimensions():
    report = hermitian_invariance_check()
    assert report.diagonal_dimension == 5
    assert report.joint_dimension == 1
    assert report.diagonal_unitary
    assert report.permutation_unitary
    assert report.identity_is_invariant
