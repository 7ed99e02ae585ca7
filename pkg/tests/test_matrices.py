import random
from fractions import Fraction
from itertools import permutations

import pytest

from kleinfano.matrices import (
    F11Subspace,
    Matrix,
    SingularMatrixError,
    det,
    f11,
    f11_matrix,
    hnf_z,
    hnf_znu,
    invariant_chain_f11,
    inverse,
    solve,
)
from kleinfano.scalars import CycElem, ONE_PLUS_2NU, QuadInt, QuadRat, parse_scalar


def rand_int_matrix(rng, n, span=6):
    return Matrix([[rng.randint(-span, span) for _ in range(n)] for _ in range(n)])


def expansion_det(m):
    n = m.nrows
    total = 0
    for p in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if p[i] > p[j]:
                    sign = -sign
        term = sign
        for i in range(n):
            term *= m[i, p[i]]
        total += term
    return total


# ---------------------------------------------------------------------------
# determinants and solves
# ---------------------------------------------------------------------------

def test_det_identity_and_leibniz_agreement():
    assert det(Matrix.identity(5, Fraction(1))) == 1
    rng = random.Random(0)
    for _ in range(20):
        m = rand_int_matrix(rng, 4)
        assert det(m) == expansion_det(m)


def test_det_multiplicative_and_transpose_invariant():
    rng = random.Random(1)
    for _ in range(15):
        a, b = rand_int_matrix(rng, 3), rand_int_matrix(rng, 3)
        assert det(a * b) == det(a) * det(b)
        assert det(a.transpose()) == det(a)


def test_det_requires_square():
    with pytest.raises(ValueError):
        det(Matrix([[1, 2, 3], [4, 5, 6]]))


def test_det_of_claimed_unimodular_factor_is_one():
    from kleinfano.periods import claimed_unimodular_factor

    assert det(claimed_unimodular_factor()) == QuadInt(1, 0)


def test_solve_round_trip_over_rationals():
    rng = random.Random(2)
    solved = 0
    while solved < 10:
        m = rand_int_matrix(rng, 4)
        if det(m) == 0:
            continue
        rhs = rand_int_matrix(rng, 4)
        x = solve(m, rhs)
        lifted = m.map(Fraction)
        assert lifted * x == rhs.map(Fraction)
        solved += 1


def test_solve_identity_and_singular():
    rhs = Matrix([[Fraction(3)], [Fraction(-7)]])
    assert solve(Matrix.identity(2, Fraction(1)), rhs) == rhs
    with pytest.raises(SingularMatrixError):
        solve(Matrix([[1, 2], [2, 4]]), Matrix([[1], [1]]))


def test_solve_over_cyclotomic_field():
    rng = random.Random(3)
    m = Matrix(
        [[CycElem.zeta(rng.randint(0, 10)) + CycElem.from_rational(rng.randint(0, 2))
          for _ in range(3)] for _ in range(3)]
    )
    if det(m):
        x = inverse(m)
        assert m * x == Matrix.identity(3, CycElem.one())


# ---------------------------------------------------------------------------
# Hermite normal forms
# ---------------------------------------------------------------------------

def test_hnf_z_textbook_case():
    # generator columns (2,0) and (1,1) span {(a,b): a+b even}
    h = hnf_z([[2, 0], [1, 1]])
    assert h == Matrix([[Fraction(2), Fraction(1)], [Fraction(0), Fraction(1)]])
    assert hnf_z([[1, 0], [0, 1]]) == Matrix.identity(2, Fraction(1))


def test_hnf_z_is_canonical_under_generator_shuffles():
    rng = random.Random(4)
    cols = [[rng.randint(-5, 5) for _ in range(4)] for _ in range(6)]
    while det(Matrix(zip(*cols[:4]))) == 0:
        cols = [[rng.randint(-5, 5) for _ in range(4)] for _ in range(6)]
    reference = hnf_z(cols)
    for _ in range(5):
        shuffled = cols[:]
        rng.shuffle(shuffled)
        assert hnf_z(shuffled) == reference
    assert hnf_z([list(c) for c in zip(*reference.rows)]) == reference


def test_hnf_z_rank_deficiency():
    with pytest.raises(ValueError):
        hnf_z([[1, 0], [2, 0], [3, 0]])


def _random_quadrat_lattice_generators(rng, count=7):
    dq = ONE_PLUS_2NU.to_quadrat()
    cols = []
    for _ in range(count):
        col = [
            QuadRat(rng.randint(-4, 4), rng.randint(-4, 4)) / dq for _ in range(5)
        ]
        cols.append(col)
    return cols


def _full_rank(cols):
    m = Matrix(zip(*cols[:5]))
    try:
        inverse(m)
        return True
    except SingularMatrixError:
        return False


def test_hnf_znu_idempotent_and_order_independent():
    rng = random.Random(5)
    cols = _random_quadrat_lattice_generators(rng)
    while not _full_rank(cols):
        cols = _random_quadrat_lattice_generators(rng)
    h = hnf_znu(cols, ONE_PLUS_2NU)
    assert hnf_znu(h.cols(), ONE_PLUS_2NU) == h
    for _ in range(4):
        shuffled = cols[:]
        rng.shuffle(shuffled)
        assert hnf_znu(shuffled, ONE_PLUS_2NU) == h


def test_hnf_znu_unit_scaling_invariance():
    rng = random.Random(6)
    cols = _random_quadrat_lattice_generators(rng)
    while not _full_rank(cols):
        cols = _random_quadrat_lattice_generators(rng)
    h = hnf_znu(cols, ONE_PLUS_2NU)
    flipped = [[-x for x in col] for col in cols]
    assert hnf_znu(flipped, ONE_PLUS_2NU) == h


def test_hnf_znu_invariant_under_unimodular_recombination():
    # generator sets related by a GL_5(Z[nu]) column change span the same module
    from kleinfano.periods import claimed_unimodular_factor

    rng = random.Random(7)
    cols = _random_quadrat_lattice_generators(rng, count=5)
    while not _full_rank(cols):
        cols = _random_quadrat_lattice_generators(rng, count=5)
    gen_matrix = Matrix(zip(*cols))
    u = claimed_unimodular_factor().map(lambda q: q.to_quadrat())
    recombined = gen_matrix * u
    assert hnf_znu(recombined.cols(), ONE_PLUS_2NU) == hnf_znu(cols, ONE_PLUS_2NU)


def test_hnf_znu_shape_and_normalization():
    rows = [
        ["1", "0", "0", "0", "0"],
        ["0", "-1", "0", "0", "0"],
        ["0", "0", "1", "0", "0"],
        ["0", "0", "0", "nu", "0"],
        ["0", "0", "0", "0", "1+2*nu"],
    ]
    cols = [[parse_scalar(rows[i][j]) for i in range(5)] for j in range(5)]
    h = hnf_znu(cols, QuadInt(1, 0))
    for i in range(5):
        for j in range(5):
            if i > j:
                assert not h[i, j]
    # pivots are unit-normalized: a > 0, or a = 0 and b > 0
    for i in range(5):
        p = h[i, i]
        assert p.a > 0 or (p.a == 0 and p.b > 0)


def test_hnf_znu_rejects_denominators_outside_bound():
    cols = [[QuadRat(Fraction(1, 2))] + [QuadRat(0)] * 4]
    with pytest.raises(ValueError):
        hnf_znu(cols, ONE_PLUS_2NU)


# ---------------------------------------------------------------------------
# F_11 invariant chains
# ---------------------------------------------------------------------------

def test_invariant_chain_on_standard_jordan_block():
    j = f11_matrix([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [0, 0, 0, 1]])
    chain = invariant_chain_f11(j)
    assert [s.dimension for s in chain] == [0, 1, 2, 3, 4]
    # kernels of (J - I)^k are spanned by standard basis prefixes
    for k, sub in enumerate(chain):
        for idx, row in enumerate(sub.basis):
            expected = tuple(f11(1 if i == idx else 0) for i in range(4))
            assert row == expected


def test_invariant_chain_subspaces_are_invariant_and_strict():
    m = f11_matrix([[0, 0, 0, -1], [1, 0, 0, 4], [0, 1, 0, 5], [0, 0, 1, 4]])
    chain = invariant_chain_f11(m)
    for j in range(4):
        assert chain[j] <= chain[j + 1]
        assert chain[j].dimension < chain[j + 1].dimension
    for sub in chain:
        for row in sub.basis:
            image = m.matvec(list(row))
            assert sub.contains(image)


def test_invariant_chain_rejects_non_jordan_inputs():
    with pytest.raises(ValueError):
        invariant_chain_f11(Matrix.identity(4, f11(1)))
    two_blocks = f11_matrix([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]])
    with pytest.raises(ValueError):
        invariant_chain_f11(two_blocks)


def test_f11_subspace_membership():
    sub = F11Subspace(dimension=1, basis=((f11(1), f11(2), f11(0), f11(0)),))
    assert sub.contains([f11(5), f11(10), f11(0), f11(0)])
    assert not sub.contains([f11(1), f11(0), f11(0), f11(0)])
