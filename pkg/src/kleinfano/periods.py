"""Period-lattice model for the Fano surface of the Klein cubic.

The ambient space is H^0(Omega_S)^* with the basis e_1..e_5 dual to the
coordinates x_1..x_5.  Everything is driven by two automorphism actions:
the diagonal action of order 11 (weights (1,9,3,4,5) on an 11th root of
unity) and the order-5 coordinate permutation.  The lattice chain
Lambda_0 < ... < Lambda_4 is realized in coordinates on the orbit basis
v_0..v_4, where Z[nu]-module structure is literal, and the homology
lattice is selected by the Pfaffian criterion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .matrices import (
    Matrix,
    det,
    f11,
    f11_matrix,
    hnf_z,
    hnf_znu,
    inverse,
    invariant_chain_f11,
    solve,
)
from .scalars import (
    CycElem,
    ModP,
    ONE_PLUS_2NU,
    QuadInt,
    QuadRat,
    embed_quadratic,
    parse_scalar,
)

#: weights of the diagonal automorphism: z_m -> zeta^{WEIGHTS[m]} z_m
WEIGHTS = (1, 9, 3, 4, 5)

#: the order-5 permutation (z1,..,z5) -> (z5,z1,z4,z2,z3), 0-indexed sources
PERMUTATION = (4, 0, 3, 1, 2)

DELTA = ONE_PLUS_2NU  # 1 + 2*nu = sqrt(-11); the ramified prime above 11


@dataclass(frozen=True)
class PeriodVector:
    """Vector in H^0(Omega_S)^*, stored in e-coordinates."""

    e_coords: tuple

    def __add__(self, other):
        return PeriodVector(tuple(a + b for a, b in zip(self.e_coords, other.e_coords)))

    def __sub__(self, other):
        return PeriodVector(tuple(a - b for a, b in zip(self.e_coords, other.e_coords)))

    def scale(self, c) -> "PeriodVector":
        if isinstance(c, (QuadRat, QuadInt)):
            c = embed_quadratic(c)
        return PeriodVector(tuple(c * a for a in self.e_coords))

    def is_zero(self) -> bool:
        return not any(self.e_coords)


@dataclass(frozen=True)
class Functional:
    """Linear form on H^0(Omega_S)^*, stored in x-coordinates."""

    x_coords: tuple

    def __call__(self, v: PeriodVector) -> CycElem:
        acc = CycElem.zero()
        for c, z in zip(self.x_coords, v.e_coords):
            acc = acc + c * z
        return acc


@dataclass(frozen=True)
class AutoMatrix:
    """Analytic representation of an automorphism, acting on e-coordinates."""

    name: str
    matrix: Matrix

    def apply(self, v: PeriodVector) -> PeriodVector:
        return PeriodVector(self.matrix.matvec(v.e_coords))

    def order(self, bound: int = 60) -> int:
        ident = Matrix.identity(5, CycElem.one())
        power = self.matrix
        for k in range(1, bound + 1):
            if power == ident:
                return k
            power = power * self.matrix
        raise ValueError(f"order of {self.name} exceeds {bound}")


def v_vector(k: int) -> PeriodVector:
    """Orbit vector v_k = (zeta^k, zeta^{9k}, zeta^{3k}, zeta^{4k}, zeta^{5k})."""
    return PeriodVector(tuple(CycElem.zeta(k * w) for w in WEIGHTS))


def ell_functional(k: int) -> Functional:
    """The form with the same exponent pattern as v_k, in x-coordinates."""
    return Functional(tuple(CycElem.zeta(k * w) for w in WEIGHTS))


@lru_cache(maxsize=None)
def diagonal_automorphism() -> AutoMatrix:
    rows = [
        [CycElem.zeta(WEIGHTS[i]) if i == j else CycElem.zero() for j in range(5)]
        for i in range(5)
    ]
    return AutoMatrix("tau", Matrix(rows))


@lru_cache(maxsize=None)
def permutation_automorphism() -> AutoMatrix:
    rows = [
        [CycElem.one() if j == PERMUTATION[i] else CycElem.zero() for j in range(5)]
        for i in range(5)
    ]
    return AutoMatrix("sigma", Matrix(rows))


@lru_cache(maxsize=None)
def exponent_matrix() -> Matrix:
    """The 5x5 matrix with entry (i, j) = zeta^{i * WEIGHTS[j]}, i = 0..4.

    Row i holds the x-coordinates of the i-th orbit form; column j of its
    transpose holds the e-coordinates of v_j.
    """
    return Matrix(
        [[CycElem.zeta(i * w) for w in WEIGHTS] for i in range(5)]
    )


@lru_cache(maxsize=None)
def _orbit_solver() -> Matrix:
    return inverse(exponent_matrix().transpose())


def to_v_coords(v: PeriodVector) -> tuple:
    """Coordinates of v in the orbit basis v_0..v_4, as Q(nu) scalars.

    Fails when v lies outside the Q(nu)-span of the orbit basis.
    """
    sol = _orbit_solver().matvec(v.e_coords)
    out = []
    for c in sol:
        try:
            out.append(c.try_quadratic())
        except ValueError:
            raise ValueError("vector is outside the Q(nu)-span of v_0..v_4")
    return tuple(out)


def from_v_coords(coords) -> PeriodVector:
    """Inverse of `to_v_coords`: rebuild the vector from orbit coordinates."""
    acc = PeriodVector((CycElem.zero(),) * 5)
    for k, c in enumerate(coords):
        acc = acc + v_vector(k).scale(c)
    return acc


# ---------------------------------------------------------------------------
# Z[nu]-lattices in orbit coordinates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ZnuLattice:
    """Full-rank Z[nu]-lattice in orbit coordinates, canonical HNF basis.

    The basis matrix is 5x5 upper-triangular over Q(nu); denominators
    divide 1 + 2*nu throughout this project.
    """

    label: str
    basis: Matrix

    @classmethod
    def from_generators(cls, label: str, columns) -> "ZnuLattice":
        return cls(label, hnf_znu(tuple(columns), DELTA))

    def basis_columns(self):
        return self.basis.cols()

    def same_lattice(self, other: "ZnuLattice") -> bool:
        return self.basis == other.basis

    def contains(self, coords) -> bool:
        """Membership test for a Q(nu) coordinate vector."""
        coords = [c if isinstance(c, QuadRat) else c.to_quadrat() for c in coords]
        b = self.basis
        residue = list(coords)
        for j in range(4, -1, -1):
            c = residue[j] / b[j, j]
            if not c.is_integral():
                return False
            for i in range(j + 1):
                residue[i] = residue[i] - c * b[i, j]
        return True

    def transformed(self, m: Matrix) -> "ZnuLattice":
        """Image lattice under a Q(nu)-matrix acting on orbit coordinates."""
        cols = (m.matvec(c) for c in self.basis.cols())
        return ZnuLattice.from_generators(self.label, cols)

    def index_over(self, sub: "ZnuLattice") -> int:
        """Group index [self : sub]; an integer when sub is a sublattice."""
        d_self = _triangular_det(self.basis)
        d_sub = _triangular_det(sub.basis)
        ratio = d_sub.norm() / d_self.norm()
        if ratio.denominator != 1:
            raise ValueError("not a sublattice: index is not integral")
        return ratio.numerator


def _triangular_det(m: Matrix) -> QuadRat:
    d = QuadRat(1)
    for i in range(m.nrows):
        d = d * m[i, i]
    return d


def _unit_columns():
    one = QuadRat(1)
    zero = QuadRat(0)
    return [[one if i == j else zero for i in range(5)] for j in range(5)]


@lru_cache(maxsize=None)
def span_lattice() -> ZnuLattice:
    """Z[nu]-lattice generated by the eleven orbit vectors (Lambda_0)."""
    cols = [to_v_coords(v_vector(k)) for k in range(11)]
    return ZnuLattice.from_generators("lambda0", cols)


@lru_cache(maxsize=None)
def dual_vectors_ecoords() -> Matrix:
    """e-coordinates of the dual vectors of the first five orbit forms.

    Column j is the vector taking value delta_{ij} on the i-th orbit form;
    obtained by inverting the exponent matrix.
    """
    return inverse(exponent_matrix())


@lru_cache(maxsize=None)
def dual_coordinate_matrix() -> Matrix:
    """Orbit coordinates of the dual vectors (columns), over Q(nu)."""
    cols = []
    dv = dual_vectors_ecoords()
    for j in range(5):
        vec = PeriodVector(dv.col(j))
        cols.append(to_v_coords(vec))
    return Matrix(zip(*cols))


@lru_cache(maxsize=None)
def dual_lattice() -> ZnuLattice:
    """Z[nu]-span of the dual vectors (Lambda_4); contains every lattice on
    which all five orbit forms are Z[nu]-integral."""
    return ZnuLattice.from_generators("lambda4", dual_coordinate_matrix().cols())


# -- published values this tool re-derives and certifies -------------------

def claimed_dual_coordinate_matrix() -> Matrix:
    """Claimed orbit-coordinate matrix of the dual vectors."""
    rows = [
        ["-1", "-nu", "0", "-1", "1-nu"],
        ["-nu", "2", "0", "-nu", "3+nu"],
        ["0", "0", "0", "1", "-1"],
        ["-1", "-nu", "1", "-2", "1-nu"],
        ["1-nu", "3+nu", "-1", "1-nu", "2+2*nu"],
    ]
    dq = DELTA.to_quadrat()
    return Matrix([[parse_scalar(s) / dq for s in row] for row in rows])


def claimed_unimodular_factor() -> Matrix:
    """Claimed SL_5(Z[nu]) change of generators for the dual lattice."""
    rows = [
        ["-1-nu", "1", "-1", "0", "5"],
        ["1", "-1", "0", "0", "nu"],
        ["-1", "0", "0", "1", "-1-nu"],
        ["0", "0", "1", "0", "nu"],
        ["0", "1", "0", "0", "nu"],
    ]
    return Matrix([[parse_scalar(s).to_quadint() for s in row] for row in rows])


def difference_generators():
    """The vectors (v_k - v_{k+1})/(1+2nu), k = 0..3, plus v_0."""
    dq = DELTA.to_quadrat()
    cols = []
    for k in range(4):
        col = [QuadRat(0)] * 5
        col[k] = QuadRat(1) / dq
        col[k + 1] = QuadRat(-1) / dq
        cols.append(col)
    cols.append([QuadRat(1), QuadRat(0), QuadRat(0), QuadRat(0), QuadRat(0)])
    return cols


def claimed_r1_lattice() -> ZnuLattice:
    return ZnuLattice.from_generators("r1", difference_generators())


def homology_generators():
    """Claimed generators of the homology lattice: the two alternating-sum
    vectors over 1+2nu together with v_0, v_1, v_2."""
    dq = DELTA.to_quadrat()
    g1 = [QuadRat(1) / dq, QuadRat(-3) / dq, QuadRat(3) / dq, QuadRat(-1) / dq, QuadRat(0)]
    g2 = [QuadRat(0), QuadRat(1) / dq, QuadRat(-3) / dq, QuadRat(3) / dq, QuadRat(-1) / dq]
    units = _unit_columns()
    return [g1, g2, units[0], units[1], units[2]]


def claimed_r2_lattice() -> ZnuLattice:
    return ZnuLattice.from_generators("r2", homology_generators())


@lru_cache(maxsize=None)
def tau_on_orbit_coords() -> Matrix:
    """Matrix of the diagonal automorphism on orbit coordinates (over Q(nu))."""
    cols = []
    tau = diagonal_automorphism()
    for k in range(5):
        image = tau.apply(v_vector(k))
        cols.append(to_v_coords(image))
    return Matrix(zip(*cols))


def stabilizes(lattice: ZnuLattice, m: Matrix | None = None) -> bool:
    """Whether the orbit-coordinate action m maps the lattice onto itself."""
    if m is None:
        m = tau_on_orbit_coords()
    return lattice.transformed(m).same_lattice(lattice)


# ---------------------------------------------------------------------------
# The quotient Lambda_4 / Lambda_0 as an F_11 vector space
# ---------------------------------------------------------------------------

def _residue_mod_delta(x: QuadInt) -> int:
    # Z[nu]/(1+2nu) = F_11 via nu -> 5  (25 + 5 + 3 = 33 = 0 mod 11)
    return (x.a + 5 * x.b) % 11


def quotient_image(coords) -> tuple:
    """Class of a dual-lattice vector in the quotient by the orbit lattice,
    written in t-coordinates (F_11^4, as plain residues).

    The t_i are the classes of (v_{i-1} - v_i)/(1+2nu); the class of a
    vector with orbit coordinates c is read off the residues of (1+2nu)*c
    by partial summation.
    """
    dq = DELTA.to_quadrat()
    residues = []
    for c in coords:
        c = c if isinstance(c, QuadRat) else c.to_quadrat()
        scaled = c * dq
        if not scaled.is_integral():
            raise ValueError("vector is not in the dual lattice")
        residues.append(_residue_mod_delta(scaled.to_quadint()))
    if sum(residues) % 11 != 0:
        raise ValueError("vector is not in the dual lattice")
    partial = []
    acc = 0
    for r in residues[:4]:
        acc = (acc + r) % 11
        partial.append(acc)
    return tuple(partial)


@dataclass(frozen=True)
class QuotientModel:
    """The quotient of the dual lattice by the orbit lattice, coordinatized
    on the classes t_i of (v_{i-1} - v_i)/(1+2nu), i = 1..4."""

    mhat_t: Matrix  # induced diagonal-automorphism action, t-basis, F_11
    mhat_w: Matrix  # same action in the flag-adapted w-basis

    def image(self, coords) -> tuple:
        return quotient_image(coords)


def t_representatives():
    """Orbit-coordinate representatives of the quotient basis classes."""
    return difference_generators()[:4]


def w_change_of_basis() -> Matrix:
    """Columns express the flag-adapted basis w_1..w_4 in t-coordinates."""
    cols = [(-1, 3, -3, 1), (1, -2, 1, 0), (-1, 1, 0, 0), (1, 0, 0, 0)]
    return f11_matrix(zip(*cols))


@lru_cache(maxsize=None)
def build_quotient() -> QuotientModel:
    """Construct the quotient model and its induced automorphism action.

    Verifies that the quotient map intertwines the ambient action before
    returning; failure raises, since it would poison everything downstream.
    """
    tau_v = tau_on_orbit_coords()
    reps = t_representatives()
    cols = [quotient_image(tau_v.matvec(rep)) for rep in reps]
    mhat_t = f11_matrix(zip(*cols))

    # intertwining check on the canonical basis of the dual lattice
    for col in dual_lattice().basis_columns():
        lhs = quotient_image(tau_v.matvec(col))
        rhs = tuple(x.val for x in mhat_t.matvec([f11(c) for c in quotient_image(col)]))
        if lhs != rhs:
            raise AssertionError("quotient map does not intertwine the action")

    w = w_change_of_basis()
    mhat_w = solve(w, mhat_t * w)
    return QuotientModel(mhat_t=mhat_t, mhat_w=mhat_w)


def claimed_quotient_action_t() -> Matrix:
    return f11_matrix([[0, 0, 0, -1], [1, 0, 0, 4], [0, 1, 0, 5], [0, 0, 1, 4]])


def claimed_quotient_action_w() -> Matrix:
    return f11_matrix([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [0, 0, 0, 1]])


@lru_cache(maxsize=None)
def lattice_chain() -> tuple:
    """The full chain Lambda_0 < Lambda_1 < ... < Lambda_4.

    Lambda_j is the preimage of the j-dimensional invariant subspace of
    the quotient action; the invariant subspaces form a chain because the
    action is a single unipotent Jordan block.
    """
    quotient = build_quotient()
    subspaces = invariant_chain_f11(quotient.mhat_t)
    reps = t_representatives()
    chain = []
    for j, sub in enumerate(subspaces):
        cols = list(_unit_columns())
        for row in sub.basis:
            lift = [QuadRat(0)] * 5
            for c, rep in zip(row, reps):
                if c:
                    lift = [x + c.val * y for x, y in zip(lift, rep)]
            cols.append(lift)
        chain.append(ZnuLattice.from_generators(f"lambda{j}", cols))
    return tuple(chain)


def homology_lattice() -> ZnuLattice:
    """The homology lattice: the unique unimodular member of the chain."""
    return lattice_chain()[2]


# ---------------------------------------------------------------------------
# Polarization: Hermitian form (2/sqrt(11)) I and its alternating part
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _inv_delta_cyc() -> CycElem:
    return embed_quadratic(QuadRat(1) / DELTA.to_quadrat())


def hermitian_product(z_coords, w_coords) -> CycElem:
    """sum_k z_k * conj(w_k) on e-coordinate 5-tuples."""
    acc = CycElem.zero()
    for z, w in zip(z_coords, w_coords):
        acc = acc + z * w.conj()
    return acc


def alternating_form(z: PeriodVector, w: PeriodVector, scale: int = 1) -> Fraction:
    """Imaginary part of the polarization form, exactly, as a rational.

    E(z, w) = scale * (sum z_k conj(w_k) - conj(sum z_k conj(w_k))) / (1+2nu);
    the quotient is conjugation-fixed by construction and must project to Q.
    """
    u = hermitian_product(z.e_coords, w.e_coords)
    value = (u - u.conj()) * _inv_delta_cyc()
    return value.try_rational() * scale


def lattice_z_basis(lattice: ZnuLattice):
    """Z-basis (g_1, nu*g_1, ..., g_5, nu*g_5) of the lattice, as vectors."""
    out = []
    nu = QuadRat(0, 1)
    for col in lattice.basis_columns():
        out.append(from_v_coords(col))
        out.append(from_v_coords([c * nu for c in col]))
    return out


@lru_cache(maxsize=None)
def gram_alternating(lattice: ZnuLattice, scale: int = 1) -> Matrix:
    """10x10 rational Gram matrix of the alternating form on a Z-basis."""
    basis = lattice_z_basis(lattice)
    n = len(basis)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            value = alternating_form(basis[i], basis[j], scale)
            rows[i][j] = value
            rows[j][i] = -value
    return Matrix(rows)


@lru_cache(maxsize=None)
def pfaffian_squared(lattice: ZnuLattice, scale: int = 1) -> Fraction:
    """Determinant of the alternating Gram matrix (the Pfaffian squared)."""
    return det(gram_alternating(lattice, scale))


def pfaffian_table(scale: int = 1):
    return [pfaffian_squared(lat, scale) for lat in lattice_chain()]


def unimodular_scan(max_scale: int = 3):
    """Pairs (j, a) with Pfaffian squared equal to 1, over the chain and
    scales 1..max_scale; the exact power computation shows no larger scale
    can work, so the scan is conclusive for all positive integers."""
    hits = []
    for j, lat in enumerate(lattice_chain()):
        for a in range(1, max_scale + 1):
            if pfaffian_squared(lat, a) == 1:
                hits.append((j, a))
    # a^10 * 11^(4-2j) = 1 forces 11^(2j-4) to be a 10th power, i.e. j = 2
    for j in range(5):
        if (2 * j - 4) % 10 == 0 and 2 * j - 4 >= 0:
            assert j == 2
    return hits


# ---------------------------------------------------------------------------
# Invariant Hermitian matrices (uniqueness of the polarization shape)
# ---------------------------------------------------------------------------

def _conj_fixed_basis():
    """Q-basis of the conjugation-fixed (real) subfield of Q(zeta_11)."""
    rows = []
    for k in range(10):
        e = CycElem.zeta(k) if k else CycElem.one()
        diff = e.conj() - e
        rows.append([Fraction(c) for c in diff.coeffs])
    # kernel of (conj - id) on coefficient vectors
    kernel = _rational_kernel(rows)
    return [CycElem(vec) for vec in kernel]


def _rational_kernel(rows):
    """Basis of the kernel of a rational matrix given as column images.

    `rows[k]` is the image of the k-th standard basis vector; returns
    coefficient vectors spanning the kernel, in reduced echelon form.
    """
    m = [list(col) for col in zip(*rows)]  # (image dim) x (domain dim)
    ncols = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -m[i][fc]
        basis.append(vec)
    return basis


def _hermitian_basis():
    """Q-basis of the Hermitian 5x5 matrices over Q(zeta_11).

    Diagonal entries range over the real subfield; each off-diagonal pair
    (i, j), (j, i) carries alpha and conj(alpha) for alpha in a field basis.
    """
    fixed = _conj_fixed_basis()
    zero = CycElem.zero()
    basis = []
    for i in range(5):
        for beta in fixed:
            rows = [[zero] * 5 for _ in range(5)]
            rows[i][i] = beta
            basis.append(Matrix(rows))
    field = [CycElem.zeta(k) if k else CycElem.one() for k in range(10)]
    for i in range(5):
        for j in range(i + 1, 5):
            for alpha in field:
                rows = [[zero] * 5 for _ in range(5)]
                rows[i][j] = alpha
                rows[j][i] = alpha.conj()
                basis.append(Matrix(rows))
    return basis


def _invariance_defect(m: Matrix, h: Matrix) -> Matrix:
    mt = m.transpose()
    mbar = m.map(lambda x: x.conj())
    return mt * h * mbar - h


def _sparse_rank(rows):
    """Rank of sparse rational rows given as {column: value} dicts."""
    rows = [dict(r) for r in rows if r]
    rank = 0
    while rows:
        rows.sort(key=len)
        pivot_row = rows.pop(0)
        col = min(pivot_row)
        pval = pivot_row[col]
        rank += 1
        new_rows = []
        for r in rows:
            if col in r:
                f = r[col] / pval
                for c, v in pivot_row.items():
                    nv = r.get(c, Fraction(0)) - f * v
                    if nv:
                        r[c] = nv
                    else:
                        r.pop(c, None)
            if r:
                new_rows.append(r)
        rows = new_rows
    return rank


def invariant_hermitian_dimension(autos) -> int:
    """Dimension, over the real subfield, of the space of Hermitian 5x5
    matrices H with tM H conj(M) = H for every automorphism matrix M."""
    basis = _hermitian_basis()
    columns = []
    for h in basis:
        col = {}
        offset = 0
        for auto in autos:
            defect = _invariance_defect(auto.matrix, h)
            for i in range(5):
                for j in range(5):
                    for k, c in enumerate(defect[i, j].coeffs):
                        if c:
                            col[offset + (i * 5 + j) * 10 + k] = c
            offset += 250
        columns.append(col)
    # transpose the column dictionaries into sparse rows
    rows = {}
    for b, col in enumerate(columns):
        for r, v in col.items():
            rows.setdefault(r, {})[b] = v
    rank = _sparse_rank(list(rows.values()))
    kernel_dim = len(basis) - rank
    if kernel_dim % 5:
        raise AssertionError("solution space is not a real-subfield subspace")
    return kernel_dim // 5


def is_unitary(auto: AutoMatrix) -> bool:
    """Whether sum_k M_ki conj(M_kj) = delta_ij."""
    m = auto.matrix
    product = m.transpose() * m.map(lambda x: x.conj())
    return product == Matrix.identity(5, CycElem.one())


@dataclass(frozen=True)
class HermitianInvarianceReport:
    diagonal_dimension: int       # invariance under the diagonal action alone
    joint_dimension: int          # invariance under both automorphisms
    diagonal_unitary: bool
    permutation_unitary: bool
    identity_is_invariant: bool


@lru_cache(maxsize=None)
def hermitian_invariance_check() -> HermitianInvarianceReport:
    tau = diagonal_automorphism()
    sigma = permutation_automorphism()
    ident = Matrix.identity(5, CycElem.one())
    id_ok = all(
        not any(any(x for x in row) for row in _invariance_defect(a.matrix, ident).rows)
        for a in (tau, sigma)
    )
    return HermitianInvarianceReport(
        diagonal_dimension=invariant_hermitian_dimension((tau,)),
        joint_dimension=invariant_hermitian_dimension((tau, sigma)),
        diagonal_unitary=is_unitary(tau),
        permutation_unitary=is_unitary(sigma),
        identity_is_invariant=id_ok,
    )


# ---------------------------------------------------------------------------
# Z-module certification of the orbit lattice
# ---------------------------------------------------------------------------

def _as_z_vector(coords):
    out = []
    for c in coords:
        c = c if isinstance(c, QuadRat) else c.to_quadrat()
        out.extend((c.a, c.b))
    return out


def orbit_z_span_matches_ring_span() -> bool:
    """The plain Z-span of the eleven orbit vectors equals the Z[nu]-span
    of the first five: compared as rank-10 Z-lattices in Q(nu)^5."""
    z_gens = [_as_z_vector(to_v_coords(v_vector(k))) for k in range(11)]
    ring_gens = []
    nu = QuadRat(0, 1)
    for col in _unit_columns():
        ring_gens.append(_as_z_vector(col))
        ring_gens.append(_as_z_vector([c * nu for c in col]))
    return hnf_z(z_gens) == hnf_z(ring_gens)
