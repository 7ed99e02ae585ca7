"""Intersection theory on the Fano surface: fibration classes and the
Neron-Severi lattice.

Fibration forms are Z[nu]-integral functionals in the basis dual to the
canonical homology basis; their fibre classes span a rank-25 lattice
whose Gram determinant, index-2 extension by the incidence class, and
discriminant are computed exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .matrices import Matrix, det, hnf_z, inverse, solve
from .periods import (
    Functional,
    from_v_coords,
    hermitian_product,
    homology_generators,
)
from .scalars import (
    CycElem,
    QuadInt,
    QuadRat,
    embed_quadratic,
    quad_gcd,
    quad_unit_normalize,
)


@lru_cache(maxsize=None)
def homology_basis_matrix() -> Matrix:
    """Columns are the e-coordinates of the canonical homology basis."""
    cols = [from_v_coords(g).e_coords for g in homology_generators()]
    return Matrix(zip(*cols))


@lru_cache(maxsize=None)
def fibration_dual_matrix() -> Matrix:
    """Rows are the x-coordinates of the forms dual to the homology basis.

    Validated against the defining property: row i evaluated on basis
    vector j gives delta_ij.
    """
    u = homology_basis_matrix()
    c = inverse(u)
    if c * u != Matrix.identity(5, CycElem.one()):
        raise AssertionError("dual basis validation failed")
    return c


@dataclass(frozen=True)
class FibrationForm:
    """Functional with Z[nu] coordinates in the fibration-dual basis."""

    y_coords: tuple
    x_coords: tuple

    @classmethod
    def from_y(cls, coords) -> "FibrationForm":
        ys = tuple(c if isinstance(c, QuadInt) else QuadInt(c) for c in coords)
        dual = fibration_dual_matrix()
        acc = [CycElem.zero()] * 5
        for i, t in enumerate(ys):
            if not t:
                continue
            scale = embed_quadratic(t)
            acc = [a + scale * r for a, r in zip(acc, dual.row(i))]
        return cls(y_coords=ys, x_coords=tuple(acc))

    def is_zero(self) -> bool:
        return not any(self.y_coords)

    def is_primitive(self) -> bool:
        return coordinate_gcd(self.y_coords).is_unit()

    def functional(self) -> Functional:
        return Functional(self.x_coords)


def coordinate_gcd(coords) -> QuadInt:
    g = None
    for c in coords:
        if not c:
            continue
        g = c if g is None else quad_gcd(g, c)
    if g is None:
        raise ValueError("all coordinates are zero")
    return quad_unit_normalize(g)


def _x_coords(form) -> tuple:
    if isinstance(form, FibrationForm):
        return form.x_coords
    if isinstance(form, Functional):
        return form.x_coords
    return tuple(form)


def pairing(f1, f2) -> CycElem:
    """Hermitian pairing sum_k l(e_k) * conj(l'(e_k)) of two forms."""
    return hermitian_product(_x_coords(f1), _x_coords(f2))


def norm_squared(form) -> Fraction:
    """Squared norm of a form; exact and provably non-negative."""
    value = pairing(form, form).try_rational()
    if value < 0:
        raise AssertionError("Hermitian norm came out negative")
    return value


def fiber_intersection(f1, f2) -> int:
    """Intersection number of two fibre classes:
    |l|^2 |l'|^2 - <l, l'><l', l>, always a non-negative integer here."""
    x1, x2 = _x_coords(f1), _x_coords(f2)
    if not any(x1) or not any(x2):
        raise ValueError("fibre intersection needs non-zero forms")
    p = pairing(f1, f2)
    cross = (p * p.conj()).try_rational()
    value = norm_squared(f1) * norm_squared(f2) - cross
    if value.denominator != 1:
        raise ValueError("intersection number is not an integer")
    return value.numerator


def _integral_multiple(value: Fraction, factor: int) -> int:
    scaled = value * factor
    if scaled.denominator != 1:
        raise ValueError(f"{factor}*|l|^2 = {scaled} is not an integer")
    return scaled.numerator


def genus(form) -> int:
    """Arithmetic genus of the fibre: 1 + 3|l|^2."""
    if isinstance(form, FibrationForm) and form.is_zero():
        raise ValueError("zero form has no fibre")
    return 1 + _integral_multiple(norm_squared(form), 3)


def incidence_degree(form) -> int:
    """Intersection of the fibre with an incidence divisor: 2|l|^2."""
    if isinstance(form, FibrationForm) and form.is_zero():
        raise ValueError("zero form has no fibre")
    return _integral_multiple(norm_squared(form), 2)


def canonical_degree(form) -> int:
    """Intersection of the fibre with a canonical divisor: 6|l|^2."""
    if isinstance(form, FibrationForm) and form.is_zero():
        raise ValueError("zero form has no fibre")
    return _integral_multiple(norm_squared(form), 6)


# ---------------------------------------------------------------------------
# The 25 basis classes and the Neron-Severi lattices
# ---------------------------------------------------------------------------

PAIR_ORDER = tuple((k, l) for k in range(5) for l in range(k + 1, 5))


@lru_cache(maxsize=None)
def ns_basis() -> tuple:
    """The ordered 25 fibre classes: single coordinates, sums of two, and
    sums twisted by nu."""
    forms = []
    for k in range(5):
        coords = [QuadInt(0)] * 5
        coords[k] = QuadInt(1)
        forms.append(FibrationForm.from_y(coords))
    for k, l in PAIR_ORDER:
        coords = [QuadInt(0)] * 5
        coords[k] = QuadInt(1)
        coords[l] = QuadInt(1)
        forms.append(FibrationForm.from_y(coords))
    for k, l in PAIR_ORDER:
        coords = [QuadInt(0)] * 5
        coords[k] = QuadInt(1)
        coords[l] = QuadInt(0, 1)
        forms.append(FibrationForm.from_y(coords))
    return tuple(forms)


@lru_cache(maxsize=None)
def gram_25() -> Matrix:
    """25x25 integer Gram matrix of the basis fibre classes."""
    basis = ns_basis()
    n = len(basis)
    norms = [norm_squared(f) for f in basis]
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            p = pairing(basis[i], basis[j])
            cross = (p * p.conj()).try_rational()
            value = norms[i] * norms[j] - cross
            if value.denominator != 1:
                raise AssertionError("Gram entry is not an integer")
            rows[i][j] = rows[j][i] = value.numerator
    return Matrix(rows)


def gram_25_det() -> int:
    return det(gram_25())


def gram_25_rank() -> int:
    return 25 if gram_25_det() != 0 else 0


@dataclass(frozen=True)
class NSClass:
    """Divisor class in coordinates on the 25 basis fibre classes."""

    coords: tuple

    def __add__(self, other):
        return NSClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def scale(self, s) -> "NSClass":
        s = Fraction(s)
        return NSClass(tuple(s * c for c in self.coords))

    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.coords)

    def dot(self, other: "NSClass") -> Fraction:
        g = gram_25()
        right = g.matvec([Fraction(c) for c in other.coords])
        return sum(
            (Fraction(a) * b for a, b in zip(self.coords, right)), Fraction(0)
        )


def _elementary_coords(t):
    """Coordinates of the fibre 2-form of l = sum t_k y_k on the elementary
    frame: diagonal forms carry N(t_k), each mixed pair carries the two
    components of t_k * conj(t_l) = alpha + beta*nu."""
    coords = [Fraction(t_k.norm()) for t_k in t]
    alphas, betas = [], []
    for k, l in PAIR_ORDER:
        prod = t[k] * t[l].conj()
        alphas.append(Fraction(prod.a))
        betas.append(Fraction(prod.b))
    return tuple(coords + alphas + betas)


@lru_cache(maxsize=None)
def basis_transition_matrix() -> Matrix:
    """Columns express the 25 basis fibre classes on the elementary frame.

    Unimodularity of this matrix is exactly the statement that the fibre
    classes are a Z-basis of the group the elementary forms generate.
    """
    cols = [_elementary_coords(f.y_coords) for f in ns_basis()]
    return Matrix(zip(*cols))


def basis_transition_det() -> Fraction:
    return det(basis_transition_matrix())


@lru_cache(maxsize=None)
def _transition_inverse() -> Matrix:
    return inverse(basis_transition_matrix())


def class_of_fibration(form: FibrationForm) -> NSClass:
    """Coordinates of the fibre class of a form in the 25-class basis."""
    elementary = _elementary_coords(form.y_coords)
    return NSClass(tuple(_transition_inverse().matvec(elementary)))


@dataclass(frozen=True)
class ThetaData:
    theta: NSClass            # pullback of the principal polarization class
    canonical: NSClass        # 3/2 * theta
    incidence: NSClass        # 1/2 * theta
    theta_self: int
    canonical_self: Fraction
    incidence_self: Fraction


@lru_cache(maxsize=None)
def theta_class() -> ThetaData:
    """Solve for the polarization pullback against the Gram matrix.

    The defining equations are theta . F_l = 4|l|^2 on the 25 basis
    classes; the solution must be integral, which is itself one of the
    verified claims.
    """
    basis = ns_basis()
    g = gram_25()
    rhs = Matrix([[Fraction(4) * norm_squared(f)] for f in basis])
    sol = solve(g, rhs)
    coords = tuple(sol[i, 0] for i in range(25))
    if any(c.denominator != 1 for c in coords):
        raise AssertionError("polarization class has non-integral coordinates")
    theta = NSClass(tuple(Fraction(c) for c in coords))
    theta_self = theta.dot(theta)
    if theta_self.denominator != 1:
        raise AssertionError("theta self-intersection is not an integer")
    canonical = theta.scale(Fraction(3, 2))
    incidence = theta.scale(Fraction(1, 2))
    return ThetaData(
        theta=theta,
        canonical=canonical,
        incidence=incidence,
        theta_self=theta_self.numerator,
        canonical_self=canonical.dot(canonical),
        incidence_self=incidence.dot(incidence),
    )


@lru_cache(maxsize=None)
def theta_orthonormal_oracle() -> int:
    """Independent value of theta . theta from the orthonormal expansion:
    the polarization class is the sum of the five unit-coordinate 2-forms,
    so its square is sum over ordered pairs k != j of 1."""
    units = [Functional(tuple(
        CycElem.one() if i == k else CycElem.zero() for i in range(5)
    )) for k in range(5)]
    total = 0
    for a in units:
        for b in units:
            total += fiber_intersection(a, b) if a is not b else 0
    return total


@dataclass(frozen=True)
class NSLattice:
    basis: Matrix        # 25 columns over Q, coordinates in the 25-class frame
    discriminant: int
    index: int


@lru_cache(maxsize=None)
def ns_s_lattice() -> NSLattice:
    """The full Neron-Severi lattice: the 25-class lattice extended by the
    incidence class (half the polarization pullback)."""
    td = theta_class()
    half = [Fraction(c) for c in td.incidence.coords]
    if all(c.denominator == 1 for c in half):
        raise AssertionError("incidence class already integral; index would be 1")
    gens = [
        [Fraction(1) if i == j else Fraction(0) for i in range(25)]
        for j in range(25)
    ]
    gens.append(half)
    basis = hnf_z(gens)
    g = gram_25().map(Fraction)
    gram_ns = basis.transpose() * g * basis
    disc = det(gram_ns)
    if disc.denominator != 1:
        raise AssertionError("NS Gram determinant is not an integer")
    db = det(basis)
    index = Fraction(1) / abs(db)
    if index.denominator != 1:
        raise AssertionError("index of the fibre lattice is not an integer")
    return NSLattice(basis=basis, discriminant=disc.numerator, index=index.numerator)


# ---------------------------------------------------------------------------
# Normalization of fibration classes (points of P^4 over Q(nu))
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NormalizedFibration:
    form: FibrationForm
    factor: QuadRat      # original = factor * normalized
    connected: bool      # the normalized representative has connected fibres


def normalize_fibration(coords) -> NormalizedFibration:
    """Primitive representative of a projective fibration class.

    Clears denominators, divides out the coordinate gcd, and fixes the
    sign so the first non-zero coordinate is canonical; the representative
    is connected exactly when its coordinates generate the whole ring,
    which the returned flag re-checks.
    """
    qs = [c if isinstance(c, QuadRat) else QuadRat(c.a, c.b) if isinstance(c, QuadInt)
          else QuadRat(c) for c in coords]
    if not any(qs):
        raise ValueError("zero vector does not define a fibration")
    den = 1
    for q in qs:
        for part in (q.a, q.b):
            den = den * part.denominator // _gcd_int(den, part.denominator)
    ints = [(q * den).to_quadint() for q in qs]
    g = coordinate_gcd(ints)
    inv = QuadRat(1) / g.to_quadrat()
    primitive = [(t.to_quadrat() * inv).to_quadint() for t in ints]
    first = next(t for t in primitive if t)
    sign = 1
    if quad_unit_normalize(first) != first:
        sign = -1
        primitive = [-t for t in primitive]
    form = FibrationForm.from_y(primitive)
    factor = g.to_quadrat() * QuadRat(Fraction(sign, den))
    connected = coordinate_gcd(form.y_coords).is_unit()
    return NormalizedFibration(form=form, factor=factor, connected=connected)


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a
