"""Dense exact linear algebra over the scalar domains.

Supports: determinants by fraction-free (Bareiss) elimination, exact
linear solves over the fraction field, column Hermite normal forms over
Z and over the Euclidean ring Z[nu], and invariant-subspace chains of
unipotent matrices over F_11.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import (
    CycElem,
    ModP,
    QuadInt,
    QuadRat,
    quad_div_rem,
    quad_unit_normalize,
)


class SingularMatrixError(ValueError):
    pass


def _to_field(x):
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, QuadInt):
        return x.to_quadrat()
    return x


def _exact_div(a, b):
    """a / b where the division is known to be exact in the entry domain."""
    if isinstance(a, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("inexact integer division in Bareiss step")
        return q
    if isinstance(a, QuadInt):
        q = a.to_quadrat() / b.to_quadrat()
        return q.to_quadint()
    return a / b


class Matrix:
    """Immutable dense matrix; entries live in a single scalar domain."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        self.rows = rows

    @classmethod
    def identity(cls, n: int, one=1):
        zero = one - one
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.rows]})"

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def cols(self):
        return [self.col(j) for j in range(self.ncols)]

    def transpose(self):
        return Matrix(zip(*self.rows)) if self.rows else Matrix(())

    def map(self, fn):
        return Matrix(tuple(fn(x) for x in r) for r in self.rows)

    def __add__(self, other):
        return Matrix(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)
        )

    def __sub__(self, other):
        return Matrix(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)
        )

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        bcols = other.ncols
        out = []
        for arow in self.rows:
            acc = [None] * bcols
            for k, a in enumerate(arow):
                if not a:
                    continue
                brow = other.rows[k]
                for j, b in enumerate(brow):
                    if not b:
                        continue
                    term = a * b
                    acc[j] = term if acc[j] is None else acc[j] + term
            zero = None
            if any(v is None for v in acc):
                zero = _domain_zero(self, other)
            out.append(tuple(v if v is not None else zero for v in acc))
        return Matrix(out)

    def scale(self, s):
        return self.map(lambda x: x * s)

    def matvec(self, vec):
        return self.__mul__(Matrix([[v] for v in vec])).col(0)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative matrix power")
        result = Matrix.identity(self.nrows, _domain_one(self))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


def _domain_zero(*ms):
    for m in ms:
        for r in m.rows:
            for x in r:
                return x - x
    return 0


def _domain_one(m):
    for r in m.rows:
        for x in r:
            return x ** 0
    return 1


def det(m: Matrix):
    """Exact determinant via fraction-free Bareiss elimination.

    Integer and Z[nu] matrices stay in their domain throughout (every
    Bareiss division is exact there); field entries divide exactly anyway.
    """
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = m.nrows
    if n == 0:
        return 1
    a = [list(r) for r in m.rows]
    zero = _domain_zero(m)
    one = _domain_one(m)
    sign = 1
    prev = one
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = _exact_div(pivot * a[i][j] - a[i][k] * a[k][j], prev)
            a[i][k] = zero
        prev = pivot
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def solve(m: Matrix, rhs: Matrix) -> Matrix:
    """Exact solution of m*x = rhs over the fraction field of the entries."""
    if m.nrows != m.ncols:
        raise ValueError("solve needs a square matrix")
    n = m.nrows
    a = [[_to_field(x) for x in row] for row in m.rows]
    b = [[_to_field(x) for x in row] for row in rhs.rows]
    if len(b) != n:
        raise ValueError("right-hand side has wrong height")
    w = rhs.ncols
    for k in range(n):
        piv = None
        for i in range(k, n):
            if a[i][k]:
                piv = i
                break
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            b[k], b[piv] = b[piv], b[k]
        inv = a[k][k] ** (-1)
        a[k] = [x * inv for x in a[k]]
        b[k] = [x * inv for x in b[k]]
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
                b[i] = [x - f * y for x, y in zip(b[i], b[k])]
    return Matrix(b)


def inverse(m: Matrix) -> Matrix:
    one = _to_field(_domain_one(m)) ** 0
    return solve(m, Matrix.identity(m.nrows, one))


# ---------------------------------------------------------------------------
# Column Hermite normal forms
# ---------------------------------------------------------------------------

def _hnf_columns(columns, n, norm, div_rem, normalize):
    """Generic column HNF over a Euclidean domain.

    Returns n columns forming an upper-triangular canonical basis: pivot
    of column j sits in row j, pivots are unit-normalized, and every
    entry right of a pivot is the canonical remainder modulo that pivot.
    """
    cols = [list(c) for c in columns]
    placed = [None] * n
    active = list(range(len(cols)))
    for i in range(n - 1, -1, -1):
        while True:
            live = [j for j in active if cols[j][i]]
            if not live:
                pivot_col = None
                break
            if len(live) == 1:
                pivot_col = live[0]
                break
            live.sort(key=lambda j: norm(cols[j][i]))
            p = live[0]
            pe = cols[p][i]
            for j in live[1:]:
                q, _ = div_rem(cols[j][i], pe)
                if q:
                    cols[j] = [x - q * y for x, y in zip(cols[j], cols[p])]
        if pivot_col is None:
            raise ValueError(f"generators do not have full rank (row {i})")
        active.remove(pivot_col)
        placed[i] = cols[pivot_col]
    # leftover active columns must be identically zero now
    for j in active:
        if any(cols[j]):
            raise AssertionError("non-zero column left after HNF sweep")
    # canonical normalization
    for j in range(n):
        u = normalize(placed[j][j])
        if u != 1:
            placed[j] = [x * u for x in placed[j]]
    for j in range(n):
        for i in range(j - 1, -1, -1):
            q, _ = div_rem(placed[j][i], placed[i][i])
            if q:
                placed[j] = [x - q * y for x, y in zip(placed[j], placed[i])]
    return Matrix(zip(*placed))


def _int_div_rem(a, b):
    return divmod(a, b)  # floor division: remainder in [0, |b|) for b > 0


def _int_normalize_unit(p):
    return -1 if p < 0 else 1


def _quad_normalize_unit(p):
    return -1 if quad_unit_normalize(p) != p else 1


def hnf_z(generators) -> Matrix:
    """Canonical column HNF over Z of full-rank rational generators.

    `generators` is a sequence of columns (rationals allowed); the result
    is the unique upper-triangular basis, with the common denominator of
    the input divided back out.
    """
    cols = [[Fraction(x) for x in c] for c in generators]
    if not cols:
        raise ValueError("no generators")
    n = len(cols[0])
    den = 1
    for c in cols:
        for x in c:
            den = den * x.denominator // _gcd(den, x.denominator)
    int_cols = [[int(x * den) for x in c] for c in cols]
    h = _hnf_columns(int_cols, n, abs, _int_div_rem, _int_normalize_unit)
    return h.map(lambda x: Fraction(x, den))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def hnf_znu(generators, denominator_bound: QuadInt) -> Matrix:
    """Canonical column HNF over Z[nu].

    The generator columns are Q(nu) vectors inside
    (1/denominator_bound) * Z[nu]^n; the output is the unique canonical
    basis, returned with denominators restored.
    """
    cols = []
    dq = denominator_bound.to_quadrat()
    for c in generators:
        scaled = []
        for x in c:
            y = x * dq if isinstance(x, QuadRat) else x.to_quadrat() * dq
            if not y.is_integral():
                raise ValueError(
                    f"generator entry {x} not in (1/{denominator_bound})*Z[nu]"
                )
            scaled.append(y.to_quadint())
        cols.append(scaled)
    if not cols:
        raise ValueError("no generators")
    n = len(cols[0])
    h = _hnf_columns(
        cols, n, lambda x: x.norm(), quad_div_rem, _quad_normalize_unit
    )
    return h.map(lambda x: x.to_quadrat() / dq)


# ---------------------------------------------------------------------------
# F_11 vector spaces
# ---------------------------------------------------------------------------

F11 = 11


def f11(x: int) -> ModP:
    return ModP(x, F11)


def f11_matrix(rows) -> Matrix:
    return Matrix([[f11(int(x)) for x in r] for r in rows])


def _f11_rref(rows):
    """Reduced row echelon form over F_11; returns (rows, pivot columns)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c] ** (-1)
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def f11_kernel(m: Matrix):
    """Reduced-echelon basis of the right kernel of an F_11 matrix."""
    rref, pivots = _f11_rref(m.rows)
    ncols = m.ncols
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [f11(0)] * ncols
        vec[fc] = f11(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -rref[r][fc]
        basis.append(vec)
    rows, _ = _f11_rref(basis)
    return [tuple(r) for r in rows]


@dataclass(frozen=True)
class F11Subspace:
    """Subspace of F_11^n given by a reduced row-echelon basis."""

    dimension: int
    basis: tuple  # rows of ModP entries, reduced echelon form

    def contains(self, vec) -> bool:
        rows = [list(r) for r in self.basis]
        before, _ = _f11_rref(rows)
        after, _ = _f11_rref(rows + [list(vec)])
        return len(after) == len(before)

    def __le__(self, other: "F11Subspace") -> bool:
        return all(other.contains(row) for row in self.basis)


def invariant_chain_f11(m: Matrix):
    """Complete chain of invariant subspaces of a single-Jordan-block
    unipotent matrix over F_11.

    Requires (m - I)^n = 0 and (m - I)^(n-1) != 0; in that case the
    invariant subspaces form the chain ker(m - I)^j, j = 0..n, and the
    chain is returned in increasing order.
    """
    n = m.nrows
    if n != m.ncols:
        raise ValueError("matrix must be square")
    ident = Matrix.identity(n, f11(1))
    nil = m - ident

    def _is_zero(mat):
        return not any(any(x for x in row) for row in mat.rows)

    if not _is_zero(nil ** n):
        raise ValueError("not a single unipotent Jordan block: (m-I)^n != 0")
    if _is_zero(nil ** (n - 1)):
        raise ValueError("not a single unipotent Jordan block: (m-I)^(n-1) = 0")
    chain = []
    for j in range(n + 1):
        basis = f11_kernel(nil ** j)
        sub = F11Subspace(dimension=len(basis), basis=tuple(basis))
        if sub.dimension != j:
            raise AssertionError("kernel dimensions do not form a full flag")
        chain.append(sub)
    return chain
