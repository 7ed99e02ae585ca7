"""Cubic threefolds as exact monomial maps, diagonal-action character
decompositions, and singularity certification of character eigenspaces.

The drivers at the bottom certify that neither admissible order-7 weight
system nor the eliminated order-11 weight system admits a smooth invariant
cubic, while the weight system of the Klein cubic passes as a positive
control.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .groebner import projective_zero_set_empty
from .scalars import ModP

NVARS = 5


def all_cubic_monomials():
    """The 35 degree-3 exponent tuples in 5 variables, largest first."""
    monos = set()
    for picks in combinations_with_replacement(range(NVARS), 3):
        e = [0] * NVARS
        for i in picks:
            e[i] += 1
        monos.add(tuple(e))
    return tuple(sorted(monos, reverse=True))


def format_monomial(mono) -> str:
    parts = []
    for i, e in enumerate(mono):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts)


def parse_monomial(text: str):
    e = [0] * NVARS
    for factor in text.strip().split("*"):
        factor = factor.strip()
        if "^" in factor:
            var, _, exp = factor.partition("^")
            power = int(exp)
        else:
            var, power = factor, 1
        if not var.startswith("x"):
            raise ValueError(f"bad variable {factor!r}")
        idx = int(var[1:]) - 1
        if not 0 <= idx < NVARS:
            raise ValueError(f"variable index out of range in {factor!r}")
        e[idx] += power
    if sum(e) != 3:
        raise ValueError(f"monomial {text!r} does not have degree 3")
    return tuple(e)


class CubicForm:
    """Degree-3 form in 5 variables as a map monomial -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        clean = {}
        for mono, coeff in dict(terms).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != NVARS or sum(mono) != 3 or min(mono) < 0:
                raise ValueError(f"not a degree-3 monomial: {mono}")
            if coeff:
                clean[mono] = coeff
        self.terms = clean

    @classmethod
    def klein(cls) -> "CubicForm":
        support = [
            (1, 0, 0, 0, 2),  # x1*x5^2
            (0, 0, 2, 0, 1),  # x5*x3^2
            (0, 0, 1, 2, 0),  # x3*x4^2
            (0, 2, 0, 1, 0),  # x4*x2^2
            (2, 1, 0, 0, 0),  # x2*x1^2
        ]
        return cls({m: Fraction(1) for m in support})

    def __eq__(self, other):
        if not isinstance(other, CubicForm):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        body = "; ".join(
            f"{format_monomial(m)}={c}" for m, c in sorted(self.terms.items(), reverse=True)
        )
        return f"CubicForm({body})"

    def monomials(self):
        return frozenset(self.terms)

    def partials(self):
        """The five partial derivatives, as monomial maps (quadrics)."""
        out = []
        for i in range(NVARS):
            d = {}
            for mono, coeff in self.terms.items():
                if mono[i]:
                    lower = list(mono)
                    lower[i] -= 1
                    d[tuple(lower)] = coeff * mono[i]
            out.append(d)
        return out

    def evaluate(self, point):
        total = None
        for mono, coeff in self.terms.items():
            term = coeff
            for x, e in zip(point, mono):
                for _ in range(e):
                    term = term * x
            total = term if total is None else total + term
        return total if total is not None else Fraction(0)

    def permute_variables(self, sources) -> "CubicForm":
        """Pullback along the point map z -> (z_{sources[0]}, ...)."""
        out = {}
        for mono, coeff in self.terms.items():
            image = [0] * NVARS
            for i, e in enumerate(mono):
                image[sources[i]] += e
            out[tuple(image)] = out.get(tuple(image), 0) + coeff
        return CubicForm(out)

    def linear_substitution(self, matrix) -> "CubicForm":
        """Pullback along x_i -> sum_j matrix[i][j] x_j (exact expansion)."""
        linear = []
        for i in range(NVARS):
            row = {}
            for j, c in enumerate(matrix[i]):
                if c:
                    e = [0] * NVARS
                    e[j] = 1
                    row[tuple(e)] = Fraction(c)
            linear.append(row)
        out = {}
        zero_mono = (0,) * NVARS
        for mono, coeff in self.terms.items():
            prod = {zero_mono: Fraction(coeff)}
            for i, e in enumerate(mono):
                for _ in range(e):
                    prod = _poly_mul(prod, linear[i])
            for m, c in prod.items():
                acc = out.get(m, Fraction(0)) + c
                if acc:
                    out[m] = acc
                else:
                    out.pop(m, None)
        return CubicForm(out)


def _poly_mul(f, g):
    out = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            acc = out.get(m, Fraction(0)) + c1 * c2
            if acc:
                out[m] = acc
            else:
                out.pop(m, None)
    return out


def parse_cubic(text: str) -> CubicForm:
    """Parse 'x1^2*x2=3;x3^3=-1/2;...' into a cubic with rational coefficients."""
    terms = {}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        mono_text, sep, coeff_text = chunk.partition("=")
        if not sep:
            raise ValueError(f"missing '=' in term {chunk!r}")
        mono = parse_monomial(mono_text)
        coeff = Fraction(coeff_text.strip())
        terms[mono] = terms.get(mono, Fraction(0)) + coeff
    return CubicForm(terms)


# ---------------------------------------------------------------------------
# Diagonal weight actions and character decompositions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeightSystem:
    """Diagonal action x_i -> mu^{weights[i]} x_i for a primitive root mu."""

    modulus: int
    weights: tuple

    def character(self, mono) -> int:
        return sum(e * w for e, w in zip(mono, self.weights)) % self.modulus


def character_decomposition(ws: WeightSystem):
    """Partition of the 35 cubic monomials by character value."""
    buckets = {c: [] for c in range(ws.modulus)}
    for mono in all_cubic_monomials():
        buckets[ws.character(mono)].append(mono)
    return {c: tuple(monos) for c, monos in buckets.items()}


def decomposition_multiplicities(ws: WeightSystem):
    dec = character_decomposition(ws)
    return tuple(len(dec[c]) for c in range(ws.modulus))


def admissible_weight_orbits(modulus: int = 7):
    """Triples of pairwise non-conjugate primitive characters, up to scaling.

    These are the candidate non-trivial eigenvalue exponents for an
    automorphism of the given prime order on a 5-dimensional abelian
    variety; for modulus 7 there are exactly two orbits.
    """
    orbits = set()
    for s in combinations(range(1, modulus), 3):
        if any((a + b) % modulus == 0 for a, b in combinations(s, 2)):
            continue
        canonical = min(
            tuple(sorted((u * x) % modulus for x in s))
            for u in range(1, modulus)
        )
        orbits.add(canonical)
    return orbits


# ---------------------------------------------------------------------------
# Singularity certification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SingularityCertificate:
    """Outcome of certifying that every cubic on a support set is singular.

    kind 'coordinate-point' is a proof: all five partials of any supported
    cubic vanish at the witness coordinate point.  kind 'sampled-evidence'
    only records that sampled members were all singular.  kind 'none' means
    no certificate was produced.
    """

    kind: str
    witness: int | None = None
    samples_tested: int = 0


def certify_singular_support(monomials) -> SingularityCertificate:
    """Coordinate-point certificate: an index i such that no monomial has
    exponent >= 2 on x_i (no x_i^3 and no x_i^2 x_j in the support)."""
    monomials = list(monomials)
    for i in range(NVARS):
        if all(m[i] < 2 for m in monomials):
            return SingularityCertificate(kind="coordinate-point", witness=i)
    return SingularityCertificate(kind="none")


def coordinate_point(i):
    return tuple(Fraction(1) if j == i else Fraction(0) for j in range(NVARS))


# ---------------------------------------------------------------------------
# Smoothness oracle
# ---------------------------------------------------------------------------

def _to_mod_p(partials, p: int):
    out = []
    for d in partials:
        reduced = {}
        for mono, coeff in d.items():
            coeff = Fraction(coeff)
            if coeff.denominator % p == 0:
                return None  # coefficient not p-integral; pre-pass unusable
            reduced[mono] = ModP(coeff.numerator, p) / ModP(coeff.denominator, p)
        out.append(reduced)
    return out


def is_smooth(form: CubicForm, prepass_prime: int | None = 10007) -> bool:
    """Exact smoothness test for a cubic threefold over Q.

    The cubic is smooth iff its five partial derivatives have no common
    projective zero.  A mod-p Groebner pre-pass may certify smoothness
    (emptiness mod p forces emptiness in characteristic zero); any other
    outcome falls through to the exact rational computation.
    """
    if not form:
        raise ValueError("the zero form is not a cubic threefold")
    partials = form.partials()
    if prepass_prime is not None:
        if prepass_prime < 5 or not _is_prime(prepass_prime):
            raise ValueError("pre-pass modulus must be a prime >= 5")
        reduced = _to_mod_p(partials, prepass_prime)
        if reduced is not None and projective_zero_set_empty(reduced, NVARS):
            return True
    rational = [{m: Fraction(c) for m, c in d.items()} for d in partials]
    return projective_zero_set_empty(rational, NVARS)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# Eigenspace scans for the forbidden automorphism orders
# ---------------------------------------------------------------------------

def sample_members(monomials, count: int, rng: random.Random):
    """Random cubics on a support set, with distinct small positive
    rational coefficients."""
    pool = sorted({Fraction(p, q) for q in (1, 2, 3) for p in range(1, 40)})
    members = []
    for _ in range(count):
        coeffs = rng.sample(pool, len(monomials))
        members.append(CubicForm(dict(zip(monomials, coeffs))))
    return members


@dataclass(frozen=True)
class EigenspaceScan:
    modulus: int
    weights: tuple
    character: int
    monomials: tuple
    certificate: SingularityCertificate
    smooth_member_found: bool


def scan_weight_system(
    ws: WeightSystem, seed: int = 0, samples: int = 25, prime: int | None = 10007
):
    """Certify every character eigenspace of a weight system singular.

    Eigenspaces missed by the coordinate-point criterion fall back to
    sampling members through the exact smoothness oracle; a single smooth
    member refutes the weight system scan.
    """
    results = []
    decomposition = character_decomposition(ws)
    for character in range(ws.modulus):
        monomials = decomposition[character]
        if not monomials:
            cert = SingularityCertificate(kind="coordinate-point", witness=None)
            results.append(
                EigenspaceScan(ws.modulus, ws.weights, character, monomials, cert, False)
            )
            continue
        cert = certify_singular_support(monomials)
        smooth_found = False
        if cert.kind == "none":
            rng = random.Random(f"{seed}:{ws.modulus}:{ws.weights}:{character}")
            tested = 0
            for member in sample_members(monomials, samples, rng):
                tested += 1
                if is_smooth(member, prime):
                    smooth_found = True
                    break
            kind = "none" if smooth_found else "sampled-evidence"
            cert = SingularityCertificate(kind=kind, samples_tested=tested)
        results.append(
            EigenspaceScan(ws.modulus, ws.weights, character, monomials, cert, smooth_found)
        )
    return results


ORDER7_WEIGHTS = ((1, 2, 3, 0, 0), (1, 2, 4, 0, 0))
ORDER11_X3_WEIGHTS = (1, 2, 3, 5, 7)
KLEIN_WEIGHTS = (1, 9, 3, 4, 5)


@dataclass(frozen=True)
class Order7Report:
    orbits: tuple
    scans: tuple  # one tuple of EigenspaceScan per admissible weight system

    @property
    def smooth_member_found(self) -> bool:
        return any(s.smooth_member_found for scan in self.scans for s in scan)


def order7_nonexistence(seed: int = 0, samples: int = 25, prime: int | None = 10007):
    """Scan both admissible order-7 weight systems; no eigenspace may
    contain a smooth cubic."""
    orbits = tuple(sorted(admissible_weight_orbits(7)))
    scans = tuple(
        tuple(scan_weight_system(WeightSystem(7, w), seed, samples, prime))
        for w in ORDER7_WEIGHTS
    )
    return Order7Report(orbits=orbits, scans=scans)


@dataclass(frozen=True)
class Order11Report:
    scan: tuple                      # eigenspace scans for the eliminated system
    klein_chi0: tuple                # monomials of the Klein chi_0 eigenspace
    klein_monomials_in_chi0: bool
    klein_chi0_certificate: str      # must be 'none': the method cannot rule
                                     # out the weight system of a smooth cubic
    klein_is_smooth: bool

    @property
    def smooth_member_found(self) -> bool:
        return any(s.smooth_member_found for s in self.scan)


def order11_x3_elimination(seed: int = 0, samples: int = 25, prime: int | None = 10007):
    """Certify all character eigenspaces of the eliminated order-11 weight
    system singular, with the Klein weight system as a positive control."""
    scan = tuple(
        scan_weight_system(WeightSystem(11, ORDER11_X3_WEIGHTS), seed, samples, prime)
    )
    klein_ws = WeightSystem(11, KLEIN_WEIGHTS)
    chi0 = character_decomposition(klein_ws)[0]
    klein = CubicForm.klein()
    contained = all(m in chi0 for m in klein.monomials())
    control_cert = certify_singular_support(chi0)
    return Order11Report(
        scan=scan,
        klein_chi0=chi0,
        klein_monomials_in_chi0=contained,
        klein_chi0_certificate=control_cert.kind,
        klein_is_smooth=is_smooth(klein, prime),
    )
