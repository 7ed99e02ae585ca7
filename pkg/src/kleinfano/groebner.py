"""Buchberger's algorithm over an exact coefficient field.

Monomials are exponent tuples, ordered by graded reverse-lexicographic
comparison.  The only consumer is the projective-emptiness test for
homogeneous ideals: the zero set is empty iff the leading-term staircase
contains a pure power of every variable.
"""

from __future__ import annotations

from itertools import combinations


def grevlex_key(mono):
    return (sum(mono), tuple(-e for e in reversed(mono)))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _mono_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _mono_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def leading_monomial(poly):
    return max(poly, key=grevlex_key)


def make_monic(poly):
    if not poly:
        return poly
    lc = poly[leading_monomial(poly)]
    if lc == lc ** 0:
        return poly
    return {m: c / lc for m, c in poly.items()}


def normal_form(poly, basis):
    """Full remainder of poly modulo a list of monic polynomials."""
    work = dict(poly)
    remainder = {}
    while work:
        lm = leading_monomial(work)
        lc = work.pop(lm)
        if not lc:
            continue
        for blm, tail in basis:
            if _divides(blm, lm):
                shift = _mono_sub(lm, blm)
                for m, c in tail:
                    mm = _mono_add(m, shift)
                    acc = work.get(mm)
                    term = lc * c
                    if acc is None:
                        work[mm] = -term
                    else:
                        acc = acc - term
                        if acc:
                            work[mm] = acc
                        else:
                            del work[mm]
                break
        else:
            remainder[lm] = lc
    return remainder


def _prepared(poly):
    """(leading monomial, tail items) of a monic polynomial."""
    lm = leading_monomial(poly)
    tail = tuple((m, c) for m, c in poly.items() if m != lm)
    return lm, tail


def buchberger(generators):
    """Groebner basis (monic, not interreduced) of the given polynomials.

    Pairs with coprime leading terms are skipped; pairs are processed by
    increasing lcm, which keeps intermediate growth small at this scale.
    """
    basis = []
    for g in generators:
        g = make_monic({m: c for m, c in g.items() if c})
        if g:
            basis.append(g)
    prepared = [_prepared(g) for g in basis]
    pairs = {(i, j) for i, j in combinations(range(len(basis)), 2)}
    while pairs:
        i, j = min(
            pairs,
            key=lambda p: grevlex_key(
                _mono_lcm(prepared[p[0]][0], prepared[p[1]][0])
            ),
        )
        pairs.discard((i, j))
        lmi, lmj = prepared[i][0], prepared[j][0]
        lcm = _mono_lcm(lmi, lmj)
        if lcm == _mono_add(lmi, lmj):  # coprime leading terms
            continue
        # S-polynomial of two monic polynomials
        s = {}
        shift_i = _mono_sub(lcm, lmi)
        shift_j = _mono_sub(lcm, lmj)
        for m, c in basis[i].items():
            mm = _mono_add(m, shift_i)
            s[mm] = s.get(mm, c - c) + c
        for m, c in basis[j].items():
            mm = _mono_add(m, shift_j)
            acc = s.get(mm, c - c) - c
            if acc:
                s[mm] = acc
            else:
                s.pop(mm, None)
        remainder = normal_form(s, prepared)
        if remainder:
            remainder = make_monic(remainder)
            new_index = len(basis)
            basis.append(remainder)
            prepared.append(_prepared(remainder))
            for k in range(new_index):
                pairs.add((k, new_index))
    return basis


def staircase_covers_all_variables(basis, nvars: int) -> bool:
    """Whether the leading-term ideal contains a pure power of each variable."""
    covered = [False] * nvars
    for g in basis:
        lm = leading_monomial(g)
        support = [i for i, e in enumerate(lm) if e]
        if len(support) == 1:
            covered[support[0]] = True
    return all(covered)


def projective_zero_set_empty(generators, nvars: int) -> bool:
    """For homogeneous generators: whether their projective zero set is empty.

    Equivalent to the affine zero set being at most the origin, which for a
    homogeneous ideal is read off the Groebner staircase.
    """
    gens = [g for g in generators if any(g.values())]
    if not gens:
        return False
    basis = buchberger(gens)
    return staircase_covers_all_variables(basis, nvars)
