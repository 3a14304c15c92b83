import math
import random

import pytest

from qcweights.bounds import (
    ConstituentArith as C,
    bound_single_full,
    bound_single_shift,
    bound_single_shift_scalar,
    bound_theorem1,
    bound_theorem2,
    bound_theorem3,
    corollary1,
    corollary2,
    corollary3,
    corollary3_pair_term,
    shift_scalar_orbit_count,
    theorem3_subset_term,
)
from qcweights.errors import InvalidInputError, TheoremNotApplicableError
from qcweights.numth import cyclotomic_cosets, multiplicative_order


# -- values printed in the paper ------------------------------------------------

def test_single_constituent_values():
    assert bound_single_shift(9, 3, 2, 2) == 1
    assert bound_single_shift(15, 0, 2, 2) == 3
    assert bound_single_shift_scalar(91, 8, 3, 9) == 1
    assert bound_single_shift_scalar(39, 1, 4, 5) == 4
    assert bound_single_shift_scalar(11, 1, 5, 4) == 31
    assert bound_single_full(4, 5, 1, 11) == 7
    assert bound_single_full(2, 6, 1, 9) == 3
    assert bound_single_full(2, 1, 0, 1) == 1


def test_theorem_values():
    assert bound_theorem1([C(0, 1, 1), C(3, 2, 2)], 9, 2) == 3
    assert bound_theorem2([C(1, 3, 3), C(13, 1, 1)], 26, 3) == 4
    assert bound_theorem2([C(0, 1, 1), C(1, 6, 6)], 9, 2) == 15
    assert bound_theorem2([C(3, 4, 4), C(5, 2, 2)], 15, 2) == 7
    assert bound_theorem3([C(0, 1, 1), C(1, 6, 6)], 9, 2) == 7
    assert bound_theorem3([C(3, 4, 4), C(5, 2, 2)], 15, 2) == 5
    assert bound_theorem3([C(1, 5, 5)], 11, 4) == 7


def test_corollary3_terms():
    t = (C(0, 1, 1), C(1, 6, 6))
    assert corollary3_pair_term(*t, 9, 2) == 3
    assert corollary3(*t, 9, 2) == 7
    t = (C(5, 2, 2), C(3, 4, 4))
    assert corollary3_pair_term(*t, 15, 2) == 2
    assert corollary3(*t, 15, 2) == 5
    with pytest.raises(TheoremNotApplicableError):
        corollary3_pair_term(C(1, 6, 6), C(1, 6, 6), 9, 2)
    with pytest.raises(TheoremNotApplicableError):
        corollary3_pair_term(C(3, 4, 4), C(5, 2, 2), 15, 2)


# -- identities ---------------------------------------------------------------------

def _valid_constituents(q, m):
    for c in cyclotomic_cosets(q, m):
        for rank in (1, 2):
            yield C(c.rep, c.size, rank * c.size)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_single_constituent_reductions(q):
    for m in range(1, 61):
        if math.gcd(m, q) != 1 or multiplicative_order(q, m) > 12:
            continue
        for t in _valid_constituents(q, m):
            t.check(m, q)
            assert bound_theorem1([t], m, q) == bound_single_shift(m, t.i, t.K, q)
            assert bound_theorem2([t], m, q) == bound_single_shift_scalar(m, t.i, t.K, q)
            assert shift_scalar_orbit_count([t], m, q) == bound_single_shift_scalar(m, t.i, t.K, q)
            if t.K == t.k:
                assert bound_theorem3([t], m, q) == bound_single_full(q, t.k, t.i, m)


def test_lemma4_gcd_identity():
    for q in (2, 3, 4, 5, 9):
        for m in range(1, 101):
            for i in range(1, m + 1):
                g = math.gcd(m, i)
                assert math.gcd(q - 1, m // g) * g == math.gcd(m, (q - 1) * i)


def test_two_constituent_corollaries():
    rng = random.Random(7)
    checked = 0
    for q in (2, 3, 4, 5):
        for m in range(2, 40):
            if math.gcd(m, q) != 1 or multiplicative_order(q, m) > 10:
                continue
            cos = list(_valid_constituents(q, m))
            for _ in range(5):
                a, b = rng.sample(cos, 2)
                if a.i == b.i:
                    continue
                assert bound_theorem1([a, b], m, q) == corollary1(a, b, m, q)
                assert bound_theorem2([a, b], m, q) == corollary2(a, b, m, q)
                if a.K == a.k and b.K == b.k:
                    lo, hi = sorted((a, b), key=lambda t: t.k)
                    if hi.k % lo.k == 0:
                        mixed = theorem3_subset_term([lo, hi], m, q)
                        assert mixed == corollary3_pair_term(lo, hi, m, q)
                checked += 1
    assert checked > 100


def test_q2_collapses_scalars():
    for m in (3, 5, 7, 9, 15, 21):
        cos = list(_valid_constituents(2, m))
        for u in (1, 2, 3):
            sub = cos[:u]
            assert bound_theorem2(sub, m, 2) == bound_theorem1(sub, m, 2)
            assert shift_scalar_orbit_count(sub, m, 2) == bound_theorem1(sub, m, 2)


def test_paper_shift_scalar_value_is_an_upper_bound_of_the_exact_count():
    for q in (3, 4, 5, 7):
        for m in range(2, 30):
            if math.gcd(m, q) != 1 or multiplicative_order(q, m) > 8:
                continue
            cos = list(_valid_constituents(q, m))[::2]
            for u in (2, 3):
                sub = cos[:u]
                if len(sub) == u:
                    assert bound_theorem2(sub, m, q) >= shift_scalar_orbit_count(sub, m, q)


def test_shift_scalar_mismatch_example():
    # q=3, m=4: cosets {2} (K=1) and {1,3} (K=2); only r=0 fixes a word on both
    sub = [C(2, 1, 1), C(1, 2, 2)]
    assert bound_theorem2(sub, 4, 3) == 7
    assert shift_scalar_orbit_count(sub, 4, 3) == 5


def test_formulas_are_positive_integers():
    for q, m in [(2, 21), (3, 13), (4, 15), (5, 24)]:
        cos = [C(c.rep, c.size, c.size) for c in cyclotomic_cosets(q, m)][:4]
        for f in (bound_theorem1, bound_theorem2, bound_theorem3, shift_scalar_orbit_count):
            v = f(cos, m, q)
            assert isinstance(v, int) and v > 0


def test_errors():
    with pytest.raises(InvalidInputError):
        bound_single_shift(9, 1, 1, 2)  # K=1 is inconsistent with a coset of size 6
    with pytest.raises(InvalidInputError):
        bound_single_full(2, 1, 1, 9)
    with pytest.raises(TheoremNotApplicableError):
        bound_theorem3([C(3, 2, 4)], 9, 2)
    with pytest.raises(InvalidInputError):
        bound_theorem1([], 9, 2)
    with pytest.raises(InvalidInputError):
        C(3, 2, 3).check(9, 2)
