import itertools
from math import gcd

import pytest

from hopftaft.classify import (
    automorphism_group,
    bezout_data,
    brute_force_hopf_isos,
    canonical_representative,
    count_classes,
    family,
    iso_criterion,
    witness_isomorphism,
)
from hopftaft.errors import BudgetExceeded, InvalidParameters, NotIsomorphic
from hopftaft.exactmath import GF, QZeta, divisors, totient
from hopftaft.hopfcore import is_hopf_morphism, verify_hopf

F13 = GF(13)
F7 = GF(7)


def test_family_parameters():
    fam = family(3, 4, F13)
    assert fam.q == 3 and fam.xi == 5 and fam.nu == 4
    assert family(3, 2, F7).q == 2 and family(3, 2, F7).xi == 6
    with pytest.raises(InvalidParameters):
        fam.check_exponent(4)


# -- criterion ---------------------------------------------------------------------


def test_criterion_examples():
    assert iso_criterion(1, 3, 3, 4, F13) == (0, 3)
    assert iso_criterion(1, 2, 3, 4, F13) is None
    for t in range(4):
        assert iso_criterion(t, t, 3, 4, F13) == (0, 1)


def brute_criterion(t, t2, m, n, F):
    fam = family(m, n, F)
    sols = []
    for s in range(n):
        if gcd(s, n) != 1:
            continue
        for l in range(m):
            if fam.xi ** (s * t2) / fam.xi ** t == fam.q ** l:
                sols.append((s, l))
    return sols


@pytest.mark.parametrize("m,n", [(2, 2), (3, 4), (4, 6), (3, 3), (2, 4), (6, 6), (4, 12)])
def test_criterion_is_least_solution(m, n):
    fam = family(m, n, F13)
    for t, t2 in itertools.product(range(fam.nu), repeat=2):
        sols = brute_criterion(t, t2, m, n, F13)
        got = iso_criterion(t, t2, m, n, F13)
        if sols:
            s, l = min(sols)
            assert got == (l, s)
        else:
            assert got is None


def test_canonical_representative():
    assert canonical_representative(3, 3, 4, F13) == 1
    assert canonical_representative(0, 3, 4, F13) == 4
    assert canonical_representative(2, 3, 4, F13) == 2
    for m, n in [(3, 4), (4, 6), (2, 6), (3, 3), (4, 12)]:
        fam = family(m, n, F13)
        for t in range(fam.nu):
            r = canonical_representative(t, m, n, F13)
            assert iso_criterion(t, r % fam.nu, m, n, F13) is not None


@pytest.mark.parametrize(
    "m,n,field,nu,d,count,reps",
    [
        (3, 4, F13, 4, 1, 3, [1, 2, 4]),
        (4, 6, F13, 6, 2, 2, [1, 3]),
        (3, 3, F13, 3, 3, 1, [1]),
        (2, 2, GF(5), 2, 2, 1, [1]),
        (3, 2, F7, 2, 1, 2, [1, 2]),
        (2, 12, F13, 12, 2, 4, [1, 2, 3, 6]),
    ],
)
def test_count_classes(m, n, field, nu, d, count, reps):
    report = count_classes(m, n, field)
    assert (report.nu, report.d, report.count, report.representatives) == (nu, d, count, reps)
    assert len(report.classes) == count


def test_classes_for_m3_n4():
    report = count_classes(3, 4, F13)
    assert report.classes == [[0], [1, 3], [2]]
    assert report.factorization == [(2, 2)]


def test_cyclotomic_field_gives_same_classes():
    a = count_classes(3, 4, F13).to_dict()
    b = count_classes(3, 4, QZeta(12)).to_dict()
    a.pop("field")
    b.pop("field")
    assert a == b


@pytest.mark.parametrize("m,n", [(3, 4), (4, 6), (2, 12), (6, 12)])
def test_partition_invariant_under_choice_of_generator(m, n):
    fam = family(m, n, F13)
    base = count_classes(m, n, F13)
    for k in range(1, fam.nu):
        if gcd(k, fam.nu) == 1:
            other = count_classes(m, n, F13, xi=fam.xi ** k)
            assert other.count == base.count
            assert other.representatives == base.representatives


def test_divisor_representatives_distinct():
    for m, n in [(3, 4), (2, 12), (4, 6)]:
        fam = family(m, n, F13)
        k = fam.nu // gcd(m, fam.nu)
        for a, b in itertools.permutations(divisors(k), 2):
            assert iso_criterion(a % fam.nu, b % fam.nu, m, n, F13) is None


# -- witnesses ---------------------------------------------------------------------


def test_bezout_example():
    bz = bezout_data(3, 4, 0, 3)
    assert (bz.tau, bz.mu, bz.tau1, bz.tau2, bz.alpha, bz.beta) == (3, -2, 3, 0, 0, 0)


def test_witness_example():
    w = witness_isomorphism(1, 3, 3, 4, F13)
    assert (w.l, w.s) == (0, 3)
    assert w.inverse_params == (0, 3)
    assert w.verified
    assert (w.forward @ w.inverse).is_identity() and (w.inverse @ w.forward).is_identity()
    with pytest.raises(NotIsomorphic):
        witness_isomorphism(1, 2, 3, 4, F13)


def test_witness_trivial():
    w = witness_isomorphism(2, 2, 3, 4, F13)
    assert w.forward.is_identity() and w.inverse.is_identity()


@pytest.mark.parametrize("m,n", [(4, 6), (2, 12), (3, 3)])
def test_all_witnesses_verify(m, n):
    fam = family(m, n, F13)
    for t, t2 in itertools.product(range(fam.nu), repeat=2):
        if iso_criterion(t, t2, m, n, F13) is not None:
            w = witness_isomorphism(t, t2, m, n, F13, gamma=2)
            assert w.verified
            bz = w.bezout
            assert w.s * bz.tau + n * bz.mu == 1
            assert bz.tau == bz.alpha * n + bz.tau1 and w.l * bz.tau == bz.beta * m + bz.tau2


# -- automorphisms -------------------------------------------------------------------


def test_aut_examples():
    g0 = automorphism_group(0, 3, 4, F13)
    assert g0.elements == [(0, 1), (0, 3)]
    assert g0.group_axioms and g0.morphisms_verified and g0.composition_law
    g1 = automorphism_group(1, 3, 4, F13)
    assert g1.elements == [(0, 1)] and g1.order == 1
    assert g1.multiply((0, 1), (0, 1)) == (0, 1)


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_aut_trivial_omega_has_phi_n_elements(n):
    g = automorphism_group(0, 3, n, F13)
    assert g.order == totient(n)
    assert g.elements[0] == (0, 1 % n)


def test_aut_nontrivial_group_law():
    # m = 4, n = 12, t = 3: several elements with l != 0
    g = automorphism_group(3, 4, 12, F13)
    assert any(l for l, _ in g.elements)
    assert g.group_axioms and g.morphisms_verified and g.composition_law
    for a in g.elements:
        l, s = a
        s2 = g.inverse(a)[1]
        assert g.inverse(a) == ((-l * s2) % 4, s2)


# -- brute-force oracle -----------------------------------------------------------------


@pytest.mark.parametrize("field,m,n", [(F7, 3, 2), (GF(5), 2, 2)], ids=["gf7-3-2", "gf5-2-2"])
def test_brute_force_agrees_with_criterion(field, m, n):
    fam = family(m, n, field)
    p = field.p
    for t, t2 in itertools.product(range(fam.nu), repeat=2):
        isos = brute_force_hopf_isos(fam.algebra(t), fam.algebra(t2))
        assert bool(isos) == (iso_criterion(t, t2, m, n, field) is not None)
        for f in isos:
            assert is_hopf_morphism(f).passed
        if t == t2:
            assert len(isos) == (p - 1) * automorphism_group(t, m, n, field, verify=False).order


def test_brute_force_example_counts():
    fam = family(3, 2, F7)
    assert len(brute_force_hopf_isos(fam.algebra(1), fam.algebra(1))) == 6
    assert brute_force_hopf_isos(fam.algebra(1), fam.algebra(0)) == []
    assert brute_force_hopf_isos(fam.algebra(1), fam.A) == []
    with pytest.raises(BudgetExceeded):
        brute_force_hopf_isos(fam.algebra(1), fam.algebra(1), budget=10)


def test_brute_force_gf13_counts():
    for t in (0, 1):
        g = automorphism_group(t, 3, 4, F13, verify=False, brute_force=True)
        assert g.brute_force_count == g.expected_brute_force == 12 * g.order


def test_algebras_in_family_are_hopf():
    fam = family(3, 4, F13)
    for t in range(fam.nu):
        assert verify_hopf(fam.algebra(t)).passed
