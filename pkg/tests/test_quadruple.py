import itertools

import pytest

from hopftaft.constructions import (
    CONDITIONS,
    quadruple_morphism,
    smash_product,
    standard_matched_pair,
    standard_quadruple,
)
from hopftaft.errors import InvalidParameters
from hopftaft.exactmath import GF, roots_of_unity, units_mod
from hopftaft.hopfcore import LinearMap, is_bijective, is_hopf_morphism
from hopftaft.hopfcore import vectors as V

F13 = GF(13)


@pytest.fixture(scope="module")
def pairs():
    # xi = 5 generates U_4(GF(13)); omega = xi^t
    return {t: standard_matched_pair(F13, 3, 3, 4, F13(5) ** t) for t in range(4)}


@pytest.fixture(scope="module")
def algebras(pairs):
    return {t: smash_product(mp.A, mp.H, mp.left) for t, mp in pairs.items()}


def test_identity_quadruple(pairs, algebras):
    mp = pairs[1]
    quad = standard_quadruple(1, 0, 1, mp.A, mp.H)
    assert quad.u == LinearMap.identity(mp.A) and quad.v == LinearMap.identity(mp.H)
    for a in range(mp.A.dim):
        assert quad.p.columns[a] == V.scale(mp.A.counit[a], mp.H.one())
    psi, report = quadruple_morphism(quad, mp, mp, algebras[1], algebras[1])
    assert psi.is_identity()
    assert report.passed


def test_quadruple_maps_on_basis(pairs):
    mp = pairs[1]
    pa, ph = mp.A.presentation, mp.H.presentation
    quad = standard_quadruple(2, 1, 3, mp.A, mp.H)
    assert quad.u.columns[pa.index(j=2, k=2)] == {pa.index(j=2, k=2): F13(4)}
    assert quad.r.columns[ph.index(i=2)] == pa.vector(j=2)
    assert quad.v.columns[ph.index(i=3)] == ph.vector(i=1)
    with pytest.raises(InvalidParameters):
        standard_quadruple(0, 0, 1, mp.A, mp.H)
    with pytest.raises(InvalidParameters):
        standard_quadruple(1, 3, 1, mp.A, mp.H)


def test_isomorphism_between_different_omegas(pairs, algebras):
    quad = standard_quadruple(1, 0, 3, pairs[1].A, pairs[1].H)
    psi, report = quadruple_morphism(quad, pairs[1], pairs[3], algebras[1], algebras[3])
    assert report.passed, report.first_failure()
    assert is_bijective(psi)


def test_quadruple_reports_failed_criterion(pairs, algebras):
    # s = 1 between t=1 and t=3 needs xi^2 in {1, 3, 9}: 12 is not
    quad = standard_quadruple(1, 0, 1, pairs[1].A, pairs[1].H)
    psi, report = quadruple_morphism(quad, pairs[1], pairs[3], algebras[1], algebras[3])
    assert not report.passed
    assert not is_hopf_morphism(psi).passed


def test_nonzero_c_breaks_first_condition():
    mp = standard_matched_pair(F13, 3, 3, 3, 1)
    quad = standard_quadruple(1, 0, 1, mp.A, mp.H, c=1)
    assert quad.p.columns[mp.A.presentation.index(j=1)] == mp.H.presentation.vector(i=1)
    _, report = quadruple_morphism(quad, mp, mp)
    assert report["p_hopf"].passed
    assert not report["C1"].passed


@pytest.mark.parametrize("m,n", [(3, 4), (2, 6), (4, 2)])
def test_conditions_imply_hopf_morphism(m, n):
    roots = roots_of_unity(F13, n)
    pairs = [standard_matched_pair(F13, m, None, n, w) for w in roots.elements]
    algs = [smash_product(mp.A, mp.H, mp.left) for mp in pairs]
    for (i, src), (j, dst) in itertools.product(enumerate(pairs), repeat=2):
        for l, s in itertools.product(range(m), range(n)):
            quad = standard_quadruple(1, l, s, src.A, src.H)
            psi, report = quadruple_morphism(quad, src, dst, algs[i], algs[j])
            if all(report[c].passed for c in CONDITIONS):
                assert report.passed, report.first_failure()


def test_composition_law(pairs, algebras):
    m, n = 3, 4
    mp = pairs[0]
    E = algebras[0]
    A, H = mp.A, mp.H
    maps = {}
    for gamma, l, s in itertools.product((1, 2), range(m), units_mod(n)):
        psi, report = quadruple_morphism(standard_quadruple(gamma, l, s, A, H), mp, mp, E, E)
        if report.passed:
            maps[(gamma, l, s)] = psi
    assert len(maps) == 2 * 1 * 2  # at omega = 1 only l = 0 works
    for (g1, l1, s1), (g2, l2, s2) in itertools.product(maps, repeat=2):
        composed = maps[(g1, l1, s1)] @ maps[(g2, l2, s2)]
        key = ((g1 * g2) % 13, (l1 + s1 * l2) % m, (s1 * s2) % n)
        if key in maps:
            assert composed == maps[key]
        else:
            assert composed == quadruple_morphism(standard_quadruple(*key, A, H), mp, mp, E, E)[0]
