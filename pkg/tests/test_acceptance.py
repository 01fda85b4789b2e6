"""End-to-end acceptance checks, one test per criterion."""

import itertools
import subprocess
import sys
import time

import pytest

from hopftaft.classify import automorphism_group, brute_force_hopf_isos, count_classes, family, iso_criterion, witness_isomorphism
from hopftaft.constructions import (
    bicrossed_product,
    group_algebra,
    matched_pair_search,
    matched_pairs,
    smash_product,
    t_quantum_group,
    taft,
    verify_matched_pair,
)
from hopftaft.exactmath import GF, QZeta, roots_of_unity, totient
from hopftaft.hopfcore import structure_diff, tensor_product_hopf, verify_hopf

FIELDS = [GF(13), QZeta(12)]
GRID = [(m, n) for m in (2, 3, 4) for n in (2, 3, 4, 6) if 12 % m == 0]


@pytest.mark.criterion(1, "axiom suite on the (m, n) grid over GF(13) and Q(zeta_12)")
def test_axiom_suite():
    start = time.perf_counter()
    failures = []
    for F in FIELDS:
        for m, n in GRID:
            q = roots_of_unity(F, m).generator
            algebras = [taft(F, m, q), group_algebra(F, n)]
            algebras += [t_quantum_group(F, m, q, n, w) for w in roots_of_unity(F, n).elements]
            for H in algebras:
                report = verify_hopf(H)
                if not report.passed:
                    failures.append((F.spec, m, n, H.name, report.first_failure()))
    elapsed = time.perf_counter() - start
    assert failures == []
    assert elapsed < 60, f"axiom suite took {elapsed:.1f} s"


@pytest.mark.criterion(2, "matched pairs: nu(n) standard pairs pass; search over GF(7), (3,2) finds exactly them")
def test_matched_pairs():
    for F in FIELDS:
        for m, n in GRID:
            pairs = matched_pairs(F, m, None, n)
            assert len(pairs) == roots_of_unity(F, n).nu
            for mp in pairs:
                assert verify_matched_pair(mp).passed
    F7 = GF(7)
    found = matched_pair_search(F7, 3, 2, 2)
    standard = matched_pairs(F7, 3, 2, 2)
    assert len(found) == 2
    for mp in found:
        assert sum(mp.same_actions(s) for s in standard) == 1
    assert {int(mp.omega) for mp in found} == {int(s.omega) for s in standard} == {1, 6}


@pytest.mark.criterion(3, "bicrossed = smash = T^omega entrywise, dim n m^2, tensor product at omega = 1")
def test_bicrossed_smash_tqg_agree():
    for F in FIELDS:
        for m, n in GRID:
            for mp in matched_pairs(F, m, None, n):
                B = bicrossed_product(mp)
                S = smash_product(mp.A, mp.H, mp.left)
                E = t_quantum_group(F, m, mp.A.presentation.q, n, mp.omega, cross_check=False)
                assert E.dim == n * m * m
                assert structure_diff(B, S) is None
                assert structure_diff(S, E) is None
                if mp.omega == 1:
                    assert structure_diff(E, tensor_product_hopf(mp.A, mp.H)) is None


@pytest.mark.criterion(4, "class counts by formula and by criterion partition")
@pytest.mark.parametrize(
    "m,n,field,nu,d,count,reps",
    [
        (3, 4, GF(13), 4, 1, 3, [1, 2, 4]),
        (4, 6, GF(13), 6, 2, 2, [1, 3]),
        (3, 3, GF(13), 3, 3, 1, [1]),
        (2, 2, GF(5), 2, 2, 1, [1]),
    ],
)
def test_class_counts(m, n, field, nu, d, count, reps):
    report = count_classes(m, n, field)  # asserts formula == partition internally
    assert (report.nu, report.d, report.count, report.representatives) == (nu, d, count, reps)
    assert len(report.classes) == count


@pytest.mark.criterion(5, "isomorphism witnesses verify; brute force agrees on non-isomorphic pairs")
def test_witnesses():
    for F in FIELDS:
        for m, n in GRID:
            fam = family(m, n, F)
            for t, t2 in itertools.product(range(fam.nu), repeat=2):
                if iso_criterion(t, t2, m, n, F) is not None:
                    w = witness_isomorphism(t, t2, m, n, F)
                    assert w.forward_report.passed and w.inverse_report.passed
                    assert (w.forward @ w.inverse).is_identity()
                    assert (w.inverse @ w.forward).is_identity()
    F7 = GF(7)
    fam = family(3, 2, F7)
    for t, t2 in itertools.product(range(fam.nu), repeat=2):
        isos = brute_force_hopf_isos(fam.algebra(t), fam.algebra(t2))
        assert bool(isos) == (iso_criterion(t, t2, 3, 2, F7) is not None)


@pytest.mark.criterion(6, "automorphism groups: orders, group law as matrix composition, brute-force counts")
def test_automorphisms():
    for F in FIELDS:
        for m, n in GRID:
            assert automorphism_group(0, m, n, F, verify=False).order == totient(n)
            fam = family(m, n, F)
            for t in range(fam.nu):
                g = automorphism_group(t, m, n, F)
                assert g.group_axioms and g.morphisms_verified and g.composition_law
    start = time.perf_counter()
    for t in (0, 1):
        g = automorphism_group(t, 3, 2, GF(7), brute_force=True)
        assert g.brute_force_count == 6 * g.order
    elapsed = time.perf_counter() - start
    assert elapsed < 120


@pytest.mark.criterion(7, "classify --format json is byte-identical across runs")
def test_deterministic_json():
    cmd = [sys.executable, "-m", "hopftaft", "classify", "--field", "gf:13", "--m", "3", "--n", "4", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first and first == second
