import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopftaft.constructions import (
    MatchedPair,
    bicrossed_product,
    group_algebra,
    matched_pair_search,
    matched_pairs,
    smash_conditions,
    smash_product,
    standard_actions,
    standard_matched_pair,
    t_quantum_group,
    taft,
    trivial_left_action,
    trivial_right_action,
    verify_matched_pair,
)
from hopftaft.errors import (
    BadRoot,
    BudgetExceeded,
    InvalidMatchedPair,
    InvalidParameters,
    NotARoot,
    NotModuleAlgebra,
    SymmetryFails,
)
from hopftaft.exactmath import GF, QZeta, roots_of_unity
from hopftaft.hopfcore import same_structure, structure_diff, tensor_product_hopf, verify_hopf
from hopftaft.hopfcore import vectors as V

F13 = GF(13)


def closed_form_product(F, m, q, n, w):
    """Multiplication table of T^w from the normal-form product rule, independent of rewriting."""
    q, w = F(q), F(w)
    dim = n * m * m

    def idx(j, k, i):
        return (j * m + k) * n + i

    table = [[{} for _ in range(dim)] for _ in range(dim)]
    for j, k, i, j2, k2, i2 in itertools.product(range(m), range(m), range(n), range(m), range(m), range(n)):
        if k + k2 < m:
            c = q ** (k * j2) * w ** (i * k2)
            table[idx(j, k, i)][idx(j2, k2, i2)] = {idx((j + j2) % m, k + k2, (i + i2) % n): c}
    return table


def q_binomial(k, r, q, F):
    """Gaussian binomial [k choose r]_q evaluated in F."""
    num, den = F.one, F.one
    for a in range(r):
        num = num * (F.one - q ** (k - a))
        den = den * (F.one - q ** (a + 1))
    return num / den


# -- Taft and group algebras ------------------------------------------------------


def test_sweedler_algebra():
    F = GF(5)
    S = taft(F, 2, 4)
    assert S.dim == 4
    assert verify_hopf(S).passed
    p = S.presentation
    h, x = p.index(j=1), p.index(k=1)
    assert S.multiply(S.basis(x), S.basis(h)) == {p.index(j=1, k=1): F(-1)}
    assert S.multiply(S.basis(x), S.basis(x)) == {}
    assert S.apply_antipode(S.basis(x)) == {p.index(j=1, k=1): F(1)}  # -x h = h x


def test_taft_antipode_and_verify():
    T = taft(F13, 3, 3)
    p = T.presentation
    # S(x) = -x h^2 = -q^2 h^2 x
    assert T.antipode[p.index(k=1)] == {p.index(j=2, k=1): F13(-9)}
    assert T.antipode[p.index(j=1)] == {p.index(j=2): F13.one}
    assert verify_hopf(T).passed


def test_taft_bad_roots():
    with pytest.raises(BadRoot):
        taft(F13, 3, 9 * 9 * 9)  # order 1
    with pytest.raises(BadRoot):
        taft(F13, 4, 12)  # order 2, not 4
    with pytest.raises(InvalidParameters):
        taft(F13, 1)
    with pytest.raises(InvalidParameters):
        taft(F13, 5)


@pytest.mark.parametrize("m,q", [(3, 3), (3, 9), (4, 5), (4, 8), (6, 4)])
def test_taft_coproduct_of_x_powers(m, q):
    T = taft(F13, m, q)
    p = T.presentation
    qq = F13(q)
    for k in range(m):
        expected = {}
        for r in range(k + 1):
            c = q_binomial(k, r, qq, F13)
            if c:
                expected[(p.index(k=r), p.index(j=r, k=k - r))] = c
        assert T.comultiply(T.basis(p.index(k=k))) == expected


def test_group_algebra():
    for n in (1, 2, 4, 6):
        C = group_algebra(F13, n)
        assert C.dim == n and verify_hopf(C).passed
        for i in range(n):
            assert C.comult[i] == {(i, i): F13.one}
            assert C.antipode[i] == {(n - i) % n: F13.one}
    assert group_algebra(F13, 1).format({0: F13.one}) == "1"


def test_taft_over_cyclotomic_field():
    F = QZeta(12)
    T = taft(F, 4)
    assert verify_hopf(T).passed


# -- T^omega ----------------------------------------------------------------------


@pytest.mark.parametrize("m,n", [(2, 2), (3, 4), (4, 6), (3, 3), (2, 6)])
def test_tqg_matches_closed_form(m, n):
    q = roots_of_unity(F13, m).generator
    for w in roots_of_unity(F13, n).elements:
        E = t_quantum_group(F13, m, q, n, w)
        assert E.dim == n * m * m
        assert E.mult == [[V.prune(c) for c in row] for row in closed_form_product(F13, m, q, n, w)]


def test_tqg_relations_and_entries():
    E = t_quantum_group(F13, 3, 3, 4, 5)
    p = E.presentation
    g, x, h = E.basis(p.index(i=1)), E.basis(p.index(k=1)), E.basis(p.index(j=1))
    assert E.multiply(g, x) == {p.index(k=1, i=1): F13(5)}
    assert E.multiply(x, h) == V.scale(F13(3), E.multiply(h, x))
    assert E.multiply(h, g) == E.multiply(g, h)
    assert E.power(g, 4) == E.one() and E.power(h, 3) == E.one() and E.power(x, 3) == {}


def test_tqg_trivial_omega_is_tensor_product():
    E = t_quantum_group(F13, 3, 3, 2, 1)
    assert same_structure(E, tensor_product_hopf(taft(F13, 3, 3), group_algebra(F13, 2)))


def test_tqg_rejects_non_root():
    with pytest.raises(NotARoot):
        t_quantum_group(F13, 3, 3, 4, 2)
    with pytest.raises(BadRoot):
        t_quantum_group(F13, 3, 2, 4, 1)


# -- matched pairs ---------------------------------------------------------------


def test_standard_pair_actions():
    mp = standard_matched_pair(F13, 3, 3, 4, 5)
    pa, ph = mp.A.presentation, mp.H.presentation
    g = ph.index(i=1)
    assert mp.left[g][pa.index(k=1)] == {pa.index(k=1): F13(5)}
    assert mp.right[g][pa.index(k=1)] == {}
    assert mp.right[g][pa.index(j=2)] == {g: F13.one}
    triv = standard_matched_pair(F13, 3, 3, 4, 1)
    assert triv.left == trivial_left_action(triv.A, triv.H)
    assert triv.right == trivial_right_action(triv.A, triv.H)


@pytest.mark.parametrize("field,m,n", [(F13, 3, 4), (F13, 2, 6), (F13, 4, 3), (QZeta(12), 3, 4)], ids=str)
def test_standard_pairs_pass(field, m, n):
    pairs = matched_pairs(field, m, None, n)
    assert len(pairs) == roots_of_unity(field, n).nu
    for mp in pairs:
        report = verify_matched_pair(mp)
        assert report.passed, report.first_failure()


def test_bad_omega_breaks_module_axiom():
    A, H = taft(F13, 3, 3), group_algebra(F13, 4)
    with pytest.raises(NotARoot):
        standard_matched_pair(F13, 3, 3, 4, 2)
    report = verify_matched_pair(standard_actions(A, H, 2))
    assert not report["left_module"].passed
    assert report["right_module"].passed


def test_trivial_actions_pass():
    A, H = taft(F13, 4), group_algebra(F13, 6)
    mp = MatchedPair(A, H, trivial_left_action(A, H), trivial_right_action(A, H))
    assert verify_matched_pair(mp).passed


def test_search_gf7_n2():
    found = matched_pair_search(GF(7), 3, 2, 2)
    standard = matched_pairs(GF(7), 3, 2, 2)
    assert len(found) == 2
    assert sorted(int(mp.omega) for mp in found) == [1, 6]
    for mp in found:
        match = [s for s in standard if s.omega == mp.omega]
        assert len(match) == 1 and mp.same_actions(match[0])
        g = mp.H.presentation.index(i=1)
        assert mp.right[g][mp.A.presentation.index(k=1)] == {}


def test_search_trivial_and_budget():
    found = matched_pair_search(GF(7), 3, 2, 1)
    assert len(found) == 1
    mp = found[0]
    assert mp.left == trivial_left_action(mp.A, mp.H)
    with pytest.raises(BudgetExceeded):
        matched_pair_search(GF(7), 3, 2, 2, budget=5)
    with pytest.raises(InvalidParameters):
        matched_pair_search(QZeta(12), 3, None, 2)


def test_search_sweedler_gf5():
    found = matched_pair_search(GF(5), 2, 4, 2)
    assert sorted(int(mp.omega) for mp in found) == [1, 4]


# -- bicrossed and smash products -----------------------------------------------------


@pytest.mark.parametrize("m,n", [(3, 4), (2, 2), (4, 6)])
def test_bicrossed_equals_smash_equals_tqg(m, n):
    for mp in matched_pairs(F13, m, None, n):
        B = bicrossed_product(mp)
        S = smash_product(mp.A, mp.H, mp.left)
        E = t_quantum_group(F13, m, mp.A.presentation.q, n, mp.omega, cross_check=False)
        assert structure_diff(B, S) is None
        assert structure_diff(S, E) is None
        assert B.dim == mp.A.dim * mp.H.dim


def test_smash_product_entry():
    mp = standard_matched_pair(F13, 3, 3, 4, 5)
    S = smash_product(mp.A, mp.H, mp.left)
    assert S.dim == 36
    pa, ph = mp.A.presentation, mp.H.presentation
    dH = mp.H.dim
    xg = pa.index(k=1) * dH + ph.index(i=1)
    h1 = pa.index(j=1) * dH
    hxg = pa.index(j=1, k=1) * dH + ph.index(i=1)
    assert S.mult[xg][h1] == {hxg: F13(3)}


def test_trivial_smash_is_tensor_product():
    A, H = taft(F13, 3), group_algebra(F13, 4)
    S = smash_product(A, H, trivial_left_action(A, H))
    assert same_structure(S, tensor_product_hopf(A, H))


def test_smash_rejects_bad_actions():
    A, H = taft(F13, 3, 3), group_algebra(F13, 4)
    with pytest.raises(NotModuleAlgebra):
        smash_product(A, H, standard_actions(A, H, 2).left)
    # g |> g = -g is a module algebra action but not a coalgebra map
    C = group_algebra(F13, 2)
    sign = [[{0: F13.one}, {1: F13.one}], [{0: F13.one}, {1: F13(-1)}]]
    module, _ = smash_conditions(C, C, sign)
    assert module["module_algebra"].passed
    assert not module["module_coalgebra"].passed
    with pytest.raises(NotModuleAlgebra):
        smash_product(C, C, sign)


def test_smash_symmetry_failure():
    # Sweedler algebra acting on K[C_3]: h inverts the group, x acts by zero.
    # A module algebra and coalgebra, but y1 (x) y2 |> a = y2 (x) y1 |> a fails at y = x.
    F = GF(5)
    S = taft(F, 2, 4)
    C3 = group_algebra(F, 3)
    left = []
    for y in range(S.dim):
        j, k, _ = S.presentation.exponents(y)
        left.append([{} if k else {(-a * j) % 3 if j else a: F.one} for a in range(3)])
    module, symmetry = smash_conditions(C3, S, left)
    assert module.passed
    assert not symmetry.passed
    with pytest.raises(SymmetryFails):
        smash_product(C3, S, left)


def test_bicrossed_rejects_invalid_pair():
    A, H = taft(F13, 3, 3), group_algebra(F13, 4)
    with pytest.raises(InvalidMatchedPair):
        bicrossed_product(standard_actions(A, H, 2))


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([(2, 2), (3, 2), (3, 4), (2, 4), (4, 2)]), st.data())
def test_random_products_in_tqg_match_closed_form(mn, data):
    m, n = mn
    q = roots_of_unity(F13, m).generator
    w = data.draw(st.sampled_from(roots_of_unity(F13, n).elements))
    E = t_quantum_group(F13, m, q, n, w, cross_check=False)
    oracle = closed_form_product(F13, m, q, n, w)
    coeffs = st.integers(0, 12)
    u = {i: F13(data.draw(coeffs)) for i in range(E.dim) if data.draw(st.booleans())}
    v = {i: F13(data.draw(coeffs)) for i in range(E.dim) if data.draw(st.booleans())}
    u, v = V.prune(u), V.prune(v)
    expected = {}
    for i, a in u.items():
        for j, b in v.items():
            V.axpy(expected, a * b, oracle[i][j])
    assert E.multiply(u, v) == expected
    # Delta is multiplicative on random elements too
    assert E.comultiply(E.multiply(u, v)) == E.tensor_multiply(E.comultiply(u), E.comultiply(v))
