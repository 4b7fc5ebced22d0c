import pytest
from hypothesis import given, strategies as st

from affevac.core import (
    Tabloid,
    content,
    partitions,
    semistandard_tableaux,
    standard_tableaux,
    tableau_shape,
    tabloids,
)
from affevac.qpoly import Q, QPolynomial, q_factorial, q_int
from affevac.tableau import (
    TwoRowArray,
    apply_word,
    charge,
    charge_word,
    e_d,
    e_d_star,
    enumerate_domino_tableaux,
    finite_evacuation,
    hook_q_analogue,
    insertion_tableau,
    ls_action,
    rsk,
    rsk_inverse,
    schensted_insert,
    tabloid_to_biword,
    biword_to_tabloid,
)
from oracles import major_index_poly

EXAMPLE = Tabloid.parse("2 3 5 7|1 4|6")
P_EX = ((1, 2, 3, 5, 7), (4,), (6,))
Q_EX = ((1, 2, 3, 3, 3), (2,), (3,))


# --- polynomials ----------------------------------------------------------------

def test_qpoly_basics():
    p = QPolynomial([1, 1])
    assert p * p == QPolynomial([1, 2, 1])
    assert p - p == 0
    assert str(QPolynomial([1, 0, -2])) == "1 - 2q^2"
    assert QPolynomial([0, 0]).coeffs == ()
    assert q_int(3)(1) == 3
    assert q_factorial(3) == QPolynomial([1, 2, 2, 1])
    assert (Q ** 3).degree == 3
    assert QPolynomial([1, 2]).reverse(3) == QPolynomial([0, 0, 2, 1])


def test_qpoly_division():
    assert q_factorial(4).exact_div(q_int(4)) == q_factorial(3)
    with pytest.raises(ArithmeticError):
        q_int(3).exact_div(q_int(2))


coeff_lists = st.lists(st.integers(-5, 5), max_size=6)


@given(coeff_lists, coeff_lists, coeff_lists)
def test_qpoly_ring_axioms(a, b, c):
    A, B, C = QPolynomial(a), QPolynomial(b), QPolynomial(c)
    assert A * (B + C) == A * B + A * C
    assert (A * B) * C == A * (B * C)
    for x in (-1, 0, 2):
        assert (A * B)(x) == A(x) * B(x)


# --- insertion and RSK ------------------------------------------------------------

def test_schensted_examples():
    assert schensted_insert((), 1) == ((1,),)
    assert schensted_insert(((1, 3),), 2) == ((1, 2), (3,))
    assert insertion_tableau([6, 1, 4, 2, 3, 5, 7]) == P_EX


def test_rsk_example():
    arr = tabloid_to_biword(EXAMPLE)
    assert arr == TwoRowArray((1, 2, 2, 3, 3, 3, 3), (6, 1, 4, 2, 3, 5, 7))
    assert rsk(arr) == (P_EX, Q_EX)
    assert rsk(TwoRowArray((), ())) == ((), ())


def test_rsk_follow_up_example():
    arr = TwoRowArray((1, 2, 2, 3, 3, 3, 3), (5, 1, 3, 2, 4, 6, 7))
    P, Qt = rsk(arr)
    assert P == ((1, 2, 4, 6, 7), (3,), (5,))
    assert Qt == Q_EX


def test_biword_validation():
    with pytest.raises(ValueError):
        TwoRowArray((2, 1), (1, 2))
    with pytest.raises(ValueError):
        TwoRowArray((1, 1), (2, 1))


def test_one_row_biword():
    assert tabloid_to_biword(Tabloid([[1, 2, 3]])) == TwoRowArray((1, 1, 1), (1, 2, 3))


def test_rsk_roundtrip_exhaustive():
    for n in range(1, 7):
        for lam in partitions(n):
            for T in tabloids(lam):
                arr = tabloid_to_biword(T)
                P, Qt = rsk(arr)
                assert tableau_shape(P) == tableau_shape(Qt)
                assert rsk_inverse(P, Qt) == arr
                assert biword_to_tabloid(rsk_inverse(P, Qt), n) == T


# --- evacuation and the Lascoux-Schutzenberger action ------------------------------

def test_finite_evacuation_example():
    assert finite_evacuation(P_EX) == ((1, 2, 4, 6, 7), (3,), (5,))
    assert finite_evacuation(((1, 2, 3),)) == ((1, 2, 3),)
    assert finite_evacuation(((1,), (2,), (3,))) == ((1,), (2,), (3,))


def test_finite_evacuation_properties():
    for n in range(1, 9):
        for lam in partitions(n):
            for T in standard_tableaux(lam):
                E = finite_evacuation(T)
                assert finite_evacuation(E) == T
                row = {x: i for i, r in enumerate(T) for x in r}
                rowE = {x: i for i, r in enumerate(E) for x in r}
                des = {i for i in range(1, n) if row[i + 1] > row[i]}
                desE = {i for i in range(1, n) if rowE[i + 1] > rowE[i]}
                assert desE == {n - i for i in des}
                # insertion route agrees with jeu de taquin on standard tableaux
                assert e_d(T, n) == E


def test_ls_action_chain():
    U = ((1, 1, 1, 1, 2), (2,), (3,))
    assert e_d(Q_EX, 3) == U
    s1 = ls_action(1, U)
    assert s1 == ((1, 1, 2, 2, 2), (2,), (3,))
    s2 = ls_action(2, s1)
    assert s2 == ((1, 1, 3, 3, 3), (2,), (3,))
    assert ls_action(1, s2) == Q_EX
    assert e_d_star(Q_EX, 3) == Q_EX


def test_ls_action_fixes_symmetric_content():
    U = ((1, 1, 2), (2,))
    assert ls_action(1, U) == U


def test_ls_relations_exhaustive():
    for n in range(1, 7):
        for lam in partitions(n):
            for mu in partitions(n):
                d = len(mu)
                for U in semistandard_tableaux(lam, mu):
                    for i in range(1, d):
                        V = ls_action(i, U)
                        assert ls_action(i, V) == U
                        c = list(mu)
                        c[i - 1], c[i] = c[i], c[i - 1]
                        assert content(V, d) == tuple(c)
                        for j in range(i + 2, d):
                            assert apply_word([i, j], U) == apply_word([j, i], U)
                        if i + 1 < d:
                            assert apply_word([i, i + 1, i], U) == apply_word([i + 1, i, i + 1], U)
                    E = e_d_star(U, d)
                    assert content(E, d) == mu
                    assert e_d_star(E, d) == U


def test_e_d_star_single_letter():
    assert e_d_star(((1, 1, 1),), 1) == ((1, 1, 1),)


# --- charge ------------------------------------------------------------------------

def test_charge_examples():
    assert charge(((1, 1, 1, 3, 4), (2, 2), (3, 4), (5,))) == 4
    for n in range(1, 7):
        assert charge(tuple((i,) for i in range(1, n + 1))) == 0
        assert charge((tuple(range(1, n + 1)),)) == n * (n - 1) // 2
    for lam in partitions(6):
        superstandard = tuple((i + 1,) * p for i, p in enumerate(lam))
        assert charge(superstandard) == 0


def test_charge_rejects_non_partition_content():
    with pytest.raises(ValueError):
        charge_word([2, 2, 1])


def test_charge_generating_function_at_one():
    for n in range(1, 7):
        for lam in partitions(n):
            for mu in partitions(n):
                Ts = list(semistandard_tableaux(lam, mu))
                assert all(charge(T) >= 0 for T in Ts)


# --- dominoes and hook q-analogue -----------------------------------------------------

def test_domino_examples():
    assert len(enumerate_domino_tableaux((4, 2))) == 3
    assert len(enumerate_domino_tableaux((3, 3, 1))) == 3
    assert len(enumerate_domino_tableaux((2, 1))) == 0
    assert len(enumerate_domino_tableaux((5,))) == 1


def test_domino_tableaux_are_valid():
    for n in range(1, 9):
        for lam in partitions(n):
            for D in enumerate_domino_tableaux(lam):
                cells = set()
                if D.monomino:
                    cells.add(D.monomino)
                for a, b in D.dominoes:
                    assert abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1
                    cells |= {a, b}
                    # the covered region stays a Young diagram
                    for (i, j) in cells:
                        assert i == 0 or (i - 1, j) in cells
                        assert j == 0 or (i, j - 1) in cells
                assert cells == {(i, j) for i, p in enumerate(lam) for j in range(p)}


def test_hook_q_analogue():
    assert hook_q_analogue((2, 2)) == QPolynomial([1, 0, 1])
    for n in range(1, 8):
        for lam in partitions(n):
            syts = list(standard_tableaux(lam))
            b = sum(i * p for i, p in enumerate(lam))
            assert Q ** b * hook_q_analogue(lam) == QPolynomial(major_index_poly(lam, syts))
