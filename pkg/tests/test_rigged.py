import pytest

from affevac.core import partitions, semistandard_tableaux
from affevac.poly import b_statistic
from affevac.rigged import (
    Configuration,
    InvalidConfiguration,
    RiggedConfiguration,
    admissible_configurations,
    cc,
    enumerate_rigged,
    phi,
    phi_inverse,
    theta,
    vacancy,
)
from affevac.tableau import charge, e_d_star, ls_action

T_EX = ((1, 1, 1, 3, 4), (2, 2), (3, 4), (5,))
MU_EX = (3, 2, 2, 2, 1)
RC_EX = RiggedConfiguration(MU_EX, [(2, 2, 1), (2, 1), (1,)], [(0, 1, 1), (0, 0), (0,)])


def test_vacancy_numbers_of_example():
    cfg = RC_EX.config
    assert vacancy(cfg, 1, 1) == 1
    assert vacancy(cfg, 1, 2) == 2
    assert cfg.vacancy(2, 2) == 0
    assert cfg.vacancy(3, 1) == 0
    assert cfg.is_admissible()
    assert cfg.cc() == 9


def test_example_rigged_configuration():
    RC_EX.check((5, 2, 2, 1))
    assert phi(T_EX) == RC_EX
    assert sorted(s for _, s, _ in RC_EX.rows(1)) == [0, 1, 1]
    assert str(RC_EX) == "nu(1) 2:1/2 2:0/2 1:1/1\nnu(2) 2:0/0 1:0/0\nnu(3) 1:0/0"
    assert phi_inverse(RC_EX, (5, 2, 2, 1)) == T_EX


def test_theta_example():
    th = theta(RC_EX)
    assert th.rows(1) == [(2, 2, 2), (2, 1, 2), (1, 0, 1)]
    assert cc(RC_EX) == 11
    assert cc(th) == 12 == b_statistic(MU_EX) - charge(T_EX)
    assert charge(T_EX) == 4


def test_phi_single_step():
    before = phi(((1, 1, 1, 3), (2, 2), (3,)))
    after = phi(((1, 1, 1, 3), (2, 2), (3, 4)))
    assert [before.rows(1), before.rows(2)] == [[(2, 0, 1), (1, 0, 0)], [(1, 0, 0)]]
    assert [after.rows(1), after.rows(2)] == [[(2, 1, 1), (2, 0, 1)], [(2, 0, 0)]]


def test_canonical_row_order():
    a = RiggedConfiguration((2, 1), [(1, 1)], [(0, 1)])
    b = RiggedConfiguration((2, 1), [(1, 1)], [(1, 0)])
    assert a == b
    assert RiggedConfiguration((1,), [()], [()]).nus == ()


def test_empty_configuration_for_equal_shapes():
    for lam in [(3,), (2, 1), (2, 2, 1)]:
        rcs = enumerate_rigged(lam, lam)
        assert len(rcs) == 1
        assert cc(theta(rcs[0])) == b_statistic(lam)
    (rc,) = enumerate_rigged((4,), (4,))
    assert rc.nus == ()
    assert phi(((1, 1, 1, 1),)) == rc


def test_one_row_and_column_extremes():
    for n in range(1, 7):
        assert len(enumerate_rigged((n,), (1,) * n)) == 1
        assert len(enumerate_rigged((1,) * n, (n,))) == (1 if n == 1 else 0)


def test_invalid_configurations():
    with pytest.raises(InvalidConfiguration):
        RiggedConfiguration((2,), [(1,)], [(0, 0)])
    bad_rig = RiggedConfiguration((1, 1), [(1,)], [(5,)])
    with pytest.raises(InvalidConfiguration):
        bad_rig.check()
    negative = RiggedConfiguration((1, 1), [(2,)], [(0,)])
    assert not negative.config.is_admissible()
    with pytest.raises(InvalidConfiguration):
        negative.check()
    ok = RiggedConfiguration((1, 1), [(1,)], [(0,)])
    with pytest.raises(InvalidConfiguration):
        ok.check((2,))
    with pytest.raises(InvalidConfiguration):
        phi_inverse(ok, (1, 1), weights=(2,))


def test_bijection_exhaustive():
    for n in range(1, 7):
        for lam in partitions(n):
            for mu in partitions(n):
                Ts = list(semistandard_tableaux(lam, mu))
                rcs = enumerate_rigged(lam, mu)
                assert len(rcs) == len(Ts) == len(set(rcs))
                images = {phi(T) for T in Ts}
                assert images == set(rcs)
                for T in Ts:
                    assert phi_inverse(phi(T), lam) == T
                for rc in rcs:
                    rc.check(lam)
                    assert phi(phi_inverse(rc, lam)) == rc


def test_kss_relations_exhaustive():
    for n in range(1, 7):
        for lam in partitions(n):
            for mu in partitions(n):
                d = len(mu)
                for T in semistandard_tableaux(lam, mu):
                    r = phi(T)
                    assert theta(r) == phi(e_d_star(T, d))
                    assert cc(theta(r)) == b_statistic(mu) - charge(T)
                    assert theta(theta(r)) == r


def test_content_swap_matches_ls_action():
    for n in range(1, 6):
        for lam in partitions(n):
            for mu in partitions(n):
                for T in semistandard_tableaux(lam, mu):
                    r = phi(T)
                    for i in range(1, len(mu)):
                        w = list(mu)
                        w[i - 1], w[i] = w[i], w[i - 1]
                        assert phi_inverse(r, lam, w) == ls_action(i, T)


def test_cc_parity():
    checked = 0
    for n in range(1, 8):
        for lam in partitions(n):
            for mu in partitions(n):
                for cfg in admissible_configurations(lam, mu):
                    if all(m * p % 2 == 0 for _, _, m, p in cfg.blocks()):
                        assert (cfg.cc() - b_statistic(lam)) % 2 == 0
                        checked += 1
    assert checked > 100


def test_configuration_nu_zero_is_mu():
    cfg = Configuration((2, 1), ((1,),))
    assert cfg.nu(0) == (2, 1)
    assert cfg.nu(5) == ()
    assert list(cfg.blocks()) == [(1, 1, 1, 0)]
