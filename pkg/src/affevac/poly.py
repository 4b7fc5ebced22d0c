"""Symmetric group characters, Kostka-Foulkes polynomials by two routes, and
Green's polynomials."""

from __future__ import annotations

import threading
from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Sequence

from .core import as_partition, partitions, semistandard_tableaux, sort_partition
from .qpoly import QPolynomial
from .tableau import charge

# lru_cache is thread-safe for reads, but two threads can both miss and
# compute; results are deterministic so that only costs time.  The lock keeps
# the heavier tables from being filled twice.
_lock = threading.RLock()


def b_statistic(lam: Sequence[int]) -> int:
    return sum(i * x for i, x in enumerate(lam))


def z_rho(rho: Sequence[int]) -> int:
    """Centralizer size of a permutation of cycle type ``rho``."""
    return prod(i ** m * factorial(m) for i, m in Counter(rho).items())


def rho2(n: int, primed: bool = False) -> tuple[int, ...]:
    """Cycle type <2^(n/2)> or <2^((n-1)/2), 1>; primed gives <2^(n/2 - 1), 1, 1>."""
    if n < 1:
        raise ValueError("n must be positive")
    if primed:
        if n % 2:
            raise ValueError(f"the primed cycle type needs even n, got {n}")
        return (2,) * (n // 2 - 1) + (1, 1)
    return (2,) * (n // 2) + (1,) * (n % 2)


# --- characters ----------------------------------------------------------------

@lru_cache(maxsize=None)
def _mn(beta: tuple[int, ...], rho: tuple[int, ...]) -> int:
    # beta: strictly decreasing beta-set; rho: remaining cycle lengths
    if not rho:
        return 1
    k, rest = rho[0], rho[1:]
    members = set(beta)
    total = 0
    for b in beta:
        c = b - k
        if c < 0 or c in members:
            continue
        # sign: beta numbers jumped over by the rim hook
        height = sum(1 for x in beta if c < x < b)
        new = tuple(sorted((members - {b}) | {c}, reverse=True))
        total += (-1) ** height * _mn(new, rest)
    return total


def character(lam: Sequence[int], rho: Sequence[int]) -> int:
    """chi^lam evaluated at cycle type rho (Murnaghan-Nakayama rule)."""
    lam = as_partition(lam)
    rho = sort_partition(rho)
    if sum(lam) != sum(rho):
        raise ValueError(f"|{lam}| != |{rho}|")
    L = len(lam)
    beta = tuple(p + L - 1 - i for i, p in enumerate(lam))
    return _mn(beta, rho)


def character_table(n: int) -> dict[tuple[tuple[int, ...], tuple[int, ...]], int]:
    parts = partitions(n)
    return {(lam, rho): character(lam, rho) for lam in parts for rho in parts}


# --- Kostka-Foulkes ------------------------------------------------------------

def q_binomial(a: int, b: int) -> QPolynomial:
    """Gaussian binomial [a + b choose a]_q."""
    if a < 0 or b < 0:
        raise ValueError("q_binomial needs a, b >= 0")
    return _q_binomial(min(a, b), max(a, b))


@lru_cache(maxsize=None)
def _q_binomial(a: int, b: int) -> QPolynomial:
    # [a+b, a] = [a+b-1, a-1] + q^a [a+b-1, a]
    if a == 0:
        return QPolynomial([1])
    if b == 0:
        return QPolynomial([1])
    return q_binomial(a - 1, b) + QPolynomial.monomial(a) * q_binomial(a, b - 1)


@lru_cache(maxsize=None)
def _kf_charge(lam: tuple[int, ...], mu: tuple[int, ...]) -> QPolynomial:
    coeffs = Counter(charge(T) for T in semistandard_tableaux(lam, mu))
    top = max(coeffs, default=-1)
    return QPolynomial([coeffs.get(k, 0) for k in range(top + 1)])


def kostka_foulkes(lam: Sequence[int], mu: Sequence[int]) -> QPolynomial:
    """K_{lam,mu}(q) as the charge generating function over SSYT(lam, mu)."""
    lam, mu = as_partition(lam), as_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"|{lam}| != |{mu}|")
    with _lock:
        return _kf_charge(lam, mu)


def cocharge_kostka_foulkes(lam: Sequence[int], mu: Sequence[int]) -> QPolynomial:
    """K~_{lam,mu}(q) = q^b(mu) K_{lam,mu}(1/q), from the charge route."""
    K = kostka_foulkes(lam, mu)
    if not K:
        return K
    return K.reverse(b_statistic(mu))


@lru_cache(maxsize=None)
def _kf_fermionic(lam: tuple[int, ...], mu: tuple[int, ...]) -> QPolynomial:
    from .rigged import admissible_configurations, fermionic_term

    out = QPolynomial()
    for cfg in admissible_configurations(lam, mu):
        out = out + fermionic_term(cfg)
    return out


def kostka_foulkes_fermionic(lam: Sequence[int], mu: Sequence[int]) -> QPolynomial:
    """K~_{lam,mu}(q) summed over admissible configurations."""
    lam, mu = as_partition(lam), as_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"|{lam}| != |{mu}|")
    with _lock:
        return _kf_fermionic(lam, mu)


def greens_polynomial(mu: Sequence[int], rho: Sequence[int]) -> QPolynomial:
    """Q^mu_rho(q) = sum over lam of chi^lam_rho K~_{lam,mu}(q)."""
    mu = as_partition(mu)
    rho = sort_partition(rho)
    if sum(mu) != sum(rho):
        raise ValueError(f"|{mu}| != |{rho}|")
    out = QPolynomial()
    for lam in partitions(sum(mu)):
        chi = character(lam, rho)
        if chi:
            out = out + chi * cocharge_kostka_foulkes(lam, mu)
    return out
