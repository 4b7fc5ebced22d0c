"""Rigged configurations and the Kirillov-Reshetikhin bijection with
semistandard tableaux."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from typing import Iterator, Sequence

from .core import (
    conjugate,
    content,
    is_semistandard,
    partitions,
    sort_partition,
)
from .qpoly import QPolynomial
from .tableau import Tableau


class InvalidConfiguration(ValueError):
    pass


class BijectionError(AssertionError):
    """An intermediate rigged configuration lost admissibility (a bug)."""


def _q(parts: Sequence[int], r: int) -> int:
    # number of cells in the first r columns
    return sum(min(r, p) for p in parts)


@dataclass(frozen=True)
class Configuration:
    mu: tuple[int, ...]
    nus: tuple[tuple[int, ...], ...]

    def nu(self, k: int) -> tuple[int, ...]:
        """nu^(k) for k >= 1; nu^(0) is mu."""
        if k == 0:
            return self.mu
        return self.nus[k - 1] if k <= len(self.nus) else ()

    def vacancy(self, k: int, r: int) -> int:
        return vacancy(self, k, r)

    def is_admissible(self) -> bool:
        for k in range(1, len(self.nus) + 1):
            top = max(self.nu(k - 1) + self.nu(k) + self.nu(k + 1), default=0)
            if any(self.vacancy(k, r) < 0 for r in range(1, top + 1)):
                return False
        return True

    def multiplicity(self, k: int, r: int) -> int:
        return self.nu(k).count(r)

    def cc(self) -> int:
        total = 0
        cols = [conjugate(p) for p in self.nus] + [()]
        for k in range(len(self.nus)):
            a, b = cols[k], cols[k + 1]
            for r, x in enumerate(a):
                total += x * (x - (b[r] if r < len(b) else 0))
        return total

    def blocks(self) -> Iterator[tuple[int, int, int, int]]:
        """(k, r, m_r^(k), P_r^(k)) for each part size r present in nu^(k)."""
        for k, nu in enumerate(self.nus, start=1):
            for r in sorted(set(nu), reverse=True):
                yield k, r, nu.count(r), self.vacancy(k, r)


def vacancy(config: Configuration, k: int, r: int) -> int:
    """P_r^(k): cells in the first r columns of nu^(k-1) and nu^(k+1), minus
    twice those of nu^(k)."""
    return _q(config.nu(k - 1), r) + _q(config.nu(k + 1), r) - 2 * _q(config.nu(k), r)


def _canon(nus, riggings):
    """Sort rows of each nu^(k) by (length, rigging) descending; drop trailing empties."""
    nus_out, rig_out = [], []
    for nu, rig in zip(nus, riggings):
        pairs = sorted(zip(nu, rig), reverse=True)
        nus_out.append(tuple(p for p, _ in pairs))
        rig_out.append(tuple(s for _, s in pairs))
    while nus_out and not nus_out[-1]:
        nus_out.pop()
        rig_out.pop()
    return tuple(nus_out), tuple(rig_out)


@dataclass(frozen=True)
class RiggedConfiguration:
    """A configuration with one rigging per row.

    ``riggings[k-1][i]`` belongs to row ``i`` of nu^(k); rows of equal length
    carry their riggings in weakly decreasing order.
    """

    mu: tuple[int, ...]
    nus: tuple[tuple[int, ...], ...]
    riggings: tuple[tuple[int, ...], ...]

    def __init__(self, mu, nus, riggings):
        nus = [tuple(p) for p in nus]
        riggings = [tuple(s) for s in riggings]
        if len(nus) != len(riggings) or any(len(a) != len(b) for a, b in zip(nus, riggings)):
            raise InvalidConfiguration("riggings do not match the rows of the configuration")
        nus, riggings = _canon(nus, riggings)
        object.__setattr__(self, "mu", sort_partition(mu))
        object.__setattr__(self, "nus", nus)
        object.__setattr__(self, "riggings", riggings)

    @property
    def config(self) -> Configuration:
        return Configuration(self.mu, self.nus)

    def vacancy(self, k: int, r: int) -> int:
        return vacancy(self.config, k, r)

    def rows(self, k: int) -> list[tuple[int, int, int]]:
        """(length, rigging, vacancy) for each row of nu^(k)."""
        nu, rig = self.nus[k - 1], self.riggings[k - 1]
        return [(r, s, self.vacancy(k, r)) for r, s in zip(nu, rig)]

    def check(self, lam: Sequence[int] | None = None) -> None:
        """Raise InvalidConfiguration unless this is a valid element of RC(lam, mu)."""
        cfg = self.config
        if not cfg.is_admissible():
            raise InvalidConfiguration("configuration has a negative vacancy number")
        for k in range(1, len(self.nus) + 1):
            for r, s, p in self.rows(k):
                if not 0 <= s <= p:
                    raise InvalidConfiguration(
                        f"rigging {s} on a length-{r} row of nu^({k}) exceeds vacancy {p}")
        if lam is not None:
            lam = tuple(lam)
            if sum(lam) != sum(self.mu):
                raise InvalidConfiguration(f"|lambda| = {sum(lam)} but |mu| = {sum(self.mu)}")
            for k in range(1, max(len(lam), len(self.nus) + 1)):
                if sum(cfg.nu(k)) != sum(lam[k:]):
                    raise InvalidConfiguration(
                        f"|nu^({k})| = {sum(cfg.nu(k))} but lambda needs {sum(lam[k:])}")

    def __str__(self) -> str:
        if not self.nus:
            return "(empty)"
        lines = []
        for k in range(1, len(self.nus) + 1):
            cells = " ".join(f"{r}:{s}/{p}" for r, s, p in self.rows(k))
            lines.append(f"nu({k}) {cells}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "mu": list(self.mu),
            "nu": [
                [{"length": r, "rigging": s, "vacancy": p} for r, s, p in self.rows(k)]
                for k in range(1, len(self.nus) + 1)
            ],
        }


def theta(rc: RiggedConfiguration) -> RiggedConfiguration:
    """Replace each rigging s by its corigging P - s."""
    rig = [
        [rc.vacancy(k, r) - s for r, s in zip(nu, rs)]
        for k, (nu, rs) in enumerate(zip(rc.nus, rc.riggings), start=1)
    ]
    return RiggedConfiguration(rc.mu, rc.nus, rig)


def cc(rc: RiggedConfiguration) -> int:
    return rc.config.cc() + sum(sum(rs) for rs in rc.riggings)


# --- the bijection -------------------------------------------------------------

class _State:
    """Mutable working copy used while building or dismantling a configuration."""

    def __init__(self, mu, nus, riggings):
        self.mu = list(mu)
        self.rows = [[[r, s] for r, s in zip(nu, rs)] for nu, rs in zip(nus, riggings)]

    def nu(self, k):
        if k == 0:
            return self.mu
        return [r for r, _ in self.rows[k - 1]] if k <= len(self.rows) else []

    def vac(self, k, r):
        return _q(self.nu(k - 1), r) + _q(self.nu(k + 1), r) - 2 * _q(self.nu(k), r)

    def level(self, k):
        while len(self.rows) < k:
            self.rows.append([])
        return self.rows[k - 1]

    def check(self):
        for k in range(1, len(self.rows) + 1):
            for r, s in self.rows[k - 1]:
                p = self.vac(k, r)
                if not 0 <= s <= p:
                    return False
        return True

    def freeze(self):
        return RiggedConfiguration(
            self.mu,
            [[r for r, _ in lvl] for lvl in self.rows],
            [[s for _, s in lvl] for lvl in self.rows],
        )


def _box_order(T: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    """(letter, row) for every box, in the order the recursion adds them:
    letters increasing, and within a letter from the bottom row up."""
    order = []
    letters = sorted({x for row in T for x in row})
    for a in letters:
        for i in range(len(T) - 1, -1, -1):
            order.extend((a, i + 1) for x in T[i] if x == a)
    return order


def phi(T: Sequence[Sequence[int]]) -> RiggedConfiguration:
    """Kirillov-Reshetikhin bijection SSYT(lambda, mu) -> RC(lambda, sort(mu))."""
    if not is_semistandard(T):
        raise ValueError(f"{T} is not semistandard")
    state = _State((), (), ())
    for a, r in _box_order(T):
        # select singular strings with respect to the current configuration
        chosen = []
        bound = None
        for j in range(r - 1, 0, -1):
            lvl = state.level(j)
            best = None
            for idx, (length, s) in enumerate(lvl):
                if (bound is None or length <= bound) and s == state.vac(j, length):
                    if best is None or length > lvl[best][0]:
                        best = idx
            chosen.append((j, best))
            bound = lvl[best][0] if best is not None else 0
        while len(state.mu) < a:
            state.mu.append(0)
        state.mu[a - 1] += 1
        grown = []
        for j, idx in chosen:
            lvl = state.level(j)
            if idx is None:
                lvl.append([1, 0])
                idx = len(lvl) - 1
            else:
                lvl[idx][0] += 1
            grown.append((j, lvl[idx]))
        for j, row in grown:
            row[1] = state.vac(j, row[0])
        if not state.check():
            raise BijectionError(f"lost admissibility adding letter {a} in row {r}")
    state.mu = [m for m in state.mu if m > 0]
    return state.freeze()


def phi_inverse(rc: RiggedConfiguration, lam: Sequence[int],
                weights: Sequence[int] | None = None) -> Tableau:
    """Inverse of ``phi``.

    ``weights`` is the content of the tableau to rebuild; it defaults to
    ``rc.mu`` and may be any rearrangement of it, which gives the
    content-permuting maps between different orderings of mu.
    """
    lam = tuple(lam)
    rc.check(lam)
    if weights is None:
        weights = rc.mu
    weights = tuple(weights)
    if sort_partition(weights) != rc.mu:
        raise InvalidConfiguration(f"content {weights} is not a rearrangement of {rc.mu}")
    state = _State(weights, rc.nus, rc.riggings)
    shape = list(lam)
    cells = [[None] * p for p in lam]
    for a in range(len(weights), 0, -1):
        for _ in range(weights[a - 1]):
            chosen = []
            least = 1
            r = None
            j = 1
            while True:
                lvl = state.level(j) if j <= len(state.rows) else []
                best = None
                for idx, (length, s) in enumerate(lvl):
                    if length >= least and s == state.vac(j, length):
                        if best is None or length < lvl[best][0]:
                            best = idx
                if best is None:
                    r = j
                    break
                chosen.append((j, best))
                least = lvl[best][0]
                j += 1
            if r > len(shape) or shape[r - 1] == 0:
                raise InvalidConfiguration(f"no box to remove in row {r}")
            shape[r - 1] -= 1
            cells[r - 1][shape[r - 1]] = a
            state.mu[a - 1] -= 1
            shrunk = []
            for j, idx in chosen:
                lvl = state.rows[j - 1]
                lvl[idx][0] -= 1
                shrunk.append(lvl[idx])
            for lvl in state.rows:
                lvl[:] = [row for row in lvl if row[0] > 0]
            for (j, _), row in zip(chosen, shrunk):
                if row[0] > 0:
                    row[1] = state.vac(j, row[0])
            if not state.check():
                raise InvalidConfiguration(f"rigging bound violated removing letter {a}")
    T = tuple(tuple(row) for row in cells)
    if not is_semistandard(T) or content(T, len(weights)) != weights:
        raise InvalidConfiguration("configuration does not decode to a semistandard tableau")
    return T


# --- enumeration ---------------------------------------------------------------

def admissible_configurations(lam: Sequence[int], mu: Sequence[int]) -> Iterator[Configuration]:
    """Admissible configurations of type (lam, mu), generated level by level."""
    lam, mu = tuple(lam), sort_partition(mu)
    if sum(lam) != sum(mu):
        return
    sizes = [sum(lam[k:]) for k in range(1, len(lam))]

    def ok(levels, k):
        # vacancy numbers at level k, given levels 1..k+1 (levels[k] may be absent)
        prev = mu if k == 1 else levels[k - 2]
        cur = levels[k - 1]
        nxt = levels[k] if k < len(levels) else ()
        top = max(prev + cur + nxt, default=0)
        return all(_q(prev, r) + _q(nxt, r) - 2 * _q(cur, r) >= 0 for r in range(1, top + 1))

    def rec(levels):
        k = len(levels)
        if k == len(sizes):
            if k == 0 or ok(levels, k):
                yield Configuration(mu, tuple(levels))
            return
        for nu in partitions(sizes[k]):
            nxt = levels + [nu]
            if k == 0 or ok(nxt, k):
                yield from rec(nxt)

    yield from rec([])


def enumerate_rigged(lam: Sequence[int], mu: Sequence[int]) -> list[RiggedConfiguration]:
    """All of RC(lam, mu)."""
    out = []
    for cfg in admissible_configurations(lam, mu):
        blocks = list(cfg.blocks())
        choices = [
            [tuple(sorted(c, reverse=True)) for c in combinations_with_replacement(range(p + 1), m)]
            for _, _, m, p in blocks
        ]
        for pick in product(*choices):
            rig = [[] for _ in cfg.nus]
            for (k, r, m, p), js in zip(blocks, pick):
                rig[k - 1].extend(js)
            out.append(RiggedConfiguration(cfg.mu, cfg.nus, rig))
    return out


def fermionic_term(cfg: Configuration) -> QPolynomial:
    """q^{cc(nu)} times the product of q-binomials [m + P choose m]."""
    from .poly import q_binomial

    out = QPolynomial.monomial(cfg.cc())
    for _, _, m, p in cfg.blocks():
        out = out * q_binomial(m, p)
    return out


def format_rigged(rc: RiggedConfiguration) -> str:
    return str(rc)

