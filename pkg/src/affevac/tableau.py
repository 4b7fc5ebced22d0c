"""Finite tableau algorithms: insertion, RSK, evacuation, the
Lascoux-Schutzenberger symmetric group action, charge, domino tableaux and
the q-analogue of the hook-length formula."""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .core import Tabloid, conjugate, content, is_partition, tableau_shape
from .qpoly import QPolynomial, q_factorial, q_int

Tableau = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class TwoRowArray:
    """RSK biword: weakly increasing ``top``, equal tops carry weakly
    increasing bottoms."""

    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self):
        if len(self.top) != len(self.bottom):
            raise ValueError("top and bottom rows differ in length")
        pairs = list(zip(self.top, self.bottom))
        if pairs != sorted(pairs):
            raise ValueError("biword is not in lexicographic order")


# --- insertion and RSK -------------------------------------------------------

def _insert(rows: list[list[int]], x: int) -> int:
    """Row-insert ``x`` in place; return the index of the row that grew."""
    i = 0
    while True:
        if i == len(rows):
            rows.append([x])
            return i
        row = rows[i]
        j = bisect_right(row, x)
        if j == len(row):
            row.append(x)
            return i
        row[j], x = x, row[j]
        i += 1


def schensted_insert(P: Sequence[Sequence[int]], x: int) -> Tableau:
    rows = [list(r) for r in P]
    _insert(rows, x)
    return tuple(tuple(r) for r in rows)


def insertion_tableau(word: Iterable[int]) -> Tableau:
    rows: list[list[int]] = []
    for x in word:
        _insert(rows, x)
    return tuple(tuple(r) for r in rows)


def rsk(array: TwoRowArray) -> tuple[Tableau, Tableau]:
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for t, b in zip(array.top, array.bottom):
        i = _insert(P, b)
        if i == len(Q):
            Q.append([])
        Q[i].append(t)
    return tuple(tuple(r) for r in P), tuple(tuple(r) for r in Q)


def rsk_inverse(P: Sequence[Sequence[int]], Q: Sequence[Sequence[int]]) -> TwoRowArray:
    if tableau_shape(P) != tableau_shape(Q):
        raise ValueError("P and Q have different shapes")
    P = [list(r) for r in P]
    Q = [list(r) for r in Q]
    top, bottom = [], []
    while Q:
        # rightmost copy of the largest entry; equal entries form a
        # horizontal strip, so ties go to the topmost row
        i = max(range(len(Q)), key=lambda k: (Q[k][-1], -k))
        top.append(Q[i].pop())
        x = P[i].pop()
        if not Q[i]:
            Q.pop(i)
            P.pop(i)
        for k in range(i - 1, -1, -1):
            row = P[k]
            j = bisect_left(row, x) - 1  # rightmost entry < x
            row[j], x = x, row[j]
        bottom.append(x)
    return TwoRowArray(tuple(reversed(top)), tuple(reversed(bottom)))


def tabloid_to_biword(T: Tabloid) -> TwoRowArray:
    """Read the rows bottom up; row ``d`` gets label 1, row 1 gets label ``d``."""
    top, bottom = [], []
    for label, row in enumerate(reversed(T.rows), start=1):
        top.extend([label] * len(row))
        bottom.extend(row)
    return TwoRowArray(tuple(top), tuple(bottom))


def biword_to_tabloid(array: TwoRowArray, n: int | None = None) -> Tabloid:
    d = max(array.top, default=0)
    rows: list[list[int]] = [[] for _ in range(d)]
    for t, b in zip(array.top, array.bottom):
        rows[d - t].append(b)
    return Tabloid(rows, n)


def tabloid_rsk(T: Tabloid) -> tuple[Tableau, Tableau]:
    return rsk(tabloid_to_biword(T))


# --- evacuation ----------------------------------------------------------------

def _rectify(grid: list[list[int | None]]) -> Tableau:
    """Jeu de taquin rectification of a skew tableau.

    ``grid`` rows list the cells from column 0; inner-shape cells are None.
    """
    while True:
        inner_rows = [i for i, r in enumerate(grid) if r and r[0] is None]
        if not inner_rows:
            break
        i = inner_rows[-1]
        j = 0
        while j + 1 < len(grid[i]) and grid[i][j + 1] is None:
            j += 1
        # slide the hole at (i, j) outward
        while True:
            right = grid[i][j + 1] if j + 1 < len(grid[i]) else None
            below = grid[i + 1][j] if i + 1 < len(grid) and j < len(grid[i + 1]) else None
            if right is None and below is None:
                grid[i].pop()
                break
            if below is not None and (right is None or below <= right):
                grid[i][j] = below
                i += 1
            else:
                grid[i][j] = right
                j += 1
        while grid and not grid[-1]:
            grid.pop()
    return tuple(tuple(r) for r in grid if r)


def finite_evacuation(T: Sequence[Sequence[int]]) -> Tableau:
    """Schutzenberger evacuation by rotation, complement and rectification."""
    shape = tableau_shape(T)
    if not shape:
        return ()
    n = sum(shape)
    width = shape[0]
    grid: list[list[int | None]] = []
    for row in reversed(T):
        cells: list[int | None] = [None] * (width - len(row))
        cells.extend(n + 1 - x for x in reversed(row))
        grid.append(cells)
    return _rectify(grid)


def reading_word(U: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Rows concatenated from the last row to the first."""
    return tuple(x for row in reversed(U) for x in row)


def _from_reading_word(word: Sequence[int], shape: Sequence[int]) -> Tableau:
    rows = []
    pos = 0
    for length in reversed(shape):
        rows.append(tuple(word[pos:pos + length]))
        pos += length
    return tuple(reversed(rows))


def bracket_unmatched(symbols: Sequence[int]) -> tuple[list[int], list[int]]:
    """Match ``+1`` (left parenthesis) with a later ``-1`` (right).

    Returns the positions of unmatched right and unmatched left parentheses;
    all unmatched rights precede all unmatched lefts.
    """
    open_stack: list[int] = []
    right_free: list[int] = []
    for pos, s in enumerate(symbols):
        if s > 0:
            open_stack.append(pos)
        elif s < 0:
            if open_stack:
                open_stack.pop()
            else:
                right_free.append(pos)
    return right_free, open_stack


def ls_action(i: int, U: Sequence[Sequence[int]]) -> Tableau:
    """Lascoux-Schutzenberger operator s_i on a semistandard tableau."""
    word = list(reading_word(U))
    idx = [p for p, x in enumerate(word) if x == i or x == i + 1]
    syms = [-1 if word[p] == i else 1 for p in idx]
    rights, lefts = bracket_unmatched(syms)
    free = [idx[p] for p in rights + lefts]
    beta = len(lefts)
    for k, p in enumerate(free):
        word[p] = i if k < beta else i + 1
    return _from_reading_word(word, tableau_shape(U))


def longest_word(d: int) -> list[int]:
    """A reduced word for the longest element of S_d (bubble-sort order)."""
    return [i for top in range(d - 1, 0, -1) for i in range(1, top + 1)]


def apply_word(word: Iterable[int], U: Sequence[Sequence[int]]) -> Tableau:
    """Apply s_{word[0]} first, then s_{word[1]}, and so on."""
    out = tuple(tuple(r) for r in U)
    for i in word:
        out = ls_action(i, out)
    return out


def e_d(U: Sequence[Sequence[int]], d: int) -> Tableau:
    """Evacuation on SSYT with entries at most ``d``: insert the
    reverse-complement of the reading word."""
    W = reading_word(U)
    return insertion_tableau(d + 1 - x for x in reversed(W))


def e_d_star(U: Sequence[Sequence[int]], d: int) -> Tableau:
    """Content-preserving evacuation ``w_0 o e_d``."""
    return apply_word(longest_word(d), e_d(U, d))


# --- charge --------------------------------------------------------------------

def charge_word(word: Sequence[int]) -> int:
    """Charge of a word whose content is a partition."""
    letters = list(word)
    cnt = content([letters]) if letters else ()
    if any(cnt[k] < cnt[k + 1] for k in range(len(cnt) - 1)):
        raise ValueError(f"charge needs partition content, got {cnt}")
    alive = list(range(len(letters)))
    total = 0
    while alive:
        top = max(letters[p] for p in alive)
        chosen = []
        # start from the right end and read leftwards, cyclically
        cursor = len(letters)
        index = 0
        for letter in range(1, top + 1):
            left = [p for p in alive if p < cursor and letters[p] == letter and p not in chosen]
            if left:
                cursor = max(left)
            else:
                wrap = [p for p in alive if letters[p] == letter and p not in chosen]
                cursor = max(wrap)
                if letter > 1:
                    index += 1
            total += index
            chosen.append(cursor)
        chosen_set = set(chosen)
        alive = [p for p in alive if p not in chosen_set]
    return total


def charge(U: Sequence[Sequence[int]]) -> int:
    return charge_word(reading_word(U))


# --- domino tableaux and hook q-analogue ---------------------------------------

@dataclass(frozen=True)
class DominoTableau:
    """Dominoes listed in order 1, 2, ...; each is a pair of (row, col) cells.

    For odd size the cell (0, 0) is a monomino numbered 0.
    """

    shape: tuple[int, ...]
    dominoes: tuple[tuple[tuple[int, int], tuple[int, int]], ...]

    @property
    def monomino(self) -> tuple[int, int] | None:
        return (0, 0) if sum(self.shape) % 2 else None


def _removable_dominoes(shape: tuple[int, ...]):
    L = len(shape)
    for i, p in enumerate(shape):
        nxt = shape[i + 1] if i + 1 < L else 0
        if p - 2 >= nxt:
            yield ((i, p - 2), (i, p - 1)), shape[:i] + (p - 2,) + shape[i + 1:]
        if i + 1 < L and shape[i + 1] == p:
            after = shape[i + 2] if i + 2 < L else 0
            if p - 1 >= after:
                yield ((i, p - 1), (i + 1, p - 1)), shape[:i] + (p - 1, p - 1) + shape[i + 2:]


def _strip(shape):
    return tuple(p for p in shape if p > 0)


@lru_cache(maxsize=None)
def _domino_lists(shape: tuple[int, ...]) -> tuple[tuple, ...]:
    base = (1,) if sum(shape) % 2 else ()
    if shape == base:
        return ((),)
    if sum(shape) <= len(base):
        return ()
    out = []
    for dom, smaller in _removable_dominoes(shape):
        smaller = _strip(smaller)
        for rest in _domino_lists(smaller):
            out.append(rest + (dom,))
    return tuple(out)


def enumerate_domino_tableaux(shape: Sequence[int]) -> list[DominoTableau]:
    shape = tuple(shape)
    return [DominoTableau(shape, doms) for doms in _domino_lists(shape)]


def hook_lengths(shape: Sequence[int]) -> list[int]:
    conj = conjugate(shape)
    return [shape[i] - j + conj[j] - i - 1 for i in range(len(shape)) for j in range(shape[i])]


def hook_q_analogue(shape: Sequence[int]) -> QPolynomial:
    """f^lambda(q) = [n]!_q / prod of [hook]_q."""
    if not is_partition(tuple(shape)):
        raise ValueError(f"{tuple(shape)} is not a partition")
    out = q_factorial(sum(shape))
    for h in hook_lengths(shape):
        out = out.exact_div(q_int(h))
    return out
