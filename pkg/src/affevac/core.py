"""Partitions, residues, tabloids, tableaux and affine permutations.

Partitions and compositions are plain tuples of positive integers.  Tableaux
are tuples of row tuples.  Residues mod ``n`` are stored by their canonical
representative in ``1..n``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class ParseError(ValueError):
    """Raised for malformed textual input; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class NotStandardizable(ValueError):
    pass


# --- partitions and compositions -------------------------------------------

def as_partition(parts: Iterable[int]) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if any(p < 1 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"partition parts must weakly decrease: {parts}")
    return parts


def as_composition(parts: Iterable[int]) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if any(p < 1 for p in parts):
        raise ValueError(f"composition parts must be positive: {parts}")
    return parts


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """All strict compositions of ``n``."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def conjugate(shape: Sequence[int]) -> tuple[int, ...]:
    if not shape:
        return ()
    return tuple(sum(1 for p in shape if p > j) for j in range(shape[0]))


def sort_partition(parts: Iterable[int]) -> tuple[int, ...]:
    """Sort into a partition, dropping zero parts."""
    return tuple(sorted((p for p in parts if p > 0), reverse=True))


def parse_partition(text: str) -> tuple[int, ...]:
    """Parse ``"4,2,1"`` (brackets optional)."""
    body = text.strip().strip("<>()[]⟨⟩")
    if not body:
        return ()
    parts = []
    offset = 0
    for chunk in body.split(","):
        token = chunk.strip()
        if not re.fullmatch(r"\d+", token):
            raise ParseError(f"bad partition part {token!r}", text.find(chunk, offset))
        offset += len(chunk) + 1
        parts.append(int(token))
    try:
        return as_partition(parts)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def residue(i: int, n: int) -> int:
    """Canonical representative of ``i`` mod ``n`` in ``1..n``."""
    return (i - 1) % n + 1


# --- tabloids ----------------------------------------------------------------

@dataclass(frozen=True)
class Tabloid:
    """Rows of residues mod ``n``; each residue appears exactly once.

    Rows are stored sorted, so equality is equality of row contents.
    """

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]], n: int | None = None):
        rows = [list(r) for r in rows]
        total = sum(len(r) for r in rows)
        if n is None:
            n = total
        canon = tuple(tuple(sorted(residue(x, n) for x in r)) for r in rows)
        if any(len(r) == 0 for r in canon):
            raise ValueError("tabloid rows must be nonempty")
        flat = sorted(x for r in canon for x in r)
        if flat != list(range(1, n + 1)):
            raise ValueError(f"rows {canon} do not contain each residue mod {n} once")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", canon)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def row_index(self) -> dict[int, int]:
        """Map residue -> row number (top row is 1)."""
        return {x: i + 1 for i, r in enumerate(self.rows) for x in r}

    def __str__(self) -> str:
        return "|".join(" ".join(map(str, r)) for r in self.rows)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Tabloid":
        """Parse the ``"2 3 5 7|1 4|6"`` format."""
        rows = []
        pos = 0
        for chunk in text.split("|"):
            row = []
            for m in re.finditer(r"\S+", chunk):
                if not re.fullmatch(r"-?\d+", m.group()):
                    raise ParseError(f"bad residue {m.group()!r}", pos + m.start())
                row.append(int(m.group()))
            if not row:
                raise ParseError("empty tabloid row", pos)
            rows.append(row)
            pos += len(chunk) + 1
        try:
            return cls(rows, n)
        except ValueError as exc:
            raise ParseError(str(exc)) from None


def tabloid_descents(T: Tabloid) -> frozenset[int]:
    """Residues i such that i+1 lies in a strictly lower row."""
    where = T.row_index()
    n = T.n
    return frozenset(i for i in range(1, n + 1) if where[residue(i + 1, n)] > where[i])


def rrss(shape: Sequence[int], k: int, n: int | None = None) -> Tabloid:
    """Reverse row superstandard tabloid: the tabloid with descent set {k}."""
    if n is None:
        n = sum(shape)
    if sum(shape) != n:
        raise ValueError(f"shape {tuple(shape)} does not have size {n}")
    rows, cur = [], k
    for length in shape:
        rows.append([residue(cur - j, n) for j in range(length)])
        cur -= length
    return Tabloid(rows, n)


def swap_residues(T: Tabloid, a: int, b: int) -> Tabloid:
    def sw(x):
        return b if x == a else a if x == b else x

    return Tabloid([[sw(x) for x in r] for r in T.rows], T.n)


def knuth_move_types(D1: frozenset[int], D2: frozenset[int], n: int) -> frozenset[int]:
    """Types of a Knuth move between tabloids with descent sets D1, D2.

    i is a type when i lies only in one descent set and i + 1 only in the
    other; read loosely (shared elements allowed), a move could pick up a
    type it does not realize and type-k moves would stop being unique.
    """
    only1, only2 = D1 - D2, D2 - D1
    return frozenset(
        i for i in range(1, n + 1)
        if (i in only1 and residue(i + 1, n) in only2) or (i in only2 and residue(i + 1, n) in only1)
    )


def knuth_neighbors(T: Tabloid) -> set[tuple[Tabloid, frozenset[int]]]:
    """All tabloids one Knuth move away, each with the move's type set."""
    n = T.n
    where = T.row_index()
    D = tabloid_descents(T)
    out = set()
    for i in range(1, n + 1):
        j = residue(i + 1, n)
        if j == i or where[i] == where[j]:
            continue
        T2 = swap_residues(T, i, j)
        D2 = tabloid_descents(T2)
        if D <= D2 or D2 <= D:
            continue
        out.add((T2, knuth_move_types(D, D2, n)))
    return out


def skew_tableau(T: Tabloid) -> dict[int, tuple[int, int]]:
    """Positions (row, column) of 1..n in the standard skew tableau of ``T``.

    Row ``i`` occupies the column interval ending where row ``i - 1`` begins,
    so the rows form a staircase of disjoint intervals.
    """
    n = T.n
    pos = {}
    right = n
    for i, row in enumerate(T.rows):
        left = right - len(row)
        for j, x in enumerate(row):
            pos[x] = (i, left + j)
        right = left
    return pos


def skew_descents(pos: dict[int, tuple[int, int]]) -> frozenset[int]:
    """Finite descents i in 1..n-1 of a standard skew tableau."""
    n = len(pos)
    return frozenset(i for i in range(1, n) if pos[i + 1][0] > pos[i][0])


# --- tableaux ----------------------------------------------------------------

def tableau_shape(T: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return tuple(len(r) for r in T)


def is_semistandard(T: Sequence[Sequence[int]]) -> bool:
    if not is_partition(tableau_shape(T)):
        return False
    for r in T:
        if any(r[j] > r[j + 1] for j in range(len(r) - 1)):
            return False
    for i in range(len(T) - 1):
        if any(T[i][j] >= T[i + 1][j] for j in range(len(T[i + 1]))):
            return False
    return True


def is_standard(T: Sequence[Sequence[int]]) -> bool:
    flat = sorted(x for r in T for x in r)
    return flat == list(range(1, len(flat) + 1)) and is_semistandard(T)


def content(T: Sequence[Sequence[int]], d: int | None = None) -> tuple[int, ...]:
    """Multiplicities of 1..d in ``T`` (d defaults to the largest entry)."""
    entries = [x for r in T for x in r]
    if d is None:
        d = max(entries, default=0)
    counts = [0] * d
    for x in entries:
        counts[x - 1] += 1
    return tuple(counts)


def format_tableau(T: Sequence[Sequence[int]]) -> str:
    return "/".join(" ".join(map(str, r)) for r in T)


def parse_tableau(text: str) -> tuple[tuple[int, ...], ...]:
    rows = []
    for chunk in text.strip().split("/"):
        try:
            rows.append(tuple(int(x) for x in chunk.split()))
        except ValueError:
            raise ParseError(f"bad tableau row {chunk!r}", text.find(chunk)) from None
    if text.strip() == "":
        return ()
    return tuple(rows)


def standardize_tabloid(T: Tabloid) -> tuple[tuple[int, ...], ...]:
    """The standard tableau whose rows carry the residues of ``T``.

    Rows of a standard tableau increase, so the sorted rows are the only
    candidate filling; raises NotStandardizable if its columns fail.
    """
    if not is_partition(T.shape):
        raise NotStandardizable(f"shape {T.shape} is not a partition")
    if not is_semistandard(T.rows):
        raise NotStandardizable(f"tabloid {T} has no standard arrangement")
    return T.rows


def tabloid_of_tableau(P: Sequence[Sequence[int]]) -> Tabloid:
    return Tabloid(P)


def semistandard_tableaux(shape: Sequence[int], weights: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All semistandard tableaux of ``shape`` with content ``weights``.

    ``weights`` may be any sequence of nonnegative integers (a composition or
    weak composition); letter ``a`` occupies a horizontal strip of size
    ``weights[a - 1]``.
    """
    shape = tuple(shape)
    if sum(shape) != sum(weights):
        return
    rows0 = tuple(() for _ in shape)

    def strips(cur, size, letter):
        # place `size` copies of `letter` as a horizontal strip on cur
        lengths = [len(r) for r in cur]
        caps = []
        for i, L in enumerate(lengths):
            limit = shape[i] - L
            if i > 0:
                limit = min(limit, lengths[i - 1] - L)
            caps.append(limit)

        def rec(i, left):
            if i == len(shape):
                if left == 0:
                    yield ()
                return
            # entries added to row i must sit below cells of row i-1 that were
            # already present before this letter
            for k in range(min(caps[i], left), -1, -1):
                for rest in rec(i + 1, left - k):
                    yield (k,) + rest

        for adds in rec(0, size):
            yield tuple(r + (letter,) * k for r, k in zip(cur, adds))

    def fill(cur, a):
        if a > len(weights):
            yield tuple(r for r in cur if r)
            return
        for nxt in strips(cur, weights[a - 1], a):
            yield from fill(nxt, a + 1)

    yield from fill(rows0, 1)


def standard_tableaux(shape: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    return semistandard_tableaux(shape, (1,) * sum(shape))


def tabloids(shape: Sequence[int], n: int | None = None) -> Iterator[Tabloid]:
    """Every tabloid of composition ``shape``, each exactly once."""
    total = sum(shape)
    if n is None:
        n = total

    def rec(remaining, i):
        if i == len(shape):
            yield ()
            return
        for row in combinations(remaining, shape[i]):
            rest = [x for x in remaining if x not in row]
            for tail in rec(rest, i + 1):
                yield (row,) + tail

    for rows in rec(list(range(1, total + 1)), 0):
        yield Tabloid(rows, n)


# --- affine permutations -----------------------------------------------------

@dataclass(frozen=True)
class AffinePermutation:
    """Extended affine permutation given by its window [w_1, ..., w_n]."""

    window: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.window)
        n = len(w)
        if n == 0 or len({x % n for x in w}) != n:
            raise ValueError(f"window {w} is not one representative per residue class")
        object.__setattr__(self, "window", w)

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        q, r = divmod(i - 1, self.n)
        return self.window[r] + q * self.n

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.window)) + "]"

    @classmethod
    def parse(cls, text: str) -> "AffinePermutation":
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ParseError("affine window must be bracketed", 0)
        try:
            return cls(tuple(int(x) for x in body[1:-1].split(",")))
        except ValueError as exc:
            raise ParseError(str(exc)) from None


def rotate(w: AffinePermutation) -> AffinePermutation:
    """Reverse-complement of the window."""
    n = w.n
    return AffinePermutation(tuple(n + 1 - x for x in reversed(w.window)))


def affine_descents(w: AffinePermutation) -> frozenset[int]:
    return frozenset(i for i in range(1, w.n + 1) if w(i) > w(i + 1))


def swap_window_positions(w: AffinePermutation, i: int) -> AffinePermutation:
    """Exchange w_i and w_{i+1} (and all periodic translates)."""
    n = w.n
    a, b = w(i), w(i + 1)
    win = list(w.window)
    for pos, val in ((i, b), (i + 1, a)):
        q, r = divmod(pos - 1, n)
        win[r] = val - q * n
    return AffinePermutation(tuple(win))


def affine_knuth_neighbors(w: AffinePermutation) -> set[tuple[AffinePermutation, frozenset[int]]]:
    """Window-level Knuth moves of ``w``, annotated with their types."""
    D = affine_descents(w)
    out = set()
    for i in range(1, w.n + 1):
        w2 = swap_window_positions(w, i)
        D2 = affine_descents(w2)
        if D <= D2 or D2 <= D:
            continue
        out.add((w2, knuth_move_types(D, D2, w.n)))
    return out
