"""Combinatorial R-matrix on tuples of one-row tableaux, promotion, and
affine evacuation by two independent routes."""

from __future__ import annotations

from typing import Callable, Sequence

from .core import Tabloid, residue
from .tableau import (
    biword_to_tabloid,
    bracket_unmatched,
    e_d_star,
    finite_evacuation,
    rsk,
    rsk_inverse,
    tabloid_to_biword,
)

Row = tuple[int, ...]


def r_matrix(a: Sequence[int], b: Sequence[int]) -> tuple[Row, Row]:
    """R : B^{k2} x B^{k1} -> B^{k1} x B^{k2} by parenthesis matching.

    Entries of ``a`` are right parentheses, entries of ``b`` left ones; for
    equal numbers the right parentheses come first.  The unmatched
    ``)^alpha (^beta`` block is rewritten as ``)^beta (^alpha``.
    """
    # (value, 0) sorts before (value, 1): rights before lefts
    merged = sorted([(x, 0) for x in a] + [(x, 1) for x in b])
    syms = [1 if side else -1 for _, side in merged]
    rights, lefts = bracket_unmatched(syms)
    free = rights + lefts
    beta = len(lefts)
    for k, p in enumerate(free):
        syms[p] = -1 if k < beta else 1
    a2 = tuple(x for (x, _), s in zip(merged, syms) if s < 0)
    b2 = tuple(x for (x, _), s in zip(merged, syms) if s > 0)
    return a2, b2


def r_i(rows: Sequence[Sequence[int]], i: int) -> tuple[Row, ...]:
    """Apply R to rows ``i`` (upper) and ``i + 1`` (lower), 1-indexed from the top.

    The lower row is the left tensor factor, matching B^{k_d} x ... x B^{k_1}
    with row 1 as the rightmost factor.
    """
    rows = [tuple(r) for r in rows]
    upper, lower = rows[i - 1], rows[i]
    lower2, upper2 = r_matrix(lower, upper)
    rows[i - 1], rows[i] = upper2, lower2
    return tuple(rows)


def reduced_word(sigma: Sequence[int]) -> list[int]:
    """Reduced word turning positions into the order given by ``sigma``.

    ``sigma`` is 0-based one-line notation: output row ``j`` carries what was
    input row ``sigma[j]``.  Generators are returned in application order.
    """
    # bubble sort: adjacent swaps count inversions, so the word is reduced
    where = {v: k for k, v in enumerate(sigma)}
    keys = [where[v] for v in range(len(sigma))]
    word = []
    changed = True
    while changed:
        changed = False
        for k in range(len(keys) - 1):
            if keys[k] > keys[k + 1]:
                keys[k], keys[k + 1] = keys[k + 1], keys[k]
                word.append(k + 1)
                changed = True
    return word


def r_word(rows: Sequence[Sequence[int]], word: Sequence[int],
           trace: Callable[[int, tuple[Row, ...]], None] | None = None) -> tuple[Row, ...]:
    out = tuple(tuple(r) for r in rows)
    for i in word:
        out = r_i(out, i)
        if trace is not None:
            trace(i, out)
    return out


def r_sigma(rows: Sequence[Sequence[int]], sigma: Sequence[int]) -> tuple[Row, ...]:
    """R_sigma on a row tuple; the result has row lengths permuted by ``sigma``."""
    return r_word(rows, reduced_word(sigma))


def longest_row_word(d: int) -> list[int]:
    """Staircase reduced word for reversing ``d`` rows."""
    return [i for top in range(d - 1, 0, -1) for i in range(1, top + 1)]


def promotion(T: Tabloid, times: int = 1) -> Tabloid:
    n = T.n
    return Tabloid([[residue(x + times, n) for x in r] for r in T.rows], n)


def _flip(T: Tabloid, shift: int = 0) -> Tabloid:
    """Reverse the rows and send i to n + 1 - i + shift."""
    n = T.n
    return Tabloid([[residue(n + 1 - x + shift, n) for x in r] for r in reversed(T.rows)], n)


def affine_evacuation(T: Tabloid,
                      trace: Callable[[int, tuple[Row, ...]], None] | None = None) -> Tabloid:
    """Reverse the rows, complement the entries, then restore the shape with R_{w0}."""
    flipped = _flip(T)
    if trace is not None:
        trace(0, flipped.rows)
    rows = r_word(flipped.rows, longest_row_word(len(T.rows)), trace)
    return Tabloid(rows, T.n)


def affine_evacuation_via_rsk(T: Tabloid) -> Tabloid:
    """Compute e(T) as the RSK preimage of (e_n(P), e_d*(Q))."""
    P, Q = rsk(tabloid_to_biword(T))
    d = len(T.rows)
    P2 = finite_evacuation(P)
    Q2 = e_d_star(Q, d)
    return biword_to_tabloid(rsk_inverse(P2, Q2), T.n)


def rectangle_evacuation(T: Tabloid) -> Tabloid:
    """Closed form on rectangles: turn upside down and reflect i -> n + 1 - i."""
    if len(set(T.shape)) > 1:
        raise ValueError(f"shape {T.shape} is not a rectangle")
    return _flip(T)


def evacuation_variant(T: Tabloid, c: int) -> Tabloid:
    """Alternate evacuation sending RRSS(lambda, k) to RRSS(lambda, n - k + c).

    Reverses the rows, sends i to n + 1 - i + c, then applies R_{w0}; this
    equals ``promotion(e(T), c)``, i.e. ``e`` composed with promotion by ``-c``.
    """
    flipped = _flip(T, c)
    return Tabloid(r_word(flipped.rows, longest_row_word(len(T.rows))), T.n)
