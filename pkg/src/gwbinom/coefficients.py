"""Enriched binomial coefficients: closed forms, enumeration oracles, and
the cross-validation sweep.

The untwisted coefficient attached to (n, j) is the Grothendieck-Witt
class C(n, j) - (1 - u) * C((n-2)/2, (j-1)/2), fractional binomials
vanishing; since 2(1 - u) = 0 only the parity of the correction matters,
and by Lucas that parity is 1 exactly when (j-1)/2 digit-dominates into
(n-2)/2.  Both routes are computed and compared on every call.

The independent oracle evaluates the same class as
C(n, j) + (u - 1) * (number of even-period rotation orbits of (n, j)
necklaces); the twisted analogue on balanced necklaces replaces plain
rotation by the rotate-then-color-swap action.  The twisted closed form
is C(2j, j) + (u - 1) * d(j) with d(j) = 1 exactly for j = 2, 4, 8, 16,
and so on; the degenerate j = 1 has two fixed necklaces and no
correction.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .arith import big_binomial, digit_dominates
from .gw import GWElem, SQUARE, gw_display, gw_from_coeffs, gw_scale, gw_sub, gw_to_json
from .necklaces import count_even_orbits, count_even_twisted_orbits


@dataclass(frozen=True)
class EnrichedCoefficient:
    """A Grothendieck-Witt binomial value plus its provenance."""

    n: int
    j: int
    twisted: bool
    value: GWElem
    method: str  # "closed" or "oracle"

    def __post_init__(self) -> None:
        if self.method not in ("closed", "oracle"):
            raise ValueError(f"method must be 'closed' or 'oracle', got {self.method!r}")
        if self.twisted and self.n != 2 * self.j:
            raise ValueError(f"twisted coefficients need n = 2j, got n={self.n}, j={self.j}")

    @property
    def display(self) -> str:
        return gw_display(self.value)

    def to_json(self) -> dict:
        out = {"n": self.n, "j": self.j, "twisted": self.twisted, "method": self.method}
        out.update(gw_to_json(self.value))
        return out


def correction_parity(n: int, j: int) -> int:
    """1 when (j-1)/2 digit-dominates into (n-2)/2 (both must be
    non-negative integers, i.e. j odd and n even), else 0.  Equals the
    parity of C((n-2)/2, (j-1)/2)."""
    return 1 if digit_dominates(Fraction(j - 1, 2), Fraction(n - 2, 2)) else 0


def untwisted_closed(n: int, j: int) -> EnrichedCoefficient:
    """Closed-form enriched coefficient for j blues among n beads.

    Evaluated through the digit-dominance parity and, independently,
    through the raw correction binomial; the two must agree.
    """
    if n < 0:
        raise ValueError(f"non-negative n required, got {n}")
    if not 0 <= j <= n:
        raise ValueError(f"need 0 <= j <= n, got j={j}, n={n}")
    c = comb(n, j)
    d = correction_parity(n, j)
    value = gw_from_coeffs(c - d, d)
    correction = big_binomial(Fraction(n - 2, 2), Fraction(j - 1, 2))
    alt = gw_sub(gw_from_coeffs(c, 0), gw_scale(gw_from_coeffs(1, -1), correction))
    assert alt == value, f"closed-form routes disagree at (n={n}, j={j}): {alt} vs {value}"
    return EnrichedCoefficient(n, j, False, value, "closed")


def untwisted_oracle(n: int, j: int) -> EnrichedCoefficient:
    """Enumeration oracle: C(n, j) + (u - 1) * (even-period orbit count)."""
    if n < 0:
        raise ValueError(f"non-negative n required, got {n}")
    if not 0 <= j <= n:
        raise ValueError(f"need 0 <= j <= n, got j={j}, n={n}")
    if n == 0:
        # the empty necklace: a single orbit of odd period one
        return EnrichedCoefficient(0, 0, False, gw_from_coeffs(1, 0), "oracle")
    even = count_even_orbits(n, j)
    value = gw_from_coeffs(comb(n, j) - even, even)
    return EnrichedCoefficient(n, j, False, value, "oracle")


def twisted_correction_parity(j: int) -> int:
    """1 exactly for j = 2^m with m >= 1.

    These are the j with v2(C(2j, j)) = 1 apart from j = 1, whose two
    necklaces are each fixed by the twisted rotation, leaving no
    even-period orbits and hence no correction.
    """
    return 1 if j >= 2 and j & (j - 1) == 0 else 0


def twisted_closed(j: int) -> EnrichedCoefficient:
    """Closed-form twisted coefficient: C(2j, j) + (u - 1) * correction."""
    if j < 1:
        raise ValueError(f"positive j required, got {j}")
    c = comb(2 * j, j)
    d = twisted_correction_parity(j)
    return EnrichedCoefficient(2 * j, j, True, gw_from_coeffs(c - d, d), "closed")


def half_central_hyperbolic(j: int) -> GWElem:
    """The class (C(2j, j)/2) * (1 + u): half the central binomial times the
    hyperbolic-plane class.  Matches the twisted closed form for every
    j >= 2, and differs exactly at j = 1."""
    c = comb(2 * j, j)
    assert c % 2 == 0, f"central binomial C({2*j},{j}) should be even"
    return gw_from_coeffs(c // 2, c // 2)


def twisted_oracle(j: int) -> EnrichedCoefficient:
    """Enumeration oracle over the rotate-then-color-swap action:
    C(2j, j) + (u - 1) * (even-twisted-period orbit count)."""
    if j < 1:
        raise ValueError(f"positive j required, got {j}")
    even = count_even_twisted_orbits(j)
    value = gw_from_coeffs(comb(2 * j, j) - even, even)
    return EnrichedCoefficient(2 * j, j, True, value, "oracle")


def triangle(rows: int) -> list[list[EnrichedCoefficient]]:
    """Rows 0 .. rows-1 of the enriched triangle, via the closed form."""
    if rows < 1:
        raise ValueError(f"positive row count required, got {rows}")
    return [[untwisted_closed(n, j) for j in range(n + 1)] for n in range(rows)]


def triangle_to_json(table: list[list[EnrichedCoefficient]]) -> dict:
    return {
        "rows": len(table),
        "triangle": [
            [
                {"n": c.n, "j": c.j, "rank": c.value.rank, "disc": c.value.disc_name,
                 "display": c.display}
                for c in row
            ]
            for row in table
        ],
    }


def triangle_from_json(obj: dict) -> list[list[EnrichedCoefficient]]:
    """Rebuild a triangle from its JSON rendering (closed-form cells)."""
    disc_values = {"square": 0, "nonsquare": 1}
    table = []
    for row in obj["triangle"]:
        cells = []
        for cell in row:
            value = GWElem(cell["rank"], disc_values[cell["disc"]])
            if gw_display(value) != cell["display"]:
                raise ValueError(f"display mismatch in {cell}")
            cells.append(EnrichedCoefficient(cell["n"], cell["j"], False, value, "closed"))
        table.append(cells)
    return table


# ---------------------------------------------------------------------------
# Verification sweep
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CellCheck:
    """One closed-vs-oracle comparison plus the per-cell property checks."""

    n: int
    j: int
    twisted: bool
    closed: str
    oracle: str
    match: bool
    rank_ok: bool
    symmetry_ok: bool
    vanishing_ok: bool
    seconds: float

    @property
    def ok(self) -> bool:
        return self.match and self.rank_ok and self.symmetry_ok and self.vanishing_ok

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "j": self.j,
            "twisted": self.twisted,
            "closed": self.closed,
            "oracle": self.oracle,
            "match": self.match,
            "rank_ok": self.rank_ok,
            "symmetry_ok": self.symmetry_ok,
            "vanishing_ok": self.vanishing_ok,
            "seconds": self.seconds,
        }


def _check_untwisted_cell(cell: tuple[int, int]) -> CellCheck:
    n, j = cell
    start = time.perf_counter()
    closed = untwisted_closed(n, j)
    oracle = untwisted_oracle(n, j)
    rank_ok = closed.value.rank == comb(n, j) == oracle.value.rank
    symmetry_ok = closed.value == untwisted_closed(n, n - j).value
    if n % 2 or j % 2 == 0:
        # odd bead count, or both counts even: no correction survives
        vanishing_ok = closed.value.disc == SQUARE and oracle.value.disc == SQUARE
    else:
        vanishing_ok = True
    return CellCheck(
        n, j, False, closed.display, oracle.display,
        closed.value == oracle.value, rank_ok, symmetry_ok, vanishing_ok,
        time.perf_counter() - start,
    )


def _check_twisted_cell(j: int) -> CellCheck:
    start = time.perf_counter()
    closed = twisted_closed(j)
    oracle = twisted_oracle(j)
    rank_ok = closed.value.rank == comb(2 * j, j) == oracle.value.rank
    if j % 2:
        # odd j: swapping acts freely, so no correction survives
        vanishing_ok = closed.value.disc == SQUARE and oracle.value.disc == SQUARE
    else:
        vanishing_ok = True
    return CellCheck(
        2 * j, j, True, closed.display, oracle.display,
        closed.value == oracle.value, rank_ok, True, vanishing_ok,
        time.perf_counter() - start,
    )


@dataclass(frozen=True)
class VerifyReport:
    max_n: int
    twisted_max_j: int
    cells: tuple[CellCheck, ...]
    seconds: float

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cells)

    def first_divergence(self) -> CellCheck | None:
        for c in self.cells:
            if not c.ok:
                return c
        return None

    def to_json(self) -> dict:
        return {
            "max_n": self.max_n,
            "twisted_max_j": self.twisted_max_j,
            "pass": self.ok,
            "cells": [c.to_json() for c in self.cells],
            "seconds": self.seconds,
        }

    def render_text(self) -> str:
        lines = [
            f"closed-vs-oracle sweep: untwisted n <= {self.max_n},"
            f" twisted j <= {self.twisted_max_j}"
        ]
        untwisted = [c for c in self.cells if not c.twisted]
        twisted = [c for c in self.cells if c.twisted]
        for n in sorted({c.n for c in untwisted}):
            row = [c for c in untwisted if c.n == n]
            ok = sum(1 for c in row if c.ok)
            total = sum(c.seconds for c in row)
            slowest = max(c.seconds for c in row)
            lines.append(
                f"  n={n:2d}  cells {ok}/{len(row)} ok"
                f"  total {total:.3f}s  slowest cell {slowest:.3f}s"
            )
        for c in twisted:
            status = "ok" if c.ok else "FAIL"
            lines.append(f"  twisted j={c.j:2d}  {c.closed:>12}  {status}  {c.seconds:.3f}s")
        lines.append(
            "properties: rank {}  row symmetry {}  vanishing {}".format(
                "ok" if all(c.rank_ok for c in self.cells) else "FAIL",
                "ok" if all(c.symmetry_ok for c in self.cells) else "FAIL",
                "ok" if all(c.vanishing_ok for c in self.cells) else "FAIL",
            )
        )
        bad = self.first_divergence()
        if bad is not None:
            kind = "twisted" if bad.twisted else "untwisted"
            lines.append(
                f"DIVERGENCE at {kind} (n={bad.n}, j={bad.j}):"
                f" closed={bad.closed} oracle={bad.oracle}"
                f" match={bad.match} rank_ok={bad.rank_ok}"
                f" symmetry_ok={bad.symmetry_ok} vanishing_ok={bad.vanishing_ok}"
            )
        lines.append(
            f"VERIFY {'PASS' if self.ok else 'FAIL'}"
            f" ({len(self.cells)} cells, {self.seconds:.2f}s)"
        )
        return "\n".join(lines)


def verify(max_n: int, twisted_max_j: int, jobs: int = 1) -> VerifyReport:
    """Compare the closed forms against the enumeration oracles on every
    untwisted cell with n <= max_n and every twisted cell with
    j <= twisted_max_j; cells shard across processes when jobs > 1."""
    if max_n < 1 or twisted_max_j < 0:
        raise ValueError("need max_n >= 1 and twisted_max_j >= 0")
    start = time.perf_counter()
    untwisted_cells = [(n, j) for n in range(max_n + 1) for j in range(n + 1)]
    twisted_cells = list(range(1, twisted_max_j + 1))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_untwisted_cell, untwisted_cells))
            results += list(pool.map(_check_twisted_cell, twisted_cells))
    else:
        results = [_check_untwisted_cell(c) for c in untwisted_cells]
        results += [_check_twisted_cell(j) for j in twisted_cells]
    results.sort(key=lambda c: (c.twisted, c.n, c.j))
    return VerifyReport(max_n, twisted_max_j, tuple(results), time.perf_counter() - start)
