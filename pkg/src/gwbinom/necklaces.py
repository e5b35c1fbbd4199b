"""Necklaces of blue and red beads under rotation, reflection, and color swap.

A necklace is a length-n circular word over {blue, red} with bead 0 at the
top; positions run counterclockwise.  Bead sets are stored as bitmasks
(bit p set = bead p blue), so rotation is a word rotate and the encoding
caps n at the word width of 63 beads.  On top of the three generators

  * rotate(l, k)     -- positions shift by k mod n,
  * flip(l)          -- reflection through the top bead, p -> (n - p) mod n,
  * color_swap(l)    -- exchange blue and red everywhere,

the module enumerates rotation orbits with their periods, detects which
orbits are preserved by the flip, classifies their symmetry axes (type 1
passes between beads, type 2 passes through at least one bead), splits an
even-length orbit into its two interleaved half-length orbits, strips or
inserts the pair of beads sitting on a through-beads axis, and enumerates
the twisted orbits in which one group step rotates a single bead and then
swaps the two colors.

Enumerations are capped: the hard limit is the 63-bit encoding and the
soft limit defaults to 24 beads, overridable through the GWBINOM_MAX_N
environment variable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .arith import big_binomial, mobius, valuation

WORD_BITS = 63
DEFAULT_MAX_BEADS = 24
MAX_BEADS_ENV = "GWBINOM_MAX_N"

TYPE1 = 1  # axis missing every bead
TYPE2 = 2  # axis through at least one bead

BLUE = "blue"
RED = "red"


class EnumerationLimitError(ValueError):
    """An orbit enumeration would exceed the configured bead cap."""


def max_enumeration_beads() -> int:
    """Current soft cap on enumeration size (env override, then default)."""
    raw = os.environ.get(MAX_BEADS_ENV)
    if raw is None:
        return DEFAULT_MAX_BEADS
    try:
        cap = int(raw)
    except ValueError:
        raise EnumerationLimitError(f"{MAX_BEADS_ENV} must be an integer, got {raw!r}")
    if cap < 1:
        raise EnumerationLimitError(f"{MAX_BEADS_ENV} must be positive, got {cap}")
    return min(cap, WORD_BITS)


def _check_enumeration(n: int) -> None:
    cap = max_enumeration_beads()
    if n > cap:
        raise EnumerationLimitError(
            f"n={n} exceeds the enumeration cap {cap}"
            f" (raise {MAX_BEADS_ENV}, hard limit {WORD_BITS})"
        )


@dataclass(frozen=True)
class Necklace:
    """A two-colored necklace: bead count and the bitmask of blue beads."""

    size: int
    blues: int

    def __post_init__(self) -> None:
        if not 1 <= self.size <= WORD_BITS:
            raise ValueError(f"size must be in [1, {WORD_BITS}], got {self.size}")
        if not 0 <= self.blues < 1 << self.size:
            raise ValueError(f"blues mask {self.blues:#x} out of range for size {self.size}")

    @classmethod
    def from_positions(cls, size: int, positions) -> "Necklace":
        mask = 0
        for p in positions:
            if not 0 <= p < size:
                raise ValueError(f"position {p} out of range for size {size}")
            mask |= 1 << p
        return cls(size, mask)

    @property
    def j(self) -> int:
        return self.blues.bit_count()

    def blue_positions(self) -> tuple[int, ...]:
        return tuple(p for p in range(self.size) if self.blues >> p & 1)

    def is_blue(self, p: int) -> bool:
        return bool(self.blues >> (p % self.size) & 1)

    def bitstring(self) -> str:
        """Position 0 leftmost, '1' for blue."""
        return "".join("1" if self.blues >> p & 1 else "0" for p in range(self.size))


def _rot_mask(mask: int, n: int, k: int) -> int:
    k %= n
    if k == 0:
        return mask
    return ((mask << k) | (mask >> (n - k))) & ((1 << n) - 1)


def rotate(l: Necklace, k: int) -> Necklace:
    """Shift every position by k mod n."""
    return Necklace(l.size, _rot_mask(l.blues, l.size, k))


def flip(l: Necklace) -> Necklace:
    """Reflect through the top bead: p -> (n - p) mod n.  An involution."""
    m = 0
    for p in range(l.size):
        if l.blues >> p & 1:
            m |= 1 << ((l.size - p) % l.size)
    return Necklace(l.size, m)


def color_swap(l: Necklace) -> Necklace:
    """Exchange the colors of all beads.  An involution."""
    return Necklace(l.size, l.blues ^ ((1 << l.size) - 1))


def _orbit_masks(n: int, mask: int) -> set[int]:
    out = {mask}
    m = mask
    for _ in range(n - 1):
        m = _rot_mask(m, n, 1)
        out.add(m)
    return out


def canonical_form(l: Necklace) -> tuple[Necklace, int]:
    """Canonical representative (minimal bitmask over rotations) and period."""
    orbit = _orbit_masks(l.size, l.blues)
    return Necklace(l.size, min(orbit)), len(orbit)


@dataclass(frozen=True)
class AxisIndex:
    """A symmetry-axis class of an orbit, named by the reflection exponent m.

    The reflection r^m f fixes the representative; its axis meets the
    circle at bead coordinates m/2 and (m + n)/2, so for even n the axis
    passes through beads exactly when m is even (type 2), and for odd n
    every axis passes through one bead.
    """

    m: int
    axis_type: int


@dataclass(frozen=True)
class OrbitRecord:
    """A rotation orbit: canonical necklace, period, flip behaviour, axes.

    ``axes`` lists one representative per axis class of the orbit, i.e.
    per orbit of (necklace, axis) pairs under rotation; it is empty
    exactly when the orbit is not flip-fixed.
    """

    canonical: Necklace
    period: int
    flip_fixed: bool
    axes: tuple[AxisIndex, ...]

    @property
    def size(self) -> int:
        return self.canonical.size

    @property
    def j(self) -> int:
        return self.canonical.j

    def has_axis_type(self, axis_type: int) -> bool:
        return any(a.axis_type == axis_type for a in self.axes)


def _axis_classes(canon: Necklace, period: int) -> tuple[AxisIndex, ...]:
    n = canon.size
    flipped = flip(canon).blues
    ms = [m for m in range(n) if _rot_mask(flipped, n, m) == canon.blues]
    if not ms:
        return ()
    # Reflections fixing one necklace differ by rotations in its stabilizer,
    # so ms = {m0 + t*period}; rotating the representative shifts every m
    # by 2, hence classes are ms modulo steps of 2*period.
    assert len(ms) == n // period
    m0 = ms[0]
    if (n // period) % 2 == 1:
        reps = [m0]
    else:
        reps = [m0, m0 + period]

    def axis_type(m: int) -> int:
        if n % 2 == 1:
            return TYPE2
        return TYPE2 if m % 2 == 0 else TYPE1

    return tuple(AxisIndex(m, axis_type(m)) for m in reps)


def orbit_record_of(l: Necklace) -> OrbitRecord:
    """Record of the rotation orbit containing l."""
    orbit = _orbit_masks(l.size, l.blues)
    canon = Necklace(l.size, min(orbit))
    period = len(orbit)
    flip_fixed = flip(canon).blues in orbit
    axes = _axis_classes(canon, period) if flip_fixed else ()
    return OrbitRecord(canon, period, flip_fixed, axes)


def symmetry_axes(rec: OrbitRecord) -> tuple[AxisIndex, ...]:
    """Axis classes of an orbit; empty iff the orbit is not flip-fixed."""
    return rec.axes


def axis_distance(rec: OrbitRecord, a: AxisIndex, b: AxisIndex) -> Fraction:
    """Distance between two axis classes in bead units (half-integers allowed).

    Rotating by s beads moves the axis of r^m f to the axis of r^(m+2s) f,
    so the achievable separations are (b.m - a.m + 2*period*t) mod n; the
    distance is the smallest folded value, halved.  Exact arithmetic in
    doubled units throughout.
    """
    n = rec.size
    best = None
    for t in range(n):
        d = (b.m - a.m + 2 * rec.period * t) % n
        folded = min(d, n - d)
        if best is None or folded < best:
            best = folded
    return Fraction(best, 2)


def _iter_masks(n: int, j: int):
    """All n-bit masks of popcount j, ascending (Gosper's hack)."""
    if j == 0:
        yield 0
        return
    limit = 1 << n
    mask = (1 << j) - 1
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple


def enumerate_orbits(n: int, j: int) -> tuple[OrbitRecord, ...]:
    """All rotation orbits of necklaces with j blues among n beads,
    sorted by canonical bitmask."""
    if n < 1:
        raise ValueError(f"positive n required, got {n}")
    if not 0 <= j <= n:
        raise ValueError(f"need 0 <= j <= n, got j={j}, n={n}")
    _check_enumeration(n)
    return _enumerate_orbits(n, j)


@cache
def _enumerate_orbits(n: int, j: int) -> tuple[OrbitRecord, ...]:
    seen: set[int] = set()
    records = []
    for mask in _iter_masks(n, j):
        if mask in seen:
            continue
        orbit = _orbit_masks(n, mask)
        seen |= orbit
        canon = Necklace(n, min(orbit))
        period = len(orbit)
        flip_fixed = flip(canon).blues in orbit
        axes = _axis_classes(canon, period) if flip_fixed else ()
        records.append(OrbitRecord(canon, period, flip_fixed, axes))
    records.sort(key=lambda r: r.canonical.blues)
    return tuple(records)


def count_even_orbits(n: int, j: int) -> int:
    """Number of rotation orbits with even period."""
    return sum(1 for rec in enumerate_orbits(n, j) if rec.period % 2 == 0)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def aperiodic_count(n: int, j: int) -> int:
    """Number of full-period rotation orbits, by Moebius inversion:
    (1/n) * sum over l | n of mu(l) * C(n/l, j/l), fractional terms zero."""
    if not 0 <= j <= n:
        raise ValueError(f"need 0 <= j <= n, got j={j}, n={n}")
    total = sum(
        mobius(l) * big_binomial(Fraction(n, l), Fraction(j, l)) for l in _divisors(n)
    )
    q, r = divmod(total, n)
    assert r == 0, f"inversion sum {total} not divisible by {n}"
    return q


def odd_flip_fixed_count(n: int, j: int) -> int:
    """Number of flip-fixed orbits of odd period, by enumeration."""
    return sum(1 for rec in enumerate_orbits(n, j) if rec.flip_fixed and rec.period % 2)


def odd_flip_fixed_closed_form(n: int, j: int) -> int:
    """Closed form for the odd-period flip-fixed orbit count.

    Halving both n and j while both are even leaves the count unchanged,
    so with M = min(v2(n), v2(j)) it reduces to a single binomial in the
    half-open cases:

      * v2(j) >  v2(n): C(n/2^(M+1) - 1/2, j/2^(M+1))
      * v2(j) == v2(n): C(n/2^(M+1) - 1/2, j/2^(M+1) - 1/2)
      * v2(j) <  v2(n): 0  (odd period forces an even blue count)

    where the shifted arguments are genuine integers.  j = 0 counts the
    all-red orbit, giving 1.
    """
    if not 0 <= j <= n:
        raise ValueError(f"need 0 <= j <= n, got j={j}, n={n}")
    vn = valuation(2, n)
    vj = None if j == 0 else valuation(2, j)  # j = 0 acts as infinite valuation
    if vj is not None and vj < vn:
        return 0
    m = vn if (vj is None or vj > vn) else vj
    top = Fraction(n, 2 ** (m + 1)) - Fraction(1, 2)
    if vj is None or vj > vn:
        low = Fraction(j, 2 ** (m + 1))
    else:
        low = Fraction(j, 2 ** (m + 1)) - Fraction(1, 2)
    return big_binomial(top, low)


@dataclass(frozen=True)
class FlipFixedCounts:
    """Partition of the flip-fixed orbits of an even-size necklace set."""

    type1_even: int
    type2_even: int
    odd_fixed: int


def classify_flip_fixed(n: int, j: int) -> FlipFixedCounts:
    """Counts of flip-fixed orbits: even period with a type-1 axis, even
    period with a type-2 axis, and odd period.

    The two even-period families are disjoint (an even-period orbit's
    axis classes all share one type); odd-period flip-fixed orbits carry
    one axis of each type.  Defined for even n only.
    """
    if n % 2:
        raise ValueError(f"even n required, got {n}")
    t1 = t2 = odd = 0
    for rec in enumerate_orbits(n, j):
        if not rec.flip_fixed:
            continue
        types = {a.axis_type for a in rec.axes}
        if rec.period % 2:
            assert types == {TYPE1, TYPE2}, rec
            odd += 1
        else:
            assert len(types) == 1, rec
            if TYPE1 in types:
                t1 += 1
            else:
                t2 += 1
    return FlipFixedCounts(t1, t2, odd)


def color_swap_fixed(rec: OrbitRecord) -> bool:
    """True when the color-swapped necklace lies in the same rotation orbit."""
    swapped, _ = canonical_form(color_swap(rec.canonical))
    return swapped == rec.canonical


def interleave_parts(l: Necklace) -> tuple[Necklace, Necklace]:
    """The even-position and odd-position beads of an even-size necklace,
    each reindexed to n/2 beads, as an ordered pair (even half first)."""
    n = l.size
    if n % 2:
        raise ValueError(f"even size required, got {n}")
    half = n // 2
    even_mask = odd_mask = 0
    for i in range(half):
        if l.blues >> (2 * i) & 1:
            even_mask |= 1 << i
        if l.blues >> (2 * i + 1) & 1:
            odd_mask |= 1 << i
    return Necklace(half, even_mask), Necklace(half, odd_mask)


def interleave_decompose(rec: OrbitRecord) -> tuple[OrbitRecord, OrbitRecord]:
    """Split an even-size orbit into the orbits of its even- and odd-position
    beads, as an unordered pair.

    The pair is independent of the representative: rerooting by two
    rotates both halves, rerooting by one exchanges them.  Returned
    sorted by canonical bitmask.
    """
    even_half, odd_half = interleave_parts(rec.canonical)
    a = orbit_record_of(even_half)
    b = orbit_record_of(odd_half)
    if b.canonical.blues < a.canonical.blues:
        a, b = b, a
    return a, b


def interleave_fiber_size(pair: tuple[OrbitRecord, OrbitRecord]) -> int:
    """Number of orbits with a type-1 axis that interleave to the given pair.

    Only pairs of the form ([l], flip[l]) occur as images; for those the
    count is the period of [l] when [l] is not flip-fixed, (period + 1)/2
    when it is flip-fixed of odd period, and period/2 when flip-fixed of
    even period.  Any other pair has an empty fiber.
    """
    a, b = pair
    if a.size != b.size:
        raise ValueError(f"mismatched sizes {a.size} and {b.size}")
    if orbit_record_of(flip(a.canonical)) != b:
        return 0
    if not a.flip_fixed:
        return a.period
    if a.period % 2:
        return (a.period + 1) // 2
    return a.period // 2


def strip_axis_beads(rec: OrbitRecord, axis: AxisIndex) -> OrbitRecord:
    """Remove the two beads sitting on a type-2 axis of an orbit with both
    bead count and blue count even; the result lives on n-2 beads.

    With n and j both even, the two on-axis beads always share a color:
    off-axis beads pair up under the reflection, so the on-axis blues have
    the parity of j.
    """
    n = rec.size
    if n % 2 or rec.j % 2:
        raise ValueError(f"even bead and blue counts required, got n={n}, j={rec.j}")
    if n < 4:
        raise ValueError(f"need at least 4 beads, got {n}")
    if axis.axis_type != TYPE2:
        raise ValueError("a type-2 (through-beads) axis is required")
    l = rec.canonical
    if _rot_mask(flip(l).blues, n, axis.m) != l.blues:
        raise ValueError(f"axis m={axis.m} does not fix the canonical representative")
    a = axis.m // 2
    b = a + n // 2
    if l.is_blue(a) != l.is_blue(b):
        raise RuntimeError("on-axis beads differ in color; invariant violation")
    mask = 0
    i = 0
    for t in range(1, n):
        p = (a + t) % n
        if p == b:
            continue
        if l.is_blue(p):
            mask |= 1 << i
        i += 1
    return orbit_record_of(Necklace(n - 2, mask))


def insert_axis_beads(rec: OrbitRecord, color: str) -> OrbitRecord:
    """Insert two beads of the given color into the two gaps on a type-1
    axis of a flip-fixed orbit, producing a type-2-symmetric orbit on n+2
    beads.  Uses the least-m type-1 axis class (unique in the reduction
    where this map is applied)."""
    if color not in (BLUE, RED):
        raise ValueError(f"color must be {BLUE!r} or {RED!r}, got {color!r}")
    if not rec.flip_fixed:
        raise ValueError("flip-fixed orbit required")
    type1 = [a for a in rec.axes if a.axis_type == TYPE1]
    if not type1:
        raise ValueError("orbit has no between-beads (type-1) axis")
    m = min(a.m for a in type1)
    l = rec.canonical
    n = rec.size
    g1 = (m - 1) // 2
    g2 = g1 + n // 2
    flags = []
    for p in range(n):
        flags.append(l.is_blue(p))
        if p == g1 or p == g2:
            flags.append(color == BLUE)
    mask = 0
    for i, blue in enumerate(flags):
        if blue:
            mask |= 1 << i
    return orbit_record_of(Necklace(n + 2, mask))


# ---------------------------------------------------------------------------
# Twisted action: one generator step rotates a bead and then swaps colors.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TwistedOrbitRecord:
    """An orbit of the rotate-then-color-swap action on balanced necklaces."""

    canonical: Necklace
    twisted_period: int
    swap_fixed: bool

    @property
    def size(self) -> int:
        return self.canonical.size


def twisted_rotation(l: Necklace) -> Necklace:
    """One step of the twisted action: rotate one bead, then swap colors."""
    return color_swap(rotate(l, 1))


def _twisted_orbit_masks(n: int, mask: int) -> set[int]:
    full = (1 << n) - 1
    out = set()
    m = mask
    while m not in out:
        out.add(m)
        m = _rot_mask(m, n, 1) ^ full
    return out


def twisted_orbit_record_of(l: Necklace) -> TwistedOrbitRecord:
    if 2 * l.j != l.size:
        raise ValueError(f"balanced necklace required, got j={l.j} on {l.size} beads")
    orbit = _twisted_orbit_masks(l.size, l.blues)
    canon = Necklace(l.size, min(orbit))
    # Swapping replaces the twisted orbit by that of the one-bead rotation;
    # squares of the generator are plain two-bead rotations, so this is an
    # involution on twisted orbits.
    swap_fixed = _rot_mask(canon.blues, l.size, 1) in orbit
    return TwistedOrbitRecord(canon, len(orbit), swap_fixed)


def enumerate_twisted_orbits(j: int) -> tuple[TwistedOrbitRecord, ...]:
    """All twisted orbits of balanced necklaces with j blues among 2j beads,
    sorted by canonical bitmask."""
    if j < 1:
        raise ValueError(f"positive j required, got {j}")
    n = 2 * j
    _check_enumeration(n)
    return _enumerate_twisted_orbits(j)


@cache
def _enumerate_twisted_orbits(j: int) -> tuple[TwistedOrbitRecord, ...]:
    n = 2 * j
    seen: set[int] = set()
    records = []
    for mask in _iter_masks(n, j):
        if mask in seen:
            continue
        orbit = _twisted_orbit_masks(n, mask)
        seen |= orbit
        canon = Necklace(n, min(orbit))
        swap_fixed = _rot_mask(canon.blues, n, 1) in orbit
        records.append(TwistedOrbitRecord(canon, len(orbit), swap_fixed))
    records.sort(key=lambda r: r.canonical.blues)
    return tuple(records)


def swap_action(rec: TwistedOrbitRecord) -> TwistedOrbitRecord:
    """The twisted orbit of the one-bead rotation of the representative."""
    return twisted_orbit_record_of(rotate(rec.canonical, 1))


def count_even_twisted_orbits(j: int) -> int:
    return sum(1 for rec in enumerate_twisted_orbits(j) if rec.twisted_period % 2 == 0)


def count_even_twisted_swap_fixed(j: int) -> int:
    """Number of even-twisted-period orbits fixed by swapping; its parity
    equals the parity of the full even-twisted-period count."""
    return sum(
        1
        for rec in enumerate_twisted_orbits(j)
        if rec.twisted_period % 2 == 0 and rec.swap_fixed
    )


def orbit_catalog(n: int, j: int, classify: bool = False) -> dict:
    """JSON-ready catalog of the rotation orbits of (n, j) necklaces."""
    records = enumerate_orbits(n, j)
    out = {
        "n": n,
        "j": j,
        "orbits": [
            {
                "canonical": rec.canonical.bitstring(),
                "period": rec.period,
                "flip_fixed": rec.flip_fixed,
                "axes": [{"m": a.m, "type": a.axis_type} for a in rec.axes],
            }
            for rec in records
        ],
    }
    if classify:
        counts = classify_flip_fixed(n, j)
        out["classification"] = {
            "type1_even": counts.type1_even,
            "type2_even": counts.type2_even,
            "odd_fixed": counts.odd_fixed,
        }
    return out
