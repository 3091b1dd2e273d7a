"""Exact interval-set algebra on subsets of the real line.

An :class:`IntervalSet` is a finite union of pairwise disjoint, non-adjacent
intervals with rational (or infinite) endpoints and exact open/closed flags.
This class of sets is closed under union, intersection, difference and
complement, and Lebesgue measure on it is exact rational arithmetic.  It is
the carrier for every set-level computation in this package: superlevel sets,
neighborhood bases, filter bases, compact/open test families.

Endpoints are ``fractions.Fraction`` values; the two infinities are the
floats ``math.inf`` / ``-math.inf`` (which compare correctly against
``Fraction``).  Measure is a ``Fraction``, or ``math.inf`` for unbounded
sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Rat = Fraction
Endpoint = Union[Fraction, float]  # float is only ever +-math.inf

NEG_INF = -math.inf
POS_INF = math.inf


def rat(x) -> Fraction:
    """Coerce ints, strings like ``"3/4"`` and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError(f"refusing to coerce float {x!r}; pass a Fraction or string")
    return Fraction(x)


def is_finite(e: Endpoint) -> bool:
    return isinstance(e, Fraction) or (isinstance(e, int) and not isinstance(e, bool))


def _as_endpoint(x) -> Endpoint:
    if isinstance(x, float):
        if math.isinf(x):
            return x
        raise TypeError(f"endpoint must be rational or infinite, got float {x!r}")
    return rat(x)


class SetAlgebraError(ValueError):
    """Raised on violated preconditions of set operations."""


@dataclass(frozen=True)
class Interval:
    """One interval with exact endpoint flags.  Never empty.

    Invariants: lo <= hi; infinite endpoints are open; lo == hi forces both
    flags closed (a degenerate point).
    """

    lo: Endpoint
    hi: Endpoint
    lo_closed: bool
    hi_closed: bool

    def __post_init__(self):
        if not is_finite(self.lo) and self.lo != NEG_INF:
            raise SetAlgebraError(f"bad lower endpoint {self.lo!r}")
        if not is_finite(self.hi) and self.hi != POS_INF:
            raise SetAlgebraError(f"bad upper endpoint {self.hi!r}")
        if self.lo > self.hi:
            raise SetAlgebraError(f"empty interval: lo={self.lo} > hi={self.hi}")
        if self.lo == self.hi:
            if not (self.lo_closed and self.hi_closed):
                raise SetAlgebraError("degenerate interval must be closed; empty "
                                      "intervals are normalized away")
        if not is_finite(self.lo) and self.lo_closed:
            raise SetAlgebraError("-inf endpoint cannot be closed")
        if not is_finite(self.hi) and self.hi_closed:
            raise SetAlgebraError("+inf endpoint cannot be closed")

    # -- queries ------------------------------------------------------------

    def is_point(self) -> bool:
        return self.lo == self.hi

    def is_bounded(self) -> bool:
        return is_finite(self.lo) and is_finite(self.hi)

    def length(self) -> Union[Fraction, float]:
        if not self.is_bounded():
            return POS_INF
        return self.hi - self.lo

    def contains(self, x: Fraction) -> bool:
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    # -- derived intervals ----------------------------------------------------

    def closure(self) -> "Interval":
        return Interval(self.lo, self.hi,
                        is_finite(self.lo), is_finite(self.hi))

    def interior(self) -> "Interval | None":
        if self.lo == self.hi:
            return None
        return Interval(self.lo, self.hi, False, False)

    def shift(self, d: Fraction) -> "Interval":
        lo = self.lo + d if is_finite(self.lo) else self.lo
        hi = self.hi + d if is_finite(self.hi) else self.hi
        return Interval(lo, hi, self.lo_closed, self.hi_closed)

    def __str__(self) -> str:
        if self.is_point():
            return "{%s}" % (self.lo,)
        lo = "-inf" if not is_finite(self.lo) else str(self.lo)
        hi = "inf" if not is_finite(self.hi) else str(self.hi)
        return "%s%s,%s%s" % ("[" if self.lo_closed else "(", lo, hi,
                              "]" if self.hi_closed else ")")


def ivl(lo, hi, lo_closed=True, hi_closed=False) -> "Interval | None":
    """Build an interval, returning None when it would be empty."""
    lo = _as_endpoint(lo)
    hi = _as_endpoint(hi)
    if not is_finite(lo):
        lo_closed = False
    if not is_finite(hi):
        hi_closed = False
    if lo > hi:
        return None
    if lo == hi and not (lo_closed and hi_closed):
        return None
    return Interval(lo, hi, lo_closed, hi_closed)


def closed(a, b):
    return ivl(a, b, True, True)


def opened(a, b):
    return ivl(a, b, False, False)


def ico(a, b):
    """Half-open [a, b)."""
    return ivl(a, b, True, False)


def ioc(a, b):
    """Half-open (a, b]."""
    return ivl(a, b, False, True)


def point(a):
    return ivl(a, a, True, True)


def _intersect_intervals(a: Interval, b: Interval) -> "Interval | None":
    lo, lo_closed = (a.lo, a.lo_closed) if a.lo > b.lo else (b.lo, b.lo_closed)
    if a.lo == b.lo:
        lo, lo_closed = a.lo, a.lo_closed and b.lo_closed
    hi, hi_closed = (a.hi, a.hi_closed) if a.hi < b.hi else (b.hi, b.hi_closed)
    if a.hi == b.hi:
        hi, hi_closed = a.hi, a.hi_closed and b.hi_closed
    if lo > hi:
        return None
    if lo == hi and not (lo_closed and hi_closed):
        return None
    return Interval(lo, hi, lo_closed, hi_closed)


def _subtract_intervals(a: Interval, b: Interval) -> list[Interval]:
    """a minus b, as 0..2 intervals."""
    mid = _intersect_intervals(a, b)
    if mid is None:
        return [a]
    out = []
    left = ivl(a.lo, mid.lo, a.lo_closed, not mid.lo_closed) \
        if (a.lo < mid.lo or (a.lo == mid.lo and a.lo_closed and not mid.lo_closed)) else None
    right = ivl(mid.hi, a.hi, not mid.hi_closed, a.hi_closed) \
        if (mid.hi < a.hi or (mid.hi == a.hi and a.hi_closed and not mid.hi_closed)) else None
    if left is not None:
        out.append(left)
    if right is not None:
        out.append(right)
    return out


def _mergeable(cur: Interval, nxt: Interval) -> bool:
    if nxt.lo < cur.hi:
        return True
    if nxt.lo == cur.hi and (cur.hi_closed or nxt.lo_closed):
        return True
    return False


def _normalize(parts: Iterable[Interval]) -> tuple[Interval, ...]:
    items = sorted(parts, key=lambda p: (p.lo, not p.lo_closed))
    out: list[Interval] = []
    for p in items:
        if not out:
            out.append(p)
            continue
        cur = out[-1]
        if _mergeable(cur, p):
            if p.hi > cur.hi:
                hi, hi_closed = p.hi, p.hi_closed
            elif p.hi == cur.hi:
                hi, hi_closed = cur.hi, cur.hi_closed or p.hi_closed
            else:
                hi, hi_closed = cur.hi, cur.hi_closed
            out[-1] = Interval(cur.lo, hi, cur.lo_closed, hi_closed)
        else:
            out.append(p)
    return tuple(out)


@dataclass(frozen=True)
class IntervalSet:
    """Finite union of disjoint, non-adjacent intervals, sorted by lo.

    Construct through :meth:`of`; the raw constructor assumes parts are
    already normalized.
    """

    parts: tuple[Interval, ...] = ()

    @staticmethod
    def of(*parts) -> "IntervalSet":
        """Normalize any iterable mix of Interval / None / IntervalSet."""
        collected: list[Interval] = []
        for p in parts:
            if p is None:
                continue
            if isinstance(p, IntervalSet):
                collected.extend(p.parts)
            elif isinstance(p, Interval):
                collected.append(p)
            else:
                raise TypeError(f"not an interval: {p!r}")
        return IntervalSet(_normalize(collected))

    @staticmethod
    def empty() -> "IntervalSet":
        return IntervalSet(())

    @staticmethod
    def real_line() -> "IntervalSet":
        return IntervalSet((Interval(NEG_INF, POS_INF, False, False),))

    # -- predicates -----------------------------------------------------------

    def is_empty(self) -> bool:
        return not self.parts

    def is_bounded(self) -> bool:
        return all(p.is_bounded() for p in self.parts)

    def is_open(self) -> bool:
        """Open as a subset of the real line."""
        return all(not p.lo_closed and not p.hi_closed for p in self.parts)

    def is_closed(self) -> bool:
        """Closed as a subset of the real line (infinite ends qualify)."""
        return all((not is_finite(p.lo) or p.lo_closed) and
                   (not is_finite(p.hi) or p.hi_closed) for p in self.parts)

    def is_compact(self) -> bool:
        return self.is_bounded() and self.is_closed()

    def contains(self, x) -> bool:
        x = rat(x)
        return any(p.contains(x) for p in self.parts)

    def is_subset(self, other: "IntervalSet") -> bool:
        return self.difference(other).is_empty()

    def subset_up_to_null(self, other: "IntervalSet") -> bool:
        return self.difference(other).is_null()

    def is_null(self) -> bool:
        return self.measure() == 0

    # -- measure --------------------------------------------------------------

    def measure(self) -> Union[Fraction, float]:
        total = Fraction(0)
        for p in self.parts:
            ln = p.length()
            if ln == POS_INF:
                return POS_INF
            total += ln
        return total

    # -- boolean algebra --------------------------------------------------------

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(_normalize(self.parts + other.parts))

    def intersect(self, other: "IntervalSet") -> "IntervalSet":
        out = []
        for a in self.parts:
            for b in other.parts:
                if b.lo > a.hi:
                    break
                got = _intersect_intervals(a, b)
                if got is not None:
                    out.append(got)
        return IntervalSet(_normalize(out))

    def difference(self, other: "IntervalSet") -> "IntervalSet":
        remaining = list(self.parts)
        for b in other.parts:
            nxt: list[Interval] = []
            for a in remaining:
                nxt.extend(_subtract_intervals(a, b))
            remaining = nxt
        return IntervalSet(_normalize(remaining))

    # -- topology ----------------------------------------------------------------

    def closure(self) -> "IntervalSet":
        return IntervalSet(_normalize(p.closure() for p in self.parts))

    def interior(self) -> "IntervalSet":
        return IntervalSet(_normalize(p.interior() for p in self.parts
                                      if p.interior() is not None))

    def hull(self) -> "Interval | None":
        if not self.parts:
            return None
        lo, hi = self.parts[0], self.parts[-1]
        return Interval(lo.lo, hi.hi, lo.lo_closed, hi.hi_closed)

    # -- geometry -------------------------------------------------------------------

    def shift(self, d) -> "IntervalSet":
        d = rat(d)
        return IntervalSet(tuple(p.shift(d) for p in self.parts))

    def fatten(self, eps) -> "IntervalSet":
        """Open eps-neighborhood of the set."""
        eps = rat(eps)
        if eps <= 0:
            raise SetAlgebraError("fatten needs eps > 0")
        out = []
        for p in self.parts:
            lo = p.lo - eps if is_finite(p.lo) else p.lo
            hi = p.hi + eps if is_finite(p.hi) else p.hi
            out.append(ivl(lo, hi, False, False))
        return IntervalSet.of(*out)

    def inset(self, eps) -> "IntervalSet":
        """Closed shrink: each bounded part [lo+eps, hi-eps]; unbounded sides stay."""
        eps = rat(eps)
        if eps <= 0:
            raise SetAlgebraError("inset needs eps > 0")
        out = []
        for p in self.parts:
            lo = p.lo + eps if is_finite(p.lo) else p.lo
            hi = p.hi - eps if is_finite(p.hi) else p.hi
            out.append(ivl(lo, hi, is_finite(lo), is_finite(hi)))
        return IntervalSet.of(*out)

    def endpoints(self) -> list[Fraction]:
        """All finite endpoints, ascending."""
        vals = set()
        for p in self.parts:
            if is_finite(p.lo):
                vals.add(p.lo)
            if is_finite(p.hi):
                vals.add(p.hi)
        return sorted(vals)

    def __str__(self) -> str:
        if not self.parts:
            return "empty"
        return " u ".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class Domain:
    """A measure space (X, Lebesgue): X is a non-empty interval set."""

    carrier: IntervalSet

    def __post_init__(self):
        if self.carrier.is_empty():
            raise SetAlgebraError("domain carrier must be non-empty")

    @staticmethod
    def open_interval(a, b) -> "Domain":
        return Domain(IntervalSet.of(opened(a, b)))

    @staticmethod
    def closed_interval(a, b) -> "Domain":
        return Domain(IntervalSet.of(closed(a, b)))

    @staticmethod
    def real_line() -> "Domain":
        return Domain(IntervalSet.real_line())

    def measure(self) -> Union[Fraction, float]:
        return self.carrier.measure()

    def __str__(self) -> str:
        return str(self.carrier)


# -- spec-level operation names -----------------------------------------------


def union(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    return a.union(b)


def intersect(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    return a.intersect(b)


def complement(a: IntervalSet, within: Domain) -> IntervalSet:
    if not a.is_subset(within.carrier):
        raise SetAlgebraError(f"{a} is not a subset of the domain {within}")
    return within.carrier.difference(a)


def measure(a: IntervalSet) -> Union[Fraction, float]:
    return a.measure()


def is_compact_subset(k: IntervalSet, g: IntervalSet) -> bool:
    """True iff k is compact (bounded, all-closed) and k lies in interior(g)."""
    if k.is_empty():
        return True
    return k.is_compact() and k.is_subset(g.interior())
