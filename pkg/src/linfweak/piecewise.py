"""Piecewise-linear functions with exact rational arithmetic.

A function is a finite list of pieces (interval, slope, intercept) whose
intervals partition the domain carrier up to a Lebesgue-null set.  The class
is closed under |.|, pointwise min, linear combinations, products with step
functions and polynomial composition with step functions, and superlevel
sets { |u| > alpha } are exact interval sets.  Functions are identified
almost everywhere; point evaluation uses literal piece membership with a
left-piece fallback at breakpoints that fall in measure-zero gaps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .sets import (Domain, Interval, IntervalSet, POS_INF, SetAlgebraError,
                   _intersect_intervals, is_finite, ivl, rat)


class UnsupportedOperationError(ValueError):
    """The result would leave the piecewise-linear representation class."""


class EvaluationError(ValueError):
    pass


@dataclass(frozen=True)
class Piece:
    interval: Interval
    slope: Fraction
    intercept: Fraction

    def value(self, x: Fraction) -> Fraction:
        return self.slope * x + self.intercept

    def is_null(self) -> bool:
        return self.interval.length() == 0

    def closure_values(self) -> tuple[Fraction, Fraction]:
        """Values at the closure endpoints (pieces with slope are bounded)."""
        if self.slope == 0:
            return (self.intercept, self.intercept)
        a, b = self.interval.lo, self.interval.hi
        va, vb = self.value(a), self.value(b)
        return (min(va, vb), max(va, vb))


def _interior_sample(iv: Interval) -> Fraction:
    """Some rational point strictly inside iv (or the point itself)."""
    if iv.is_point():
        return iv.lo
    if is_finite(iv.lo) and is_finite(iv.hi):
        return (iv.lo + iv.hi) / 2
    if is_finite(iv.lo):
        return iv.lo + 1
    if is_finite(iv.hi):
        return iv.hi - 1
    return Fraction(0)


@dataclass(frozen=True)
class PiecewiseFn:
    domain: Domain
    pieces: tuple[Piece, ...]

    def __post_init__(self):
        ivs = [p.interval for p in self.pieces]
        for i in range(1, len(ivs)):
            prev, cur = ivs[i - 1], ivs[i]
            if cur.lo < prev.hi or (cur.lo == prev.hi and cur.lo_closed and prev.hi_closed):
                raise SetAlgebraError(f"overlapping pieces near {cur.lo}")
        covered = IntervalSet.of(*ivs)
        if not covered.is_subset(self.domain.carrier):
            raise SetAlgebraError("pieces exceed the domain carrier")
        if not self.domain.carrier.difference(covered).is_null():
            raise SetAlgebraError("pieces leave a non-null gap in the carrier")
        for p in self.pieces:
            if p.slope != 0 and not p.interval.is_bounded():
                raise SetAlgebraError("unbounded piece with nonzero slope is unbounded")

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def from_pieces(domain: Domain, triples: Iterable[tuple]) -> "PiecewiseFn":
        pieces = []
        for iv, a, b in triples:
            if iv is None:
                continue
            pieces.append(Piece(iv, rat(a), rat(b)))
        pieces.sort(key=lambda p: (p.interval.lo, not p.interval.lo_closed))
        return PiecewiseFn(domain, tuple(pieces))

    @staticmethod
    def constant(domain: Domain, c) -> "PiecewiseFn":
        c = rat(c)
        return PiecewiseFn(domain, tuple(Piece(p, Fraction(0), c)
                                         for p in domain.carrier.parts))

    @staticmethod
    def indicator(domain: Domain, s: IntervalSet) -> "PiecewiseFn":
        return PiecewiseFn.step(domain, [(s, Fraction(1))])

    @staticmethod
    def step(domain: Domain, levels: Sequence[tuple[IntervalSet, Fraction]],
             default=Fraction(0)) -> "PiecewiseFn":
        """Step function: value v on each set (later levels override), default
        elsewhere on the carrier."""
        default = rat(default)
        carrier = domain.carrier
        remaining = carrier
        triples = []
        for s, v in reversed(levels):
            hit = s.intersect(remaining)
            remaining = remaining.difference(hit)
            for part in hit.parts:
                triples.append((part, Fraction(0), rat(v)))
        for part in remaining.parts:
            triples.append((part, Fraction(0), default))
        return PiecewiseFn.from_pieces(domain, triples)

    # -- basic queries -----------------------------------------------------------

    def is_step(self) -> bool:
        return all(p.slope == 0 for p in self.pieces)

    def eval(self, x) -> Fraction:
        x = rat(x)
        if not self.domain.carrier.contains(x):
            raise EvaluationError(f"{x} is outside the domain {self.domain}")
        for p in self.pieces:
            if p.interval.contains(x):
                return p.value(x)
        # x sits in a null gap between pieces: left-piece convention.
        left = None
        for p in self.pieces:
            if p.interval.hi <= x:
                left = p
        if left is not None:
            return left.value(x)
        for p in self.pieces:
            if p.interval.lo >= x:
                return p.value(x)
        raise EvaluationError(f"no piece near {x}")

    def breakpoints(self) -> list[Fraction]:
        pts = set()
        for p in self.pieces:
            if is_finite(p.interval.lo):
                pts.add(p.interval.lo)
            if is_finite(p.interval.hi):
                pts.add(p.interval.hi)
        return sorted(pts)

    def piece_value_candidates(self) -> set[Fraction]:
        """|values| attained at endpoints of non-null pieces (step levels and
        ramp extremes); these are the thresholds where superlevel sets change."""
        vals = set()
        for p in self.pieces:
            if p.is_null():
                continue
            lo_v, hi_v = p.closure_values()
            vals.add(abs(lo_v))
            vals.add(abs(hi_v))
        return vals

    def ess_sup_norm(self) -> Fraction:
        best = Fraction(0)
        for p in self.pieces:
            if p.is_null():
                continue
            lo_v, hi_v = p.closure_values()
            best = max(best, abs(lo_v), abs(hi_v))
        return best

    # -- combination helpers ---------------------------------------------------

    def _cells_with(self, other: "PiecewiseFn"):
        """Common refinement: yields (interval, (a1,b1), (a2,b2))."""
        for p in self.pieces:
            for q in other.pieces:
                if q.interval.lo > p.interval.hi:
                    break
                cell = _intersect_intervals(p.interval, q.interval)
                if cell is not None:
                    yield cell, (p.slope, p.intercept), (q.slope, q.intercept)

    def _same_domain(self, other: "PiecewiseFn"):
        if self.domain.carrier != other.domain.carrier:
            raise SetAlgebraError("functions live on different domains")

    # -- algebra ------------------------------------------------------------------

    def scale(self, c) -> "PiecewiseFn":
        c = rat(c)
        return PiecewiseFn(self.domain, tuple(
            Piece(p.interval, c * p.slope, c * p.intercept) for p in self.pieces))

    def negate(self) -> "PiecewiseFn":
        return self.scale(-1)

    def add_const(self, c) -> "PiecewiseFn":
        c = rat(c)
        return PiecewiseFn(self.domain, tuple(
            Piece(p.interval, p.slope, p.intercept + c) for p in self.pieces))

    def add(self, other: "PiecewiseFn") -> "PiecewiseFn":
        self._same_domain(other)
        triples = [(cell, a1 + a2, b1 + b2)
                   for cell, (a1, b1), (a2, b2) in self._cells_with(other)]
        return PiecewiseFn.from_pieces(self.domain, triples)

    def sub(self, other: "PiecewiseFn") -> "PiecewiseFn":
        return self.add(other.negate())

    def abs_fn(self) -> "PiecewiseFn":
        triples = []
        for p in self.pieces:
            triples.extend(_abs_piece(p))
        return PiecewiseFn.from_pieces(self.domain, triples)

    def product(self, other: "PiecewiseFn") -> "PiecewiseFn":
        """Pointwise product; one factor must be a step function so the result
        stays piecewise-linear."""
        self._same_domain(other)
        if self.is_step():
            step, lin = self, other
        elif other.is_step():
            step, lin = other, self
        else:
            raise UnsupportedOperationError(
                "product of two non-step piecewise-linear functions leaves the class")
        triples = [(cell, c * a, c * b)
                   for cell, (_, c), (a, b) in step._cells_with(lin)]
        return PiecewiseFn.from_pieces(self.domain, triples)

    def compose_poly(self, coeffs: Sequence) -> "PiecewiseFn":
        """p(u) for a polynomial p given by coefficients [c0, c1, ...];
        u must be a step function."""
        if not self.is_step():
            raise UnsupportedOperationError("polynomial composition needs a step function")
        cs = [rat(c) for c in coeffs]
        triples = []
        for p in self.pieces:
            v = p.intercept
            acc = Fraction(0)
            power = Fraction(1)
            for c in cs:
                acc += c * power
                power *= v
            triples.append((p.interval, Fraction(0), acc))
        return PiecewiseFn.from_pieces(self.domain, triples)

    def translate(self, d) -> "PiecewiseFn":
        """x -> u(x + d); the domain carrier moves by -d."""
        d = rat(d)
        new_domain = Domain(self.domain.carrier.shift(-d))
        pieces = tuple(Piece(p.interval.shift(-d), p.slope, p.intercept + p.slope * d)
                       for p in self.pieces)
        return PiecewiseFn(new_domain, pieces)

    def restrict(self, s: IntervalSet) -> "PiecewiseFn":
        carrier = self.domain.carrier.intersect(s)
        if carrier.is_empty():
            raise SetAlgebraError("restriction to an empty window")
        triples = []
        for p in self.pieces:
            for part in IntervalSet.of(p.interval).intersect(s).parts:
                triples.append((part, p.slope, p.intercept))
        return PiecewiseFn.from_pieces(Domain(carrier), triples)

    # -- level sets -------------------------------------------------------------

    def gt_set(self, c) -> IntervalSet:
        """{ x : u(x) > c }, exact with strict-inequality endpoint flags."""
        c = rat(c)
        parts = []
        for p in self.pieces:
            parts.extend(_linear_gt(p, c))
        return IntervalSet.of(*parts)

    def superlevel(self, alpha) -> IntervalSet:
        """A_alpha(u) = { x : |u(x)| > alpha }, alpha > 0."""
        alpha = rat(alpha)
        if alpha <= 0:
            raise ValueError("superlevel requires alpha > 0")
        parts = []
        for p in self.pieces:
            parts.extend(_linear_gt(p, alpha))
            parts.extend(_linear_lt(p, -alpha))
        return IntervalSet.of(*parts)

    def support(self) -> IntervalSet:
        """{ u != 0 } up to a null set (per-piece; sloped pieces count whole)."""
        parts = []
        for p in self.pieces:
            if p.slope == 0:
                if p.intercept != 0:
                    parts.append(p.interval)
            else:
                parts.extend(_linear_gt(p, Fraction(0)))
                parts.extend(_linear_lt(p, Fraction(0)))
        return IntervalSet.of(*parts)

    def ne_set(self, other: "PiecewiseFn") -> IntervalSet:
        d = self.sub(other)
        return d.gt_set(0).union(d.negate().gt_set(0))

    def ae_equal(self, other: "PiecewiseFn") -> bool:
        return self.ne_set(other).is_null()

    def ae_leq(self, other: "PiecewiseFn") -> bool:
        return self.sub(other).gt_set(0).is_null()

    def __str__(self) -> str:
        bits = ", ".join(f"{p.interval}: {p.slope}*x+{p.intercept}" for p in self.pieces)
        return f"piecewise[{bits}]"


def _abs_piece(p: Piece) -> list[tuple]:
    if p.slope == 0:
        return [(p.interval, Fraction(0), abs(p.intercept))]
    root = -p.intercept / p.slope
    iv = p.interval
    if iv.contains(root) and not iv.is_point():
        left = ivl(iv.lo, root, iv.lo_closed, True)
        right = ivl(root, iv.hi, False, iv.hi_closed)
        out = []
        for piece_iv in (left, right):
            if piece_iv is None:
                continue
            mid = _interior_sample(piece_iv)
            if p.value(mid) >= 0:
                out.append((piece_iv, p.slope, p.intercept))
            else:
                out.append((piece_iv, -p.slope, -p.intercept))
        return out
    mid = _interior_sample(iv)
    if p.value(mid) >= 0:
        return [(iv, p.slope, p.intercept)]
    return [(iv, -p.slope, -p.intercept)]


def _linear_gt(p: Piece, c: Fraction) -> list[Interval]:
    """{x in piece : a x + b > c} as 0..1 interval."""
    iv = p.interval
    if p.slope == 0:
        return [iv] if p.intercept > c else []
    x0 = (c - p.intercept) / p.slope
    if p.slope > 0:
        ray = ivl(x0, POS_INF, False, False)
    else:
        ray = ivl(-POS_INF, x0, False, False)
    if ray is None:
        return []
    got = _intersect_intervals(iv, ray)
    return [got] if got is not None else []


def _linear_lt(p: Piece, c: Fraction) -> list[Interval]:
    return _linear_gt(Piece(p.interval, -p.slope, -p.intercept), -c)


def min_of(fns: Sequence[PiecewiseFn]) -> PiecewiseFn:
    """Exact pointwise minimum; breakpoints appear at crossing abscissae."""
    if not fns:
        raise ValueError("min_of needs at least one function")
    out = fns[0]
    for f in fns[1:]:
        out = _min2(out, f)
    return out


def _min2(u: PiecewiseFn, v: PiecewiseFn) -> PiecewiseFn:
    u._same_domain(v)
    triples = []
    for cell, (a1, b1), (a2, b2) in u._cells_with(v):
        if a1 == a2:
            if b1 <= b2:
                triples.append((cell, a1, b1))
            else:
                triples.append((cell, a2, b2))
            continue
        x0 = (b2 - b1) / (a1 - a2)
        segments = []
        if cell.contains(x0) and not cell.is_point():
            left = ivl(cell.lo, x0, cell.lo_closed, True)
            right = ivl(x0, cell.hi, False, cell.hi_closed)
            segments = [s for s in (left, right) if s is not None]
        else:
            segments = [cell]
        for seg in segments:
            mid = _interior_sample(seg)
            if a1 * mid + b1 <= a2 * mid + b2:
                triples.append((seg, a1, b1))
            else:
                triples.append((seg, a2, b2))
    return PiecewiseFn.from_pieces(u.domain, triples)


def linear_combo(coeffs: Sequence, fns: Sequence[PiecewiseFn]) -> PiecewiseFn:
    """sum c_i * f_i on a common domain."""
    if len(coeffs) != len(fns) or not fns:
        raise ValueError("need matching, non-empty coefficient and function lists")
    out = fns[0].scale(coeffs[0])
    for c, f in zip(coeffs[1:], fns[1:]):
        out = out.add(f.scale(c))
    return out
