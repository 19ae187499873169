"""The hyperfinite time line and its Loeb and Lebesgue measures.

The time line is the grid {i/N : 0 <= i <= N} for an unlimited germ N
(default w).  An internal set is a normalized disjoint union of
germ-endpoint intervals inside [0,1], intersected with the grid.  The
counting measure of such a set is carried as a pair of exact germ
bounds that differ by an infinitesimal; its shadow is the Loeb value,
and on rational-endpoint sets the Loeb value is the Lebesgue measure.

Sigma-additivity is exercised through generated families with
certificates: exact partial values plus an exact limit, obtained either
from the shadow of a symbolic width (endpoints rational in the family
index) or from an exactly verified geometric difference pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import germ as G
from .errors import (
    EngineError,
    LimitUndecidableError,
    ModeViolationError,
    NotDisjointError,
    OutOfAlgebraError,
)
from .germ import Germ
from .hull import is_natural_germ

_ZERO = Germ.constant(0)
_ONE = Germ.constant(1)


@dataclass(frozen=True)
class TimeLine:
    size: Germ = G.OMEGA

    def __post_init__(self):
        if not is_natural_germ(self.size) or G.is_limited(self.size):
            raise EngineError("grid size must be an unlimited natural germ")


DEFAULT_TIMELINE = TimeLine()


@dataclass(frozen=True)
class Piece:
    lo: Germ
    hi: Germ
    lo_closed: bool = True
    hi_closed: bool = True

    def is_empty(self) -> bool:
        c = G.compare(self.lo, self.hi)
        return c > 0 or (c == 0 and not (self.lo_closed and self.hi_closed))

    def width(self) -> Germ:
        return self.hi - self.lo


def _sort_key(piece):
    return (piece.lo, not piece.lo_closed)


def _mergeable(a: Piece, b: Piece) -> bool:
    # b starts at or before the end of a (sorted by lo)
    c = G.compare(b.lo, a.hi)
    return c < 0 or (c == 0 and (a.hi_closed or b.lo_closed))


def _merge(a: Piece, b: Piece) -> Piece:
    if G.compare(a.hi, b.hi) > 0:
        hi, hc = a.hi, a.hi_closed
    elif G.compare(a.hi, b.hi) < 0:
        hi, hc = b.hi, b.hi_closed
    else:
        hi, hc = a.hi, a.hi_closed or b.hi_closed
    lo_closed = a.lo_closed or (b.lo_closed and G.compare(a.lo, b.lo) == 0)
    return Piece(a.lo, hi, lo_closed, hc)


class InternalSet:
    """A normalized disjoint union of germ-endpoint intervals in [0,1]."""

    __slots__ = ("timeline", "pieces")

    def __init__(self, pieces, timeline: TimeLine = DEFAULT_TIMELINE):
        kept = []
        for p in pieces:
            if not isinstance(p, Piece):
                p = Piece(*p)
            if p.is_empty():
                continue
            if G.compare(p.lo, _ZERO) < 0 or G.compare(p.hi, _ONE) > 0:
                raise EngineError(f"piece {p} leaves [0,1]")
            kept.append(p)
        kept.sort(key=_sort_key)
        merged = []
        for p in kept:
            if merged and _mergeable(merged[-1], p):
                merged[-1] = _merge(merged[-1], p)
            else:
                merged.append(p)
        self.pieces = tuple(merged)
        self.timeline = timeline

    def __eq__(self, other):
        if not isinstance(other, InternalSet):
            return NotImplemented
        return self.timeline == other.timeline and self.pieces == other.pieces

    def __hash__(self):
        return hash((self.timeline, self.pieces))

    def __str__(self):
        if not self.pieces:
            return "(empty)"
        parts = []
        for p in self.pieces:
            left = "[" if p.lo_closed else "("
            right = "]" if p.hi_closed else ")"
            parts.append(f"{left}{p.lo},{p.hi}{right}")
        return " | ".join(parts)

    def is_empty(self) -> bool:
        return not self.pieces

    # -- set algebra (linear sweeps over sorted pieces) ----------------

    def union(self, other: "InternalSet") -> "InternalSet":
        self._check(other)
        return InternalSet(self.pieces + other.pieces, self.timeline)

    def intersect(self, other: "InternalSet") -> "InternalSet":
        self._check(other)
        out = []
        i = j = 0
        a, b = self.pieces, other.pieces
        while i < len(a) and j < len(b):
            p, q = a[i], b[j]
            c = G.compare(p.lo, q.lo)
            if c > 0 or (c == 0 and not p.lo_closed):
                lo, lc = p.lo, p.lo_closed
            elif c < 0 or (c == 0 and not q.lo_closed):
                lo, lc = q.lo, q.lo_closed
            else:
                lo, lc = p.lo, p.lo_closed and q.lo_closed
            c = G.compare(p.hi, q.hi)
            if c < 0 or (c == 0 and not p.hi_closed):
                hi, hc = p.hi, p.hi_closed
            elif c > 0 or (c == 0 and not q.hi_closed):
                hi, hc = q.hi, q.hi_closed
            else:
                hi, hc = p.hi, p.hi_closed and q.hi_closed
            cand = Piece(lo, hi, lc, hc)
            if not cand.is_empty():
                out.append(cand)
            if G.compare(p.hi, q.hi) <= 0:
                i += 1
            else:
                j += 1
        return InternalSet(out, self.timeline)

    def complement(self) -> "InternalSet":
        """The complement within [0,1]."""
        out = []
        cursor, cursor_closed = _ZERO, True
        for p in self.pieces:
            gap = Piece(cursor, p.lo, cursor_closed, not p.lo_closed)
            if not gap.is_empty():
                out.append(gap)
            cursor, cursor_closed = p.hi, not p.hi_closed
        tail = Piece(cursor, _ONE, cursor_closed, True)
        if not tail.is_empty():
            out.append(tail)
        return InternalSet(out, self.timeline)

    def difference(self, other: "InternalSet") -> "InternalSet":
        return self.intersect(other.complement())

    def subset_of(self, other: "InternalSet") -> bool:
        return self.difference(other).is_empty()

    def is_disjoint_from(self, other: "InternalSet") -> bool:
        return self.intersect(other).is_empty()

    def _check(self, other):
        if self.timeline != other.timeline:
            raise EngineError("sets live on different time lines")


@dataclass(frozen=True)
class MeasureValue:
    loeb: Fraction
    lower: Germ
    upper: Germ


def counting_measure(x: InternalSet) -> MeasureValue:
    """Exact germ bounds on |X|/|T| whose shadows agree, plus that
    common shadow as the Loeb value."""
    n = x.timeline.size
    width = _ZERO
    for p in x.pieces:
        width = width + p.width()
    slack = Germ.constant(len(x.pieces))
    lower = (width * n - slack) / (n + 1)
    upper = (width * n + slack) / (n + 1)
    return MeasureValue(loeb_measure(x), lower, upper)


def loeb_measure(x: InternalSet) -> Fraction:
    """Sum of shadow widths of the normalized pieces, clamped to [0,1]."""
    total = Fraction(0)
    for p in x.pieces:
        lo, hi = G.shadow(p.lo), G.shadow(p.hi)
        total += hi - lo
    return max(Fraction(0), min(Fraction(1), total))


@dataclass(frozen=True)
class AdditivityReport:
    left: Fraction
    right: Fraction
    total: Fraction
    additive: bool


def finite_additivity_check(x1: InternalSet, x2: InternalSet) -> AdditivityReport:
    if not x1.is_disjoint_from(x2):
        raise NotDisjointError("sets overlap; additivity needs disjoint sets")
    left, right = loeb_measure(x1), loeb_measure(x2)
    total = loeb_measure(x1.union(x2))
    return AdditivityReport(left, right, total, left + right == total)


# -- the standard interval algebra on [0,1] ------------------------------


def internal_set_from_ast(node, timeline: TimeLine = DEFAULT_TIMELINE) -> InternalSet:
    from . import exprlang as E

    if isinstance(node, E.Interval):
        lo, hi = E.to_germ(node.lo), E.to_germ(node.hi)
        return InternalSet([Piece(lo, hi, node.lo_closed, node.hi_closed)], timeline)
    if isinstance(node, E.Singleton):
        c = E.to_germ(node.value)
        return InternalSet([Piece(c, c, True, True)], timeline)
    if isinstance(node, E.OrP):
        return internal_set_from_ast(node.left, timeline).union(
            internal_set_from_ast(node.right, timeline)
        )
    if isinstance(node, E.AndP):
        return internal_set_from_ast(node.left, timeline).intersect(
            internal_set_from_ast(node.right, timeline)
        )
    if isinstance(node, E.NotP):
        return internal_set_from_ast(node.child, timeline).complement()
    raise OutOfAlgebraError("expected intervals, singletons and set operations")


def parse_internal_set(text: str, timeline: TimeLine = DEFAULT_TIMELINE) -> InternalSet:
    from . import exprlang as E

    return internal_set_from_ast(E.parse(text, "set"), timeline)


def _all_rational(node) -> bool:
    from . import exprlang as E

    if isinstance(node, (E.Interval, E.Singleton)):
        children = (
            (node.lo, node.hi) if isinstance(node, E.Interval) else (node.value,)
        )
        return all(E.to_germ(c).is_constant() for c in children)
    if isinstance(node, E.OrP) or isinstance(node, E.AndP):
        return _all_rational(node.left) and _all_rational(node.right)
    if isinstance(node, E.NotP):
        return _all_rational(node.child)
    return False


def lebesgue(expr) -> Fraction:
    """The exact Lebesgue measure of a finite union of rational-endpoint
    intervals and singletons inside [0,1], evaluated through the
    counting measure on the hyperfinite grid."""
    from . import exprlang as E

    node = E.parse(expr, "set") if isinstance(expr, str) else expr
    if not _all_rational(node):
        raise OutOfAlgebraError("Lebesgue evaluation needs rational endpoints")
    return loeb_measure(internal_set_from_ast(node))


# -- sigma families -------------------------------------------------------


@dataclass(frozen=True)
class PieceSchema:
    """Interval template with endpoints given as germs in k."""

    lo: Germ
    hi: Germ
    lo_closed: bool = True
    hi_closed: bool = True


@dataclass(frozen=True)
class SigmaFamily:
    mode: str  # "increasing" | "decreasing" | "disjoint"
    schema: Optional[tuple] = None  # tuple of PieceSchema
    generator: Optional[Callable[[int], InternalSet]] = None
    start: int = 1
    timeline: TimeLine = DEFAULT_TIMELINE

    def __post_init__(self):
        if self.mode not in ("increasing", "decreasing", "disjoint"):
            raise ValueError(f"unknown sigma mode {self.mode!r}")
        if (self.schema is None) == (self.generator is None):
            raise ValueError("provide exactly one of schema or generator")

    def at(self, k: int) -> InternalSet:
        if self.generator is not None:
            return self.generator(k)
        pieces = [
            Piece(
                Germ.constant(s.lo.evaluate(k)),
                Germ.constant(s.hi.evaluate(k)),
                s.lo_closed,
                s.hi_closed,
            )
            for s in self.schema
        ]
        return InternalSet(pieces, self.timeline)


@dataclass(frozen=True)
class SigmaCertificate:
    mode: str
    values: tuple  # ((k, Fraction), ...): measures, or partial sums when disjoint
    limit: Fraction
    materialized_to: int
    derivation: str


def _check_mode(family: SigmaFamily, sets: list, start: int):
    if family.mode == "increasing":
        for i in range(len(sets) - 1):
            if not sets[i].subset_of(sets[i + 1]):
                raise ModeViolationError(f"set at k={start + i} is not below its successor")
    elif family.mode == "decreasing":
        for i in range(len(sets) - 1):
            if not sets[i + 1].subset_of(sets[i]):
                raise ModeViolationError(f"set at k={start + i + 1} is not inside its predecessor")
    else:
        for i in range(len(sets)):
            for j in range(i + 1, len(sets)):
                if not sets[i].is_disjoint_from(sets[j]):
                    raise ModeViolationError(
                        f"sets at k={start + i} and k={start + j} overlap"
                    )


def _geometric_extension(values, depth, start):
    """Detect an exactly geometric difference pattern; return
    (limit, extended values) or None."""
    diffs = [values[i + 1] - values[i] for i in range(len(values) - 1)]
    if not diffs:
        return None
    if all(d == 0 for d in diffs):
        const = values[-1]
        full = list(values) + [const] * (depth + 1 - len(values))
        return const, full, "eventually-constant values"
    if any(d == 0 for d in diffs) or len(diffs) < 3:
        return None
    ratio = diffs[1] / diffs[0]
    if abs(ratio) >= 1:
        return None
    for i in range(len(diffs) - 1):
        if diffs[i + 1] != diffs[i] * ratio:
            return None
    limit = values[0] + diffs[0] / (1 - ratio)
    full = list(values)
    d = diffs[-1] * ratio
    while len(full) < depth + 1:
        full.append(full[-1] + d)
        d *= ratio
    return limit, full, f"geometric differences with ratio {ratio}"


def sigma_limit(
    family: SigmaFamily, depth: int, piece_budget: int = 20000
) -> SigmaCertificate:
    """Exact partial values and the exact limit of a sigma family.

    Monotone modes report the member measures; the disjoint mode
    reports partial sums.  Values are computed directly while the
    materialized sets stay within the piece budget; past that point a
    difference pattern verified exactly on the whole prefix (constant
    or geometric) extends the certificate, since e.g. halving
    constructions square their piece count at every step.
    """
    start = family.start
    sets, spent = [], 0
    for k in range(start, start + depth + 1):
        s = family.at(k)
        spent += max(len(s.pieces), 1)
        if sets and spent > piece_budget:
            break
        sets.append(s)
    _check_mode(family, sets, start)
    measures = [loeb_measure(s) for s in sets]
    if family.mode == "disjoint":
        values = []
        acc = Fraction(0)
        for m in measures:
            acc += m
            values.append(acc)
    else:
        values = measures
    materialized_to = start + len(values) - 1

    limit = None
    derivation = ""
    if family.mode != "disjoint" and family.schema is not None:
        width = _ZERO
        for s in family.schema:
            width = width + (s.hi - s.lo)
        if all(
            width.evaluate(start + i) == values[i] for i in range(len(values))
        ):
            sh = G.shadow(width)
            if not isinstance(sh, G.InfiniteShadow):
                limit = max(Fraction(0), min(Fraction(1), sh))
                derivation = "shadow of the symbolic width in the family index"

    full_values = values
    if limit is None:
        ext = _geometric_extension(values, depth, start)
        if ext is None:
            raise LimitUndecidableError(
                "no exact closed form found for the value sequence"
            )
        limit, full_values, derivation = ext
    elif len(full_values) < depth + 1:
        full_values = list(values) + [
            loeb_measure(family.at(k))
            for k in range(materialized_to + 1, start + depth + 1)
        ]

    pairs = tuple((start + i, v) for i, v in enumerate(full_values))
    return SigmaCertificate(family.mode, pairs, limit, materialized_to, derivation)


# -- stock families --------------------------------------------------------


def dyadic_family(timeline: TimeLine = DEFAULT_TIMELINE) -> SigmaFamily:
    """The disjoint family (2^-(k+1), 2^-k] for k >= 0; partial sums
    1 - 2^-(k+1) with limit 1."""

    def gen(k: int) -> InternalSet:
        lo = Fraction(1, 2 ** (k + 1))
        hi = Fraction(1, 2 ** k)
        return InternalSet(
            [Piece(Germ.constant(lo), Germ.constant(hi), False, True)], timeline
        )

    return SigmaFamily("disjoint", generator=gen, start=0, timeline=timeline)


def cantor_family(timeline: TimeLine = DEFAULT_TIMELINE) -> SigmaFamily:
    """Middle-thirds construction as a decreasing family: step k keeps
    2^k closed pieces of total measure (2/3)^k."""

    def step(k: int):
        spans = [(Fraction(0), Fraction(1))]
        for _ in range(k):
            nxt = []
            for lo, hi in spans:
                third = (hi - lo) / 3
                nxt.append((lo, lo + third))
                nxt.append((hi - third, hi))
            spans = nxt
        return spans

    def gen(k: int) -> InternalSet:
        return InternalSet(
            [
                Piece(Germ.constant(lo), Germ.constant(hi), True, True)
                for lo, hi in step(k)
            ],
            timeline,
        )

    return SigmaFamily("decreasing", generator=gen, start=0, timeline=timeline)


def interval_family(
    lo_expr: str,
    hi_expr: str,
    mode: str,
    lo_closed: bool = True,
    hi_closed: bool = True,
    start: int = 1,
    timeline: TimeLine = DEFAULT_TIMELINE,
) -> SigmaFamily:
    """A single-interval symbolic family with endpoints in k."""
    schema = (
        PieceSchema(
            G.parse_germ_in_k(lo_expr), G.parse_germ_in_k(hi_expr), lo_closed, hi_closed
        ),
    )
    return SigmaFamily(mode, schema=schema, start=start, timeline=timeline)


def parse_sigma_file(text: str):
    """Plain-text sigma schema: ``mode:``, optional ``start:`` and
    ``depth:``, and one ``piece: [lo, hi]`` line per interval, with
    endpoints rational in k."""
    from . import exprlang as E

    mode = None
    start = 1
    depth = None
    schemas = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise EngineError(f"bad sigma schema line: {line!r}")
        key, _, value = line.partition(":")
        key, value = key.strip(), value.strip()
        if key == "mode":
            if value not in ("increasing", "decreasing", "disjoint"):
                raise EngineError(f"unknown mode {value!r}")
            mode = value
        elif key == "start":
            start = int(value)
        elif key == "depth":
            depth = int(value)
        elif key == "piece":
            node = E.parse(value, "kset")
            if not isinstance(node, E.Interval):
                raise EngineError("piece lines must be single intervals")
            schemas.append(
                PieceSchema(
                    E.to_germ(node.lo, var="k"),
                    E.to_germ(node.hi, var="k"),
                    node.lo_closed,
                    node.hi_closed,
                )
            )
        else:
            raise EngineError(f"unknown sigma schema key {key!r}")
    if mode is None or not schemas:
        raise EngineError("sigma schema needs a mode and at least one piece")
    return SigmaFamily(mode, schema=tuple(schemas), start=start), depth
