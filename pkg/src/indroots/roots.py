"""Certified real-root isolation with Sturm chains and exact rational bisection."""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction

from .engine import indpoly
from .graph import Graph
from .poly import Poly, count_roots, poly_gcd, sign_at, squarefree_part, sturm_chain

DISPLAY_WIDTH = Fraction(1, 10**12)


class InvariantError(RuntimeError):
    """A mathematical guarantee failed to hold; indicates a bug."""


@dataclass(frozen=True)
class IsolatingInterval:
    """Exactly one real root of the squarefree ``poly`` lies in ``(lo, hi]``."""

    poly: Poly
    lo: Fraction
    hi: Fraction
    chain: tuple[Poly, ...] = field(default=(), repr=False, compare=False)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def is_exact(self) -> bool:
        """True when ``hi`` is the root itself."""
        return sign_at(self.poly, self.hi) == 0

    def value(self) -> Fraction:
        """Rational root if exact, else the midpoint."""
        return self.hi if self.is_exact() else (self.lo + self.hi) / 2

    def contains(self, q) -> bool:
        return self.lo < q <= self.hi

    def to_json(self) -> dict:
        from .poly import format_poly

        return {"poly": format_poly(self.poly), "lo": str(self.lo), "hi": str(self.hi)}

    def decimal_enclosure(self, digits: int = 12) -> tuple[Decimal, Decimal]:
        """Closed decimal interval with ``digits`` places that contains the root.

        The interval is first refined to width ``10^-(digits+2)`` so the result
        spans at most two grid steps.
        """
        iv = refine(self, Fraction(1, 10 ** (digits + 2))) if self.width > Fraction(1, 10 ** (digits + 2)) else self
        with localcontext() as ctx:
            ctx.prec = digits + 30
            lo = Decimal(iv.lo.numerator) / Decimal(iv.lo.denominator)
            hi = Decimal(iv.hi.numerator) / Decimal(iv.hi.denominator)
            q = Decimal(1).scaleb(-digits)
            return lo.quantize(q, rounding="ROUND_FLOOR"), hi.quantize(q, rounding="ROUND_CEILING")

    def render(self, digits: int = 12) -> str:
        """``lo..hi`` in fixed-point decimals, or the exact rational root."""
        if self.is_exact():
            return f"{self.hi} (exact rational)"
        lo, hi = self.decimal_enclosure(digits)
        return f"{lo}..{hi}"


def _chain(iv: IsolatingInterval) -> tuple[Poly, ...]:
    return iv.chain or tuple(sturm_chain(iv.poly))


def _normalise(P: Poly, chain, lo: Fraction, hi: Fraction) -> IsolatingInterval:
    """Move ``lo`` inward until it is not itself a root."""
    step = (hi - lo) / 2
    while sign_at(P, lo) == 0:
        cand = hi - step if sign_at(P, hi) == 0 else lo + step
        if sign_at(P, cand) != 0 and count_roots(chain, cand, hi) == 1:
            lo = cand
        step /= 2
    return IsolatingInterval(P, lo, hi, tuple(chain))


def isolate_roots(P: Poly, a, b) -> list[IsolatingInterval]:
    """One isolating interval per distinct real root of ``P`` in ``(a, b]``, increasing."""
    if P.is_zero():
        from .poly import PolyError

        raise PolyError("cannot isolate roots of the zero polynomial")
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError("need a < b")
    S = squarefree_part(P)
    if S.degree <= 0:
        return []
    chain = sturm_chain(S)
    out: list[IsolatingInterval] = []
    stack = [(a, b, count_roots(chain, a, b))]
    while stack:
        lo, hi, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            out.append(_normalise(S, chain, lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi, count_roots(chain, mid, hi)))
        stack.append((lo, mid, count_roots(chain, lo, mid)))
    out.sort(key=lambda iv: iv.hi)
    return out


def largest_root(P: Poly, a, b) -> IsolatingInterval | None:
    """Isolating interval of the largest real root of ``P`` in ``(a, b]``."""
    S = squarefree_part(P)
    if S.degree <= 0:
        return None
    chain = sturm_chain(S)
    lo, hi = Fraction(a), Fraction(b)
    k = count_roots(chain, lo, hi)
    if k == 0:
        return None
    while k > 1:
        mid = (lo + hi) / 2
        right = count_roots(chain, mid, hi)
        if right:
            lo, k = mid, right
        else:
            hi = mid
            k = count_roots(chain, lo, hi)
    return _normalise(S, chain, lo, hi)


def refine(iv: IsolatingInterval, width) -> IsolatingInterval:
    """Bisect until ``hi - lo <= width``; the bracketed root never changes."""
    width = Fraction(width)
    P = iv.poly
    lo, hi = iv.lo, iv.hi
    s_hi = sign_at(P, hi)
    if s_hi == 0:
        return IsolatingInterval(P, max(lo, hi - width), hi, iv.chain) if hi - lo > width else iv
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = sign_at(P, mid)
        if s == 0:
            lo, hi = max(lo, mid - width), mid
            break
        if s == s_hi:
            hi = mid
        else:
            lo = mid
    return _normalise(P, _chain(iv), lo, hi) if sign_at(P, lo) == 0 else IsolatingInterval(P, lo, hi, iv.chain)


def sign_at_root(Q: Poly, root: IsolatingInterval) -> int:
    """Exact sign of ``Q`` at the algebraic number bracketed by ``root``."""
    if Q.is_zero():
        return 0
    if Q.degree == 0:
        return 1 if Q.lc > 0 else -1
    if root.is_exact():
        return sign_at(Q, root.hi)
    g = poly_gcd(Q, root.poly)
    if g.degree > 0 and count_roots(sturm_chain(squarefree_part(g)), root.lo, root.hi) >= 1:
        return 0
    qchain = sturm_chain(squarefree_part(Q))
    iv = root
    while count_roots(qchain, iv.lo, iv.hi) != 0:
        iv = refine(iv, iv.width / 2)
        if iv.is_exact():
            return sign_at(Q, iv.hi)
    return sign_at(Q, iv.hi)


def compare_roots(a: IsolatingInterval, b: IsolatingInterval) -> tuple[int, IsolatingInterval, IsolatingInterval]:
    """Order two algebraic numbers: returns (-1|0|1, refined a, refined b)."""
    if a.is_exact() and b.is_exact():
        return ((a.hi > b.hi) - (a.hi < b.hi), a, b)
    g = poly_gcd(a.poly, b.poly)
    if g.degree > 0:
        lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
        if lo < hi:
            gs = squarefree_part(g)
            if count_roots(sturm_chain(gs), lo, hi) >= 1:
                return 0, a, b
    while not (a.hi < b.lo or b.hi < a.lo):
        if a.hi == b.lo or b.hi == a.lo:
            # touching endpoints: the shared point belongs to the left interval only
            if a.hi == b.lo:
                return -1, a, b
            return 1, a, b
        if a.width >= b.width:
            a = refine(a, a.width / 2)
        else:
            b = refine(b, b.width / 2)
    return (-1 if a.hi < b.lo else 1), a, b


def _divisors(m: int, limit: int = 10**6) -> list[int] | None:
    m = abs(m)
    if m == 0 or m > limit:
        return None
    return [d for d in range(1, m + 1) if m % d == 0]


def snap_rational(iv: IsolatingInterval) -> IsolatingInterval:
    """Return an exact interval if the bracketed root is a rational ``p/q``.

    Rational roots satisfy ``p | a_0`` and ``q | lc``; on a narrow interval only a
    handful of denominators are possible for each ``p``, so the search is tiny.
    """
    if iv.is_exact():
        return iv
    P = iv.poly
    k = P.low_order()
    ps = _divisors(P[k])
    if ps is None or iv.width > Fraction(1, 2):
        return iv
    lc = abs(P.lc)
    for p in ps:
        for sgn in (-1, 1):
            # p / q in (lo, hi] with q > 0 and sign sgn
            a, b = sorted((abs(iv.lo), abs(iv.hi)))
            if (iv.lo < 0) != (sgn < 0) and iv.lo != 0:
                continue
            q_lo = int(p / b) if b else 1
            q_hi = int(p / a) + 1 if a else q_lo + 1
            if q_hi - q_lo > 64:
                continue
            for q in range(max(q_lo, 1), q_hi + 1):
                if lc % q:
                    continue
                r = Fraction(sgn * p, q)
                if iv.contains(r) and sign_at(P, r) == 0:
                    lo = max(iv.lo, r - iv.width)
                    return IsolatingInterval(P, lo, r, iv.chain)
    return iv


def xi(G: Graph) -> IsolatingInterval:
    """Largest real root of ``I(G, x)``, refined to the display width, inside ``[-1, 0)``."""
    if G.n < 1:
        raise ValueError("xi needs a graph with at least one vertex")
    P = indpoly(G)
    iv = largest_root(P, -2, 0)
    if iv is None:
        raise InvariantError(f"no real independence root found in (-2, 0) for {G!r}")
    iv = snap_rational(refine(iv, DISPLAY_WIDTH))
    if iv.lo < -1 and not (iv.is_exact() and iv.hi == -1):
        chain = _chain(iv)
        if count_roots(chain, -1, iv.hi) != 1:
            raise InvariantError(f"largest independence root of {G!r} lies below -1")
        iv = _normalise(iv.poly, chain, Fraction(-1), iv.hi)
    return iv
