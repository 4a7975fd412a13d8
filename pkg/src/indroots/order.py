"""Exact decision of the relation ``H <= G``: ``I(H,x) >= I(G,x)`` on ``[xi(G), 0]``."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .engine import indpoly
from .graph import Graph, render_graph6
from .poly import Poly, count_roots, sign_at, squarefree_part, sturm_chain
from .roots import (
    InvariantError,
    IsolatingInterval,
    compare_roots,
    isolate_roots,
    refine,
    sign_at_root,
    xi,
)


class RelationKind(str, enum.Enum):
    EQUIVALENT = "equivalent"
    FIRST_STRICTLY_LESS = "first_strictly_less"
    SECOND_STRICTLY_LESS = "second_strictly_less"
    INCOMPARABLE = "incomparable"


@dataclass
class Decision:
    """Outcome of one ``H <= G`` test with the evidence that settled it."""

    holds: bool
    reason: str
    samples: list[tuple[Fraction, int]] = field(default_factory=list)


@dataclass
class Relation:
    kind: RelationKind
    witnesses: list[Fraction] = field(default_factory=list)
    transcript: dict = field(default_factory=dict)
    xi_left: IsolatingInterval | None = None
    xi_right: IsolatingInterval | None = None

    def to_json(self, left: str = "", right: str = "") -> dict:
        return {
            "left": left,
            "right": right,
            "relation": self.kind.value,
            "witnesses": [str(w) for w in self.witnesses],
            "xi_left": self.xi_left.to_json() if self.xi_left else None,
            "xi_right": self.xi_right.to_json() if self.xi_right else None,
        }


def _strict_gap(a: IsolatingInterval, b: IsolatingInterval) -> Fraction:
    """A rational strictly between the roots of ``a`` < ``b`` (already ordered)."""
    while not a.hi < b.lo:
        if a.is_exact() or b.width >= a.width:
            b = refine(b, b.width / 2)
        else:
            a = refine(a, a.width / 2)
    return (a.hi + b.lo) / 2


def _gap_points(Dp: Poly, left: IsolatingInterval) -> tuple[list[Fraction], IsolatingInterval]:
    """One rational inside each maximal root-free gap of ``Dp`` in ``(root, 0)``."""
    kept = []
    for r in isolate_roots(Dp, left.lo, 0):
        rel, r, left = compare_roots(r, left)
        if rel > 0:
            kept.append(r)
    start = left
    points = []
    # gaps: (root, r1), (r1, r2), ..., (rm, 0)
    for r in kept:
        points.append(_strict_gap(left, r))
        left = r
    while left.hi >= 0:
        left = refine(left, left.width / 2)
    points.append(left.hi / 2)
    return points, start


def decide_polys(PH: Poly, PG: Poly, xg: IsolatingInterval | None = None) -> Decision:
    """Is ``PH >= PG`` on ``[xi, 0]`` where ``xi`` is the largest real root of ``PG``?"""
    D = PH - PG
    if D.is_zero():
        return Decision(True, "identical polynomials")
    k = D.low_order()
    if (1 if D[k] > 0 else -1) * (-1) ** k < 0:
        return Decision(False, f"negative just left of 0 (lowest term degree {k})")
    if xg is None:
        from .roots import largest_root

        xg = largest_root(PG, -2, 0)
        if xg is None:
            raise InvariantError("no real root found for the right-hand polynomial")
    s_xi = sign_at_root(PH, xg)
    if s_xi < 0:
        return Decision(False, "negative at xi(G)", [])
    points, xg = _gap_points(Poly(D.coeffs[k:]), xg)
    samples = [(p, sign_at(D, p)) for p in points]
    if any(s < 0 for _, s in samples):
        return Decision(False, "negative on a root-free gap", samples)
    return Decision(True, "nonnegative on every gap", samples)


def is_preceq(H: Graph, G: Graph) -> bool:
    """``H <= G``: ``I(H, x) >= I(G, x)`` for all ``x`` in ``[xi(G), 0]``."""
    return decide(H, G).holds


def decide(H: Graph, G: Graph) -> Decision:
    if H.n < 1 or G.n < 1:
        raise ValueError("the relation is defined for nonempty graphs")
    PH, PG = indpoly(H), indpoly(G)
    if PH == PG:
        return Decision(True, "identical polynomials")
    return decide_polys(PH, PG, xi(G))


def is_equivalent(H: Graph, G: Graph) -> bool:
    return indpoly(H) == indpoly(G)


def _at_or_above_root(chain, p: Fraction) -> bool:
    """``p >= xi`` for the largest root ``xi`` of the chain's polynomial (p < 0)."""
    return count_roots(chain, p, 0) == 0


def _witnesses(D: Poly, points, chains) -> tuple[Fraction | None, Fraction | None]:
    """First points where ``D < 0`` and ``D > 0``, both at or above every chain's largest root."""
    neg = pos = None
    for p in points:
        s = sign_at(D, p)
        if s == 0 or (neg is not None and s < 0) or (pos is not None and s > 0):
            continue
        if all(_at_or_above_root(c, p) for c in chains):
            if s < 0:
                neg = p
            else:
                pos = p
        if neg is not None and pos is not None:
            break
    return neg, pos


# tenths first so the classic -1/10, -1/5 pair is reported when it applies
CANDIDATES = [Fraction(-k, 10) for k in range(1, 10)] + [Fraction(-k, 64) for k in range(1, 64)]


def compare(H: Graph, G: Graph) -> Relation:
    """Classify the pair as equivalent, strictly ordered, or incomparable."""
    PH, PG = indpoly(H), indpoly(G)
    xh, xg = xi(H), xi(G)
    if PH == PG:
        return Relation(RelationKind.EQUIVALENT, transcript={"reason": "identical polynomials"}, xi_left=xh, xi_right=xg)
    h_le = decide_polys(PH, PG, xg)
    g_le = decide_polys(PG, PH, xh)
    transcript = {
        "left_le_right": {"holds": h_le.holds, "reason": h_le.reason, "samples": h_le.samples},
        "right_le_left": {"holds": g_le.holds, "reason": g_le.reason, "samples": g_le.samples},
    }
    if h_le.holds and g_le.holds:
        raise InvariantError("antisymmetry violated for distinct polynomials")
    if h_le.holds:
        return Relation(RelationKind.FIRST_STRICTLY_LESS, transcript=transcript, xi_left=xh, xi_right=xg)
    if g_le.holds:
        return Relation(RelationKind.SECOND_STRICTLY_LESS, transcript=transcript, xi_left=xh, xi_right=xg)
    D = PH - PG
    chains = [sturm_chain(squarefree_part(PG)), sturm_chain(squarefree_part(PH))]
    neg, pos = _witnesses(D, CANDIDATES, chains)
    if neg is None or pos is None:
        # fall back to one exact sample per sign-constant gap above both roots
        top = xh if compare_roots(xh, xg)[0] >= 0 else xg
        gaps, _ = _gap_points(Poly(D.coeffs[D.low_order():]), top)
        n2, p2 = _witnesses(D, gaps, chains)
        neg = neg if neg is not None else n2
        pos = pos if pos is not None else p2
    if neg is None or pos is None:
        raise InvariantError("incomparable pair without rational witnesses")
    return Relation(RelationKind.INCOMPARABLE, [neg, pos], transcript, xh, xg)


def relation_report(H: Graph, G: Graph, left: str | None = None, right: str | None = None) -> dict:
    rel = compare(H, G)
    return rel.to_json(left or render_graph6(H), right or render_graph6(G))
