"""Univariate polynomials with arbitrary-precision integer coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import comb, gcd
from typing import Iterable, Sequence

Rational = Fraction


class PolyError(ValueError):
    pass


class Poly:
    """Integer polynomial; ``coeffs[k]`` is the coefficient of ``x**k``.

    The zero polynomial has an empty coefficient tuple and degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c: int) -> Poly:
        return cls((c,))

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_poly(self)

    # ring operations ----------------------------------------------------

    @staticmethod
    def _lift(other) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other) -> Poly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> Poly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise PolyError("negative exponent")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> Poly:
        """Multiply by ``x**k``."""
        return Poly((0,) * k + self.coeffs) if self.coeffs else Poly()

    # evaluation ---------------------------------------------------------

    def __call__(self, q):
        return eval_rational(self, q)

    def low_order(self) -> int:
        """Exponent of the lowest nonzero term (``-1`` for zero)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def primitive(self) -> Poly:
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return Poly([x // c for x in self.coeffs])


def poly_pow_binomial(a: int, b: int, n: int) -> Poly:
    """``(a + b x)**n`` via binomial coefficients."""
    return Poly([comb(n, k) * a ** (n - k) * b ** k for k in range(n + 1)])


ONE_PLUS_X = Poly((1, 1))


def eval_rational(P: Poly, q) -> Fraction:
    """Exact value ``P(q)`` at a rational point (Horner on numerator/denominator)."""
    q = Fraction(q)
    num, den = q.numerator, q.denominator
    d = P.degree
    if d < 0:
        return Fraction(0)
    acc = 0
    for k in range(d, -1, -1):
        acc = acc * num + P.coeffs[k] * den ** (d - k)
    return Fraction(acc, den ** d)


def sign_at(P: Poly, q) -> int:
    """Sign of ``P(q)`` without building the reduced fraction."""
    q = Fraction(q)
    num, den = q.numerator, q.denominator
    d = P.degree
    if d < 0:
        return 0
    acc = 0
    for k in range(d, -1, -1):
        acc = acc * num + P.coeffs[k] * den ** (d - k)
    return (acc > 0) - (acc < 0)


def corona_transform(P: Poly, n: int) -> Poly:
    """``(1+x)**n * P(x/(1+x))`` computed as ``sum c_k x^k (1+x)^(n-k)``."""
    if n < P.degree:
        raise PolyError(f"order {n} is smaller than the degree {P.degree}")
    out = Poly()
    for k, c in enumerate(P.coeffs):
        if c:
            out = out + (c * poly_pow_binomial(1, 1, n - k)).shift(k)
    return out


def derivative(P: Poly) -> Poly:
    return Poly([k * c for k, c in enumerate(P.coeffs)][1:])


# division -------------------------------------------------------------


def pseudo_remainder(A: Poly, B: Poly) -> Poly:
    """Remainder of ``|lc(B)|**(deg A - deg B + 1) * A`` divided by ``B``.

    The positive multiplier keeps the sign pattern of the true remainder.
    """
    if B.is_zero():
        raise PolyError("division by zero polynomial")
    r = list(A.coeffs)
    db = B.degree
    lb = B.lc
    if len(r) - 1 < db:
        return A
    delta = len(r) - 1 - db + 1
    steps = 0
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for i, b in enumerate(B.coeffs):
            r[shift + i] -= lr * b
        steps += 1
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    # bring the multiplier up to lb**delta
    extra = delta - steps
    if extra:
        r = [c * lb ** extra for c in r]
    if lb < 0 and delta % 2:
        r = [-c for c in r]
    return Poly(r)


def divmod_rational(A: Poly, B: Poly) -> tuple[list[Fraction], list[Fraction]]:
    """Quotient and remainder over the rationals, as coefficient lists."""
    if B.is_zero():
        raise PolyError("division by zero polynomial")
    r = [Fraction(c) for c in A.coeffs]
    db = B.degree
    q = [Fraction(0)] * max(len(r) - db, 0)
    while r and len(r) - 1 >= db:
        coef = r[-1] / B.lc
        shift = len(r) - 1 - db
        q[shift] = coef
        for i, b in enumerate(B.coeffs):
            r[shift + i] -= coef * b
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return q, r


def from_rational(coeffs: Sequence[Fraction]) -> Poly:
    """Primitive integer polynomial proportional to a rational one."""
    if not any(coeffs):
        return Poly()
    den = reduce(lambda a, b: a * b // gcd(a, b), (Fraction(c).denominator for c in coeffs), 1)
    return Poly([int(Fraction(c) * den) for c in coeffs]).primitive()


def exact_quotient(A: Poly, B: Poly) -> Poly:
    """Primitive part of ``A / B``; raises unless ``B`` divides ``A`` over Q."""
    q, r = divmod_rational(A, B)
    if r:
        raise PolyError("polynomial division is not exact")
    return from_rational(q)


def poly_gcd(P: Poly, Q: Poly) -> Poly:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    a, b = P.primitive(), Q.primitive()
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = pseudo_remainder(a, b)
        a, b = b, r.primitive()
    return a.primitive()


def squarefree_part(P: Poly) -> Poly:
    if P.is_zero():
        raise PolyError("zero polynomial has no squarefree part")
    g = poly_gcd(P, derivative(P))
    return exact_quotient(P, g) if g.degree > 0 else P.primitive()


def squarefree_decomposition(P: Poly) -> list[tuple[Poly, int]]:
    """Pairwise coprime primitive factors with multiplicities, by repeated gcds.

    ``prod(f**k)`` equals ``P`` up to a constant factor.  Constant factors are
    omitted.  Only gcds and exact divisions are used, so the primitive
    normalisation of intermediate results cannot disturb the multiplicities.
    """
    if P.is_zero():
        raise PolyError("zero polynomial")
    out: list[tuple[Poly, int]] = []
    if P.degree <= 0:
        return out
    a = poly_gcd(P, derivative(P))
    w = exact_quotient(P, a)
    k = 1
    while w.degree > 0:
        y = poly_gcd(w, a)
        z = exact_quotient(w, y)
        if z.degree > 0:
            out.append((z, k))
        w = y
        a = exact_quotient(a, y)
        k += 1
    return out


def sturm_chain(P: Poly) -> list[Poly]:
    """Sturm sequence ``P, P', -rem, ...`` with content removed at each step."""
    if P.is_zero():
        raise PolyError("Sturm chain of the zero polynomial")
    chain = [P, derivative(P)]
    if chain[1].is_zero():
        return [P]
    while True:
        r = pseudo_remainder(chain[-2], chain[-1])
        if r.is_zero():
            break
        r = -r
        c = r.content()
        chain.append(Poly([x // c for x in r.coeffs]))
        if chain[-1].degree == 0:
            break
    return chain


def sign_variations(chain: Sequence[Poly], q) -> int:
    signs = [s for s in (sign_at(p, q) for p in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(chain: Sequence[Poly], a, b) -> int:
    """Distinct real roots in ``(a, b]`` for a Sturm chain of a squarefree poly."""
    return sign_variations(chain, a) - sign_variations(chain, b)


# text format ----------------------------------------------------------


def format_poly(P: Poly) -> str:
    """Ascending sparse text such as ``1 + 10x + 36x^2`` or ``1 - x^3``."""
    terms = [(k, c) for k, c in enumerate(P.coeffs) if c]
    if not terms:
        return "0"
    parts = []
    for i, (k, c) in enumerate(terms):
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = "x" if k == 1 else f"x^{k}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(\*?\s*x(?:\s*\^\s*(\d+))?)?\s*$")


def parse_poly(text: str) -> Poly:
    """Inverse of :func:`format_poly`; also accepts ``c*x^k`` and any term order."""
    s = text.strip()
    if not s:
        raise PolyError("empty polynomial text")
    if s == "0":
        return Poly()
    pieces = re.split(r"(?<=[\dx])\s*(?=[+-])", s)
    coeffs: dict[int, int] = {}
    for piece in pieces:
        m = _TERM.fullmatch(piece.strip())
        if not m or (not m.group(2) and not m.group(3)):
            raise PolyError(f"cannot parse term {piece!r}")
        sign = -1 if m.group(1) == "-" else 1
        mag = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            k = int(m.group(4)) if m.group(4) else 1
        else:
            k = 0
        coeffs[k] = coeffs.get(k, 0) + sign * mag
    top = max(coeffs)
    return Poly([coeffs.get(k, 0) for k in range(top + 1)])
