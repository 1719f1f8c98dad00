"""Sparse multivariate polynomials over exact rationals.

Every polynomial is tagged with a variable context (one of the ring kinds
below) and stores its terms as a map from exponent tuples to nonzero
coefficients.  Coefficients are plain ints while no division has occurred
and ``fractions.Fraction`` afterwards; both compare and hash consistently,
so mixed dicts are safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping


class RingKind(Enum):
    X = "x"            # k[x0..xn]
    U = "u"            # k[x0, u2..un]
    LOCAL_X = "xloc"   # k[x0..xn, x0^-1]
    LAMBDA_U = "ulam"  # k[x0, x0^-1, lam, u2..un], internal mixed presentation
    GEN = "gen"        # k[g1..gm], gj named generator symbols


class ContextMismatchError(ValueError):
    """Operands live in different variable contexts."""


class ZeroPolynomialError(ValueError):
    """The zero polynomial has no degree, weight or normal form."""


class NonIsobaricError(ValueError):
    """Weight requested for a polynomial whose terms have unequal weights."""


@dataclass(frozen=True)
class VarContext:
    """A variable context: ring kind plus whatever names its slots.

    Slot layout by kind (n = binary form degree):
      X / LOCAL_X : slots 0..n hold x0..xn, slot i has weight i
      U           : slot 0 holds x0 (weight 0), slots 1..n-1 hold u2..un
      LAMBDA_U    : slot 0 x0 (may be negative), slot 1 lam, slots 2..n u2..un
      GEN         : slot j holds generators[j] = (name, degree, weight)
    """

    kind: RingKind
    n: int = 0
    generators: tuple = ()

    def __post_init__(self):
        if self.kind is RingKind.GEN:
            if not self.generators:
                raise ValueError("GEN context needs at least one generator")
        elif self.n < 2:
            raise ValueError("form degree must be >= 2")

    @property
    def slot_count(self) -> int:
        if self.kind in (RingKind.X, RingKind.LOCAL_X):
            return self.n + 1
        if self.kind is RingKind.U:
            return self.n
        if self.kind is RingKind.LAMBDA_U:
            return self.n + 1
        return len(self.generators)

    def slot_name(self, i: int) -> str:
        if self.kind in (RingKind.X, RingKind.LOCAL_X):
            return f"x{i}"
        if self.kind is RingKind.U:
            return "x0" if i == 0 else f"u{i + 1}"
        if self.kind is RingKind.LAMBDA_U:
            return "x0" if i == 0 else ("lam" if i == 1 else f"u{i}")
        return self.generators[i][0]

    def slot_degree(self, i: int) -> int:
        """Degree contributed by one power of slot i (1 except for GEN)."""
        if self.kind is RingKind.GEN:
            return self.generators[i][1]
        return 1

    def slot_weight(self, i: int) -> int:
        if self.kind in (RingKind.X, RingKind.LOCAL_X):
            return i
        if self.kind is RingKind.U:
            return 0 if i == 0 else i + 1
        if self.kind is RingKind.LAMBDA_U:
            return 0 if i == 0 else (1 if i == 1 else i)
        return self.generators[i][2]

    def allows_negative(self, i: int) -> bool:
        return i == 0 and self.kind in (RingKind.LOCAL_X, RingKind.LAMBDA_U)

    def names(self) -> tuple:
        return tuple(self.slot_name(i) for i in range(self.slot_count))


def x_ring(n: int) -> VarContext:
    return VarContext(RingKind.X, n)


def u_ring(n: int) -> VarContext:
    return VarContext(RingKind.U, n)


def local_x_ring(n: int) -> VarContext:
    return VarContext(RingKind.LOCAL_X, n)


def lambda_u_ring(n: int) -> VarContext:
    return VarContext(RingKind.LAMBDA_U, n)


def gen_ring(generators: Iterable[tuple]) -> VarContext:
    return VarContext(RingKind.GEN, 0, tuple(generators))


def monomial_key(ctx: VarContext, expts: tuple):
    """Sort key of the canonical monomial order (ascending).

    Graded first (GEN ring grades by the generator degrees), ties broken by
    reading the exponent tuple from the last slot backwards, the larger
    exponent winning.  This is the one total order used everywhere:
    normalization, echelon forms, printing, enumeration.
    """
    if ctx.kind is RingKind.GEN:
        grade = sum(e * g[1] for e, g in zip(expts, ctx.generators))
    else:
        grade = sum(expts)
    return (grade, tuple(reversed(expts)))


class Polynomial:
    """Immutable-by-convention sparse polynomial over a VarContext."""

    __slots__ = ("context", "terms")

    def __init__(self, context: VarContext, terms: Mapping[tuple, object] = ()):
        self.context = context
        clean = {}
        for e, c in dict(terms).items():
            if c:
                clean[e] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ctx: VarContext) -> "Polynomial":
        return cls(ctx, {})

    @classmethod
    def constant(cls, ctx: VarContext, c) -> "Polynomial":
        if not c:
            return cls.zero(ctx)
        return cls(ctx, {(0,) * ctx.slot_count: c})

    @classmethod
    def one(cls, ctx: VarContext) -> "Polynomial":
        return cls.constant(ctx, 1)

    @classmethod
    def monomial(cls, ctx: VarContext, expts: Iterable[int], coeff=1) -> "Polynomial":
        e = tuple(expts)
        if len(e) != ctx.slot_count:
            raise ValueError("exponent tuple length does not match context")
        for i, k in enumerate(e):
            if k < 0 and not ctx.allows_negative(i):
                raise ValueError(f"negative exponent on {ctx.slot_name(i)}")
        if not coeff:
            return cls.zero(ctx)
        return cls(ctx, {e: coeff})

    @classmethod
    def variable(cls, ctx: VarContext, slot: int) -> "Polynomial":
        e = [0] * ctx.slot_count
        e[slot] = 1
        return cls(ctx, {tuple(e): 1})

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.context == other.context and self.terms == other.terms

    __hash__ = None

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.context != other.context:
            raise ContextMismatchError(
                f"{self.context.kind.value} vs {other.context.kind.value}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        p = Polynomial.__new__(Polynomial)
        p.context, p.terms = self.context, out
        return p

    def __neg__(self) -> "Polynomial":
        p = Polynomial.__new__(Polynomial)
        p.context = self.context
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(map(sum, zip(e1, e2)))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        p = Polynomial.__new__(Polynomial)
        p.context, p.terms = self.context, out
        return p

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        if not c:
            return Polynomial.zero(self.context)
        p = Polynomial.__new__(Polynomial)
        p.context = self.context
        p.terms = {e: c * v for e, v in self.terms.items()}
        return p

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.one(self.context)
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return result

    # -- inspection --------------------------------------------------------

    def sorted_terms(self, reverse: bool = True):
        """Terms in canonical order, leading term first by default."""
        ctx = self.context
        return sorted(self.terms.items(),
                      key=lambda t: monomial_key(ctx, t[0]), reverse=reverse)

    def leading_monomial(self) -> tuple:
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no leading monomial")
        ctx = self.context
        return max(self.terms, key=lambda e: monomial_key(ctx, e))

    def coeff(self, expts: tuple):
        return self.terms.get(tuple(expts), 0)

    def __repr__(self) -> str:
        if not self.terms:
            return "<poly 0>"
        parts = []
        for e, c in self.sorted_terms()[:4]:
            parts.append(f"{c}*{e}")
        more = "..." if len(self.terms) > 4 else ""
        return f"<poly {' + '.join(parts)}{more}>"


# -- ring-level operations --------------------------------------------------

def degree(f: Polynomial) -> int:
    """Total degree: maximum graded degree over the terms."""
    if f.is_zero():
        raise ZeroPolynomialError("degree of the zero polynomial is undefined")
    ctx = f.context
    return max(sum(e * ctx.slot_degree(i) for i, e in enumerate(exp))
               for exp in f.terms)


def _common_weight(f: Polynomial) -> int:
    ctx = f.context
    weights = {sum(e * ctx.slot_weight(i) for i, e in enumerate(exp))
               for exp in f.terms}
    if len(weights) != 1:
        raise NonIsobaricError("polynomial is not isobaric")
    return weights.pop()


def weight_u(f: Polynomial) -> int:
    """Common u-weight of an isobaric polynomial in the u-ring."""
    if f.is_zero():
        raise ZeroPolynomialError("weight of the zero polynomial is undefined")
    if f.context.kind is not RingKind.U:
        raise ContextMismatchError("weight_u expects a u-ring polynomial")
    return _common_weight(f)


def weight_x(f: Polynomial) -> int:
    """Common x-weight of an isobaric polynomial in the x-ring."""
    if f.is_zero():
        raise ZeroPolynomialError("weight of the zero polynomial is undefined")
    if f.context.kind not in (RingKind.X, RingKind.LOCAL_X):
        raise ContextMismatchError("weight_x expects an x-ring polynomial")
    return _common_weight(f)


def is_isobaric(f: Polynomial) -> bool:
    if f.is_zero():
        raise ZeroPolynomialError("isobarity of the zero polynomial is undefined")
    try:
        _common_weight(f)
    except NonIsobaricError:
        return False
    return True


def is_isobaric_balanced(f: Polynomial, n: int) -> bool:
    """True iff f is isobaric and n*deg(f) = 2*weight(f).

    The balanced isobaric polynomials form the subring whose intersection
    with the reduced operator's kernel is exactly the invariants.
    """
    if f.is_zero():
        raise ZeroPolynomialError("balance of the zero polynomial is undefined")
    try:
        w = _common_weight(f)
    except NonIsobaricError:
        return False
    return n * degree(f) == 2 * w


def normalize(f: Polynomial) -> Polynomial:
    """Canonical representative of the line through f.

    Scales to integer coefficients of content 1 with a positive coefficient
    on the greatest monomial; idempotent, and invariant under nonzero
    rational rescaling of the input.
    """
    if f.is_zero():
        raise ZeroPolynomialError("cannot normalize the zero polynomial")
    den_lcm = 1
    for c in f.terms.values():
        d = c.denominator if isinstance(c, Fraction) else 1
        den_lcm = den_lcm * d // math.gcd(den_lcm, d)
    num_gcd = 0
    for c in f.terms.values():
        num_gcd = math.gcd(num_gcd, abs(int(c * den_lcm)))
    scale = Fraction(den_lcm, num_gcd)
    out = {e: int(c * scale) for e, c in f.terms.items()}
    lead = max(out, key=lambda e: monomial_key(f.context, e))
    if out[lead] < 0:
        out = {e: -c for e, c in out.items()}
    return Polynomial(f.context, out)


def coeff_vector(f: Polynomial, basis) -> list:
    """Coefficients of f against an ordered monomial basis.

    Raises if a term of f lies outside the basis; absent basis monomials
    read off as 0, so the map is linear in f.
    """
    basis = [tuple(b) for b in basis]
    idx = {e: i for i, e in enumerate(basis)}
    out = [0] * len(basis)
    for e, c in f.terms.items():
        if e not in idx:
            raise ValueError(f"term {e} outside the given basis")
        out[idx[e]] = c
    return out


def substitute(f: Polynomial, images: Mapping[int, Polynomial],
               target: VarContext = None) -> Polynomial:
    """Ring-homomorphic image of f under slot -> polynomial substitution.

    Every slot occurring in f with a nonzero exponent needs an image; all
    images must share one target context.  A negative exponent (localized
    x0) is only substitutable when its image is a single term, which is then
    inverted exactly.
    """
    if target is None:
        for g in images.values():
            target = g.context
            break
        if target is None:
            raise ValueError("no images and no target context given")
    for slot, g in images.items():
        if g.context != target:
            raise ContextMismatchError("substitution images disagree on context")

    power_cache = {}

    def image_power(slot: int, k: int) -> Polynomial:
        key = (slot, k)
        got = power_cache.get(key)
        if got is not None:
            return got
        if slot not in images:
            raise ValueError(
                f"no image for occurring variable {f.context.slot_name(slot)}")
        g = images[slot]
        if k >= 0:
            val = g ** k
        else:
            if len(g.terms) != 1:
                raise ValueError("cannot invert a non-monomial image")
            (e, c), = g.terms.items()
            inv_e = tuple(x * k for x in e)
            for i, x in enumerate(inv_e):
                if x < 0 and not target.allows_negative(i):
                    raise ValueError("inverted image leaves the target ring")
            val = Polynomial(target, {inv_e: Fraction(1) / c ** (-k)})
        power_cache[key] = val
        return val

    total = Polynomial.zero(target)
    for e, c in f.terms.items():
        term = Polynomial.constant(target, c)
        for slot, k in enumerate(e):
            if k:
                term = term * image_power(slot, k)
        total = total + term
    return total
