"""Derivations of the coefficient rings and the coordinate changes.

The two sl2 derivations act on k[x0..xn]; after passing to the coordinates
x0, u2..un (kernel generators of the lowering derivation) the whole system
collapses to a single first-order operator.  This module builds all of
these derivations, the coordinate-change maps in both directions, and the
collapsed binomial coefficient sums they rest on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .rings import (
    ContextMismatchError,
    Polynomial,
    RingKind,
    VarContext,
    lambda_u_ring,
    local_x_ring,
    u_ring,
    x_ring,
)


class ResidualDenominatorError(ValueError):
    """A u-polynomial failed to clear x0 from its denominator in the x-ring."""


# -- context embeddings ----------------------------------------------------

def _embeds(src: VarContext, dst: VarContext) -> bool:
    if src == dst:
        return True
    if src.kind is RingKind.X and dst.kind is RingKind.LOCAL_X:
        return src.n == dst.n
    if src.kind is RingKind.U and dst.kind is RingKind.LAMBDA_U:
        return src.n == dst.n
    return False


def embed(f: Polynomial, dst: VarContext) -> Polynomial:
    """Reinterpret f inside a larger compatible context."""
    src = f.context
    if src == dst:
        return f
    if not _embeds(src, dst):
        raise ContextMismatchError(
            f"cannot embed {src.kind.value} into {dst.kind.value}")
    if src.kind is RingKind.X:
        return Polynomial(dst, f.terms)
    # u-ring into the mixed ring: slot 1 becomes the lambda slot
    terms = {(e[0], 0) + e[1:]: c for e, c in f.terms.items()}
    return Polynomial(dst, terms)


@dataclass(frozen=True)
class Derivation:
    """A derivation given by its images on the slot variables."""

    context: VarContext
    images: tuple

    def __post_init__(self):
        if len(self.images) != self.context.slot_count:
            raise ValueError("need exactly one image per variable slot")

    def __call__(self, f: Polynomial) -> Polynomial:
        return apply_derivation(self, f)


def apply_derivation(d: Derivation, f: Polynomial) -> Polynomial:
    """Leibniz-rule action: sum over slots of (df/dslot) * image(slot)."""
    if _embeds(f.context, d.context):
        ctx = d.context
        f = embed(f, ctx)
        images = d.images
    elif _embeds(d.context, f.context):
        ctx = f.context
        images = tuple(embed(g, ctx) for g in d.images)
    else:
        raise ContextMismatchError("derivation and argument contexts disagree")
    total = Polynomial.zero(ctx)
    for e, c in f.terms.items():
        for slot, k in enumerate(e):
            if not k or images[slot].is_zero():
                continue
            lowered = list(e)
            lowered[slot] = k - 1
            part = Polynomial.monomial(ctx, lowered, c * k) * images[slot]
            total = total + part
    return total


# -- the sl2 derivations ---------------------------------------------------

def lowering_derivation(n: int) -> Derivation:
    """x0 -> 0, xi -> i*x(i-1): lowers the x-weight by one."""
    ctx = x_ring(n)
    images = [Polynomial.zero(ctx)]
    for i in range(1, n + 1):
        images.append(Polynomial.variable(ctx, i - 1).scale(i))
    return Derivation(ctx, tuple(images))


def raising_derivation(n: int) -> Derivation:
    """xi -> (n-i)*x(i+1), xn -> 0: raises the x-weight by one."""
    ctx = x_ring(n)
    images = []
    for i in range(n):
        images.append(Polynomial.variable(ctx, i + 1).scale(n - i))
    images.append(Polynomial.zero(ctx))
    return Derivation(ctx, tuple(images))


def u_lowering_derivation(n: int) -> Derivation:
    """u2 -> 0, ui -> i*u(i-1), x0 -> 0 on the u-ring."""
    ctx = u_ring(n)
    images = [Polynomial.zero(ctx), Polynomial.zero(ctx)]
    for i in range(3, n + 1):
        images.append(Polynomial.variable(ctx, i - 2).scale(i))
    return Derivation(ctx, tuple(images))


def u_raising_derivation(n: int) -> Derivation:
    """ui -> (n-i)*u(i+1) with u(n+1) = 0, x0 -> 0 on the u-ring."""
    ctx = u_ring(n)
    images = [Polynomial.zero(ctx)]
    for i in range(2, n + 1):
        if i < n:
            images.append(Polynomial.variable(ctx, i).scale(n - i))
        else:
            images.append(Polynomial.zero(ctx))
    return Derivation(ctx, tuple(images))


def grading_derivation(n: int) -> Derivation:
    """ui -> (n-2i)*ui, x0 -> n*x0: the degree/weight grading operator.

    Defined by its eigenvalues; every monomial is an eigenvector with
    eigenvalue n*deg - 2*weight, so the balanced polynomials are exactly
    its kernel.
    """
    ctx = u_ring(n)
    images = [Polynomial.variable(ctx, 0).scale(n)]
    for i in range(2, n + 1):
        images.append(Polynomial.variable(ctx, i - 1).scale(n - 2 * i))
    return Derivation(ctx, tuple(images))


def reduced_operator(n: int) -> Derivation:
    """The single operator x0*raise_u - (n-1)*u2*lower_u on the u-ring.

    Its kernel, intersected with the balanced isobaric polynomials, is the
    invariant ring; on an isobaric (degree d, weight w) polynomial the image
    is isobaric of (degree d+1, weight w+1) or zero.
    """
    ctx = u_ring(n)
    x0 = Polynomial.variable(ctx, 0)
    u2 = Polynomial.variable(ctx, 1)
    up, down = u_raising_derivation(n), u_lowering_derivation(n)
    images = tuple(x0 * up.images[s] - u2.scale(n - 1) * down.images[s]
                   for s in range(ctx.slot_count))
    return Derivation(ctx, images)


def full_operator(n: int) -> Derivation:
    """The reduction operator on the mixed (x0, lam, u) presentation.

    Carries the lambda bookkeeping explicitly; on a weight-balanced
    u-polynomial (no lambda), its value coincides with reduced_operator's,
    so annihilation there certifies invariance without leaving the mixed
    ring.
    """
    ctx = lambda_u_ring(n)
    x0 = Polynomial.variable(ctx, 0)
    lam = Polynomial.variable(ctx, 1)
    u2 = Polynomial.variable(ctx, 2)

    def u(i):
        return Polynomial.variable(ctx, i)

    images = [(x0 * x0 * lam).scale(-n),
              x0 * lam * lam - u2.scale(n - 1)]
    for i in range(2, n + 1):
        img = (x0 * u(i)).scale(-(n - 2 * i)) * lam
        if i < n:
            img = img + (x0 * u(i + 1)).scale(n - i)
        if i >= 3:
            img = img - (u2 * u(i - 1)).scale(i * (n - 1))
        images.append(img)
    return Derivation(ctx, tuple(images))


# -- coordinate changes ----------------------------------------------------

def _lambda_in_x(n: int) -> Polynomial:
    # lam = -x1/x0 inside the localized x-ring
    ctx = local_x_ring(n)
    e = [0] * ctx.slot_count
    e[0], e[1] = -1, 1
    return Polynomial.monomial(ctx, e, -1)


def kernel_projection(f: Polynomial, n: int) -> Polynomial:
    """Project k[X] onto the lowering derivation's kernel.

    sum over i of lower^i(f) * lam^i / i!, a finite sum because the lowering
    derivation is locally nilpotent; the image is annihilated by it.
    """
    ctx = local_x_ring(n)
    lam = _lambda_in_x(n)
    down = lowering_derivation(n)
    total = embed(f, ctx)
    cur = f
    lam_power = Polynomial.one(ctx)
    i = 0
    while True:
        cur = apply_derivation(down, cur)
        if cur.is_zero():
            return total
        i += 1
        lam_power = lam_power * lam
        total = total + embed(cur, ctx) * lam_power.scale(Fraction(1, math.factorial(i)))


def u_variable_in_x(i: int, n: int) -> Polynomial:
    """The coordinate ui written in the localized x-ring."""
    if not 2 <= i <= n:
        raise ValueError("u-index out of range")
    ctx = local_x_ring(n)
    lam = _lambda_in_x(n)
    total = Polynomial.zero(ctx)
    lam_power = Polynomial.one(ctx)
    for k in range(i + 1):
        xvar = embed(Polynomial.variable(x_ring(n), i - k), ctx)
        total = total + xvar.scale(math.comb(i, k)) * lam_power
        lam_power = lam_power * lam
    return total


def x_variable_in_u(i: int, n: int) -> Polynomial:
    """The coordinate xi written in the mixed (x0, lam, u) presentation."""
    if not 2 <= i <= n:
        raise ValueError("x-index out of range")
    ctx = lambda_u_ring(n)
    lam = Polynomial.variable(ctx, 1)
    total = Polynomial.zero(ctx)
    lam_power = Polynomial.one(ctx)
    for k in range(i - 1):
        u = Polynomial.variable(ctx, i - k)
        total = total + u.scale((-1) ** k * math.comb(i, k)) * lam_power
        lam_power = lam_power * lam
    lam_power = lam_power * lam
    x0 = Polynomial.variable(ctx, 0)
    return total + x0.scale((-1) ** i) * lam_power


def project_x_to_u(f: Polynomial) -> Polynomial:
    """Multiplicative projection x0 -> x0, x1 -> 0, xi -> ui.

    Acts as the identity on polynomials that already lie in the u-subring,
    so it recovers the u-form of an invariant from its x-form.
    """
    n = f.context.n
    ctx = u_ring(n)
    out = {}
    for e, c in f.terms.items():
        if e[1]:
            continue
        key = (e[0],) + e[2:]
        s = out.get(key, 0) + c
        if s:
            out[key] = s
        elif key in out:
            del out[key]
    return Polynomial(ctx, out)


def expand_u_to_x(f: Polynomial, n: int) -> Polynomial:
    """Expand a u-polynomial into the x-ring through the closed forms.

    Raises ResidualDenominatorError if a negative x0 exponent survives the
    cancellation, i.e. the input was not a polynomial in the xi.
    """
    if f.context != u_ring(n):
        raise ContextMismatchError("expected a u-ring polynomial")
    ctx = local_x_ring(n)
    images = {0: embed(Polynomial.variable(x_ring(n), 0), ctx)}
    for slot in range(1, n):
        images[slot] = u_variable_in_x(slot + 1, n)
    from .rings import substitute
    result = substitute(f, images, ctx)
    for e in result.terms:
        if e[0] < 0:
            raise ResidualDenominatorError(
                f"x0^{e[0]} survives; input is not polynomial in the x-ring")
    return Polynomial(x_ring(n), result.terms)


# -- closed forms of the raising action in u-coordinates --------------------

def raising_action_on_lambda(n: int) -> Polynomial:
    """Image of lam under the raising derivation, in the mixed ring."""
    ctx = lambda_u_ring(n)
    lam = Polynomial.variable(ctx, 1)
    u2_over_x0 = Polynomial.monomial(ctx, (-1, 0, 1) + (0,) * (n - 2), n - 1)
    return lam * lam - u2_over_x0


def raising_action_on_u(i: int, n: int) -> Polynomial:
    """Image of ui under the raising derivation, in the mixed ring.

    (n-i)*u(i+1) - (n-2i)*ui*lam for i = 2, with the additional correction
    -i*(n-1)*u2*u(i-1)/x0 once i exceeds 2; u(n+1) is identically zero.
    """
    if not 2 <= i <= n:
        raise ValueError("u-index out of range")
    ctx = lambda_u_ring(n)
    lam = Polynomial.variable(ctx, 1)
    total = Polynomial.zero(ctx)
    if i < n:
        total = total + Polynomial.variable(ctx, i + 1).scale(n - i)
    total = total - Polynomial.variable(ctx, i).scale(n - 2 * i) * lam
    if i > 2:
        e = [0] * ctx.slot_count
        e[0] = -1
        e[2] += 1
        e[i - 1] += 1
        total = total - Polynomial.monomial(ctx, e, i * (n - 1))
    return total


# -- collapsed binomial coefficient sums ------------------------------------

def raising_x0_coefficient_direct(i: int, n: int) -> int:
    return sum((-1) ** (i - k + 1) * (n - (i - k)) * math.comb(i, k)
               for k in range(i - 1))


def raising_x0_coefficient(i: int, n: int) -> int:
    """Collapsed x0*lam^(i+1) coefficient; closed form n + i - n*i."""
    if i <= 1:
        raise ValueError("defined for i > 1")
    closed = n + i - n * i
    direct = raising_x0_coefficient_direct(i, n)
    if closed != direct:
        raise AssertionError("coefficient sum disagrees with its closed form")
    return closed


def raising_u_coefficient_direct(p: int, i: int, n: int) -> int:
    lo = 3 if p == 2 else p
    return sum((-1) ** (k - p) * (n - (k - 1)) * math.comb(k, p) * math.comb(i, k - 1)
               for k in range(lo, i + 2))


def raising_u_coefficient(p: int, i: int, n: int) -> int:
    """Collapsed u_p coefficient sum; piecewise closed form in p."""
    if i <= 3 or not 2 <= p <= i + 1:
        raise ValueError("defined for i > 3 and 2 <= p <= i+1")
    if p == i + 1:
        closed = n - i
    elif p == i:
        closed = 2 * i - n
    elif p == i - 1:
        closed = -i
    elif p == 2:
        closed = -(n - 1) * i
    else:
        closed = 0
    direct = raising_u_coefficient_direct(p, i, n)
    if closed != direct:
        raise AssertionError("coefficient sum disagrees with its closed form")
    return closed
