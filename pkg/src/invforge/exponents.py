"""Enumeration of the exponent vectors indexing unknown coefficients.

Each routine solves a small linear Diophantine system over the nonnegative
integers by depth-first search with remaining-budget pruning, and returns
the solutions sorted in the canonical monomial order of the ring they
index, so downstream matrices get a reproducible column order.
"""

from __future__ import annotations

from .rings import gen_ring, monomial_key, u_ring


def powers(n: int, d: int) -> list:
    """Exponents of u-ring monomials of degree d and weight n*d/2.

    Tuples are (a0, a2, ..., an) over the u-ring slots; empty whenever n*d
    is odd.
    """
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    if (n * d) % 2:
        return []
    target_w = n * d // 2
    out = []
    exps = [0] * (n - 1)

    def walk(i, rem_d, rem_w):
        if i > n:
            if rem_w == 0:
                out.append((rem_d,) + tuple(exps))
            return
        top = min(rem_d, rem_w // i)
        for a in range(top + 1):
            exps[i - 2] = a
            walk(i + 1, rem_d - a, rem_w - i * a)
        exps[i - 2] = 0

    walk(2, d, target_w)
    ctx = u_ring(n)
    out.sort(key=lambda e: monomial_key(ctx, e))
    return out


def powers2(gen_degrees, d: int) -> list:
    """Exponents with sum(a_j * deg_j) = d, for syzygy candidates."""
    degs = list(gen_degrees)
    if not degs:
        raise ValueError("need at least one generator degree")
    out = []
    exps = [0] * len(degs)

    def walk(j, rem):
        if j == len(degs):
            if rem == 0:
                out.append(tuple(exps))
            return
        for a in range(rem // degs[j] + 1):
            exps[j] = a
            walk(j + 1, rem - a * degs[j])
        exps[j] = 0

    walk(0, d)
    ctx = gen_ring((f"g{j}", degs[j], 1) for j in range(len(degs)))
    out.sort(key=lambda e: monomial_key(ctx, e))
    return out


def grad(gen_profile, target) -> list:
    """Exponents matching both a degree and a weight target.

    gen_profile lists (degree, weight) per generator; for genuine invariants
    the weight row is redundant but it is enforced anyway.
    """
    profile = [tuple(p) for p in gen_profile]
    if not profile:
        raise ValueError("need at least one generator")
    td, tw = target
    out = []
    exps = [0] * len(profile)

    def walk(j, rem_d, rem_w):
        if j == len(profile):
            if rem_d == 0 and rem_w == 0:
                out.append(tuple(exps))
            return
        dj, wj = profile[j]
        top = rem_d // dj
        if wj > 0:
            top = min(top, rem_w // wj)
        for a in range(top + 1):
            exps[j] = a
            walk(j + 1, rem_d - a * dj, rem_w - a * wj)
        exps[j] = 0

    walk(0, td, tw)
    ctx = gen_ring((f"g{j}", profile[j][0], profile[j][1])
                   for j in range(len(profile)))
    out.sort(key=lambda e: monomial_key(ctx, e))
    return out
