"""Algebraic relations among a generating set, per weighted degree.

A syzygy is a generator-ring polynomial whose expansion through the
generator polynomials vanishes identically.  The per-degree basis comes
from the nullspace of the candidate-expansion matrix; the minimality
filter quotients out products of lower-degree syzygies with generator
monomials, which the per-degree solver alone would keep reporting.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exponents import powers2
from .invariants import GeneratorSet, expand_candidate
from .linalg import Eliminator, nullspace_sparse
from .rings import ContextMismatchError, Polynomial, monomial_key, normalize, u_ring


@dataclass(frozen=True)
class Syzygy:
    relation: Polynomial  # generator-ring polynomial, normalized
    degree: int           # weighted degree sum(a_j * deg f_j)


def expand_in_generators(gens: GeneratorSet, g: Polynomial,
                         cache: dict = None) -> Polynomial:
    """Substitute every generator symbol by its u-polynomial, exactly."""
    if g.context != gens.gen_context():
        raise ContextMismatchError("relation is over a different generator set")
    if cache is None:
        cache = {}
    total = Polynomial.zero(u_ring(gens.n))
    for e, c in g.terms.items():
        total = total + expand_candidate(gens, e, cache).scale(c)
    return total


def syzygy_basis(gens: GeneratorSet, d: int, cache: dict = None) -> list:
    """Canonical basis of all relations of weighted degree d."""
    if not len(gens):
        raise ValueError("need a nonempty generator set")
    candidates = powers2(gens.degrees(), d)
    if not candidates:
        return []
    if cache is None:
        cache = {}
    uctx = u_ring(gens.n)
    rows = {}
    for j, exps in enumerate(candidates):
        for e, c in expand_candidate(gens, exps, cache).terms.items():
            rows.setdefault(e, {})[j] = c
    ordered = [rows[e] for e in sorted(rows, key=lambda e: monomial_key(uctx, e))]
    gctx = gens.gen_context()
    out = []
    for vec in nullspace_sparse(len(candidates), ordered):
        terms = {candidates[j]: v for j, v in enumerate(vec) if v}
        out.append(Syzygy(normalize(Polynomial(gctx, terms)), d))
    return out


def check_syzygy(gens: GeneratorSet, relation: Polynomial,
                 cache: dict = None) -> bool:
    """True iff the relation expands to the exact zero polynomial."""
    if relation.is_zero():
        return True
    return expand_in_generators(gens, relation, cache).is_zero()


def minimal_syzygies(gens: GeneratorSet, degrees, cache: dict = None) -> list:
    """New relations per degree, modulo consequences of earlier ones.

    For each degree d in ascending order, the span of m * s over earlier
    minimal syzygies s and generator monomials m of complementary weighted
    degree is removed from the degree-d basis; whatever extends that span
    is reported, in the basis order.
    """
    if cache is None:
        cache = {}
    gen_degs = gens.degrees()
    minimal = []
    for d in sorted(set(degrees)):
        basis = syzygy_basis(gens, d, cache)
        if not basis:
            continue
        candidates = powers2(gen_degs, d)
        index = {e: j for j, e in enumerate(candidates)}
        span = Eliminator(len(candidates))
        for earlier in minimal:
            rest = d - earlier.degree
            if rest < 0:
                continue
            for m in powers2(gen_degs, rest):
                shifted = Polynomial.monomial(
                    earlier.relation.context, m) * earlier.relation
                span.add_row({index[e]: c for e, c in shifted.terms.items()})
        for syz in basis:
            before = span.rank
            span.add_row({index[e]: c for e, c in syz.relation.terms.items()})
            if span.rank > before:
                minimal.append(syz)
    return minimal
