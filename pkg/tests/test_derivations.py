import pytest

from invforge.derivations import (
    ResidualDenominatorError,
    apply_derivation,
    embed,
    expand_u_to_x,
    full_operator,
    grading_derivation,
    kernel_projection,
    lowering_derivation,
    project_x_to_u,
    raising_action_on_u,
    raising_derivation,
    raising_u_coefficient,
    raising_x0_coefficient,
    reduced_operator,
    u_lowering_derivation,
    u_raising_derivation,
    u_variable_in_x,
    x_variable_in_u,
)
from invforge.rings import Polynomial, lambda_u_ring, local_x_ring, u_ring, x_ring
from invforge.textio import parse_poly

import properties

U3 = u_ring(3)


def p(text, ctx):
    return parse_poly(text, ctx)


def test_reduced_operator_images_cubic():
    op = reduced_operator(3)
    assert apply_derivation(op, p("x0*u2^3", U3)) == p("3*x0^2*u2^2*u3", U3)
    assert apply_derivation(op, p("x0^2*u3^2", U3)) == p("-12*x0^2*u2^2*u3", U3)
    assert apply_derivation(op, Polynomial.one(U3)).is_zero()


def test_reduced_operator_kills_known_invariants():
    assert apply_derivation(reduced_operator(2), p("x0*u2", u_ring(2))).is_zero()
    assert apply_derivation(reduced_operator(3), p("4*x0*u2^3 + x0^2*u3^2", U3)).is_zero()


def test_sl2_derivation_images():
    d1 = lowering_derivation(2)
    assert d1.images[0].is_zero()
    assert d1.images[1] == p("x0", x_ring(2))
    assert d1.images[2] == p("2*x1", x_ring(2))
    for n in (2, 4, 7):
        assert lowering_derivation(n).images[0].is_zero()
    assert raising_derivation(3).images[1] == p("2*x2", x_ring(3))


def test_u_derivation_images():
    n = 6
    up, down = u_raising_derivation(n), u_lowering_derivation(n)
    assert down.images[1].is_zero()          # u2 -> 0
    assert up.images[n - 1].is_zero()        # un -> 0 via u(n+1) = 0
    e = grading_derivation(n)
    u4 = Polynomial.variable(u_ring(n), 3)
    assert apply_derivation(e, u4) == u4.scale(-2)


def test_full_operator_on_x0():
    for n in (2, 3, 5):
        mixed = lambda_u_ring(n)
        x0 = Polynomial.variable(mixed, 0)
        lam = Polynomial.variable(mixed, 1)
        img = apply_derivation(full_operator(n), x0)
        assert img == (x0 * x0 * lam).scale(-n)


def test_full_operator_u3_coefficient_quintic():
    # image of u3 at n=5: 2*x0*u4 + x0*u3*lam - 12*u2^2
    mixed = lambda_u_ring(5)
    img = full_operator(5).images[3]
    x0, lam = Polynomial.variable(mixed, 0), Polynomial.variable(mixed, 1)
    u2, u3, u4 = (Polynomial.variable(mixed, k) for k in (2, 3, 4))
    assert img == (x0 * u4).scale(2) + x0 * u3 * lam - (u2 * u2).scale(12)


def test_full_operator_kills_balanced_invariant():
    f = p("4*x0*u2^3 + x0^2*u3^2", U3)
    img = apply_derivation(full_operator(3), embed(f, lambda_u_ring(3)))
    assert img.is_zero()


def test_kernel_projection_examples():
    X2 = x_ring(2)
    assert kernel_projection(p("x0", X2), 2) == embed(p("x0", X2), local_x_ring(2))
    assert kernel_projection(p("x1", X2), 2).is_zero()
    loc = local_x_ring(2)
    expected = embed(p("x2", X2), loc) + Polynomial.monomial(loc, (-1, 2, 0), -1)
    assert kernel_projection(p("x2", X2), 2) == expected


def test_u_variable_closed_form_examples():
    loc = local_x_ring(2)
    assert u_variable_in_x(2, 2) == (embed(p("x2", x_ring(2)), loc)
                                     + Polynomial.monomial(loc, (-1, 2, 0), -1))
    assert u_variable_in_x(2, 2) == kernel_projection(p("x2", x_ring(2)), 2)
    loc4 = local_x_ring(4)
    expected = (embed(p("x3", x_ring(4)), loc4)
                + Polynomial.monomial(loc4, (-1, 1, 1, 0, 0), -3)
                + Polynomial.monomial(loc4, (-2, 3, 0, 0, 0), 2))
    assert u_variable_in_x(3, 4) == expected
    with pytest.raises(ValueError):
        u_variable_in_x(1, 4)


def test_x_variable_in_u_examples():
    mixed = lambda_u_ring(4)
    lam = Polynomial.variable(mixed, 1)
    x0 = Polynomial.variable(mixed, 0)
    u2, u3 = Polynomial.variable(mixed, 2), Polynomial.variable(mixed, 3)
    assert x_variable_in_u(2, 4) == u2 + x0 * lam * lam
    assert x_variable_in_u(3, 4) == u3 - u2.scale(3) * lam - x0 * lam ** 3


def test_projection_to_u_examples():
    X4 = x_ring(4)
    U4 = u_ring(4)
    assert project_x_to_u(p("x4*x0 - 4*x1*x3 + 3*x2^2", X4)) == p("x0*u4 + 3*u2^2", U4)
    assert project_x_to_u(p("x0^3", X4)) == p("x0^3", U4)
    assert project_x_to_u(p("x1^3*x3", X4)).is_zero()


def test_expand_matches_elementwise_substitution():
    # substituting the closed forms slot by slot agrees with the expander
    from invforge.rings import substitute, u_ring as _u
    U4 = _u(4)
    f = p("x0*u4 + 3*u2^2", U4)
    loc = local_x_ring(4)
    images = {0: embed(p("x0", x_ring(4)), loc)}
    for slot in range(1, 4):
        images[slot] = u_variable_in_x(slot + 1, 4)
    via_subst = substitute(f, images, loc)
    assert all(e[0] >= 0 for e in via_subst.terms)
    assert Polynomial(x_ring(4), via_subst.terms) == expand_u_to_x(f, 4)


def test_expand_u_to_x_examples():
    assert expand_u_to_x(p("x0*u2", u_ring(2)), 2) == p("x0*x2 - x1^2", x_ring(2))
    got = expand_u_to_x(p("4*x0*u2^3 + x0^2*u3^2", U3), 3)
    want = p("4*x0*x2^3 - 3*x1^2*x2^2 + x0^2*x3^2 - 6*x0*x1*x2*x3 + 4*x1^3*x3", x_ring(3))
    assert got == want
    with pytest.raises(ResidualDenominatorError):
        expand_u_to_x(p("u2", u_ring(2)), 2)


def test_raising_action_closed_forms():
    mixed = lambda_u_ring(5)
    lam = Polynomial.variable(mixed, 1)
    u2, u3 = Polynomial.variable(mixed, 2), Polynomial.variable(mixed, 3)
    got = raising_action_on_u(2, 5)
    assert got == u3.scale(3) - u2 * lam
    # i = 3, n = 5: 2*u4 + u3*lam - 12*u2^2/x0
    u4 = Polynomial.variable(mixed, 4)
    corr5 = Polynomial.monomial(mixed, (-1, 0, 2, 0, 0, 0), -12)
    assert raising_action_on_u(3, 5) == u4.scale(2) + u3 * lam + corr5
    # i = 3, n = 3 keeps no u4 term and picks up the u2^2/x0 correction
    mixed3 = lambda_u_ring(3)
    lam3 = Polynomial.variable(mixed3, 1)
    u3_3 = Polynomial.variable(mixed3, 3)
    corr = Polynomial.monomial(mixed3, (-1, 0, 2, 0), -6)
    assert raising_action_on_u(3, 3) == u3_3.scale(3) * lam3 + corr


def test_coefficient_sums_examples():
    assert raising_x0_coefficient(2, 2) == 0
    assert raising_x0_coefficient(3, 5) == -7
    assert raising_u_coefficient(4, 4, 5) == 3
    with pytest.raises(ValueError):
        raising_x0_coefficient(1, 4)
    with pytest.raises(ValueError):
        raising_u_coefficient(1, 5, 4)


def test_leibniz_on_random_pairs():
    properties.check_leibniz(pairs=200)


def test_kernel_projection_matches_closed_forms():
    properties.check_kernel_projection_closed_forms(8)


def test_x_round_trip_identity():
    properties.check_x_round_trip(8)


def test_raising_chain_rule_closed_forms():
    properties.check_raising_chain_rule(8)


def test_coefficient_sums_closed_forms():
    properties.check_coefficient_sums(12, 12)


def test_commutator_grading():
    properties.check_commutator(8)


def test_reduced_operator_grading():
    properties.check_reduced_operator_grading()


def test_full_operator_agrees_on_balanced():
    properties.check_full_operator_agreement()
