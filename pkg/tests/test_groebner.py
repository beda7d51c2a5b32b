from fractions import Fraction
from math import factorial

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from tgpdeform.groebner import (
    GroebnerBasis,
    NotZeroDimensional,
    buchberger,
    coordinates,
    ideal_equal,
    is_groebner,
    is_reduced,
    multiplication_matrix,
    normal_form,
    quotient_basis,
    quotient_dimension,
    reduces_to_zero,
)
from tgpdeform.linalg import Matrix
from tgpdeform.polyring import MPoly, elementary_symmetric


def t(i, d):
    return MPoly.variable(d, i)


def coinvariant_gens(d):
    return [elementary_symmetric(range(1, d + 1), r, d) for r in range(1, d + 1)]


def to_sympy(f: MPoly, syms):
    return sum(sympy.Rational(c.numerator, c.denominator) * sympy.prod(s ** e for s, e in zip(syms, m))
               for m, c in f.terms.items()) if f else sympy.Integer(0)


def sympy_basis(gens, nvars, order):
    syms = sympy.symbols(f"t1:{nvars + 1}")
    sorder = {"degrevlex": "grevlex", "deglex": "grlex", "lex": "lex"}[order]
    G = sympy.groebner([to_sympy(g, syms) for g in gens], *syms, order=sorder, domain=sympy.QQ)
    return sorted(sympy.srepr(sympy.expand(p)) for p in G.exprs), syms


def ours_as_sympy(G: GroebnerBasis, syms):
    return sorted(sympy.srepr(sympy.expand(to_sympy(p, syms))) for p in G.polys)


def test_two_variable_example():
    x, y = t(1, 2), t(2, 2)
    G = buchberger([x + y, y * y])
    assert set(G.polys) == {x + y, y * y}
    assert normal_form(x, G) == -y
    assert quotient_basis(G) == [(0, 0), (0, 1)]
    assert multiplication_matrix(y, G) == Matrix([[0, 0], [1, 0]])
    assert multiplication_matrix(x, G) == Matrix([[0, 0], [-1, 0]])
    assert multiplication_matrix(MPoly.constant(2, 1), G) == Matrix.identity(2)


def test_unit_ideal():
    x = t(1, 1)
    G = buchberger([x, x - 1])
    assert G.is_unit_ideal()
    assert quotient_dimension(G) == 0


def test_not_zero_dimensional():
    x, y = t(1, 2), t(2, 2)
    with pytest.raises(NotZeroDimensional):
        quotient_basis(buchberger([x * y]))


def test_empty_needs_ring():
    with pytest.raises(ValueError):
        buchberger([])


@pytest.mark.parametrize("d", range(1, 6))
def test_coinvariant_dimension(d):
    G = buchberger(coinvariant_gens(d))
    assert is_groebner(G) and is_reduced(G)
    assert quotient_dimension(G) == factorial(d)


@pytest.mark.parametrize("order", ["degrevlex", "deglex", "lex"])
def test_orders_give_same_dimension(order):
    G = buchberger(coinvariant_gens(4), order=order)
    assert is_groebner(G) and is_reduced(G)
    assert quotient_dimension(G) == 24


def test_ideal_equal():
    x, y = t(1, 2), t(2, 2)
    assert ideal_equal([x + y, y * y], [x + y, x * x])
    assert ideal_equal([x * x - 1, y - x], [y * y - 1, x - y])
    assert not ideal_equal([x, y], [x, y * y])


def test_json_round_trip():
    G = buchberger(coinvariant_gens(3))
    assert GroebnerBasis.from_json(G.to_json()) == G


@pytest.mark.parametrize("order", ["degrevlex", "deglex", "lex"])
@pytest.mark.parametrize("d", [2, 3, 4])
def test_matches_sympy_on_coinvariants(d, order):
    gens = [g + (t(1, d) if r == 1 else 0) for r, g in enumerate(coinvariant_gens(d), 1)]
    G = buchberger(gens, order=order)
    ref, syms = sympy_basis(gens, d, order)
    assert ours_as_sympy(G, syms) == ref


small_coeffs = st.integers(min_value=-3, max_value=3)


@st.composite
def small_systems(draw):
    n = 3
    gens = []
    for _ in range(draw(st.integers(2, 4))):
        terms = {}
        for _ in range(draw(st.integers(1, 4))):
            mono = tuple(draw(st.lists(st.integers(0, 2), min_size=n, max_size=n)))
            terms[mono] = draw(small_coeffs)
        f = MPoly(n, terms)
        if f:
            gens.append(f)
    if not gens:
        gens = [t(1, n)]
    return gens


@settings(max_examples=40, deadline=None)
@given(small_systems())
def test_matches_sympy_random(gens):
    G = buchberger(gens)
    ref, syms = sympy_basis(gens, 3, "degrevlex")
    assert ours_as_sympy(G, syms) == ref
    assert is_groebner(G) and is_reduced(G)
    for g in gens:
        assert reduces_to_zero(g, G)


@settings(max_examples=40, deadline=None)
@given(small_systems(), st.lists(st.integers(0, 3), min_size=3, max_size=3), small_coeffs)
def test_normal_form_idempotent_and_linear(gens, mono, c):
    G = buchberger(gens)
    f = MPoly(3, {tuple(mono): 1, (1, 1, 0): c})
    nf = normal_form(f, G)
    assert normal_form(nf, G) == nf
    assert reduces_to_zero(f - nf, G)
    g = gens[0] * f
    assert reduces_to_zero(g, G)


def test_multiplication_matrices_form_representation():
    d = 3
    G = buchberger(coinvariant_gens(d))
    B = quotient_basis(G)
    x, y, z = (t(i, d) for i in range(1, 4))
    Mx, My = multiplication_matrix(x, G, B), multiplication_matrix(y, G, B)
    assert Mx @ My == My @ Mx
    assert multiplication_matrix(x * y + z, G, B) == Mx @ My + multiplication_matrix(z, G, B)
    e1 = x + y + z
    assert multiplication_matrix(e1, G, B) == Matrix.zeros(len(B))


def test_coordinates_inverse_to_basis():
    d = 3
    G = buchberger(coinvariant_gens(d))
    B = quotient_basis(G)
    for i, m in enumerate(B):
        v = coordinates(normal_form(MPoly(d, {m: 1}), G), B)
        assert v == [Fraction(int(j == i)) for j in range(len(B))]
