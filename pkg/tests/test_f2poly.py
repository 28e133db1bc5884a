import pytest
from hypothesis import given, settings, strategies as st

from grcup.f2poly import (
    MAX_EXPONENT, Poly, PolyParseError, UNIT, ZERO, degree, divides,
    format_poly, lcm_mono, leading_term, mono_cmp, mul, normal_form, parse_poly,
    power, reduce_once, reduce_step, s_polynomial,
)
from grcup.grassmann_ideal import build_Q, ideal_generators, paper_family

from oracles import DegreeSlice, monomials_of_degree

P = parse_poly

monos = st.tuples(st.integers(0, 8), st.integers(0, 8))
polys = st.frozensets(monos, max_size=8).map(Poly)
nonzero_polys = st.frozensets(monos, min_size=1, max_size=8).map(Poly)


def test_degree():
    assert degree((3, 2)) == 12
    assert degree((0, 0)) == 0


@pytest.mark.parametrize("a, b, expected", [
    ((3, 0), (2, 5), 1),
    ((2, 1), (2, 1), 0),
    ((0, 7), (1, 0), -1),
])
def test_mono_cmp(a, b, expected):
    assert mono_cmp(a, b) == expected


def test_add():
    assert Poly([(3, 0), (0, 2)]) + Poly([(0, 2)]) == Poly([(3, 0)])
    F = Poly([(3, 0), (0, 2)])
    assert not (F + F)
    assert Poly([(2, 1)]) + Poly([(0, 3)]) == Poly([(2, 1), (0, 3)])


def test_mul():
    s = Poly([(1, 0), (0, 1)])
    assert s * s == Poly([(2, 0), (0, 2)])
    F = Poly([(3, 0), (0, 2)])
    assert F * UNIT == F
    assert F * Poly([(0, 1)]) == Poly([(3, 1), (0, 3)])


def test_mul_cap_truncates():
    s = Poly([(1, 0), (0, 1)])
    assert mul(s, s, cap=5) == Poly([(2, 0)])
    # (1 + w2 + w3)^4 = 1 + w2^4 + w3^4; both non-constant terms exceed degree 6
    assert power(UNIT + s, 4, cap=6) == UNIT
    assert power(UNIT + s, 4) == Poly([(0, 0), (4, 0), (0, 4)])


def test_leading_term():
    assert leading_term(Poly([(3, 0), (0, 2)])) == (3, 0)
    assert leading_term(Poly([(2, 1)])) == (2, 1)
    assert leading_term(Poly([(0, 3), (0, 7)])) == (0, 7)
    with pytest.raises(ValueError, match="no leading term"):
        leading_term(ZERO)


def test_lcm():
    assert lcm_mono((3, 0), (2, 1)) == (3, 1)
    assert lcm_mono((4, 4), (4, 4)) == (4, 4)
    assert lcm_mono((0, 5), (4, 0)) == (4, 5)


def test_s_polynomial():
    F, G = Poly([(3, 0), (0, 2)]), Poly([(2, 1)])
    assert s_polynomial(F, G) == Poly([(0, 3)])
    assert not s_polynomial(F, F)
    P0, P1, P2 = paper_family(2)
    assert s_polynomial(P0, P1) == P2
    with pytest.raises(ValueError):
        s_polynomial(ZERO, F)


def test_reduce_once():
    assert not reduce_once(Poly([(2, 2)]), Poly([(2, 1)]))
    assert reduce_once(Poly([(4, 0)]), Poly([(3, 0), (0, 2)])) == Poly([(1, 2)])
    fam = paper_family(3)
    assert reduce_once(build_Q(0, 1, 0, 3), fam[2]) == build_Q(0, 1, 1, 3)
    with pytest.raises(ValueError, match="not reducible"):
        reduce_once(Poly([(0, 1)]), Poly([(1, 0)]))


def test_reduce_once_picks_greatest_reducible():
    F = Poly([(5, 0), (3, 1), (0, 9)])
    G = Poly([(3, 0)])
    R, u = reduce_step(F, G)
    assert u == (2, 0)
    assert R == Poly([(3, 1), (0, 9)])


J4 = paper_family(2)


def test_normal_form_examples():
    assert not normal_form(Poly([(5, 0)]), J4)
    assert normal_form(Poly([(4, 0)]), J4) == Poly([(1, 2)])
    assert not normal_form(ZERO, J4)
    irreducible = Poly([(1, 2), (0, 0)])
    assert normal_form(irreducible, J4) == irreducible


def test_normal_form_uses_first_matching_divisor():
    # both w2 and w2*w3 divide w2^2*w3; the first listed wins
    F = Poly([(2, 1)])
    A, B = Poly([(1, 1), (0, 2)]), Poly([(1, 0)])
    assert normal_form(F, [A, B]) == Poly([(0, 3)])
    assert normal_form(F, [B, A]) == ZERO


@pytest.mark.parametrize("text, terms", [
    ("w2^3 + w3^2", [(3, 0), (0, 2)]),
    ("0", []),
    ("w2^2*w3", [(2, 1)]),
    ("1", [(0, 0)]),
    ("w2*w3^2 + w2 + 1", [(1, 2), (1, 0), (0, 0)]),
])
def test_parse(text, terms):
    assert parse_poly(text) == Poly(terms)


def test_format_is_descending_and_elides_one():
    F = Poly([(0, 0), (1, 0), (1, 2), (0, 1), (2, 0)])
    assert format_poly(F) == "w2^2 + w2*w3^2 + w2 + w3 + 1"
    assert format_poly(ZERO) == "0"


def test_parse_cancels_repeated_terms():
    assert parse_poly("w2 + w3 + w2") == Poly([(0, 1)])


@pytest.mark.parametrize("text, pos", [
    ("w2 +", 4),
    ("w4", 0),
    ("w2^", 3),
    ("w2 * w2", 5),
    ("3*w2", 0),
    ("w2 w3", 3),
])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(PolyParseError) as err:
        parse_poly(text)
    assert err.value.pos == pos


def test_overflow_is_reported():
    big = Poly([(MAX_EXPONENT, 0)])
    with pytest.raises(OverflowError):
        mul(big, Poly([(1, 0)]))
    with pytest.raises(OverflowError):
        big.shift((1, 0))
    with pytest.raises(OverflowError):
        Poly([(MAX_EXPONENT + 1, 0)])
    with pytest.raises(ValueError):
        Poly([(-1, 0)])


def test_invalid_monomials_rejected():
    with pytest.raises(TypeError):
        Poly([(1.5, 0)])


def test_canonical_storage_order():
    F = Poly([(0, 3), (2, 0), (1, 1), (2, 1)])
    assert F.terms == ((2, 1), (2, 0), (1, 1), (0, 3))
    assert F.lt == (2, 1)


def test_pickle_roundtrip():
    import pickle
    F = P("w2^3 + w3^2 + 1")
    assert pickle.loads(pickle.dumps(F)) == F


# -- properties ----------------------------------------------------------

@given(polys, polys, polys)
def test_ring_axioms(F, G, H):
    assert F + G == G + F
    assert (F + G) + H == F + (G + H)
    assert F * G == G * F
    assert (F * G) * H == F * (G * H)
    assert F * (G + H) == F * G + F * H
    assert not (F + F)
    assert F * UNIT == F


@given(nonzero_polys, nonzero_polys)
def test_leading_term_multiplicative(F, G):
    a, b = F.lt, G.lt
    assert (F * G).lt == (a[0] + b[0], a[1] + b[1])


@given(monos, monos, monos)
def test_order_compatible_with_multiplication(a, b, c):
    if a > b:
        assert (a[0] + c[0], a[1] + c[1]) > (b[0] + c[0], b[1] + c[1])


@given(polys)
def test_format_parse_roundtrip(F):
    assert parse_poly(format_poly(F)) == F


@given(nonzero_polys, nonzero_polys)
def test_s_polynomial_cancels_lcm(F, G):
    S = s_polynomial(F, G)
    assert not S or S.lt < lcm_mono(F.lt, G.lt)


basis_lists = st.lists(nonzero_polys, min_size=1, max_size=3)


@given(polys, basis_lists)
def test_normal_form_idempotent_and_irreducible(F, B):
    R = normal_form(F, B)
    assert normal_form(R, B) == R
    for t in R:
        assert not any(divides(g.lt, t) for g in B)


@given(nonzero_polys, nonzero_polys)
def test_reduce_once_decreases_greatest_reducible(F, G):
    reducible = [t for t in F if divides(G.lt, t)]
    if not reducible:
        return
    R = reduce_once(F, G)
    after = [t for t in R if divides(G.lt, t)]
    assert max(reducible) not in R
    assert not after or max(after) < max(reducible)


homog_gens = [g for g in ideal_generators(5).generators if g] + list(paper_family(2))


@settings(max_examples=60)
@given(st.integers(6, 16), st.data())
def test_remainder_difference_lies_in_ideal(d, data):
    """F + NF(F, B) lies in (B); checked against the degree slice of the ideal."""
    monos_d = monomials_of_degree(d)
    chosen = data.draw(st.lists(st.sampled_from(monos_d), unique=True)) if monos_d else []
    F = Poly(chosen)
    for B in (homog_gens[:2], homog_gens[2:], homog_gens):
        sl = DegreeSlice(B, d)
        diff = F + normal_form(F, B)
        assert sl.contains(list(diff))
