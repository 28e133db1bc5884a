import random

import pytest
from hypothesis import given, settings, strategies as st

from grcup.f2poly import Poly, normal_form, parse_poly
from grcup.grassmann_ideal import ideal_generators, paper_family, special_n
from grcup.groebner import (
    COMPUTED, GroebnerBasis, buchberger, contains, family_basis, is_groebner,
    reduce_basis, verify_reduction_chain,
)

from oracles import DegreeSlice, monomials_of_degree

G6, G7 = parse_poly("w2^3 + w3^2"), parse_poly("w2^2*w3")


def gb_of(n):
    return reduce_basis(buchberger(ideal_generators(n).nonzero(), n=n))


def test_buchberger_n4():
    gb = buchberger([G6, G7], n=4)
    assert sorted(gb.leading_terms(), reverse=True) == [(3, 0), (2, 1), (0, 3)]
    assert gb.provenance == COMPUTED
    assert parse_poly("w3^3") in gb.polys


def test_buchberger_on_groebner_input_keeps_lt_ideal():
    fam = paper_family(3)
    gb = buchberger(fam)
    assert reduce_basis(gb).leading_terms() == [P.lt for P in fam]


def test_buchberger_n12_leading_terms():
    assert gb_of(12).leading_terms() == [(7, 0), (6, 1), (4, 3), (0, 7)]


def test_buchberger_zero_ideal():
    with pytest.raises(ValueError, match="zero ideal"):
        buchberger([Poly(), Poly()])


def test_chain_criterion_gives_same_reduced_basis():
    for n in (4, 5, 9, 12, 17):
        gens = ideal_generators(n).nonzero()
        a = reduce_basis(buchberger(gens))
        b = reduce_basis(buchberger(gens, chain_criterion=True))
        assert a == b


def test_reduce_basis_matches_family_n4():
    assert gb_of(4) == reduce_basis(family_basis(2))
    assert gb_of(12) == reduce_basis(family_basis(3))


def test_reduce_basis_idempotent_and_reduced():
    for n in (4, 7, 12, 13):
        gb = gb_of(n)
        assert reduce_basis(gb) == gb
        lts = gb.leading_terms()
        assert len(set(lts)) == len(lts)
        assert lts == sorted(lts, reverse=True)
        for k, g in enumerate(gb.polys):
            others = gb.polys[:k] + gb.polys[k + 1:]
            assert normal_form(g, others) == g


def test_reduce_basis_drops_redundant_elements():
    gb = GroebnerBasis((G6, G7, parse_poly("w3^3"), parse_poly("w2^4*w3 + w2*w3^3")))
    assert reduce_basis(gb).polys == (G6, G7, parse_poly("w3^3"))


@pytest.mark.parametrize("m", range(2, 7))
def test_family_is_groebner(m):
    assert is_groebner(paper_family(m))


def test_is_groebner_certificates():
    assert is_groebner([G6])
    cert = is_groebner([G6, G7])
    assert not cert
    assert cert.pair == (0, 1)
    assert cert.remainder == parse_poly("w3^3")


def test_is_groebner_parallel_agrees():
    fam = paper_family(4)
    assert is_groebner(fam, jobs=3).ok
    cert = is_groebner([G6, G7], jobs=2)
    assert cert.pair == (0, 1) and cert.remainder == parse_poly("w3^3")


def test_contains():
    gb = gb_of(4)
    assert contains(gb, parse_poly("w2^5"))
    assert not contains(gb, parse_poly("w2^4"))


def test_reduction_chain_examples():
    rep = verify_reduction_chain(3, 0, 2)
    assert rep and len(rep.steps) == 3
    rep = verify_reduction_chain(2, 0, 1)
    assert rep and len(rep.steps) == 2
    with pytest.raises(ValueError):
        verify_reduction_chain(3, 2, 2)


@pytest.mark.parametrize("m", range(2, 7))
def test_all_reduction_chains(m):
    for i in range(m + 1):
        for j in range(i + 1, m + 1):
            rep = verify_reduction_chain(m, i, j)
            assert rep, (i, j, rep.failed_step, rep.detail)


@pytest.mark.parametrize("m", range(2, 7))
def test_family_equals_buchberger_from_two_generators(m):
    n = special_n(m)
    g = ideal_generators(n).generators
    assert reduce_basis(buchberger([g[1], g[2]], n=n)) == reduce_basis(family_basis(m))


def _random_poly(rng, max_deg):
    monos = [(p, q) for p in range(max_deg // 2 + 1) for q in range(max_deg // 3 + 1)
             if 2 * p + 3 * q <= max_deg]
    return Poly(t for t in monos if rng.random() < 0.3)


@pytest.mark.parametrize("n", [4, 12, 28])
def test_membership_soundness(n):
    rng = random.Random(n)
    gb = gb_of(n)
    gens = ideal_generators(n).generators
    for _ in range(100):
        F = Poly()
        for g in gens:
            F = F + _random_poly(rng, 12) * g
        assert contains(gb, F)


def test_membership_completeness_n4():
    gb = gb_of(4)
    gens = ideal_generators(4).nonzero()
    for d in range(0, 13):
        sl = DegreeSlice(gens, d)
        monos = monomials_of_degree(d)
        for mask in range(2 ** len(monos)):
            F = Poly(t for k, t in enumerate(monos) if mask >> k & 1)
            assert contains(gb, F) == sl.contains(list(F)), (d, F)


gen_polys = st.frozensets(st.tuples(st.integers(0, 6), st.integers(0, 6)),
                          min_size=1, max_size=5).map(Poly)


@settings(max_examples=60, deadline=None)
@given(st.lists(gen_polys, min_size=1, max_size=3))
def test_buchberger_output_is_groebner(gens):
    gb = buchberger(gens)
    assert is_groebner(gb.polys)
    for g in gens:
        assert contains(gb, g)
    assert is_groebner(reduce_basis(gb).polys)
