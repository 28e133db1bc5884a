"""Buchberger completion, verification and reduced bases in GF(2)[w2, w3]."""

from __future__ import annotations

import heapq
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .f2poly import (
    Monomial, Poly, divides, lcm_mono, leading_term, normal_form, reduce_step,
    s_polynomial,
)
from .grassmann_ideal import build_Q, paper_family, special_n

COMPUTED = "computed-by-Buchberger"
PAPER_FAMILY = "paper-family"
CACHED = "loaded-from-cache"


@dataclass(frozen=True)
class GroebnerBasis:
    polys: Tuple[Poly, ...]
    provenance: str = field(default=COMPUTED, compare=False)
    n: Optional[int] = None

    def __iter__(self):
        return iter(self.polys)

    def __len__(self) -> int:
        return len(self.polys)

    def leading_terms(self) -> List[Monomial]:
        return [leading_term(g) for g in self.polys]


def _coprime(a: Monomial, b: Monomial) -> bool:
    return min(a[0], b[0]) == 0 and min(a[1], b[1]) == 0


def buchberger(gens: Sequence[Poly], *, n: Optional[int] = None,
               chain_criterion: bool = False) -> GroebnerBasis:
    """Complete ``gens`` to a Groebner basis of the ideal they generate.

    Pairs are processed in ascending lex order of the lcm of their leading
    terms (ties by index).  Pairs with coprime leading terms are skipped.
    With ``chain_criterion`` a pair (i, j) is also dropped when some k has
    ``LT_k | lcm(i, j)`` and both (i, k) and (j, k) were already handled.
    """
    G: List[Poly] = []
    for g in gens:
        if g and g not in G:
            G.append(g)
    if not G:
        raise ValueError("zero ideal: no nonzero generator")
    lts = [g.lt for g in G]
    heap = [(lcm_mono(lts[i], lts[j]), i, j) for i, j in combinations(range(len(G)), 2)]
    heapq.heapify(heap)
    pending = {(i, j) for _, i, j in heap}

    while heap:
        l, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        if _coprime(lts[i], lts[j]):
            continue
        if chain_criterion and any(
            k not in (i, j) and divides(lts[k], l)
            and (min(i, k), max(i, k)) not in pending
            and (min(j, k), max(j, k)) not in pending
            for k in range(len(G))
        ):
            continue
        h = normal_form(s_polynomial(G[i], G[j]), G)
        if h:
            k = len(G)
            G.append(h)
            lts.append(h.lt)
            for a in range(k):
                heapq.heappush(heap, (lcm_mono(lts[a], lts[k]), a, k))
                pending.add((a, k))
    return GroebnerBasis(tuple(G), COMPUTED, n)


def reduce_basis(gb: GroebnerBasis) -> GroebnerBasis:
    """The unique reduced basis, sorted by descending leading term."""
    polys = list(gb.polys)
    minimal: List[Poly] = []
    for idx, g in enumerate(polys):
        lt = g.lt
        redundant = False
        for jdx, h in enumerate(polys):
            if jdx == idx:
                continue
            if divides(h.lt, lt) and (h.lt != lt or jdx < idx):
                redundant = True
                break
        if not redundant:
            minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        lt = g.lt
        tail = normal_form(Poly._make(g.terms[1:]), others)
        reduced.append(Poly._make(set(tail.terms) | {lt}))
    reduced.sort(key=lambda f: f.lt, reverse=True)
    return GroebnerBasis(tuple(reduced), gb.provenance, gb.n)


@dataclass(frozen=True)
class GroebnerCertificate:
    """Outcome of the pairwise S-polynomial test.

    On failure ``pair`` holds the offending indices and ``remainder`` the
    nonzero normal form of their S-polynomial.
    """
    ok: bool
    pairs_checked: int
    pair: Optional[Tuple[int, int]] = None
    remainder: Optional[Poly] = None

    def __bool__(self) -> bool:
        return self.ok


def _pair_remainder(args):
    polys, i, j = args
    return normal_form(s_polynomial(polys[i], polys[j]), polys)


def is_groebner(polys: Sequence[Poly], jobs: int = 1) -> GroebnerCertificate:
    polys = tuple(polys)
    if any(not g for g in polys):
        raise ValueError("zero polynomial in basis")
    pairs = list(combinations(range(len(polys)), 2))
    work = [(polys, i, j) for i, j in pairs]
    if jobs > 1 and len(pairs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            remainders = list(ex.map(_pair_remainder, work))
    else:
        remainders = map(_pair_remainder, work)
    for (i, j), r in zip(pairs, remainders):
        if r:
            return GroebnerCertificate(False, len(pairs), (i, j), r)
    return GroebnerCertificate(True, len(pairs))


def contains(gb: GroebnerBasis, F: Poly) -> bool:
    return not normal_form(F, gb.polys)


def family_basis(m: int) -> GroebnerBasis:
    return GroebnerBasis(tuple(paper_family(m)), PAPER_FAMILY, special_n(m))


@dataclass
class ChainReport:
    m: int
    i: int
    j: int
    ok: bool = True
    steps: List[str] = field(default_factory=list)
    failed_step: Optional[int] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def fail(self, step: int, detail: str) -> "ChainReport":
        self.ok = False
        self.failed_step = step
        self.detail = detail
        return self


def verify_reduction_chain(m: int, i: int, j: int) -> ChainReport:
    """Replay ``S(P_i, P_j) = Q(i,j,0) -> Q(i,j,1) -> ... -> 0``.

    Step ``l + 1`` divides by ``P_{i+l+2}`` with quotient monomial
    ``(2^(i+l) - 2^i, 2^j - 2^(i+l+1))`` and must land on ``Q(i,j,l+1)``.
    Step 0 is the S-polynomial itself.
    """
    if not 0 <= i < j <= m:
        raise ValueError(f"need 0 <= i < j <= m, got i={i}, j={j}, m={m}")
    P = paper_family(m)
    rep = ChainReport(m, i, j)
    cur = s_polynomial(P[i], P[j])
    if cur != build_Q(i, j, 0, m):
        return rep.fail(0, f"S(P{i},P{j}) = {cur} differs from Q({i},{j},0)")
    rep.steps.append(f"S(P{i},P{j}) = Q({i},{j},0)")
    l = 0
    while cur:
        d = i + l + 2
        step = l + 1
        if d > m:
            return rep.fail(step, f"nonzero Q({i},{j},{l}) = {cur} but P{d} does not exist")
        try:
            cur, u = reduce_step(cur, P[d])
        except ValueError:
            return rep.fail(step, f"Q({i},{j},{l}) is not reducible by P{d}")
        want_u = ((1 << (i + l)) - (1 << i), (1 << j) - (1 << (i + l + 1)))
        if u != want_u:
            return rep.fail(step, f"quotient {u} by P{d}, expected {want_u}")
        want = build_Q(i, j, l + 1, m)
        if cur != want:
            return rep.fail(step, f"remainder {cur} differs from Q({i},{j},{l + 1}) = {want}")
        rep.steps.append(f"Q({i},{j},{l}) -> Q({i},{j},{l + 1}) by P{d}")
        l += 1
    return rep
