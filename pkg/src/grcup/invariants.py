"""Invariants read off the quotient ring GF(2)[w2, w3] / J_n.

Everything here works with a Groebner basis of ``J_n`` and exhaustive scans
of monomials below the manifold dimension ``3n``.  Products of positive
degree elements expand into sums of monomial products of at least the same
length, so the cup-length of the quotient is attained on monomials.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import List, Optional, Tuple

from .f2poly import Monomial, Poly, UNIT, degree, mul, normal_form, power
from .grassmann_ideal import ideal_generators, special_m, special_n
from .groebner import GroebnerBasis, buchberger, reduce_basis

W2 = Poly(((1, 0),))
W3 = Poly(((0, 1),))
TOTAL_W = UNIT + W2 + W3                      # 1 + w2 + w3
TENSOR_SQUARE_W = UNIT + Poly([(2, 0), (0, 2)])  # w(gamma (x) gamma) = 1 + w2^2 + w3^2


def _nf_mono(p: int, q: int, gb: GroebnerBasis) -> Poly:
    return normal_form(Poly._make(((p, q),)), gb.polys)


def grid(n: int) -> List[Monomial]:
    """All ``(p, q)`` with ``2p + 3q <= 3n``, in descending lex order."""
    top = 3 * n
    return [(p, q) for p in range(top // 2, -1, -1) for q in range((top - 2 * p) // 3, -1, -1)]


def cup_im_p(n: int, gb: GroebnerBasis) -> Tuple[int, Monomial]:
    """Largest ``p + q`` over monomials outside J_n, with a lex-greatest witness."""
    best, witness = -1, None
    for p, q in grid(n):
        if p + q < best:
            continue
        if _nf_mono(p, q, gb):
            if p + q > best:
                best, witness = p + q, (p, q)
    # grid is scanned in descending lex order, so the first hit at a given
    # length is the lex-greatest one
    return best, witness


def height_w2(n: int, gb: GroebnerBasis) -> int:
    h = 0
    while h + 1 <= 3 * n and _nf_mono(h + 1, 0, gb):
        h += 1
    return h


@dataclass(frozen=True)
class ChiRow:
    chi1: int
    chi2: int
    i: int
    statement_form: int   # 2^i - 1
    proof_form: int       # 2^(i+1) - 2

    @property
    def matches_statement(self) -> bool:
        return self.chi2 == self.statement_form

    @property
    def matches_proof(self) -> bool:
        return self.chi2 == self.proof_form


def chi_band(chi1: int, m: int) -> int:
    """``i`` with ``2^(m+1) - 6*2^i <= chi1 < 2^(m+1) - 3*2^i``."""
    top = 1 << (m + 1)
    for i in range(m):
        if top - 6 * (1 << i) <= chi1 < top - 3 * (1 << i):
            return i
    raise ValueError(f"chi1={chi1} outside [0, n] for m={m}")


def chi_table(m: int, gb: GroebnerBasis) -> List[ChiRow]:
    n = special_n(m)
    rows = []
    for chi1 in range(n + 1):
        chi2 = -1
        for z in range((3 * n - 2 * chi1) // 3, -1, -1):
            if _nf_mono(chi1, z, gb):
                chi2 = z
                break
        i = chi_band(chi1, m)
        rows.append(ChiRow(chi1, chi2, i, (1 << i) - 1, (1 << (i + 1)) - 2))
    return rows


def min_alpha(F: Poly, gb: GroebnerBasis, cutoff: Optional[int] = None) -> int:
    """Least ``a`` with ``w2^a * F`` in J_n.

    ``cutoff`` defaults to ``n + 4`` (``2^(m+1)`` for special n), which is
    enough because ``w2^(n+1)`` lies in J_n.
    """
    if not F:
        raise ValueError("min_alpha of the zero polynomial")
    if cutoff is None:
        if gb.n is None:
            raise ValueError("basis carries no n; pass cutoff explicitly")
        cutoff = gb.n + 4
    for a in range(cutoff + 1):
        if not normal_form(F.shift((a, 0)), gb.polys):
            return a
    raise ArithmeticError(f"no annihilating power of w2 up to {cutoff}; wrong basis?")


def sw_inverse_identity(n: int, gb: GroebnerBasis, exponent: Optional[int] = None) -> bool:
    """``(1 + w2 + w3)^(n+4) == 1`` in the quotient (full expansion, no truncation)."""
    e = n + 4 if exponent is None else exponent
    return not normal_form(power(TOTAL_W, e) + UNIT, gb.polys)


def normal_sw_class(n: int, gb: GroebnerBasis) -> Poly:
    """Total Stiefel-Whitney class of the stable normal bundle, in normal form."""
    return normal_form(mul(TENSOR_SQUARE_W, TOTAL_W), gb.polys)


def normal_sw_class_series(n: int, gb: GroebnerBasis) -> Poly:
    """Same class via ``(1 + w2^2 + w3^2) / (1 + w2 + w3)^(n+3)``.

    The inverse is the truncated geometric series ``sum x^k`` of
    ``x = (1 + w2 + w3)^(n+3) - 1``, cut at degree 3n.
    """
    cap = 3 * n
    x = power(TOTAL_W, n + 3, cap) + UNIT
    inv, term = UNIT, UNIT
    # x has no constant term, so x^k vanishes below degree 2k
    for _ in range(cap // 2 + 1):
        term = mul(term, x, cap)
        if not term:
            break
        inv = inv + term
    return normal_form(mul(TENSOR_SQUARE_W, inv, cap), gb.polys)


@dataclass(frozen=True)
class ImmersionReport:
    nonimmersion_dim: int
    d_max: int
    sw_normal: Poly
    paper_positive_bound: Optional[int]


def paper_positive_bound(n: int) -> Optional[int]:
    """Published immersion dimension (not recomputed): 21 for n=4, 6n-3 for larger special n."""
    m = special_m(n)
    if m is None:
        return None
    return 21 if m == 2 else 6 * n - 3


def nonimmersion_bound(n: int, gb: GroebnerBasis) -> ImmersionReport:
    """``3n + d - 1`` for the top nonzero degree ``d`` of the reduced normal class.

    A nonzero ``w_d(nu)`` rules out immersion in codimension below ``d``.
    """
    w = normal_sw_class(n, gb)
    d_max = max(degree(t) for t in w.terms)
    return ImmersionReport(3 * n + d_max - 1, d_max, w, paper_positive_bound(n))


@dataclass
class CupReport:
    n: int
    m: Optional[int]
    cup_im_p: int
    witness: Monomial
    height_w2: int
    cup_total_reported: Optional[int] = None
    cup_total_source: Optional[str] = None
    chi_table: Optional[List[ChiRow]] = None
    chi_form: Optional[str] = None
    sw_inverse_identity: Optional[bool] = None
    sw_normal: Optional[Poly] = None
    nonimmersion_dim: Optional[int] = None
    paper_positive_bound: Optional[int] = None
    notes: List[str] = field(default_factory=list)


def basis_for(n: int) -> GroebnerBasis:
    return reduce_basis(buchberger(ideal_generators(n).nonzero(), n=n))


def chi_form_verdict(rows: List[ChiRow]) -> str:
    proof = all(r.matches_proof for r in rows)
    statement = all(r.matches_statement for r in rows)
    if proof and statement:
        return "both"
    if proof:
        return "proof-form 2^(i+1)-2"
    if statement:
        return "statement-form 2^i-1"
    return "neither"


def report(n: int, gb: Optional[GroebnerBasis] = None) -> CupReport:
    if n < 4:
        raise ValueError(f"n must be at least 4, got {n}")
    if gb is None:
        gb = basis_for(n)
    m = special_m(n)
    cup, wit = cup_im_p(n, gb)
    rep = CupReport(n, m, cup, wit, height_w2(n, gb))
    if m is None:
        rep.notes.append("non-special n: cup_total not reported (no theorem backing)")
        return rep
    rep.cup_total_reported = cup + 1
    rep.cup_total_source = "theorem-derived (Poincare duality step), not computed"
    rep.chi_table = chi_table(m, gb)
    rep.chi_form = chi_form_verdict(rep.chi_table)
    rep.sw_inverse_identity = sw_inverse_identity(n, gb)
    imm = nonimmersion_bound(n, gb)
    rep.sw_normal = imm.sw_normal
    rep.nonimmersion_dim = imm.nonimmersion_dim
    rep.paper_positive_bound = imm.paper_positive_bound
    if m == 2:
        rep.notes.append(
            f"computed non-immersion in R^{imm.nonimmersion_dim} subsumes the published R^17 claim")
    return rep


def report_dict(rep: CupReport) -> dict:
    """JSON-ready view: polynomials as lists of [p, q] pairs."""
    d = asdict(rep)
    d["witness"] = list(rep.witness) if rep.witness else None
    d["sw_normal"] = [list(t) for t in rep.sw_normal.terms] if rep.sw_normal is not None else None
    if rep.chi_table is not None:
        d["chi_table"] = [[r.chi1, r.chi2] for r in rep.chi_table]
    return d
