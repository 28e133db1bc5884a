"""Generators of the ideal J_n and the closed-form families for special n.

``J_n`` is the kernel ideal presenting the image of the double-cover map in
mod 2 cohomology of the oriented Grassmannian ``G~(n,3)`` as
``GF(2)[w2, w3] / J_n``.  It is generated by the homogeneous components of
degrees n+1, n+2, n+3 of ``1 / (1 + w2 + w3)``.

``n`` is *special* when ``n = 2^(m+1) - 4`` with ``m >= 2``; only then are
the bit-pattern families ``P(t, i)``, ``P_i``, ``P^(s, i, j)`` and
``Q(i, j, l)`` defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .binexp import BitString, binom_parity, delta_enumerate, value
from .f2poly import Monomial, Poly


def special_m(n: int) -> Optional[int]:
    """``m`` with ``n == 2^(m+1) - 4`` and ``m >= 2``, else None."""
    k = n + 4
    if k >= 8 and k & (k - 1) == 0:
        return k.bit_length() - 2
    return None


def special_n(m: int) -> int:
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    return (1 << (m + 1)) - 4


def _check_nm(n: Optional[int], m: int) -> int:
    expected = special_n(m)
    if n is not None and n != expected:
        raise ValueError(f"n={n} does not match m={m} (expected n={expected})")
    return expected


def homogeneous_inverse_component(r: int) -> Poly:
    """Degree-``r`` part of ``1/(1 + w2 + w3)`` over GF(2)."""
    terms = []
    for s in range(-(-r // 3), r // 2 + 1):
        if binom_parity(s, 3 * s - r):
            terms.append((3 * s - r, r - 2 * s))
    return Poly(terms)


def generator_g(n: int, r: int) -> Poly:
    if n < 4:
        raise ValueError(f"n must be at least 4, got {n}")
    if r not in (n + 1, n + 2, n + 3):
        raise ValueError(f"r={r} is not one of n+1, n+2, n+3 for n={n}")
    return homogeneous_inverse_component(r)


@dataclass(frozen=True)
class IdealPresentation:
    n: int
    generators: Tuple[Poly, Poly, Poly]
    special: bool
    m: Optional[int] = None

    def nonzero(self) -> List[Poly]:
        return [g for g in self.generators if g]


def ideal_generators(n: int) -> IdealPresentation:
    gens = tuple(generator_g(n, n + d) for d in (1, 2, 3))
    m = special_m(n)
    return IdealPresentation(n, gens, m is not None, m)


# -- bit-pattern families (special n only) -------------------------------

def _poly_from_patterns(patterns, t: int) -> Poly:
    # monomials (p, (t - 2p)/3); patterns giving a fractional or negative q are skipped
    terms = []
    for v in patterns:
        p = value(v)
        num = t - 2 * p
        if num >= 0 and num % 3 == 0:
            terms.append((p, num // 3))
    return Poly(terms)


def build_P(t: int, i: int, m: int) -> Poly:
    """``P(t, i)``: strings ``(v, 0^i)`` with ``v`` in Delta_{m-i}."""
    if not 0 <= i <= m:
        raise ValueError(f"need 0 <= i <= m, got i={i}, m={m}")
    if (t - 2 * ((1 << m) - (1 << i))) % 3:
        raise ValueError(f"t={t} violates t = 2(2^m - 2^i) mod 3 for i={i}, m={m}")
    zeros = (0,) * i
    return _poly_from_patterns((v + zeros for v in delta_enumerate(m - i)), t)


def family_degree(i: int, m: int) -> int:
    return (1 << i) + special_n(m) + 1


def paper_family(m: int) -> List[Poly]:
    """``[P_0, ..., P_m]`` with ``P_i = P(2^i + n + 1, i)``."""
    special_n(m)
    return [build_P(family_degree(i, m), i, m) for i in range(m + 1)]


def delta_bar(i: int, l: int, m: int) -> List[BitString]:
    """Strings ``(v, 0, 0, 1^l, 0^i)`` with ``v`` in Delta_{m-i-l-2}."""
    tail = (0, 0) + (1,) * l + (0,) * i
    return [v + tail for v in delta_enumerate(m - i - l - 2)]


def build_P_hat(s: int, i: int, j: int, m: int) -> Poly:
    if (s - (1 << (m + 1)) + (1 << (i + 1))) % 3:
        raise ValueError(f"s={s} violates s = 2^(m+1) - 2^(i+1) mod 3")
    return _poly_from_patterns(delta_bar(i, j, m), s)


def delta_ijl(i: int, j: int, l: int, m: int) -> List[BitString]:
    """Strings ``(a, b, 1^l, 0^i)`` where ``a`` has length m-j, ``b`` length
    j-i-l, ``(a, b)`` lies in Delta_{m-i-l} and ``b`` is not all ones.

    An empty ``b`` counts as all ones, so the set is empty once l = j - i.
    """
    blen = j - i - l
    if blen < 0:
        return []
    tail = (1,) * l + (0,) * i
    out = []
    for v in delta_enumerate(m - i - l):
        b = v[len(v) - blen:] if blen else ()
        if all(b):
            continue
        out.append(v + tail)
    return out


def q_ij(p: int, i: int, j: int, m: int) -> Optional[int]:
    """w3-exponent paired with ``p`` in ``Q(i, j, l)``; None when not integral."""
    num = 3 * (1 << j) - 2 * (1 << i) + special_n(m) + 1 - 2 * p
    if num < 0 or num % 3:
        return None
    return num // 3


def build_Q(i: int, j: int, l: int, m: int) -> Poly:
    if not (0 <= i < j <= m) or l < 0:
        raise ValueError(f"need 0 <= i < j <= m and l >= 0, got {(i, j, l, m)}")
    terms = []
    for v in delta_ijl(i, j, l, m):
        p = value(v)
        q = q_ij(p, i, j, m)
        if q is not None:
            terms.append((p, q))
    return Poly(terms)


def p_index(i: int, l: int, m: int) -> int:
    """Exponent with expansion ``(1^(m-i-l-2), 0, 0, 1^l, 0^i)``."""
    ones_hi = m - i - l - 2
    if ones_hi < 0:
        raise ValueError(f"no p(i,l) for i={i}, l={l}, m={m}")
    return value((1,) * ones_hi + (0, 0) + (1,) * l + (0,) * i)


def expected_lt(i: int, m: int) -> Monomial:
    """Closed-form leading term of ``P_i``: ``(2^m - 2^i, 2^i - 1)``."""
    return ((1 << m) - (1 << i), (1 << i) - 1)
