"""Sparse polynomials in GF(2)[w2, w3].

A polynomial is a finite set of monomials ``(p, q)`` standing for
``w2^p * w3^q``; presence of a monomial means its coefficient is 1.
Monomials are ordered lexicographically, which for ``(p, q)`` tuples is
exactly Python's native tuple order.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from typing import Optional, Tuple

Monomial = Tuple[int, int]

# Exponents are kept within a signed 32-bit range; anything larger is
# reported instead of silently carried as a bignum.
MAX_EXPONENT = 2**31 - 1

ONE: Monomial = (0, 0)


def degree(m: Monomial) -> int:
    """Cohomological degree of ``w2^p w3^q``, i.e. ``2p + 3q``."""
    return 2 * m[0] + 3 * m[1]


def mono_cmp(a: Monomial, b: Monomial) -> int:
    """Lex comparison: -1, 0 or 1."""
    return (a > b) - (a < b)


def lcm_mono(a: Monomial, b: Monomial) -> Monomial:
    return (max(a[0], b[0]), max(a[1], b[1]))


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff ``a`` divides ``b``."""
    return a[0] <= b[0] and a[1] <= b[1]


def _check_mono(m) -> Monomial:
    p, q = m
    if not (isinstance(p, int) and isinstance(q, int)):
        raise TypeError(f"monomial exponents must be integers, got {m!r}")
    if p < 0 or q < 0:
        raise ValueError(f"negative exponent in monomial {m!r}")
    if p > MAX_EXPONENT or q > MAX_EXPONENT:
        raise OverflowError(f"exponent overflow in monomial {m!r}")
    return (p, q)


class Poly:
    """Immutable GF(2) polynomial in two variables.

    ``Poly(terms)`` treats ``terms`` as a set: repeated monomials collapse.
    Use :meth:`from_sum` to add monomials with cancellation instead.
    Terms are stored sorted in descending lex order.
    """

    __slots__ = ("_set", "_terms", "_hash")

    def __init__(self, terms: Iterable[Monomial] = ()):
        s = frozenset(_check_mono(m) for m in terms)
        self._init(s)

    def _init(self, s: frozenset) -> None:
        self._set = s
        self._terms = tuple(sorted(s, reverse=True))
        self._hash = None

    @classmethod
    def _make(cls, s) -> "Poly":
        obj = cls.__new__(cls)
        obj._init(frozenset(s))
        return obj

    @classmethod
    def from_sum(cls, terms: Iterable[Monomial]) -> "Poly":
        """Sum of monomials over GF(2); pairs of equal monomials cancel."""
        acc: set = set()
        for m in terms:
            acc ^= {_check_mono(m)}
        return cls._make(acc)

    @classmethod
    def monomial(cls, p: int, q: int = 0) -> "Poly":
        return cls(((p, q),))

    # -- basic protocol ------------------------------------------------

    @property
    def terms(self) -> Tuple[Monomial, ...]:
        """Monomials in strictly descending lex order."""
        return self._terms

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __contains__(self, m) -> bool:
        return tuple(m) in self._set

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self._set == other._set

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._set)
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    def __getstate__(self):
        return self._terms

    def __setstate__(self, state):
        self._init(frozenset(state))

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        return add(self, other)

    def __mul__(self, other: "Poly") -> "Poly":
        return mul(self, other)

    def __pow__(self, k: int) -> "Poly":
        return power(self, k)

    @property
    def lt(self) -> Monomial:
        return leading_term(self)

    def shift(self, m: Monomial) -> "Poly":
        """Multiply by the monomial ``m``."""
        a, b = m
        if not self._terms:
            return self
        if self._terms[0][0] + a > MAX_EXPONENT or self.max_q() + b > MAX_EXPONENT:
            raise OverflowError("exponent overflow in monomial shift")
        return Poly._make((p + a, q + b) for p, q in self._terms)

    def max_q(self) -> int:
        return max((q for _, q in self._terms), default=0)

    def degrees(self) -> Tuple[int, ...]:
        """Sorted distinct cohomological degrees of the terms."""
        return tuple(sorted({degree(m) for m in self._terms}))

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def component(self, d: int) -> "Poly":
        """Homogeneous component of cohomological degree ``d``."""
        return Poly._make(m for m in self._terms if degree(m) == d)

    def truncate(self, cap: Optional[int]) -> "Poly":
        """Drop every term of cohomological degree above ``cap``."""
        if cap is None:
            return self
        return Poly._make(m for m in self._terms if degree(m) <= cap)


ZERO = Poly()
UNIT = Poly((ONE,))


def add(F: Poly, G: Poly) -> Poly:
    return Poly._make(F._set ^ G._set)


def mul(F: Poly, G: Poly, cap: Optional[int] = None) -> Poly:
    """Product over GF(2), optionally truncated above degree ``cap``."""
    if not F or not G:
        return ZERO
    if (F._terms[0][0] + G._terms[0][0] > MAX_EXPONENT
            or F.max_q() + G.max_q() > MAX_EXPONENT):
        raise OverflowError("exponent overflow in polynomial product")
    acc: set = set()
    for p, q in F._terms:
        for r, s in G._terms:
            m = (p + r, q + s)
            if cap is not None and 2 * m[0] + 3 * m[1] > cap:
                continue
            if m in acc:
                acc.remove(m)
            else:
                acc.add(m)
    return Poly._make(acc)


def power(F: Poly, k: int, cap: Optional[int] = None) -> Poly:
    """``F**k`` by repeated squaring."""
    if k < 0:
        raise ValueError("negative exponent")
    result = UNIT.truncate(cap)
    base = F
    while k:
        if k & 1:
            result = mul(result, base, cap)
        k >>= 1
        if k:
            base = mul(base, base, cap)
    return result


def leading_term(F: Poly) -> Monomial:
    if not F._terms:
        raise ValueError("no leading term: zero polynomial")
    return F._terms[0]


def s_polynomial(F: Poly, G: Poly) -> Poly:
    if not F or not G:
        raise ValueError("S-polynomial of a zero polynomial")
    a, b = F._terms[0], G._terms[0]
    l = lcm_mono(a, b)
    return add(F.shift((l[0] - a[0], l[1] - a[1])),
               G.shift((l[0] - b[0], l[1] - b[1])))


def reduce_step(F: Poly, G: Poly) -> Tuple[Poly, Monomial]:
    """One division step; also returns the monomial quotient used."""
    g = leading_term(G)
    for t in F._terms:
        if divides(g, t):
            u = (t[0] - g[0], t[1] - g[1])
            return add(F, G.shift(u)), u
    raise ValueError("not reducible: no term of F is divisible by LT(G)")


def reduce_once(F: Poly, G: Poly) -> Poly:
    """Eliminate the lex-greatest term of ``F`` divisible by ``LT(G)``."""
    return reduce_step(F, G)[0]


def normal_form(F: Poly, basis: Sequence[Poly]) -> Poly:
    """Remainder of ``F`` on division by ``basis``.

    The lex-greatest reducible monomial is always reduced first, using the
    first basis element (in list order) whose leading term divides it.
    Terms introduced by a step are smaller than the term eliminated, so
    once the current maximum is irreducible it is final.
    """
    lts = [leading_term(g) for g in basis]
    work = set(F._set)
    rem = set()
    while work:
        t = max(work)
        for g, (a, b) in zip(basis, lts):
            if a <= t[0] and b <= t[1]:
                da, db = t[0] - a, t[1] - b
                work.symmetric_difference_update([(p + da, q + db) for p, q in g._terms])
                break
        else:
            work.remove(t)
            rem.add(t)
    return Poly._make(rem)


# -- text format -------------------------------------------------------

def _format_term(m: Monomial) -> str:
    p, q = m
    if p == 0 and q == 0:
        return "1"
    parts = []
    if p:
        parts.append("w2" if p == 1 else f"w2^{p}")
    if q:
        parts.append("w3" if q == 1 else f"w3^{q}")
    return "*".join(parts)


def format_poly(F: Poly) -> str:
    if not F:
        return "0"
    return " + ".join(_format_term(m) for m in F.terms)


class PolyParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(?P<var>w[23])|(?P<int>\d+)|(?P<op>[+*^]))")


def parse_poly(text: str) -> Poly:
    """Parse the ``w2^P*w3^Q + ...`` text form; ``0`` is the zero polynomial."""
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        mt = _TOKEN.match(text, pos)
        if mt is None:
            raise PolyParseError(f"unexpected character {text[pos]!r}", pos)
        kind = mt.lastgroup
        tokens.append((kind, mt.group(kind), mt.start(kind)))
        pos = mt.end()
    tokens.append(("end", "", len(text)))

    i = 0

    def peek():
        return tokens[i]

    def expect_int():
        nonlocal i
        kind, val, at = tokens[i]
        if kind != "int":
            raise PolyParseError("expected integer", at)
        i += 1
        return int(val)

    def factor(exps):
        nonlocal i
        kind, val, at = tokens[i]
        if kind != "var":
            raise PolyParseError("expected w2 or w3", at)
        i += 1
        e = 1
        if peek()[:2] == ("op", "^"):
            i += 1
            e = expect_int()
        slot = 0 if val == "w2" else 1
        if exps[slot] is not None:
            raise PolyParseError(f"repeated variable {val}", at)
        exps[slot] = e

    def term():
        nonlocal i
        kind, val, at = tokens[i]
        if kind == "int":
            i += 1
            if val == "1":
                return ONE
            if val == "0":
                return None
            raise PolyParseError(f"coefficient {val} not in GF(2)", at)
        exps = [None, None]
        factor(exps)
        while peek()[:2] == ("op", "*"):
            i += 1
            factor(exps)
        return (exps[0] or 0, exps[1] or 0)

    monos = []
    while True:
        m = term()
        if m is not None:
            monos.append(m)
        kind, val, at = peek()
        if kind == "end":
            break
        if (kind, val) != ("op", "+"):
            raise PolyParseError(f"unexpected token {val!r}", at)
        i += 1
    try:
        return Poly.from_sum(monos)
    except OverflowError as exc:
        raise PolyParseError(str(exc), 0) from exc
