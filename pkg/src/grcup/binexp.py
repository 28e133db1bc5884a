"""Binary expansions, binomial parity and the bit-pattern sets.

Bit strings are tuples over {0, 1}, most significant bit first, so
``bits(6, 3) == (1, 1, 0)``.  Index ``j`` in the descriptions below counts
from the least significant end (``x_j`` is the coefficient of ``2**j``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import FrozenSet, List, Tuple

BitString = Tuple[int, ...]


def bits(x: int, k: int) -> BitString:
    """Length-``k`` big-endian binary expansion of ``x``."""
    if k < 0:
        raise ValueError(f"negative length {k}")
    if not 0 <= x < (1 << k):
        raise ValueError(f"{x} does not fit in {k} bits")
    return tuple((x >> j) & 1 for j in range(k - 1, -1, -1))


def value(v: BitString) -> int:
    x = 0
    for b in v:
        x = (x << 1) | b
    return x


def complement(v: BitString) -> BitString:
    return tuple(1 - b for b in v)


def binom_parity(n: int, k: int) -> int:
    """``C(n, k) mod 2``: odd iff the 1-bits of ``k`` are a subset of those of ``n``."""
    if k < 0 or k > n:
        return 0
    return int(k & ~n == 0)


def delta_member(v: BitString) -> bool:
    """Membership in the Delta set of length ``len(v)``.

    Delta strings are exactly the concatenations of the blocks ``(1,)``
    and ``(0, 0)``; this is the recursion ``D_k = 1.D_{k-1} + 00.D_{k-2}``
    with ``D_0 = {()}``, ``D_1 = {(1,)}``.
    """
    i, k = 0, len(v)
    while i < k:
        if v[i] == 1:
            i += 1
        elif i + 1 < k and v[i + 1] == 0:
            i += 2
        else:
            return False
    return True


@dataclass(frozen=True)
class DeltaSet:
    k: int
    members: Tuple[BitString, ...]
    _lookup: FrozenSet[BitString] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_lookup", frozenset(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, v) -> bool:
        return tuple(v) in self._lookup

    def values(self) -> List[int]:
        return sorted(value(v) for v in self.members)


@lru_cache(maxsize=None)
def _delta(k: int) -> Tuple[BitString, ...]:
    if k < 0:
        return ()
    if k == 0:
        return ((),)
    if k == 1:
        return ((1,),)
    out = [(1,) + v for v in _delta(k - 1)] + [(0, 0) + v for v in _delta(k - 2)]
    return tuple(sorted(out, reverse=True))


def delta_enumerate(k: int) -> DeltaSet:
    """All members of Delta_k, in descending numeric order.  Empty for ``k < 0``."""
    return DeltaSet(k, _delta(k))


def n_of(k: int) -> int:
    """The special parameter ``2^(k+1) - 4``."""
    return (1 << (k + 1)) - 4


def _bit_condition(s: int, k: int) -> bool:
    # if s_j == 0 then s_{j+1} == 1, for j + 1 < k
    for j in range(k - 1):
        if not (s >> j) & 1 and not (s >> (j + 1)) & 1:
            return False
    return True


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def s_set(k: int) -> List[int]:
    if k < 2:
        raise ValueError("k must be at least 2")
    r = n_of(k) + 2
    out = []
    for s in range(_ceil_div(r, 3), r // 2 + 1):
        if _bit_condition(s, k):
            assert (s >> (k - 1)) & 1, f"top bit of {s} unset"
            out.append(s)
    return out


def s_prime_set(k: int) -> List[int]:
    if k < 2:
        raise ValueError("k must be at least 2")
    r = n_of(k) + 3
    out = []
    for s in range(_ceil_div(r, 3), r // 2 + 1):
        if s & 1 and _bit_condition(s, k):
            assert (s >> (k - 1)) & 1, f"top bit of {s} unset"
            out.append(s)
    return out


def p_set(k: int) -> List[int]:
    return sorted(3 * s - (n_of(k) + 2) for s in s_set(k))


def p_prime_set(k: int) -> List[int]:
    return sorted(3 * s - (n_of(k) + 3) for s in s_prime_set(k))
