"""Kostant's partition function for g2 and its q-analog, three ways.

``qpartition`` evaluates the quadruple-sum closed form of the q-analog,
``partition_witnesses``/``qpartition_bruteforce`` enumerate the actual
decompositions into positive roots, and ``tarski_g``/``tarski_h``/
``partition_tarski`` give Tarski's classical piecewise values at q = 1.
The three agree everywhere; the test suite holds them to that.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, NamedTuple

from .errors import InternalConsistencyError
from .qpoly import QPoly
from .rootsys import RootCoord


class PartitionWitness(NamedTuple):
    """Multiplicities of the six positive roots in one decomposition.

    Fields follow the root order a1, a2, a1+a2, 2a1+a2, 3a1+a2, 3a1+2a2.
    """

    n1: int
    n2: int
    n3: int
    n4: int
    n5: int
    n6: int

    @property
    def total_roots(self) -> int:
        return self.n1 + self.n2 + self.n3 + self.n4 + self.n5 + self.n6


def partition_witnesses(v: RootCoord) -> Iterator[PartitionWitness]:
    """Yield every decomposition of v into positive roots.

    Loops run over the non-simple roots highest first; the simple-root
    counts n1, n2 are then forced by the target coordinates. The loop
    bounds keep every intermediate remainder nonnegative, so each tuple
    yielded is a genuine witness.
    """
    m, n = v
    if m < 0 or n < 0:
        return
    for n6 in range(min(m // 3, n // 2) + 1):
        m6, r6 = m - 3 * n6, n - 2 * n6
        for n5 in range(min(m6 // 3, r6) + 1):
            m5, r5 = m6 - 3 * n5, r6 - n5
            for n4 in range(min(m5 // 2, r5) + 1):
                m4, r4 = m5 - 2 * n4, r5 - n4
                for n3 in range(min(m4, r4) + 1):
                    yield PartitionWitness(m4 - n3, r4 - n3, n3, n4, n5, n6)


def qpartition_bruteforce(v: RootCoord) -> QPoly:
    """Definitional q-analog: one q^(number of roots) per witness."""
    m, n = v
    if m < 0 or n < 0:
        return QPoly()
    counts = [0] * (m + n + 1)
    for w in partition_witnesses(v):
        counts[w.total_roots] += 1
    return QPoly(counts)


@lru_cache(maxsize=None)
def qpartition(v: RootCoord) -> QPoly:
    """q-analog of Kostant's partition function for g2, closed form.

    Evaluates the quadruple sum over counts (i, j, k) of the roots
    3a1+2a2, 3a1+a2, 2a1+a2; the innermost count l of a1+a2 contributes
    the contiguous exponent run m+n-4i-3j-2k-l for l = 0..L, which is
    accumulated through a difference array instead of term by term.
    """
    m, n = v
    if m < 0 or n < 0:
        return QPoly()
    diff = [0] * (m + n + 2)
    for i in range(min(m // 3, n // 2) + 1):
        mi, ni = m - 3 * i, n - 2 * i
        for j in range(min(mi // 3, ni) + 1):
            mj, nj = mi - 3 * j, ni - j
            for k in range(min(mj // 2, nj) + 1):
                top = m + n - 4 * i - 3 * j - 2 * k
                span = min(mj - 2 * k, nj - k)
                diff[top - span] += 1
                diff[top + 1] -= 1
    coeffs = []
    acc = 0
    for d in diff[:-1]:
        acc += d
        coeffs.append(acc)
    return QPoly(coeffs)


def tarski_g(k: int) -> int:
    """Tarski's g: the partition count in the region m <= n, by residue mod 6.

    The division by 432 is performed last and must be exact; a remainder
    means the polynomial data was mistranscribed.
    """
    if k < -2:
        raise ValueError(f"tarski_g is defined for k >= -2, got {k}")
    r = k % 6
    if r == 0:
        num = (k + 6) * (k**3 + 14 * k * k + 54 * k + 72)
    elif r == 1:
        num = (k + 5) ** 2 * (k * k + 10 * k + 13)
    elif r == 2:
        num = (k + 4) * (k**3 + 16 * k * k + 74 * k + 68)
    elif r == 3:
        num = (k + 3) ** 2 * (k + 5) * (k + 9)
    elif r == 4:
        num = (k + 2) * (k + 8) * (k * k + 10 * k + 22)
    else:
        num = (k + 1) * (k + 5) * (k + 7) ** 2
    value, rem = divmod(num, 432)
    if rem:
        raise InternalConsistencyError(f"g({k}) = {num}/432 is not an integer")
    if value < 0:
        raise InternalConsistencyError(f"g({k}) = {value} is negative")
    return value


def tarski_h(k: int) -> int:
    """Tarski's h: the partition count in the region m >= 3n, by parity of k."""
    if k < -2:
        raise ValueError(f"tarski_h is defined for k >= -2, got {k}")
    if k % 2 == 0:
        num = (k + 2) * (k + 4) * (k * k + 6 * k + 6)
    else:
        num = (k + 1) * (k + 3) ** 2 * (k + 5)
    value, rem = divmod(num, 48)
    if rem:
        raise InternalConsistencyError(f"h({k}) = {num}/48 is not an integer")
    if value < 0:
        raise InternalConsistencyError(f"h({k}) = {value} is negative")
    return value


def partition_tarski(v: RootCoord) -> int:
    """Kostant's partition function at q = 1 via Tarski's five regions.

    Adjacent regions overlap on their boundary lines (m = n, 2m = 3n,
    m = 2n, m = 3n) and agree there; dispatch takes the first match.
    """
    m, n = v
    if m < 0 or n < 0:
        return 0
    if m <= n:
        return tarski_g(m)
    if 2 * m <= 3 * n:  # n <= m <= 3n/2
        return tarski_g(m) - tarski_h(m - n - 1)
    if m <= 2 * n:  # 3n/2 <= m <= 2n
        return tarski_h(n) - tarski_g(3 * n - m - 1) + tarski_h(2 * n - m - 2)
    if m <= 3 * n:  # 2n <= m <= 3n
        return tarski_h(n) - tarski_g(3 * n - m - 1)
    return tarski_h(n)  # 3n <= m
