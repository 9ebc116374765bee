"""Integer partitions, multi-indices, and their elementary combinatorics.

A partition is a weakly decreasing tuple of positive integers; the empty
tuple is the empty partition.  A multi-index is any finite sequence of
positive integers, order irrelevant for every quantity defined here.
"""

from __future__ import annotations

from collections import Counter
from math import comb, factorial
from typing import Iterable, Sequence

Partition = tuple[int, ...]


def is_partition(parts: Sequence[int]) -> bool:
    """True iff parts is weakly decreasing with all entries >= 1."""
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate and return a canonical partition tuple."""
    t = tuple(parts)
    if not is_partition(t):
        raise ValueError(f"not a partition: {t!r}")
    return t


def sort_to_partition(k: Iterable[int]) -> Partition:
    """Canonical partition underlying a multi-index (descending sort)."""
    t = tuple(sorted(k, reverse=True))
    if not all(isinstance(p, int) and p >= 1 for p in t):
        raise ValueError(f"not a multi-index of positive integers: {t!r}")
    return t


def partitions_of(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order.

    The order is the canonical enumeration order throughout the package so
    that derived artifacts (caches, reports, tables) are byte-stable.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    cap = n if max_part is None else max_part

    def gen(rem: int, largest: int):
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, largest), 0, -1):
            for rest in gen(rem - first, first):
                yield (first, *rest)

    return list(gen(n, cap))


def multiplicities(lam: Sequence[int]) -> Counter:
    """Part multiplicities m_n."""
    return Counter(lam)


def centralizer_order(lam: Sequence[int]) -> int:
    """prod n^{m_n} m_n!  (order of the centralizer of a permutation of this cycle type)."""
    z = 1
    for n, m in Counter(lam).items():
        z *= n**m * factorial(m)
    return z


def conjugate(lam: Partition) -> Partition:
    """Transposed Young diagram."""
    lam = as_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def hook_product(lam: Partition) -> int:
    """Product of hook lengths arm + leg + 1 over all boxes; 1 for the empty diagram."""
    lam = as_partition(lam)
    conj = conjugate(lam)
    out = 1
    for i, row in enumerate(lam):
        for j in range(row):
            out *= (row - j - 1) + (conj[j] - i - 1) + 1
    return out


def dim_irrep(lam: Partition) -> int:
    """|lam|! / hook product: dimension of the irreducible, also the standard tableaux count."""
    lam = as_partition(lam)
    n = sum(lam)
    num, den = factorial(n), hook_product(lam)
    assert num % den == 0
    return num // den


def conj_class_size(mu: Partition) -> int:
    """Number of permutations of cycle type mu in the symmetric group on |mu| points."""
    mu = as_partition(mu)
    num, den = factorial(sum(mu)), centralizer_order(mu)
    assert num % den == 0
    return num // den


def content_sum(lam: Partition) -> int:
    """Sum of box contents j - i, equal to sum lam_i (lam_i - 2i + 1) / 2; always an integer."""
    lam = as_partition(lam)
    total = sum(p * (p - 2 * i + 1) for i, p in enumerate(lam, start=1))
    assert total % 2 == 0
    return total // 2


def leg_sum(lam: Partition) -> int:
    """Sum of leg lengths over all boxes, i.e. sum (i-1) lam_i; also sum binom(lam'_j, 2)."""
    lam = as_partition(lam)
    return sum((i - 1) * p for i, p in enumerate(lam, start=1))


def aut_count(k: Sequence[int]) -> int:
    """Number of automorphisms of a multi-index: product of part-multiplicity factorials."""
    out = 1
    for m in Counter(k).values():
        out *= factorial(m)
    return out


def ramification(g: int, k: Sequence[int]) -> int:
    """Number of simple branch points forced by genus g and profile k: 2g - 2 + len(k) + sum(k).

    The empty profile is rejected: the covering theory indexes nonempty
    ramification profiles only.
    """
    if g < 0:
        raise ValueError("genus must be non-negative")
    k = tuple(k)
    if not k:
        raise ValueError("empty ramification profile")
    if any(p < 1 for p in k):
        raise ValueError(f"profile parts must be positive: {k!r}")
    return 2 * g - 2 + len(k) + sum(k)


def binomial(n: int, k: int) -> int:
    """binom(n, k), zero outside the usual range."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)
