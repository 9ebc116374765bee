"""Ground-truth brute force: count monodromy tuples in the symmetric group.

The count is (1/d!) times the number of tuples (t_1, ..., t_r, s) with each
t_i a transposition, s of cycle type mu, and t_r ... t_1 s the identity,
optionally restricted to tuples whose entries generate a transitive group.
The search is deliberately naive: no pruning, transitivity tested only on
complete tuples, division by d! once at the end.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import comb, factorial

from .partitions import Partition, as_partition, conj_class_size

Perm = tuple[int, ...]


class WorkBoundExceeded(RuntimeError):
    """The requested search is larger than the configured work bound."""


def cycle_type(perm: Perm) -> Partition:
    """Cycle type of a permutation of {0, ..., d-1} in one-line notation."""
    d = len(perm)
    seen = [False] * d
    lengths = []
    for start in range(d):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def permutations_of_cycle_type(mu) -> list[Perm]:
    """All permutations of the given cycle type, by exhaustive filtering."""
    mu = as_partition(mu)
    d = sum(mu)
    return [p for p in permutations(range(d)) if cycle_type(p) == mu]


def is_transitive(gens: list[Perm], d: int) -> bool:
    """True iff the group generated acts with a single orbit on {0, ..., d-1}."""
    if d < 1:
        raise ValueError("d must be positive")
    parent = list(range(d))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in gens:
        if len(gen) != d:
            raise ValueError("generator acts on the wrong number of points")
        for i, j in enumerate(gen):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    return sum(1 for x in range(d) if find(x) == x) == 1


def count_covers_bruteforce(
    d: int,
    r: int,
    mu,
    connected: bool = False,
    work_bound: int = 10**8,
) -> Fraction:
    """Weighted count of factorizations t_r ... t_1 s = id by direct search.

    Refuses (rather than truncates) when class size times C(d,2)^r exceeds
    the work bound.
    """
    mu = as_partition(mu)
    if sum(mu) != d or d < 1:
        raise ValueError(f"{mu} is not a partition of {d} >= 1")
    if r < 0:
        raise ValueError("r must be non-negative")
    # dominant DFS term plus the one-off group-indexing cost
    work = conj_class_size(mu) * comb(d, 2) ** r + factorial(d) * (comb(d, 2) + 1)
    if work > work_bound:
        raise WorkBoundExceeded(
            f"search size {work} exceeds work bound {work_bound} for d={d}, r={r}, mu={mu}"
        )

    transpositions = [(a, b) for a in range(d) for b in range(a + 1, d)]
    trans_perms: list[Perm] = []
    for a, b in transpositions:
        img = list(range(d))
        img[a], img[b] = b, a
        trans_perms.append(tuple(img))

    # Index the full symmetric group once and tabulate left multiplication by
    # each transposition; the search then walks integer indices.
    perms = list(permutations(range(d)))
    index = {p: i for i, p in enumerate(perms)}
    lmul = [
        [index[tuple(t[p[i]] for i in range(d))] for p in perms] for t in trans_perms
    ]
    id_idx = index[tuple(range(d))]
    n_trans = len(trans_perms)

    total = 0
    for sigma in permutations_of_cycle_type(mu):
        if connected:
            total += _search_connected(
                r, index[sigma], id_idx, n_trans, lmul, sigma, transpositions, d
            )
        else:
            total += _search_all(r, index[sigma], id_idx, n_trans, lmul)
    return Fraction(total, factorial(d))


def _search_all(r: int, start: int, id_idx: int, n_trans: int, lmul) -> int:
    def rec(depth: int, prod_idx: int) -> int:
        if depth == r:
            return 1 if prod_idx == id_idx else 0
        count = 0
        for t in range(n_trans):
            count += rec(depth + 1, lmul[t][prod_idx])
        return count

    return rec(0, start)


def _search_connected(
    r: int,
    start: int,
    id_idx: int,
    n_trans: int,
    lmul,
    sigma: Perm,
    transpositions: list[tuple[int, int]],
    d: int,
) -> int:
    # Collapse the orbits of sigma once; a complete tuple is transitive iff
    # its transpositions connect those orbits.
    comp = list(range(d))
    for i, j in enumerate(sigma):
        ri, rj = comp[i], comp[j]
        if ri != rj:
            comp = [rj if c == ri else c for c in comp]
    labels = {c: idx for idx, c in enumerate(dict.fromkeys(comp))}
    comp = [labels[c] for c in comp]
    n_comp = len(labels)
    edge = [(comp[a], comp[b]) for a, b in transpositions]

    path: list[int] = []

    def transitive_solution() -> int:
        if n_comp == 1:
            return 1
        parent = list(range(n_comp))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        remaining = n_comp
        for t in path:
            a, b = edge[t]
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
                remaining -= 1
                if remaining == 1:
                    return 1
        return 1 if remaining == 1 else 0

    def rec(depth: int, prod_idx: int) -> int:
        if depth == r:
            if prod_idx != id_idx:
                return 0
            return transitive_solution()
        count = 0
        for t in range(n_trans):
            path.append(t)
            count += rec(depth + 1, lmul[t][prod_idx])
            path.pop()
        return count

    return rec(0, start)
