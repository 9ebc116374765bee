"""Connected Hurwitz numbers by four independent routes.

* cut-and-join recursion over ramification profiles (the workhorse),
* character sums for disconnected counts, followed by a series logarithm,
* operator powers for disconnected counts, followed by a series logarithm,
* closed forms for one-part and genus-zero two-part profiles.

All arithmetic is exact rational end to end; no floating point appears in
this module.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Sequence

from .partitions import (
    Partition,
    as_partition,
    aut_count,
    centralizer_order,
    content_sum,
    dim_irrep,
    partitions_of,
    ramification,
    sort_to_partition,
)
from .symfunc import PowerSumPoly, character, cut_and_join

SeriesKey = tuple[int, int, Partition]


class GenSeries:
    """Truncated generating series with entries indexed by (d, r, mu).

    The entry at (d, r, mu) is the coefficient of Q^d (beta^r / r!) p_mu, so
    the beta grading is a divided-power grading: products pick up binomial
    weights in r.  Keys outside the truncation bounds are dropped.
    """

    __slots__ = ("d_max", "r_max", "coeffs")

    def __init__(self, d_max: int, r_max: int, coeffs: dict[SeriesKey, Fraction] | None = None):
        if d_max < 0 or r_max < 0:
            raise ValueError("bounds must be non-negative")
        self.d_max = d_max
        self.r_max = r_max
        self.coeffs: dict[SeriesKey, Fraction] = {}
        if coeffs:
            for (d, r, mu), c in coeffs.items():
                self.set(d, r, mu, c)

    def set(self, d: int, r: int, mu: Iterable[int], value) -> None:
        mu = as_partition(mu)
        if sum(mu) != d:
            raise ValueError(f"key partition {mu} does not have size {d}")
        if d > self.d_max or r > self.r_max:
            return
        value = Fraction(value)
        key = (d, r, mu)
        if value:
            self.coeffs[key] = value
        else:
            self.coeffs.pop(key, None)

    def __getitem__(self, key: SeriesKey) -> Fraction:
        d, r, mu = key
        return self.coeffs.get((d, r, as_partition(mu)), Fraction(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GenSeries):
            return NotImplemented
        return (
            self.d_max == other.d_max
            and self.r_max == other.r_max
            and self.coeffs == other.coeffs
        )

    def items(self):
        """Entries in deterministic (d, r, reverse-lex mu) order."""
        return sorted(
            self.coeffs.items(),
            key=lambda kv: (kv[0][0], kv[0][1], tuple(-p for p in kv[0][2])),
        )

    def __mul__(self, other: "GenSeries") -> "GenSeries":
        if (self.d_max, self.r_max) != (other.d_max, other.r_max):
            raise ValueError("series bounds must agree")
        out = GenSeries(self.d_max, self.r_max)
        out.coeffs = _mul_coeffs(self.coeffs, other.coeffs, self.d_max, self.r_max)
        return out

    def log(self) -> "GenSeries":
        """Series logarithm, requiring constant term exactly 1.

        Uses log(1 + X) = sum_m (-1)^(m+1) X^m / m; every term of X has
        d + r >= 1, so the sum terminates within the truncation bounds.
        """
        if self[(0, 0, ())] != 1:
            raise ValueError("log requires constant term 1")
        x = dict(self.coeffs)
        del x[(0, 0, ())]
        out: dict[SeriesKey, Fraction] = {}
        power = dict(x)
        m = 1
        while power:
            sign = Fraction((-1) ** (m + 1), m)
            for key, c in power.items():
                s = out.get(key, Fraction(0)) + sign * c
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
            if m > self.d_max + self.r_max:
                break
            power = _mul_coeffs(power, x, self.d_max, self.r_max)
            m += 1
        res = GenSeries(self.d_max, self.r_max)
        res.coeffs = out
        return res

    def exp(self) -> "GenSeries":
        """Series exponential, requiring constant term exactly 0."""
        if self[(0, 0, ())] != 0:
            raise ValueError("exp requires constant term 0")
        out: dict[SeriesKey, Fraction] = {(0, 0, ()): Fraction(1)}
        power: dict[SeriesKey, Fraction] = dict(self.coeffs)
        m = 1
        while power:
            inv = Fraction(1, factorial(m))
            for key, c in power.items():
                s = out.get(key, Fraction(0)) + inv * c
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
            if m > self.d_max + self.r_max:
                break
            power = _mul_coeffs(power, self.coeffs, self.d_max, self.r_max)
            m += 1
        res = GenSeries(self.d_max, self.r_max)
        res.coeffs = out
        return res


def _mul_coeffs(
    a: dict[SeriesKey, Fraction],
    b: dict[SeriesKey, Fraction],
    d_max: int,
    r_max: int,
) -> dict[SeriesKey, Fraction]:
    """Divided-power product of coefficient maps, truncated to the bounds."""
    by_d: dict[int, list[tuple[SeriesKey, Fraction]]] = {}
    for key, c in b.items():
        by_d.setdefault(key[0], []).append((key, c))
    out: dict[SeriesKey, Fraction] = {}
    for (d1, r1, mu1), c1 in a.items():
        for d2 in range(d_max - d1 + 1):
            for (key2, c2) in by_d.get(d2, ()):
                _, r2, mu2 = key2
                r = r1 + r2
                if r > r_max:
                    continue
                key = (d1 + d2, r, tuple(sorted(mu1 + mu2, reverse=True)))
                s = out.get(key, Fraction(0)) + comb(r, r1) * c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
    return out


# ---------------------------------------------------------------------------
# disconnected counts

def disconnected_count_charsum(d: int, r: int, mu: Iterable[int]) -> Fraction:
    """Weighted disconnected cover count via a character sum.

    Sum over lam of d of (dim lam / d!) (content_sum lam)^r chi^lam_mu / z_mu.
    """
    mu = as_partition(mu)
    if sum(mu) != d or d < 1:
        raise ValueError(f"{mu} is not a partition of {d} >= 1")
    if r < 0:
        raise ValueError("r must be non-negative")
    z = centralizer_order(mu)
    total = Fraction(0)
    for lam in partitions_of(d):
        chi = character(lam, mu)
        if not chi:
            continue
        total += Fraction(dim_irrep(lam), factorial(d)) * Fraction(content_sum(lam)) ** r * Fraction(chi, z)
    return total


@lru_cache(maxsize=None)
def _operator_power(d: int, r: int) -> PowerSumPoly:
    """r-fold cut-and-join image of p_1^d (no 1/d! normalization)."""
    if r == 0:
        return PowerSumPoly.p(1) ** d if d else PowerSumPoly.one()
    return cut_and_join(_operator_power(d, r - 1))


def disconnected_count_operator(d: int, r: int, mu: Iterable[int]) -> Fraction:
    """Weighted disconnected cover count as a coefficient of an operator power.

    Coefficient of p_mu in (1/d!) (cut-and-join)^r p_1^d; agrees with the
    character-sum route on every input.
    """
    mu = as_partition(mu)
    if sum(mu) != d:
        raise ValueError(f"{mu} is not a partition of {d}")
    if r < 0:
        raise ValueError("r must be non-negative")
    return _operator_power(d, r).coefficient(mu) / factorial(d)


def covering_series(d_max: int, r_max: int) -> GenSeries:
    """Generating series of disconnected counts, built by operator powers."""
    out = GenSeries(d_max, r_max)
    for d in range(d_max + 1):
        for r in range(r_max + 1):
            poly = _operator_power(d, r)
            inv = Fraction(1, factorial(d))
            for mu, c in poly.terms.items():
                out.set(d, r, mu, c * inv)
    return out


def covering_series_charsum(d_max: int, r_max: int) -> GenSeries:
    """Generating series of disconnected counts, built by character sums."""
    out = GenSeries(d_max, r_max)
    out.set(0, 0, (), 1)
    for d in range(1, d_max + 1):
        for r in range(r_max + 1):
            for mu in partitions_of(d):
                out.set(d, r, mu, disconnected_count_charsum(d, r, mu))
    return out


# Grow-on-demand store of logged covering series, one per construction route.
_log_tables: dict[str, GenSeries] = {}
_log_lock = threading.Lock()

_SERIES_BUILDERS = {
    "operator": covering_series,
    "charsum": covering_series_charsum,
}


def _log_table(d_max: int, r_max: int, method: str) -> GenSeries:
    with _log_lock:
        cur = _log_tables.get(method)
        if cur is not None and cur.d_max >= d_max and cur.r_max >= r_max:
            return cur
        nd = max(d_max, cur.d_max if cur else 0)
        nr = max(r_max, cur.r_max if cur else 0)
        table = _SERIES_BUILDERS[method](nd, nr).log()
        _log_tables[method] = table
        return table


def connected_from_log(g: int, mu: Iterable[int], method: str = "operator") -> Fraction:
    """Connected Hurwitz number read off the logarithm of the covering series."""
    mu = sort_to_partition(mu)
    r = ramification(g, mu)
    table = _log_table(sum(mu), r, method)
    return table[(sum(mu), r, mu)]


# ---------------------------------------------------------------------------
# persistent value cache

class CacheConflictError(ValueError):
    """Two sources disagree about a cached Hurwitz value."""


def _cache_sort_key(item: tuple[tuple[int, Partition], Fraction]):
    (g, mu), _ = item
    r = 2 * g - 2 + len(mu) + sum(mu)
    return (r, g, sum(mu), tuple(-p for p in mu))


@dataclass
class HurwitzCache:
    """Memo map (g, mu) -> value for the cut-and-join recursion.

    A key, once inserted, is never overwritten with a different value;
    disagreement is a hard error.  The persistence format is line-delimited
    JSON, sorted so saves are byte-for-byte reproducible.
    """

    entries: dict[tuple[int, Partition], Fraction] = field(default_factory=dict)
    path: str | None = None
    dirty: bool = False
    missing_on_load: bool = False
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def get(self, g: int, mu: Partition) -> Fraction | None:
        return self.entries.get((g, mu))

    def insert(self, g: int, mu: Partition, value: Fraction) -> None:
        key = (g, as_partition(mu))
        value = Fraction(value)
        with self._lock:
            old = self.entries.get(key)
            if old is None:
                self.entries[key] = value
                self.dirty = True
            elif old != value:
                raise CacheConflictError(
                    f"cache conflict at g={g}, mu={mu}: {old} != {value}"
                )

    def merge(self, other: "HurwitzCache") -> None:
        for (g, mu), value in other.entries.items():
            self.insert(g, mu, value)

    def __len__(self) -> int:
        return len(self.entries)

    def save(self, path: str | None = None) -> str:
        path = path or self.path
        if not path:
            raise ValueError("no cache path configured")
        parent = os.path.dirname(path)
        if parent:
            os.makedirs(parent, exist_ok=True)
        lines = []
        for (g, mu), value in sorted(self.entries.items(), key=lambda it: _cache_sort_key(it)):
            rec = {"g": g, "mu": list(mu), "num": str(value.numerator), "den": str(value.denominator)}
            lines.append(json.dumps(rec, separators=(",", ":")))
        with open(path, "w", encoding="ascii") as fh:
            fh.write("\n".join(lines))
            if lines:
                fh.write("\n")
        self.path = path
        self.dirty = False
        return path


def cache_load(path: str) -> HurwitzCache:
    """Load a cache file; a missing file yields an empty cache with a warning flag."""
    cache = HurwitzCache(path=path)
    if not os.path.exists(path):
        cache.missing_on_load = True
        return cache
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
                g = int(rec["g"])
                mu = as_partition(int(p) for p in rec["mu"])
                num, den = int(rec["num"]), int(rec["den"])
                if den <= 0:
                    raise ValueError("denominator must be positive")
            except CacheConflictError:
                raise
            except Exception as exc:
                raise ValueError(f"{path}:{lineno}: malformed cache line: {exc}") from exc
            cache.insert(g, mu, Fraction(num, den))
    cache.dirty = False
    return cache


def cache_save(cache: HurwitzCache, path: str) -> str:
    return cache.save(path)


# ---------------------------------------------------------------------------
# cut-and-join recursion

def hurwitz_number(g: int, mu: Iterable[int], cache: HurwitzCache | None = None) -> Fraction:
    """Connected Hurwitz number by the memoized cut-and-join recursion.

    Accepts any multi-index for mu; the value depends only on the underlying
    partition.  Every recursive step strictly decreases the ramification
    count, so the recursion terminates at the single count-zero profile.
    """
    lam = sort_to_partition(mu)
    ramification(g, lam)  # validates g and lam
    store = cache if cache is not None else HurwitzCache()
    return _h_rec(g, lam, store)


def _h_rec(g: int, lam: Partition, store: HurwitzCache) -> Fraction:
    hit = store.get(g, lam)
    if hit is not None:
        return hit
    ell = len(lam)
    n = sum(lam)
    r = 2 * g - 2 + ell + n
    if r == 0:
        # forced to be genus 0 with profile (1): the trivial covering
        value = Fraction(1)
        store.insert(g, lam, value)
        return value
    aut_k = aut_count(lam)
    total = Fraction(0)
    # join: merge two parts into one
    for i in range(ell):
        for j in range(i + 1, ell):
            merged = tuple(
                sorted(lam[:i] + lam[i + 1 : j] + lam[j + 1 :] + (lam[i] + lam[j],), reverse=True)
            )
            total += Fraction(aut_count(merged) * (lam[i] + lam[j]), aut_k) * _h_rec(g, merged, store)
    half = Fraction(1, 2)
    for i in range(ell):
        v = lam[i]
        rest = lam[:i] + lam[i + 1 :]
        subsets = None
        for alpha in range(1, v):
            beta = v - alpha
            # cut keeping the surface connected: genus drops by one
            if g >= 1:
                prof = tuple(sorted(rest + (alpha, beta), reverse=True))
                total += (
                    half * alpha * beta * Fraction(aut_count(prof), aut_k) * _h_rec(g - 1, prof, store)
                )
            # cut disconnecting the surface: distribute genus and the
            # remaining parts (positions distinguished) over the two sides
            if subsets is None:
                subsets = _bipartitions(rest)
            for left, right in subsets:
                lp = tuple(sorted(left + (alpha,), reverse=True))
                np_ = tuple(sorted(right + (beta,), reverse=True))
                r1_base = len(lp) + sum(lp) - 2
                w = half * alpha * beta * Fraction(aut_count(lp) * aut_count(np_), aut_k)
                for g1 in range(g + 1):
                    g2 = g - g1
                    total += (
                        w
                        * comb(r - 1, r1_base + 2 * g1)
                        * _h_rec(g1, lp, store)
                        * _h_rec(g2, np_, store)
                    )
    store.insert(g, lam, total)
    return total


def _bipartitions(parts: Partition) -> list[tuple[Partition, Partition]]:
    """All 2^len ordered splits of a position-distinguished part list."""
    out = []
    m = len(parts)
    for mask in range(1 << m):
        left = tuple(parts[i] for i in range(m) if mask >> i & 1)
        right = tuple(parts[i] for i in range(m) if not mask >> i & 1)
        out.append((left, right))
    return out


def hurwitz_normalized(g: int, k: Sequence[int], h: Fraction) -> Fraction:
    """Normalization used inside the recursion: aut(k) / r(g,k)! times h."""
    r = ramification(g, k)
    if r < 0:
        raise ValueError("negative ramification count")
    return Fraction(aut_count(k), factorial(r)) * h


# ---------------------------------------------------------------------------
# closed forms

def one_part_genus0(n: int) -> Fraction:
    """Genus-zero one-part value n^(n-3), exact also for n = 1, 2."""
    if n < 1:
        raise ValueError("n must be positive")
    return Fraction(n) ** (n - 3)


def one_part_closed(g: int, n: int) -> Fraction:
    """One-part value for any genus, by the alternating binomial sum.

    (1/(n! n)) sum_s (-1)^s binom(n-1, s) (binom(n,2) - n s)^(n-1+2g); the
    exponent pairs the part count n with the 2g extra branch points.
    """
    if g < 0 or n < 1:
        raise ValueError("need g >= 0 and n >= 1")
    e = n - 1 + 2 * g
    total = sum(
        (-1) ** s * comb(n - 1, s) * (comb(n, 2) - n * s) ** e for s in range(n)
    )
    return Fraction(total, factorial(n) * n)


def one_part_closed_stirling(g: int, n: int) -> Fraction:
    """Same one-part value rearranged as a Stirling-number sum."""
    if g < 0 or n < 1:
        raise ValueError("need g >= 0 and n >= 1")
    total = sum(
        comb(n - 1 + 2 * g, n - 1 + r)
        * comb(n, 2) ** (2 * g - r)
        * (-n) ** r
        * stirling2(n - 1 + r, n - 1)
        for r in range(2 * g + 1)
    )
    return Fraction(n) ** (n - 3) * total


def stirling2(p: int, m: int) -> int:
    """Stirling number of the second kind via the standard recurrence."""
    if p < 0 or m < 0:
        raise ValueError("arguments must be non-negative")
    return _stirling2(p, m)


@lru_cache(maxsize=None)
def _stirling2(p: int, m: int) -> int:
    if p == 0:
        return 1 if m == 0 else 0
    if m == 0:
        return 0
    return m * _stirling2(p - 1, m) + _stirling2(p - 1, m - 1)


def signed_surjection_count(m: int, p: int) -> int:
    """sum_s binom(m,s) (-1)^s s^p, which equals (-1)^m m! S(p, m)."""
    if m < 0 or p < 0:
        raise ValueError("arguments must be non-negative")
    return sum(comb(m, s) * (-1) ** s * s**p for s in range(m + 1))


def two_part_genus0(mu1: int, mu2: int) -> Fraction:
    """Genus-zero value for a two-part profile (mu1 >= mu2 >= 1).

    (1/sigma) ((mu1+mu2)!/(mu1+mu2)) (mu1^mu1/mu1!) (mu2^mu2/mu2!) with
    sigma = 2 exactly when the parts coincide.
    """
    if not mu1 >= mu2 >= 1:
        raise ValueError("need mu1 >= mu2 >= 1")
    sigma = 2 if mu1 == mu2 else 1
    n = mu1 + mu2
    return (
        Fraction(factorial(n), sigma * n)
        * Fraction(mu1**mu1, factorial(mu1))
        * Fraction(mu2**mu2, factorial(mu2))
    )
