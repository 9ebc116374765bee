"""Power-sum polynomial arithmetic, symmetric group characters, Schur expansions,
and the cut-and-join differential operator.

Everything here is exact: coefficients are ``fractions.Fraction`` and character
values are plain integers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .partitions import (
    Partition,
    as_partition,
    centralizer_order,
    conj_class_size,
    conjugate,
    dim_irrep,
    leg_sum,
    multiplicities,
    partitions_of,
)

Scalar = int | Fraction


class PowerSumPoly:
    """Sparse polynomial in the power sums p_1, p_2, ...

    Terms are stored as a map from canonical partitions mu to the exact
    coefficient of p_mu = prod_i p_{mu_i}; zero coefficients are never stored,
    so equality of term maps is equality of polynomials.  Mixed-degree
    polynomials are allowed.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Partition, Scalar] | None = None):
        clean: dict[Partition, Fraction] = {}
        if terms:
            for mu, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[as_partition(mu)] = c
        self.terms = clean

    @classmethod
    def zero(cls) -> "PowerSumPoly":
        return cls()

    @classmethod
    def one(cls) -> "PowerSumPoly":
        return cls({(): Fraction(1)})

    @classmethod
    def p(cls, n: int) -> "PowerSumPoly":
        """The single power sum p_n."""
        if n < 1:
            raise ValueError("power sum index must be positive")
        return cls({(n,): Fraction(1)})

    @classmethod
    def monomial(cls, mu: Iterable[int], coeff: Scalar = 1) -> "PowerSumPoly":
        return cls({tuple(sorted(mu, reverse=True)): Fraction(coeff)})

    def coefficient(self, mu: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(sorted(mu, reverse=True)), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSumPoly):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: "PowerSumPoly") -> "PowerSumPoly":
        out = dict(self.terms)
        for mu, c in other.terms.items():
            s = out.get(mu, Fraction(0)) + c
            if s:
                out[mu] = s
            else:
                out.pop(mu, None)
        res = PowerSumPoly.zero()
        res.terms = out
        return res

    def __neg__(self) -> "PowerSumPoly":
        res = PowerSumPoly.zero()
        res.terms = {mu: -c for mu, c in self.terms.items()}
        return res

    def __sub__(self, other: "PowerSumPoly") -> "PowerSumPoly":
        return self + (-other)

    def __mul__(self, other: "PowerSumPoly | Scalar") -> "PowerSumPoly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return PowerSumPoly.zero()
            res = PowerSumPoly.zero()
            res.terms = {mu: c * v for mu, v in self.terms.items()}
            return res
        out: dict[Partition, Fraction] = {}
        for mu, a in self.terms.items():
            for nu, b in other.terms.items():
                key = tuple(sorted(mu + nu, reverse=True))
                s = out.get(key, Fraction(0)) + a * b
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        res = PowerSumPoly.zero()
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PowerSumPoly":
        if n < 0:
            raise ValueError("negative power")
        res = PowerSumPoly.one()
        for _ in range(n):
            res = res * self
        return res

    def __repr__(self) -> str:
        if not self.terms:
            return "PowerSumPoly(0)"
        bits = [f"{c}*p{list(mu)}" for mu, c in sorted(self.terms.items())]
        return "PowerSumPoly(" + " + ".join(bits) + ")"


def poly_add(a: PowerSumPoly, b: PowerSumPoly) -> PowerSumPoly:
    return a + b


def poly_mul(a: PowerSumPoly, b: PowerSumPoly) -> PowerSumPoly:
    return a * b


# ---------------------------------------------------------------------------
# characters

# Memo table for character values.  Keys are canonical (lam, mu) pairs; values
# are ints.  Concurrent readers are safe under the GIL and inserts are
# idempotent (the recursion is deterministic), so no locking is needed.
_char_memo: dict[tuple[Partition, Partition], int] = {}


def _strip_removals(lam: Partition, size: int):
    """Yield (sign, remainder) for every removable border strip of the given size.

    Uses the first-column hook coordinates of lam: removing a border strip of
    length t corresponds to lowering one coordinate by t without colliding
    with another, and the sign is (-1)^(rows spanned minus one), i.e. the
    number of coordinates jumped over.
    """
    rows = len(lam)
    beta = [lam[i] + (rows - 1 - i) for i in range(rows)]
    occupied = set(beta)
    for b in beta:
        c = b - size
        if c < 0 or c in occupied:
            continue
        height = sum(1 for x in beta if c < x < b)
        new_beta = sorted((x for x in beta if x != b), reverse=True)
        new_beta.append(c)
        new_beta.sort(reverse=True)
        parts = tuple(
            v - (rows - 1 - i) for i, v in enumerate(new_beta) if v - (rows - 1 - i) > 0
        )
        yield (-1) ** height, parts


def character(lam: Partition, mu: Partition) -> int:
    """Irreducible symmetric group character value at cycle type mu.

    Computed by recursive border-strip removal: peel a strip of length mu_1
    in all possible ways, recurse on the remainder, and weight each branch by
    the strip sign.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _character(lam, mu)


def _character(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    key = (lam, mu)
    hit = _char_memo.get(key)
    if hit is not None:
        return hit
    val = sum(sign * _character(rest, mu[1:]) for sign, rest in _strip_removals(lam, mu[0]))
    _char_memo[key] = val
    return val


def central_character(lam: Partition, mu: Partition) -> Fraction:
    """Class size times character over dimension; the central character value."""
    lam, mu = as_partition(lam), as_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return Fraction(conj_class_size(mu) * character(lam, mu), dim_irrep(lam))


def schur_in_power_sums(lam: Partition) -> PowerSumPoly:
    """Schur function expanded in the power-sum basis: sum over mu of chi/z_mu p_mu."""
    lam = as_partition(lam)
    terms = {}
    for mu in partitions_of(sum(lam)):
        chi = character(lam, mu)
        if chi:
            terms[mu] = Fraction(chi, centralizer_order(mu))
    return PowerSumPoly(terms)


# ---------------------------------------------------------------------------
# cut-and-join

def cut_and_join(poly: PowerSumPoly) -> PowerSumPoly:
    """Apply the cut-and-join operator.

    The operator is (1/2) sum_{k,l>=1} [(k+l) p_k p_l d/dp_{k+l}
    + k l p_{k+l} d/dp_k d/dp_l], applied monomial by monomial: each part v
    may be cut into an unordered pair {k, v-k}, and each unordered pair of
    parts may be joined into their sum.  All resulting coefficients are
    integers, so the image of an integral polynomial stays integral.
    """
    out = PowerSumPoly.zero()
    acc: dict[Partition, Fraction] = {}
    for mu, coeff in poly.terms.items():
        m = multiplicities(mu)
        values = sorted(m)
        # cut: replace one part v by {k, v-k}
        for v in values:
            mult = m[v]
            base = list(mu)
            base.remove(v)
            for k in range(1, v // 2 + 1):
                l = v - k
                factor = Fraction(v * mult) if k != l else Fraction(v * mult, 2)
                key = tuple(sorted(base + [k, l], reverse=True))
                acc[key] = acc.get(key, Fraction(0)) + coeff * factor
        # join: replace an unordered pair of parts {a, b} by a+b
        for ai, a in enumerate(values):
            for b in values[ai:]:
                if a == b:
                    if m[a] < 2:
                        continue
                    factor = Fraction(a * a * m[a] * (m[a] - 1), 2)
                    removed = [a, a]
                else:
                    factor = Fraction(a * b * m[a] * m[b])
                    removed = [a, b]
                base = list(mu)
                for x in removed:
                    base.remove(x)
                key = tuple(sorted(base + [a + b], reverse=True))
                acc[key] = acc.get(key, Fraction(0)) + coeff * factor
    out.terms = {k: v for k, v in acc.items() if v}
    return out


def cut_and_join_deformed(poly: PowerSumPoly, alpha: Scalar) -> PowerSumPoly:
    """One-parameter deformation of the cut-and-join operator.

    The join term carries a factor alpha and an extra diagonal term
    (alpha - 1)/2 sum_k k^2 p_k d/dp_k appears; at alpha = 1 this is the plain
    operator.
    """
    alpha = Fraction(alpha)
    acc: dict[Partition, Fraction] = {}
    for mu, coeff in poly.terms.items():
        m = multiplicities(mu)
        values = sorted(m)
        for v in values:
            mult = m[v]
            base = list(mu)
            base.remove(v)
            for k in range(1, v // 2 + 1):
                l = v - k
                factor = Fraction(v * mult) if k != l else Fraction(v * mult, 2)
                key = tuple(sorted(base + [k, l], reverse=True))
                acc[key] = acc.get(key, Fraction(0)) + coeff * factor
        for ai, a in enumerate(values):
            for b in values[ai:]:
                if a == b:
                    if m[a] < 2:
                        continue
                    factor = Fraction(a * a * m[a] * (m[a] - 1), 2)
                    removed = [a, a]
                else:
                    factor = Fraction(a * b * m[a] * m[b])
                    removed = [a, b]
                base = list(mu)
                for x in removed:
                    base.remove(x)
                key = tuple(sorted(base + [a + b], reverse=True))
                acc[key] = acc.get(key, Fraction(0)) + coeff * alpha * factor
        diag = (alpha - 1) * Fraction(sum(v * v * m[v] for v in values), 2)
        if diag:
            acc[mu] = acc.get(mu, Fraction(0)) + coeff * diag
    out = PowerSumPoly.zero()
    out.terms = {k: v for k, v in acc.items() if v}
    return out


def jack_eigenvalue(lam: Partition, alpha: Scalar) -> Fraction:
    """Eigenvalue of the deformed operator on the Jack function indexed by lam.

    alpha * legsum(lam') - legsum(lam) + (alpha - 1)|lam|/2; at alpha = 1 this
    reduces to the content sum of lam.
    """
    lam = as_partition(lam)
    alpha = Fraction(alpha)
    return alpha * leg_sum(conjugate(lam)) - leg_sum(lam) + (alpha - 1) * Fraction(sum(lam), 2)
