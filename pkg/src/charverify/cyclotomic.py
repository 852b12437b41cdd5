"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Canonical form: an element of Q(zeta_n) is stored as a sparse mapping
exponent -> Fraction over the power basis 1, zeta_n, ..., zeta_n^{phi(n)-1},
i.e. fully reduced modulo the n-th cyclotomic polynomial.  Elements carry the
order n they were written in; equality across different orders lifts both
sides to the least common multiple.  Elements are deliberately unhashable
(mathematical equality is finer than any per-order normal form).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .qpoly import cyclotomic_poly

Rational = Fraction


def divisors(n: int) -> list[int]:
    """Positive divisors of n, ascending."""
    if n <= 0:
        raise ValueError(f"n must be positive, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def euler_phi(n: int) -> int:
    """Euler's totient."""
    if n <= 0:
        raise ValueError(f"n must be positive, got {n}")
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Row e = integer coordinates of zeta_n^e in the power basis (length phi(n))."""
    phi = cyclotomic_poly(n).coeffs
    deg = len(phi) - 1
    rows: list[tuple[int, ...]] = []
    for e in range(n):
        if e < deg:
            vec = [0] * deg
            vec[e] = 1
        else:
            shifted = [0] + list(rows[e - 1])
            top = shifted.pop() if len(shifted) > deg else 0
            shifted += [0] * (deg - len(shifted))
            vec = [shifted[i] - top * phi[i] for i in range(deg)]
        rows.append(tuple(vec))
    return tuple(rows)


class CyclotomicNumber:
    """An element of Q(zeta_n) in canonical reduced form."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, raw: Mapping[int, Fraction] | None = None):
        if order <= 0:
            raise ValueError(f"order must be positive, got {order}")
        rows = _reduction_rows(order)
        deg = len(rows[0]) if rows else 0
        acc: dict[int, Fraction] = {}
        for e, c in (raw or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            row = rows[e % order]
            for i, m in enumerate(row):
                if m:
                    acc[i] = acc.get(i, Fraction(0)) + c * m
        object.__setattr__(self, "order", order)
        object.__setattr__(
            self, "coeffs", {i: c for i, c in acc.items() if c != 0}
        )

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicNumber is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int = 1) -> "CyclotomicNumber":
        return cls(order)

    @classmethod
    def from_rational(cls, value, order: int = 1) -> "CyclotomicNumber":
        return cls(order, {0: Fraction(value)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return set(self.coeffs) <= {0}

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs.get(0, Fraction(0))

    # -- arithmetic --------------------------------------------------------

    def _lift_raw(self, new_order: int) -> dict[int, Fraction]:
        if new_order % self.order != 0:
            raise ValueError(f"cannot lift order {self.order} to {new_order}")
        ratio = new_order // self.order
        return {e * ratio: c for e, c in self.coeffs.items()}

    def lift(self, new_order: int) -> "CyclotomicNumber":
        """Rewrite in Q(zeta_N) for a multiple N of the current order."""
        return CyclotomicNumber(new_order, self._lift_raw(new_order))

    def _pair(self, other: "CyclotomicNumber"):
        if self.order == other.order:
            return self, other
        n = math.lcm(self.order, other.order)
        return self.lift(n), other.lift(n)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.from_rational(other, 1)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        a, b = self._pair(other)
        raw = dict(a.coeffs)
        for e, c in b.coeffs.items():
            raw[e] = raw.get(e, Fraction(0)) + c
        return CyclotomicNumber(a.order, raw)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.from_rational(other, 1)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(
                self.order, {e: c * other for e, c in self.coeffs.items()}
            )
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        a, b = self._pair(other)
        raw: dict[int, Fraction] = {}
        for e1, c1 in a.coeffs.items():
            for e2, c2 in b.coeffs.items():
                e = (e1 + e2) % a.order
                raw[e] = raw.get(e, Fraction(0)) + c1 * c2
        return CyclotomicNumber(a.order, raw)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("scalar division by zero")
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.rational_value() == other
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # equality crosses orders; hashing is deliberately disabled

    # -- Galois action -----------------------------------------------------

    def galois(self, k: int) -> "CyclotomicNumber":
        """Image under zeta_n -> zeta_n^k; requires gcd(k, n) = 1."""
        if math.gcd(k, self.order) != 1:
            raise ValueError(f"k = {k} is not coprime to the order {self.order}")
        return CyclotomicNumber(
            self.order, {(e * k) % self.order: c for e, c in self.coeffs.items()}
        )

    def conjugate(self) -> "CyclotomicNumber":
        return self.galois(self.order - 1 if self.order > 1 else 1)

    # -- serialization -----------------------------------------------------

    def to_triples(self) -> list[list[int]]:
        """Canonical serialization [[exponent, numerator, denominator], ...]."""
        return [
            [e, self.coeffs[e].numerator, self.coeffs[e].denominator]
            for e in sorted(self.coeffs)
        ]

    def to_dict(self) -> dict:
        return {"order": self.order, "coeffs": self.to_triples()}

    @classmethod
    def from_dict(cls, data: Mapping) -> "CyclotomicNumber":
        return cls(
            int(data["order"]),
            {int(e): Fraction(int(num), int(den)) for e, num, den in data["coeffs"]},
        )

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                body = str(abs(c))
            else:
                head = "" if abs(c) == 1 else f"{abs(c)}*"
                body = f"{head}zeta{self.order}" + (f"^{e}" if e > 1 else "")
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)


def root_of_unity(n: int, k: int = 1) -> CyclotomicNumber:
    """zeta_n^k as an element of Q(zeta_n)."""
    return CyclotomicNumber(n, {k % n: Fraction(1)})


def galois_apply(k: int, x: CyclotomicNumber) -> CyclotomicNumber:
    """Apply zeta -> zeta^k to x; k must be coprime to the order of x."""
    return x.galois(k)


class GaloisSubgroup:
    """A subgroup of (Z/nZ)^x given by its modulus and residue set."""

    __slots__ = ("modulus", "residues")

    def __init__(self, modulus: int, residues: Iterable[int]):
        if modulus <= 0:
            raise ValueError(f"modulus must be positive, got {modulus}")
        res = frozenset(r % modulus for r in residues)
        for r in res:
            if math.gcd(r, modulus) != 1:
                raise ValueError(f"residue {r} not coprime to {modulus}")
        if (1 % modulus) not in res:
            raise ValueError("subgroup must contain 1")
        for a in res:
            for b in res:
                if (a * b) % modulus not in res:
                    raise ValueError(
                        f"residues not closed under multiplication mod {modulus}"
                    )
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "residues", res)

    def __setattr__(self, name, value):
        raise AttributeError("GaloisSubgroup is immutable")

    @classmethod
    def full(cls, n: int) -> "GaloisSubgroup":
        return cls(n, [k for k in range(1, n + 1) if math.gcd(k, n) == 1])

    def __contains__(self, k: int) -> bool:
        return (k % self.modulus) in self.residues

    def __len__(self) -> int:
        return len(self.residues)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GaloisSubgroup):
            return NotImplemented
        return self.modulus == other.modulus and self.residues == other.residues

    def __hash__(self) -> int:
        return hash((self.modulus, self.residues))

    def __repr__(self) -> str:
        return f"GaloisSubgroup(mod {self.modulus}, {sorted(self.residues)})"


def is_fixed_by(x: CyclotomicNumber, subgroup: GaloisSubgroup) -> bool:
    """Whether every sigma_k, k in the subgroup, fixes x.

    The subgroup modulus must equal the order x is written in; a mismatch is
    an error rather than a silent lift.
    """
    if subgroup.modulus != x.order:
        raise ValueError(
            f"subgroup modulus {subgroup.modulus} != element order {x.order}"
        )
    return all(x.galois(k) == x for k in subgroup.residues)


def conductor(x: CyclotomicNumber) -> int:
    """The smallest c such that x lies in Q(zeta_c).

    Sweeps divisors c of the ambient order ascending and returns the first c
    for which every sigma_k with k = 1 mod c fixes x.  Intersections of
    cyclotomic fields are cyclotomic, so this divisor sweep attains the global
    minimum.  Convention: the smallest such integer is returned, so the result
    is never 2 * (odd).
    """
    n = x.order
    units = [k for k in range(1, n + 1) if math.gcd(k, n) == 1]
    for c in divisors(n):
        if all(x.galois(k) == x for k in units if k % c == 1 % c):
            return c
    raise AssertionError("unreachable: c = n always fixes x")
