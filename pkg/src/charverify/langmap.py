"""Diagonal-torus Lang-map identities in SL_n over small finite fields.

Everything here happens inside the diagonal maximal torus of SL_n over
F_{p^2}: the principal cocharacter sends a field unit ``c`` to

    diag(c^(n-1), c^(n-3), ..., c^(-(n-3)), c^(-(n-1))),

automatically of determinant 1, and the Lang map of a diagonal torus element
is the entrywise (q-1)-th power (t^(-1) * Frobenius(t) for diagonal t).  The
headline check, :func:`verify_cor55a`, takes an integer ``k`` coprime to
``p``, constructs a square root ``c`` of ``k`` in F_{p^2} by exhaustive
search, and confirms that the Lang image of the cocharacter value at ``c``
is the scalar matrix ``jacobi_symbol(k, q)^(n-1) * Id``.

Because ``k`` is a prime-field scalar, its square roots always lie in
F_{p^2}; degrees ``e`` in ``{1, 2}`` (so ``q = p`` or ``q = p^2``) are fully
covered without ever leaving the quadratic extension.  Field elements are
represented as polynomials modulo a fixed, documented irreducible: for odd
``p`` the modulus is ``x^2 - t`` with ``t`` the smallest quadratic
non-residue mod ``p``; for ``p = 2`` it is ``x^2 + x + 1``.  Determinism is
preferred over speed throughout (square roots by exhaustive search).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .ladic import is_prime

__all__ = [
    "FiniteFieldElement",
    "DiagonalTorusElement",
    "quadratic_nonresidue",
    "modulus_poly",
    "enumerate_field",
    "sqrt_in_quadratic",
    "jacobi_symbol",
    "principal_cochar_value",
    "lang_image",
    "central_order_two_element",
    "verify_cor55a",
    "verify_prop51a",
]


@lru_cache(maxsize=None)
def quadratic_nonresidue(p: int) -> int:
    """Smallest quadratic non-residue modulo an odd prime p."""
    if not is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")
    for t in range(2, p):
        if pow(t, (p - 1) // 2, p) == p - 1:
            return t
    raise AssertionError(f"no non-residue found mod {p}")


def modulus_poly(p: int) -> tuple[int, ...]:
    """Coefficients (constant first) of the fixed irreducible quadratic.

    ``x^2 + x + 1`` for p = 2, else ``x^2 - t`` with t the smallest
    non-residue; both are irreducible over F_p by construction.
    """
    if p == 2:
        return (1, 1, 1)
    return ((-quadratic_nonresidue(p)) % p, 0, 1)


@dataclass(frozen=True, eq=False)
class FiniteFieldElement:
    """An element of F_p or of the fixed quadratic extension F_{p^2}.

    ``coeffs`` holds the reduced polynomial representation, constant term
    first; its length is the field degree (1 or 2).  Equality ignores the
    ambient degree: a prime-field value compares equal to its image in the
    quadratic extension.
    """

    p: int
    coeffs: tuple

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if len(self.coeffs) not in (1, 2):
            raise ValueError("degree must be 1 or 2")
        if any(not (0 <= a < self.p) for a in self.coeffs):
            raise ValueError(f"coefficients not reduced mod {self.p}")

    @classmethod
    def from_int(cls, p: int, value: int, e: int = 1) -> "FiniteFieldElement":
        if e not in (1, 2):
            raise ValueError(f"degree must be 1 or 2, got {e}")
        coeffs = (value % p,) + ((0,) * (e - 1))
        return cls(p, coeffs)

    @property
    def e(self) -> int:
        return len(self.coeffs)

    def _key(self) -> tuple:
        return (self.p, self.coeffs[0], self.coeffs[1] if self.e == 2 else 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteFieldElement):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    @property
    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    @property
    def in_prime_field(self) -> bool:
        return self.e == 1 or self.coeffs[1] == 0

    def as_int(self) -> int:
        """The value as an integer in [0, p), for prime-field elements."""
        if not self.in_prime_field:
            raise ValueError(f"{self!r} is not in the prime field")
        return self.coeffs[0]

    def lift(self) -> "FiniteFieldElement":
        """The same element viewed inside the quadratic extension."""
        if self.e == 2:
            return self
        return FiniteFieldElement(self.p, (self.coeffs[0], 0))

    def _pair(self, other: "FiniteFieldElement"):
        if not isinstance(other, FiniteFieldElement) or other.p != self.p:
            raise TypeError(f"cannot combine {self!r} with {other!r}")
        if self.e == other.e:
            return self, other
        return self.lift(), other.lift()

    def __mul__(self, other: "FiniteFieldElement") -> "FiniteFieldElement":
        a, b = self._pair(other)
        p = a.p
        if a.e == 1:
            return FiniteFieldElement(p, ((a.coeffs[0] * b.coeffs[0]) % p,))
        a0, a1 = a.coeffs
        b0, b1 = b.coeffs
        # x^2 = x + 1 for p = 2, x^2 = t otherwise.
        if p == 2:
            cross = a1 * b1
            c0 = (a0 * b0 + cross) % 2
            c1 = (a0 * b1 + a1 * b0 + cross) % 2
        else:
            t = quadratic_nonresidue(p)
            c0 = (a0 * b0 + t * a1 * b1) % p
            c1 = (a0 * b1 + a1 * b0) % p
        return FiniteFieldElement(p, (c0, c1))

    def inverse(self) -> "FiniteFieldElement":
        if self.is_zero:
            raise ZeroDivisionError("zero has no inverse")
        order = self.p**self.e
        return self ** (order - 2)

    def __pow__(self, exponent: int) -> "FiniteFieldElement":
        if self.is_zero and exponent <= 0:
            raise ZeroDivisionError("zero to a non-positive power")
        base = self
        if exponent < 0:
            base = self.inverse()
            exponent = -exponent
        result = FiniteFieldElement.from_int(self.p, 1, self.e)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __repr__(self) -> str:
        if self.e == 1 or self.coeffs[1] == 0:
            return f"FF({self.coeffs[0]} mod {self.p})"
        return f"FF({self.coeffs[0]} + {self.coeffs[1]}x mod {self.p})"


def enumerate_field(p: int, e: int) -> Iterator[FiniteFieldElement]:
    """All elements of F_{p^e} in deterministic (lexicographic) order."""
    if e == 1:
        for a0 in range(p):
            yield FiniteFieldElement(p, (a0,))
    elif e == 2:
        for a0 in range(p):
            for a1 in range(p):
                yield FiniteFieldElement(p, (a0, a1))
    else:
        raise ValueError(f"degree must be 1 or 2, got {e}")


def sqrt_in_quadratic(p: int, k: int) -> FiniteFieldElement:
    """First square root of the prime-field scalar k inside F_{p^2}.

    Every prime-field element has a square root in the quadratic extension
    (adjoining one non-residue root makes all non-residues squares), so the
    exhaustive search cannot fail on valid input.
    """
    target = FiniteFieldElement.from_int(p, k, 2)
    for c in enumerate_field(p, 2):
        if c * c == target:
            return c
    raise RuntimeError(f"internal error: no square root of {k} in F_{p}^2")


def jacobi_symbol(k: int, q: int) -> int:
    """Jacobi symbol (k/q) for odd q, extended by (k/q) := 1 for q a 2-power.

    Requires gcd(k, q) = 1 when q is odd.  Implemented by the standard
    binary reciprocity algorithm.
    """
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    if q & (q - 1) == 0:
        return 1
    if q % 2 == 0:
        raise ValueError(f"q must be odd or a power of 2, got {q}")
    a = k % q
    if math.gcd(a, q) != 1:
        raise ValueError(f"k = {k} is not coprime to q = {q}")
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if q % 8 in (3, 5):
                result = -result
        a, q = q, a
        if a % 4 == 3 and q % 4 == 3:
            result = -result
        a %= q
    assert q == 1
    return result


@dataclass(frozen=True)
class DiagonalTorusElement:
    """A diagonal matrix in SL_n: nonzero entries with product 1."""

    entries: tuple

    def __post_init__(self):
        if len(self.entries) < 2:
            raise ValueError("need at least 2 diagonal entries")
        if any(x.is_zero for x in self.entries):
            raise ValueError("diagonal entries must be nonzero")
        det = self.entries[0]
        for x in self.entries[1:]:
            det = det * x
        if det != FiniteFieldElement.from_int(det.p, 1):
            raise ValueError(f"determinant is {det!r}, not 1")

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def p(self) -> int:
        return self.entries[0].p

    def scalar_value(self) -> FiniteFieldElement | None:
        """The common entry if the matrix is scalar, else None."""
        first = self.entries[0]
        if all(x == first for x in self.entries):
            return first
        return None

    def __repr__(self) -> str:
        return f"diag{self.entries!r}"


def principal_cochar_value(n: int, c: FiniteFieldElement) -> DiagonalTorusElement:
    """The principal-cocharacter value diag(c^(n-1), c^(n-3), ..., c^(-(n-1)))."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if c.is_zero:
        raise ValueError("c must be nonzero")
    return DiagonalTorusElement(tuple(c**m for m in range(n - 1, -n, -2)))


def lang_image(t: DiagonalTorusElement, q: int) -> DiagonalTorusElement:
    """Lang map t^(-1) * F(t) of a diagonal element, F the q-power Frobenius.

    For diagonal t this is the entrywise (q-1)-th power; entries of t must
    lie in a field stable under the q-power map (any F_{p^e} with p | q is,
    since powering is a ring endomorphism there).
    """
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    if q % t.p != 0:
        raise ValueError(f"q = {q} is not a power of the characteristic {t.p}")
    return DiagonalTorusElement(tuple(x ** (q - 1) for x in t.entries))


def central_order_two_element(n: int, p: int) -> DiagonalTorusElement:
    """The central element (-1)^(n-1) * Id of SL_n over F_p."""
    value = FiniteFieldElement.from_int(p, (-1) ** (n - 1), 1)
    return DiagonalTorusElement((value,) * n)


def _cor55_setup(n: int, p: int, e: int, k: int):
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if e not in (1, 2):
        raise ValueError(f"e must be 1 or 2, got {e}")
    if k % p == 0:
        raise ValueError(f"k = {k} is not a unit mod p = {p}")
    q = p**e
    c = sqrt_in_quadratic(p, k)
    return q, c, lang_image(principal_cochar_value(n, c), q)


def verify_cor55a(n: int, p: int, e: int, k: int) -> bool:
    """Check that the Lang image of the cocharacter value at sqrt(k) is the
    scalar jacobi_symbol(k, q)^(n-1) * Id, with q = p^e."""
    q, _, image = _cor55_setup(n, p, e, k)
    expected = FiniteFieldElement.from_int(p, jacobi_symbol(k, q) ** (n - 1))
    scalar = image.scalar_value()
    return scalar is not None and scalar == expected


def verify_prop51a(n: int, p: int, e: int, k: int) -> bool:
    """Check that the same Lang image is central of order dividing 2:
    the identity or (-1)^(n-1) * Id."""
    _, _, image = _cor55_setup(n, p, e, k)
    scalar = image.scalar_value()
    if scalar is None:
        return False
    one = FiniteFieldElement.from_int(p, 1)
    minus = FiniteFieldElement.from_int(p, (-1) ** (n - 1))
    return scalar == one or scalar == minus
