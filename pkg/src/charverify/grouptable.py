"""Exact character tables of explicit finite groups.

The construction is the classical Burnside-Dixon method: simultaneous
eigenvectors of the class-multiplication matrices over a prime field F_p with
p = 1 mod exponent(G) and p > 2|G|, followed by an exact lift of each value
through the discrete Fourier sum over powers of the class representative.
All lifted values are cyclotomic numbers; orthogonality can then be verified
in exact arithmetic, independently of how a character table was predicted.

Groups are given by explicit element sets with a multiplication callable;
elements must be hashable and totally orderable (tuples of ints work).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .cyclotomic import CyclotomicNumber
from .ladic import is_prime


class FiniteGroup:
    """An explicit finite group: elements, multiplication, identity."""

    def __init__(
        self,
        elements: Iterable,
        mul: Callable,
        identity,
        generators: Sequence | None = None,
        name: str = "",
    ):
        self.elements = sorted(elements)
        self.index = {g: i for i, g in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate elements")
        if identity not in self.index:
            raise ValueError("identity not among elements")
        self.mul = mul
        self.identity = identity
        self.name = name
        self.generators = list(generators) if generators is not None else None
        self._inverses: dict = {}
        self._orders: dict = {}
        self._classes: list[list] | None = None
        self._class_of: dict | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def _order_and_inverse(self, g):
        if g not in self._orders:
            prev, acc, n = g, g, 1
            while acc != self.identity:
                prev = acc
                acc = self.mul(acc, g)
                n += 1
            self._orders[g] = n
            self._inverses[g] = prev if n > 1 else g
        return self._orders[g], self._inverses[g]

    def inverse(self, g):
        return self._order_and_inverse(g)[1]

    def element_order(self, g) -> int:
        return self._order_and_inverse(g)[0]

    def exponent(self) -> int:
        out = 1
        for g in self.elements:
            out = math.lcm(out, self.element_order(g))
        return out

    def conjugacy_classes(self) -> list[list]:
        """Classes as sorted element lists; identity class first, the rest
        ordered by (size, representative)."""
        if self._classes is not None:
            return self._classes
        conjugators = self.generators if self.generators else self.elements
        conj_pairs = [(t, self.inverse(t)) for t in conjugators]
        seen = set()
        classes = []
        for g in self.elements:
            if g in seen:
                continue
            orbit = {g}
            frontier = [g]
            while frontier:
                x = frontier.pop()
                for t, t_inv in conj_pairs:
                    y = self.mul(self.mul(t, x), t_inv)
                    if y not in orbit:
                        orbit.add(y)
                        frontier.append(y)
            orbit = sorted(orbit)
            seen.update(orbit)
            classes.append(orbit)
        id_cls = next(c for c in classes if self.identity in c)
        rest = [c for c in classes if c is not id_cls]
        rest.sort(key=lambda c: (len(c), c[0]))
        self._classes = [id_cls] + rest
        self._class_of = {
            g: k for k, cls in enumerate(self._classes) for g in cls
        }
        return self._classes

    def class_of(self, g) -> int:
        self.conjugacy_classes()
        return self._class_of[g]


# ---------------------------------------------------------------------------
# linear algebra over F_p
# ---------------------------------------------------------------------------


def _mat_vec(M, v, p):
    return [sum(M[i][j] * v[j] for j in range(len(v))) % p for i in range(len(M))]


def _solve(basis: list[list[int]], target: list[int], p: int) -> list[int]:
    """Coordinates of target in the span of basis (assumed consistent)."""
    n = len(target)
    k = len(basis)
    # augmented system: columns = basis vectors
    rows = [[basis[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    piv_cols = []
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, n) if rows[i][c] % p != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] % p != 0:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    coords = [0] * k
    for row_idx, c in enumerate(piv_cols):
        coords[c] = rows[row_idx][k] % p
    return coords


def _nullspace(M: list[list[int]], p: int) -> list[list[int]]:
    """Basis of the kernel of the square matrix M over F_p (deterministic)."""
    n = len(M)
    rows = [list(r) for r in M]
    pivots = {}
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if rows[i][c] % p != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] % p != 0:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots[c] = r
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for c, row_idx in pivots.items():
            v[c] = (-rows[row_idx][fc]) % p
        basis.append(v)
    return basis


def _charpoly(M: list[list[int]], p: int) -> list[int]:
    """Characteristic polynomial of M over F_p (Faddeev-LeVerrier), lowest first."""
    n = len(M)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    A = [row[:] for row in M]
    Mk = [[1 if i == j else 0 for j in range(n)] for i in range(n)]  # identity
    for k in range(1, n + 1):
        N = [
            [sum(A[i][t] * Mk[t][j] for t in range(n)) % p for j in range(n)]
            for i in range(n)
        ]
        trace = sum(N[i][i] for i in range(n)) % p
        c = (-pow(k, -1, p) * trace) % p
        coeffs[n - k] = c
        Mk = N
        for i in range(n):
            Mk[i][i] = (Mk[i][i] + c) % p
    return coeffs


def _poly_roots(coeffs: list[int], p: int) -> list[int]:
    """All roots in F_p of the polynomial (lowest-first coeffs), by scan."""
    roots = []
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            roots.append(x)
    return roots


def _primitive_root(p: int) -> int:
    factors = set()
    n = p - 1
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors.add(d)
            n //= d
        d += 1
    if n > 1:
        factors.add(n)
    for z in range(2, p):
        if all(pow(z, (p - 1) // f, p) != 1 for f in factors):
            return z
    raise AssertionError("no primitive root found")


# ---------------------------------------------------------------------------
# the Dixon construction
# ---------------------------------------------------------------------------


class CharacterTable:
    """An exact character table: classes, sizes, and cyclotomic value rows."""

    def __init__(self, group, class_reps, class_sizes, characters):
        self.group = group
        self.class_reps = list(class_reps)
        self.class_sizes = list(class_sizes)
        self.characters = [tuple(row) for row in characters]
        self.degrees = [
            int(row[0].rational_value()) for row in self.characters
        ]

    @property
    def num_classes(self) -> int:
        return len(self.class_reps)

    @classmethod
    def dixon(cls, group: FiniteGroup) -> "CharacterTable":
        classes = group.conjugacy_classes()
        r = len(classes)
        sizes = [len(c) for c in classes]
        reps = [c[0] for c in classes]
        n_g = group.order
        exponent = group.exponent()

        # prime field: p = 1 mod exponent, p > 2|G|
        p = exponent + 1
        while p <= 2 * n_g or (p - 1) % exponent != 0 or not is_prime(p):
            p += exponent
        z = _primitive_root(p)

        class_of = group.class_of
        inv_rep = [group.inverse(g) for g in reps]
        inv_class = [class_of(g) for g in inv_rep]

        def structure_matrix(i: int) -> list[list[int]]:
            # (M_i)_{jk} = #{x in C_i : x^{-1} rep_k in C_j}
            M = [[0] * r for _ in range(r)]
            for x in classes[i]:
                x_inv = group.inverse(x)
                for k in range(r):
                    y = group.mul(x_inv, reps[k])
                    M[class_of(y)][k] += 1
            return M

        # split the simultaneous eigenspaces
        spaces = [[_unit_vector(r, j) for j in range(r)]]
        matrices: dict[int, list[list[int]]] = {}
        for i in range(1, r):
            if all(len(S) == 1 for S in spaces):
                break
            matrices[i] = structure_matrix(i)
            new_spaces = []
            for S in spaces:
                if len(S) == 1:
                    new_spaces.append(S)
                    continue
                images = [_mat_vec(matrices[i], b, p) for b in S]
                A = [_solve(S, img, p) for img in images]
                # action matrix in basis coordinates: columns are images
                A_T = [[A[j][i2] for j in range(len(S))] for i2 in range(len(S))]
                roots = sorted(set(_poly_roots(_charpoly(A_T, p), p)))
                for lam in roots:
                    shifted = [
                        [
                            (A_T[x][y] - (lam if x == y else 0)) % p
                            for y in range(len(S))
                        ]
                        for x in range(len(S))
                    ]
                    kern = _nullspace(shifted, p)
                    vecs = [
                        [
                            sum(kv[j] * S[j][t] for j in range(len(S))) % p
                            for t in range(r)
                        ]
                        for kv in kern
                    ]
                    if vecs:
                        new_spaces.append(vecs)
            if sum(len(S) for S in new_spaces) != r:
                raise AssertionError("eigenspace refinement lost dimensions")
            spaces = new_spaces
        if not all(len(S) == 1 for S in spaces):
            raise AssertionError("class matrices failed to separate characters")

        # normalize: omega(identity) = 1
        omegas = []
        for (v,) in spaces:
            if v[0] % p == 0:
                raise AssertionError("eigenvector vanishes on the identity class")
            inv0 = pow(v[0], -1, p)
            omegas.append([(x * inv0) % p for x in v])

        # degrees and values mod p
        chars_mod_p = []
        for omega in omegas:
            s = 0
            for k in range(r):
                s += omega[k] * omega[inv_class[k]] * pow(sizes[k], -1, p)
            s %= p
            # chi(1)^2 = |G| / s
            deg_sq = (n_g * pow(s, -1, p)) % p
            deg = next(
                (t for t in range(1, int(math.isqrt(n_g)) + 1) if (t * t - deg_sq) % p == 0),
                None,
            )
            if deg is None:
                raise AssertionError("no integer degree matches mod p")
            row = [
                (deg * omega[k] * pow(sizes[k], -1, p)) % p for k in range(r)
            ]
            chars_mod_p.append((deg, row))

        # exact lift through Fourier sums over powers of each representative
        rep_orders = [group.element_order(g) for g in reps]
        rep_power_class = []
        for k, g in enumerate(reps):
            o = rep_orders[k]
            pcs = []
            acc = group.identity
            for _ in range(o):
                pcs.append(class_of(acc))
                acc = group.mul(acc, g)
            # pcs[i] = class of g^i, i = 0..o-1
            rep_power_class.append(pcs)

        characters = []
        for deg, row in chars_mod_p:
            values = []
            for k in range(r):
                o = rep_orders[k]
                w = pow(z, (p - 1) // o, p)
                o_inv = pow(o, -1, p)
                coeffs = {}
                for j in range(o):
                    a_j = 0
                    for i in range(o):
                        a_j += row[rep_power_class[k][i]] * pow(w, (-i * j) % o, p)
                    a_j = (a_j * o_inv) % p
                    if a_j:
                        if a_j > deg:
                            raise AssertionError(
                                "lifted multiplicity exceeds the degree bound"
                            )
                        coeffs[j] = Fraction(a_j)
                values.append(CyclotomicNumber(o, coeffs))
            characters.append(values)

        characters.sort(key=lambda row: (int(row[0].rational_value()), _row_key(row)))
        return cls(group, reps, sizes, characters)

    # -- exact verification helpers ----------------------------------------

    def verify_row_orthogonality(self) -> bool:
        n_g = self.group.order
        for i, chi in enumerate(self.characters):
            for j, psi in enumerate(self.characters):
                acc = CyclotomicNumber.zero()
                for k in range(self.num_classes):
                    acc = acc + self.class_sizes[k] * chi[k] * psi[k].conjugate()
                expected = n_g if i == j else 0
                if acc != expected:
                    return False
        return True

    def verify_column_orthogonality(self) -> bool:
        n_g = self.group.order
        for k in range(self.num_classes):
            for l in range(self.num_classes):
                acc = CyclotomicNumber.zero()
                for chi in self.characters:
                    acc = acc + chi[k] * chi[l].conjugate()
                expected = n_g // self.class_sizes[k] if k == l else 0
                if acc != expected:
                    return False
        return True

    def sum_of_degree_squares(self) -> int:
        return sum(d * d for d in self.degrees)


def _unit_vector(n: int, j: int) -> list[int]:
    v = [0] * n
    v[j] = 1
    return v


def _row_key(row) -> tuple:
    return tuple(
        tuple((e, c.numerator, c.denominator) for e, c in sorted(x.coeffs.items()))
        for x in row
    )
