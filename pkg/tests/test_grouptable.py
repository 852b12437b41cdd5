"""Tests for the generic exact character-table machinery."""

import itertools
from fractions import Fraction

import pytest

from charverify.cyclotomic import CyclotomicNumber, root_of_unity
from charverify.grouptable import CharacterTable, FiniteGroup


def perm_mul(a, b):
    return tuple(a[b[i]] for i in range(len(a)))


def symmetric_group(n):
    elements = list(itertools.permutations(range(n)))
    gens = []
    for i in range(n - 1):
        p = list(range(n))
        p[i], p[i + 1] = p[i + 1], p[i]
        gens.append(tuple(p))
    return FiniteGroup(elements, perm_mul, tuple(range(n)), generators=gens)


def cyclic_group(n):
    return FiniteGroup(
        range(n), lambda x, y: (x + y) % n, 0, generators=[1 % n]
    )


def quaternion_group():
    # elements 0..7 = 1, -1, i, -i, j, -j, k, -k
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    idx = {s: e for e, s in enumerate(names)}

    def neg(s):
        return s[1:] if s.startswith("-") else "-" + s

    base = {
        ("1", "1"): "1",
        ("i", "i"): "-1",
        ("j", "j"): "-1",
        ("k", "k"): "-1",
        ("i", "j"): "k",
        ("j", "k"): "i",
        ("k", "i"): "j",
        ("j", "i"): "-k",
        ("k", "j"): "-i",
        ("i", "k"): "-j",
    }

    def mul_names(x, y):
        sx, sy = x.lstrip("-"), y.lstrip("-")
        sign = x.startswith("-") ^ y.startswith("-")
        if sx == "1":
            out = sy
        elif sy == "1":
            out = sx
        elif sx == sy:
            out = "-1"
        else:
            out = base[(sx, sy)]
        return neg(out) if sign else out

    def mul(x, y):
        return idx[mul_names(names[x], names[y])]

    return FiniteGroup(range(8), mul, 0, generators=[idx["i"], idx["j"]])


class TestFiniteGroup:
    def test_s3_basic(self):
        g = symmetric_group(3)
        assert g.order == 6
        assert g.exponent() == 6
        classes = g.conjugacy_classes()
        sizes = [len(c) for c in classes]
        assert sizes == [1, 2, 3]
        assert g.identity in classes[0]

    def test_element_orders_s4(self):
        g = symmetric_group(4)
        orders = sorted(g.element_order(x) for x in g.elements)
        assert orders.count(1) == 1
        assert orders.count(2) == 9  # 6 transpositions + 3 double transpositions
        assert orders.count(3) == 8
        assert orders.count(4) == 6

    def test_inverse(self):
        g = symmetric_group(4)
        for x in g.elements:
            assert g.mul(x, g.inverse(x)) == g.identity

    def test_cyclic_classes(self):
        g = cyclic_group(6)
        classes = g.conjugacy_classes()
        assert [len(c) for c in classes] == [1] * 6

    def test_dihedral_class_count(self):
        # symmetries of a square acting on vertices
        r = (1, 2, 3, 0)
        s = (1, 0, 3, 2)
        elems = set()
        frontier = [tuple(range(4))]
        while frontier:
            x = frontier.pop()
            if x in elems:
                continue
            elems.add(x)
            frontier.extend([perm_mul(x, r), perm_mul(x, s)])
        g = FiniteGroup(elems, perm_mul, tuple(range(4)), generators=[r, s])
        assert g.order == 8
        assert len(g.conjugacy_classes()) == 5


class TestDixon:
    def test_s3_table(self):
        table = CharacterTable.dixon(symmetric_group(3))
        assert table.degrees == [1, 1, 2]
        # classes: identity, then 3-cycles (size 2), then transpositions (size 3)
        assert table.class_sizes == [1, 2, 3]
        rows = [[v.rational_value() for v in row] for row in table.characters]
        assert [1, 1, 1] in rows
        assert [1, 1, -1] in rows
        assert [2, -1, 0] in rows

    def test_s4_degrees(self):
        table = CharacterTable.dixon(symmetric_group(4))
        assert table.degrees == [1, 1, 2, 3, 3]
        assert table.sum_of_degree_squares() == 24

    def test_c4_values_are_fourth_roots(self):
        table = CharacterTable.dixon(cyclic_group(4))
        assert table.degrees == [1, 1, 1, 1]
        # every value is zeta_4^k; the table contains a faithful character
        values = [v for row in table.characters for v in row]
        i = root_of_unity(4, 1)
        assert any(v == i for v in values)
        assert any(v == -1 for v in values)

    def test_quaternion(self):
        table = CharacterTable.dixon(quaternion_group())
        assert table.degrees == [1, 1, 1, 1, 2]
        two_dim = table.characters[-1]
        vals = sorted(
            v.rational_value() for v in two_dim
        )
        assert vals == [-2, 0, 0, 0, 2]

    @pytest.mark.parametrize("n", [2, 3, 5, 6, 8, 12])
    def test_cyclic_linear(self, n):
        table = CharacterTable.dixon(cyclic_group(n))
        assert table.degrees == [1] * n
        assert table.verify_row_orthogonality()
        assert table.verify_column_orthogonality()

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_symmetric_orthogonality(self, n):
        table = CharacterTable.dixon(symmetric_group(n))
        assert table.verify_row_orthogonality()
        assert table.verify_column_orthogonality()
        import math

        assert table.sum_of_degree_squares() == math.factorial(n)

    def test_values_are_algebraic_integer_combinations(self):
        # all character values lie in Z[zeta_o] with integer coordinates
        table = CharacterTable.dixon(symmetric_group(4))
        for row in table.characters:
            for v in row:
                for _, num, den in v.to_triples():
                    assert den == 1

    def test_first_column_is_degree(self):
        table = CharacterTable.dixon(quaternion_group())
        for row, deg in zip(table.characters, table.degrees):
            assert row[0] == Fraction(deg)
