"""Tests for wreath-product character tables, conductors, and restrictions."""

import math

import pytest

from charverify.cyclotomic import CyclotomicNumber, conductor
from charverify.grouptable import CharacterTable
from charverify.partitions import Partition
from charverify.wreath import (
    IndexTwoConstituent,
    WreathClass,
    char_value,
    class_labels,
    colored_type,
    conductor_of_char,
    degree,
    galois_permuted_label,
    get_full_group,
    get_subgroup,
    get_subgroup_table,
    get_table,
    h_d_invariant,
    irr_labels,
    restrict_index2,
    sum_of_degree_squares,
    twist_label,
    verify_galois_equivariance,
    verify_orthogonality,
)

P = Partition
E = P(())


class TestLabelsAndClasses:
    def test_label_count_2_2(self):
        labs = irr_labels(2, 2)
        assert len(labs) == 5
        assert (P((1,)), P((1,))) in labs

    def test_label_count_12_4(self):
        assert len(irr_labels(12, 4)) == 2535

    @pytest.mark.parametrize("m,a", [(1, 4), (2, 3), (3, 2), (4, 2), (5, 3), (6, 4)])
    def test_label_and_class_counts_agree(self, m, a):
        assert len(irr_labels(m, a)) == len(class_labels(m, a))

    def test_class_sizes_sum_to_group_order(self):
        for m, a in [(2, 3), (3, 3), (4, 2), (6, 2)]:
            total = sum(cls.size(m) for cls in class_labels(m, a))
            assert total == m**a * math.factorial(a)

    def test_centralizer_order(self):
        # one 2-cycle of color 1 and one fixed point: z = (2m) * (m)
        cls = WreathClass(((2, 1), (1, 0)))
        assert cls.centralizer_order(2) == 8
        assert cls.size(2) == 2**3 * 6 // 8
        # two 1-cycles of equal color: z = m^2 * 2!
        cls2 = WreathClass(((1, 1), (1, 1)))
        assert cls2.centralizer_order(3) == 18

    def test_class_validation(self):
        with pytest.raises(ValueError):
            WreathClass(((0, 1),))


class TestCharacterValues:
    def test_cyclic_base_case(self):
        # m=3, a=1: the label with (1) in component k restricted to a single
        # 1-cycle of color j has value zeta_3^{jk}
        value = char_value((E, P((1,)), E), WreathClass(((1, 1),)), 3)
        assert value == CyclotomicNumber(3, {1: 1})
        value2 = char_value((E, E, P((1,))), WreathClass(((1, 2),)), 3)
        assert value2 == CyclotomicNumber(3, {4: 1})  # zeta^4 = zeta

    def test_symmetric_group_specialization(self):
        # m = 1 recovers the ordinary symmetric-group table
        table = get_table(1, 3)
        lab = (P((2, 1)),)
        vals = {
            cls.cycles: table.value(table.label_index[lab], j)
            for j, cls in enumerate(table.classes)
        }
        assert vals[((3, 0),)] == -1
        assert vals[((2, 0), (1, 0))] == 0
        assert vals[((1, 0), (1, 0), (1, 0))] == 2

    def test_hook_sign(self):
        # chi_{(1^2)} on a 2-cycle is -1
        table = get_table(1, 2)
        lab = (P((1, 1)),)
        assert table.value(table.label_index[lab], table.class_index[((2, 0),)]) == -1

    @pytest.mark.parametrize("m,a", [(2, 2), (2, 3), (3, 2), (4, 2), (3, 3), (6, 2)])
    def test_degree_formula_matches_identity_value(self, m, a):
        table = get_table(m, a)
        for i, lab in enumerate(table.labels):
            assert table.degrees[i] == degree(lab)

    @pytest.mark.parametrize("m,a", [(2, 2), (2, 3), (3, 2), (4, 2), (6, 2), (5, 2)])
    def test_sum_of_degree_squares(self, m, a):
        assert sum_of_degree_squares(m, a) == m**a * math.factorial(a)

    def test_value_argument_validation(self):
        with pytest.raises(ValueError):
            char_value((E, P((1,))), WreathClass(((1, 0),)), 3)  # wrong length
        with pytest.raises(ValueError):
            char_value((E, P((1,)), E), WreathClass(((2, 0),)), 3)  # wrong weight


class TestDixonOracle:
    """The recursion is checked against tables computed from explicit groups."""

    @pytest.mark.parametrize("m,a", [(2, 2), (3, 2), (2, 3), (4, 2)])
    def test_wreath_table_matches_explicit_group(self, m, a):
        table = get_table(m, a)
        group = get_full_group(m, a)
        dixon = CharacterTable.dixon(group)
        assert group.order == m**a * math.factorial(a)
        # identify each Dixon class with a colored cycle type
        reps = [cls[0] for cls in dixon.group.conjugacy_classes()]
        rep_types = [colored_type(rep, m) for rep in reps]
        assert sorted(t.cycles for t in rep_types) == sorted(
            c.cycles for c in table.classes
        )
        # every recursion row must occur exactly once among the Dixon rows
        matched = set()
        for i in range(len(table.labels)):
            row = [
                table.value(i, table.class_index[t.cycles]) for t in rep_types
            ]
            hits = [
                j
                for j, drow in enumerate(dixon.characters)
                if all(u == v for u, v in zip(row, drow))
            ]
            assert len(hits) == 1, f"row {i} matched {hits}"
            matched.add(hits[0])
        assert len(matched) == len(table.labels)

    def test_class_sizes_match_explicit_group(self):
        m, a = 3, 2
        table = get_table(m, a)
        group = get_full_group(m, a)
        for cls_elems in group.conjugacy_classes():
            t = colored_type(cls_elems[0], m)
            assert len(cls_elems) == table.class_sizes[table.class_index[t.cycles]]


class TestOrthogonality:
    @pytest.mark.parametrize(
        "m,a", [(1, 4), (2, 2), (2, 4), (3, 3), (4, 2), (5, 2), (6, 2), (6, 3)]
    )
    def test_row_and_column_orthogonality(self, m, a):
        assert verify_orthogonality(m, a)


class TestGaloisAction:
    def test_permuted_label(self):
        lab = (E, P((1,)), E, E)
        # sigma_3: mu^(j) = lambda^(3j mod 4) since 3^{-1} = 3 mod 4
        assert galois_permuted_label(lab, 4, 3) == (E, E, E, P((1,)))
        with pytest.raises(ValueError):
            galois_permuted_label(lab, 4, 2)

    @pytest.mark.parametrize("m,a", [(2, 3), (3, 2), (4, 2), (5, 2), (6, 2), (6, 3)])
    def test_equivariance_value_level(self, m, a):
        assert verify_galois_equivariance(m, a)

    def test_conductor_frozen_examples(self):
        assert conductor_of_char((E, P((2,)), E, E), 4) == 4
        assert conductor_of_char((P((1,)), P((1,))), 2) == 1
        assert conductor_of_char((P((2, 1)),), 1) == 1
        # component permutation invariance under all of (Z/3)^x
        assert conductor_of_char((P((1,)), P((1,)), P((1,))), 3) == 1
        # moved by sigma_2 mod 3
        assert conductor_of_char((E, P((1,)), E), 3) == 3

    @pytest.mark.parametrize("m", [1, 2])
    def test_small_m_always_rational(self, m):
        for a in range(0, 4):
            for lab in irr_labels(m, a):
                assert conductor_of_char(lab, m) == 1

    @pytest.mark.parametrize("m,a", [(3, 2), (4, 2), (5, 2), (6, 2), (6, 3)])
    def test_label_route_matches_values_route(self, m, a):
        for lab in irr_labels(m, a):
            assert conductor_of_char(lab, m, via="label") == conductor_of_char(
                lab, m, via="values"
            )

    @pytest.mark.parametrize("m,a", [(3, 2), (4, 2), (6, 2)])
    def test_values_route_matches_elementwise_conductor(self, m, a):
        # third route: lcm of conductors of the individual table entries
        table = get_table(m, a)
        for i, lab in enumerate(table.labels):
            by_entries = math.lcm(
                *[conductor(table.value(i, j)) for j in range(len(table.classes))]
            )
            assert conductor_of_char(lab, m) == by_entries


class TestHdInvariance:
    def test_frozen_false_example(self):
        lab = (E, P((1,)), E, E)
        assert h_d_invariant(lab, 4, d=2) is False
        assert h_d_invariant(lab, 4, d=2, via="label") is False
        assert h_d_invariant(lab, 4, d=4) is True

    def test_trivial_when_m_divides_d(self):
        # k = 1 mod d forces k = 1 mod m, so every character is fixed
        for m, d in [(2, 2), (3, 3), (4, 4), (3, 6), (4, 8), (6, 6)]:
            for a in (1, 2):
                for lab in irr_labels(m, a):
                    assert h_d_invariant(lab, m, d=d, via="values")

    def test_label_route_matches_values_route(self):
        for m, a in [(3, 2), (4, 2), (6, 2), (4, 3)]:
            for d in range(1, 9):
                for lab in irr_labels(m, a):
                    assert h_d_invariant(lab, m, d=d, via="label") == h_d_invariant(
                        lab, m, d=d, via="values"
                    )

    def test_residue_class_criterion(self):
        # when m is even, m | 2d but m does not divide d, fixedness under
        # H_[d] is exactly invariance under the shift j -> j * (1 + m/2)
        m, d = 8, 12
        shift = 1 + m // 2
        for lab in irr_labels(m, 2):
            expected = all(
                lab[(j * shift) % m] == lab[j] for j in range(m)
            )
            assert h_d_invariant(lab, m, d=d, via="label") == expected


class TestIndexTwoRestriction:
    def test_subgroup_structure(self):
        g = get_subgroup(2, 2)
        assert g.order == 4
        assert get_subgroup(4, 3).order == 4**3 * 6 // 2
        with pytest.raises(ValueError):
            get_subgroup(3, 2)

    def test_subgroup_closure(self):
        g = get_subgroup(4, 2)
        for x in g.elements[:8]:
            for y in g.elements[:8]:
                assert g.mul(x, y) in g.index

    def test_colored_type(self):
        assert colored_type(((1, 1), (1, 0)), 2).cycles == ((2, 0),)
        assert colored_type(((0, 0), (0, 1)), 2).cycles == ((1, 0), (1, 0))
        assert colored_type(((1, 1, 0), (0, 1, 2)), 3).cycles == (
            (1, 1),
            (1, 1),
            (1, 0),
        )

    def test_twist_label(self):
        lab = (P((1,)), E, P((2,)), E)
        assert twist_label(lab, 4) == (P((2,)), E, P((1,)), E)
        with pytest.raises(ValueError):
            twist_label(lab, 3)

    def test_split_case_klein(self):
        # C_2 wr S_2 restricted to its index-2 subgroup (Klein four group)
        parts = restrict_index2((P((1,)), P((1,))), 2)
        assert [c.tag for c in parts] == ["plus", "minus"]
        assert [c.degree for c in parts] == [1, 1]
        assert all(isinstance(c, IndexTwoConstituent) for c in parts)
        # plus has the lexicographically smaller serialization at the first
        # class where the two rows differ
        k0 = next(
            k
            for k in range(len(parts[0].values))
            if parts[0].values[k].to_dict() != parts[1].values[k].to_dict()
        )
        assert parts[0].values[k0].to_triples() < parts[1].values[k0].to_triples()

    def test_moved_label_restricts_irreducibly(self):
        parts = restrict_index2((P((2,)), E), 2)
        assert len(parts) == 1
        assert parts[0].tag == "full"
        assert parts[0].degree == 1
        assert parts[0].orbit == (E, P((2,)))  # canonical orbit member

    @pytest.mark.parametrize("m,a", [(2, 2), (2, 3), (4, 2), (6, 2)])
    def test_degrees_and_split_criterion(self, m, a):
        for lab in irr_labels(m, a):
            parts = restrict_index2(lab, m)
            if twist_label(lab, m) == lab:
                assert len(parts) == 2
                assert sum(c.degree for c in parts) == degree(lab)
            else:
                assert len(parts) == 1
                assert parts[0].degree == degree(lab)

    @pytest.mark.parametrize("m,a", [(2, 2), (4, 2), (2, 3)])
    def test_restriction_norm_oracle(self, m, a):
        # <chi|_H, chi|_H> computed element by element must be 2 for
        # twist-fixed labels and 1 otherwise
        table = get_table(m, a)
        sub = get_subgroup(m, a)
        for lab in table.labels:
            i = table.label_index[lab]
            acc = CyclotomicNumber.zero()
            for h in sub.elements:
                t = colored_type(h, m)
                v = table.value(i, table.class_index[t.cycles])
                acc = acc + v * v.conjugate()
            norm = acc / sub.order
            expected = 2 if twist_label(lab, m) == lab else 1
            assert norm == expected

    def test_split_values_are_class_functions_of_subgroup(self):
        # split pieces match rows of the independently computed subgroup table
        sub_table = get_subgroup_table(2, 2)
        parts = restrict_index2((P((1,)), P((1,))), 2)
        for c in parts:
            hits = [
                row
                for row in sub_table.characters
                if all(u == v for u, v in zip(c.values, row))
            ]
            assert len(hits) == 1

    def test_split_pieces_sum_to_restriction(self):
        m, a = 4, 2
        table = get_table(m, a)
        sub_table = get_subgroup_table(m, a)
        for lab in table.labels:
            if twist_label(lab, m) != lab:
                continue
            plus, minus = restrict_index2(lab, m)
            i = table.label_index[lab]
            for k, rep in enumerate(sub_table.class_reps):
                t = colored_type(rep, m)
                parent_value = table.value(i, table.class_index[t.cycles])
                assert plus.values[k] + minus.values[k] == parent_value


class TestSerialization:
    def test_to_json_dict(self):
        table = get_table(2, 2)
        data = table.to_json_dict()
        assert data["m"] == 2 and data["a"] == 2
        assert len(data["labels"]) == 5
        assert len(data["values"]) == 5
        rebuilt = CyclotomicNumber.from_dict(data["values"][0][0])
        assert rebuilt == table.value(0, 0)
