from itertools import combinations
from math import comb

import pytest

from interlace.census import slice_census
from interlace.errors import (
    IntertwiningError,
    NotASliceError,
    NotInIndexSetError,
    ParameterError,
    WrongCollectionSizeError,
)
from interlace.slices import (
    compositions,
    construct_Ck,
    construct_Ck_by_psi,
    construct_Ck_prime,
    is_slice,
    phi,
    psi,
    slice_collisions,
    standard_slice,
)
from interlace.subsets import (
    Collection,
    check,
    expected_collection_size,
    hat,
    is_valid_collection,
    weakly_separated,
)

from conftest import REFERENCE_C4, coll, cs


class TestPhi:
    def test_known_deficit_tuples(self):
        assert phi(cs(8, "135"), 1) == (0, 0, 2)
        assert phi(cs(8, "157"), 1) == (2, 0, 0)
        assert phi(cs(8, "135"), 1) == phi(cs(8, "357"), 1)

    def test_base_point_rotates_entries(self):
        assert phi(cs(8, "157"), 2) == (0, 0, 2)  # read from 5 in the <_2 order

    def test_entries_sum(self):
        for m in standard_slice(9, 3):
            for i in range(1, 10):
                p = phi(m, i)
                assert all(x >= 0 for x in p)
                assert sum(p) == 9 - 2 * 3

    def test_rejects_bad_input(self):
        with pytest.raises(NotInIndexSetError):
            phi(cs(8, "124"), 1)
        with pytest.raises(ParameterError):
            phi(cs(8, "135"), 9)


class TestIsSlice:
    def test_t1_certificate(self, t1):
        cert = is_slice(t1)
        assert cert is not None
        assert cert.base_point == 1
        assert set(cert.image) == {
            (0, 0, 2), (0, 1, 1), (0, 2, 0), (1, 0, 1), (1, 1, 0), (2, 0, 0),
        }

    def test_t2_rejected_with_expected_collisions(self, t2):
        assert is_slice(t2) is None
        expected_pairs = {
            1: ("135", "357"), 8: ("135", "357"),
            2: ("357", "157"), 3: ("357", "157"),
            4: ("147", "136"),
            5: ("137", "157"),
            6: ("137", "135"), 7: ("137", "135"),
        }
        collisions = slice_collisions(t2)
        for i in range(1, 9):
            found = {frozenset((a, b)) for a, b in collisions[i]}
            want = frozenset(cs(8, s) for s in expected_pairs[i])
            assert want in found, f"base point {i}"

    def test_precondition_errors_are_distinct(self, t1):
        with pytest.raises(WrongCollectionSizeError):
            is_slice(coll(8, 3, 3, "135", "136"))
        with pytest.raises(NotInIndexSetError):
            is_slice(coll(8, 3, 3, "134", "136", "137", "146", "147", "157"))
        with pytest.raises(IntertwiningError):
            is_slice(coll(8, 3, 3, "135", "246", "137", "146", "147", "157"))
        with pytest.raises(ParameterError):
            is_slice(coll(8, 4, 3, "1356", "1346", "1367", "1347", "1246", "1467"))

    def test_standard_slices_are_slices(self):
        for n in range(5, 9):
            for l in (2, 3):
                if n < 2 * l:
                    continue
                assert is_slice(standard_slice(n, l)) is not None


class TestStandardSlice:
    def test_known_values(self, t1):
        assert standard_slice(8, 3) == t1
        assert standard_slice(6, 2) == coll(6, 2, 2, "13", "14", "15")

    def test_size(self):
        for n in range(4, 11):
            for l in (2, 3):
                if n < 2 * l:
                    continue
                assert len(standard_slice(n, l)) == comb(n - l - 1, l - 1)


class TestConstruct:
    def test_nine_element_collection(self, t1):
        c4 = construct_Ck(t1, 4)
        assert c4.member_set() == {cs(8, s) for s in REFERENCE_C4}
        assert is_valid_collection(c4)

    def test_k_equals_l_returns_slice(self, t1):
        assert construct_Ck(t1, 3) == t1

    def test_scott_example(self):
        c3 = construct_Ck(standard_slice(6, 2), 3)
        assert c3.member_set() == {cs(6, s) for s in ("134", "124", "145", "125")}

    def test_prime_variant_uses_run_ends(self, t1):
        cp = construct_Ck_prime(t1, 4)
        assert len(cp) == 9
        assert all(check(m) in t1 for m in cp)
        assert is_valid_collection(cp)

    def test_requires_slice(self, t2):
        with pytest.raises(NotASliceError):
            construct_Ck(t2, 4)

    def test_every_slice_every_k_size_and_validity(self):
        # exhaustive over all enumerated slices, n <= 9, l in {2, 3}
        for n in range(4, 10):
            for l in (2, 3):
                if n < 2 * l:
                    continue
                for t in slice_census(n, l).slices:
                    for k in range(l, n - l + 1):
                        c = construct_Ck(t, k)
                        assert len(c) == expected_collection_size(n, k, l)
                        assert is_valid_collection(c)
                        assert construct_Ck_by_psi(t, k) == c

    def test_weak_separation_of_l2_grids(self):
        for n in range(4, 10):
            for k in range(2, n - 1):
                c = construct_Ck(standard_slice(n, 2), k)
                assert len(c) == (k - 1) * (n - k - 1)
                for a, b in combinations(c.members, 2):
                    assert weakly_separated(a, b)


class TestPsi:
    def test_known_value(self, t1):
        assert psi((0, 0, 1), (0, 0, 1), t1, 1) == cs(8, "1356")

    def test_zero_growth_returns_slice_member(self, t1):
        # k = l: q = 0-tuple reproduces the member with the given deficits
        assert psi((0, 0, 0), (0, 0, 2), t1, 1) == cs(8, "135")

    def test_injective_on_all_legal_inputs(self, t1):
        images = [
            psi(q, r, t1, 1)
            for q in compositions(1, 3)
            for r in compositions(1, 3)
        ]
        assert len(set(images)) == 9

    def test_hat_lands_in_slice(self):
        for n in range(6, 10):
            for l in (2, 3):
                if n < 2 * l:
                    continue
                t = standard_slice(n, l)
                for k in range(l, n - l + 1):
                    for q in compositions(k - l, l):
                        for r in compositions(n - k - l, l):
                            assert hat(psi(q, r, t)) in t

    def test_rejects_tuple_outside_image(self, t1):
        with pytest.raises(ParameterError):
            psi((1, 0, 0), (2, 0, 0), t1, 1)  # sums to 3 > n - 2l


class TestCompositions:
    def test_count(self):
        assert len(compositions(2, 3)) == comb(4, 2)
        assert compositions(0, 0) == [()]
        assert compositions(1, 0) == []
