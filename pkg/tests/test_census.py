from math import comb

import pytest

from interlace.census import (
    count_triangulations,
    cross_validate,
    enum_maximal_non_l_intertwining,
    enum_maximal_nonintertwining,
    slice_census,
)
from interlace.errors import GuardError
from interlace.slices import construct_Ck, standard_slice
from conftest import coll


class TestMaximalNonIntertwining:
    def test_purity(self):
        for n, l in [(5, 2), (6, 2), (7, 2), (8, 3), (9, 3)]:
            found = enum_maximal_nonintertwining(n, l)
            assert {len(c) for c in found} == {comb(n - l - 1, l - 1)}

    def test_hexagon_count_is_catalan(self):
        assert len(enum_maximal_nonintertwining(6, 2)) == 14

    def test_l2_counts_match_triangulation_oracle(self):
        for n in (5, 6, 7):
            assert len(enum_maximal_nonintertwining(n, 2)) == count_triangulations(n)

    def test_catalan_oracle_values(self):
        assert [count_triangulations(m) for m in range(3, 9)] == [1, 2, 5, 14, 42, 132]

    def test_both_reference_collections_appear(self, t1, t2):
        found = enum_maximal_nonintertwining(8, 3)
        assert t1 in found
        assert t2 in found

    def test_tiny_parameters(self):
        found = enum_maximal_nonintertwining(4, 2)
        assert {len(c) for c in found} == {1}

    def test_guard(self):
        with pytest.raises(GuardError):
            enum_maximal_nonintertwining(12, 3)


class TestOpenQuestionProbe:
    def test_8_4_3_report(self, t1):
        report = enum_maximal_non_l_intertwining(8, 4, 3)
        assert report.conjectured_max == comb(3, 2) ** 2 == 9
        assert report.max_size == report.conjectured_max  # reported, found equal here
        assert construct_Ck(t1, 4) in report.max_witnesses
        assert set(report.histogram) == {6, 7, 8, 9}

    def test_6_3_2_contains_scott(self):
        report = enum_maximal_non_l_intertwining(6, 3, 2)
        scott = coll(6, 3, 2, "134", "124", "145", "125")
        assert report.max_size == 4 == (3 - 1) * (6 - 3 - 1)
        assert scott in report.max_witnesses

    def test_k_equals_l_reduces(self):
        report = enum_maximal_non_l_intertwining(8, 3, 3)
        base = enum_maximal_nonintertwining(8, 3)
        assert sorted(report.max_witnesses) == sorted(base)
        assert report.histogram == {6: len(base)}

    def test_guard(self):
        with pytest.raises(GuardError):
            enum_maximal_non_l_intertwining(12, 6, 3)


class TestSliceCensus:
    def test_8_3_classification(self, t1, t2):
        census = slice_census(8, 3)
        assert t1 in census.slices
        assert t2 in census.non_slices
        assert len(census.slices) + len(census.non_slices) == 40

    def test_6_2_snake_and_fan(self):
        census = slice_census(6, 2)
        assert standard_slice(6, 2) in census.slices  # {13, 14, 15}
        fan = coll(6, 2, 2, "13", "15", "35")
        assert fan in census.non_slices

    def test_standard_slices_classified_slice(self):
        for n, l in [(5, 2), (6, 2), (7, 2), (8, 3)]:
            assert standard_slice(n, l) in slice_census(n, l).slices

    def test_construct_of_slices_is_inclusion_maximal(self):
        from interlace.subsets import pair_l_intertwines, subs

        for n, l in [(6, 2), (8, 3)]:
            for t in slice_census(n, l).slices:
                for k in range(l, n - l + 1):
                    c = construct_Ck(t, k)
                    members = c.member_set()
                    for candidate in subs(n, k, l):
                        if candidate in members:
                            continue
                        assert any(
                            pair_l_intertwines(candidate, m, l) for m in c.members
                        ), f"{candidate} extends C_{k} of {t}"


class TestCrossValidate:
    def test_default_grid_passes(self):
        report = cross_validate()
        assert report["passed"]
        names = {c["name"] for c in report["checks"]}
        assert names == {"endpoint_lemma", "psi_vs_filtration", "wrap_rules"}

    def test_fault_injection_localises(self):
        def bad_phi(t, i):
            from interlace.slices import phi

            return tuple(x + 1 for x in phi(t, i))

        report = cross_validate(ns=[8], ls=(3,), phi_fn=bad_phi)
        assert not report["passed"]
        failing = {c["name"] for c in report["checks"] if not c["passed"]}
        assert failing == {"psi_vs_filtration"}

    def test_empty_grid_vacuous(self):
        report = cross_validate(ns=[], ls=())
        assert report["passed"]
        assert report["checks"] == []
