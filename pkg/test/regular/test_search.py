from pytest import mark, raises

import korbit as kb
from korbit.catalog.families import cyclic_generators, symmetric_generators
from korbit.exceptions import PreconditionError


class TestRegularElements:
    def test_first_regular_element(self) -> None:
        report = kb.find_regular(kb.close_group(cyclic_generators(4)), group_id="C4@4")
        assert report.found
        assert report.witness_images() == [2, 3, 4, 1]
        assert report.witness_cycle_len == 4
        assert report.searched == 2
        assert report.group_id == "C4@4"

    def test_identity_is_opt_in(self) -> None:
        G = kb.close_group([kb.parse_permutation("(1 2)", 3)])
        assert not kb.find_regular(G).found
        report = kb.find_regular(G, include_identity=True)
        assert report.found and report.witness_cycle_len == 1
        assert report.searched == 1

    def test_miss_counts_every_element(self) -> None:
        G = kb.close_group([kb.parse_permutation("(1 2)", 3)])
        report = kb.find_regular(G)
        assert report.witness is None
        assert report.witness_images() is None
        assert report.searched == G.order

    @mark.parametrize(
        "element, regular",
        [("(1 2 3)(4 5 6)", True), ("(1 2)(3 4)(5 6)", True), ("(1 2 3)", False)],
    )
    def test_is_regular_element(self, element: str, regular: bool) -> None:
        assert kb.is_regular_element(kb.parse_permutation(element, 6)) is regular

    @mark.parametrize("m, expected", [(1, False), (4, True), (6, False), (7, True)])
    def test_is_prime_power(self, m: int, expected: bool) -> None:
        assert kb.is_prime_power(m) is expected

    def test_fixed_point_free_prime_power(self) -> None:
        report = kb.find_fpf_prime_power(kb.close_group(symmetric_generators(3)))
        assert report.witness_images() == [2, 3, 1]
        assert report.searched == 4
        with raises(PreconditionError):
            kb.find_fpf_prime_power(kb.close_group([kb.parse_permutation("(1 2)", 3)]))

    @mark.parametrize("p, found", [(2, True), (3, True), (5, False)])
    def test_semiregular_of_order(self, p: int, found: bool) -> None:
        report = kb.find_semiregular_of_order(kb.close_group(cyclic_generators(6)), p)
        assert report.found is found
        if found:
            assert report.witness is not None
            assert report.witness.cycle_type().as_dict() == {p: 6 // p}
