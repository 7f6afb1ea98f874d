from pytest import raises

import korbit as kb
from korbit.exceptions import (
    DegreeMismatchError,
    DiagonalViolationError,
    PreconditionError,
    UnsupportedRightActionError,
)


class TestActions:
    g = kb.Permutation([3, 1, 2])
    tuples = {(1, 2, 3), (1, 3, 2)}

    def test_left_action_example(self) -> None:
        assert kb.left_act(self.g, self.tuples) == {(3, 1, 2), (3, 2, 1)}
        assert kb.left_act(self.g, (1, 2)) == (3, 1)

    def test_right_action_example(self) -> None:
        images = {kb.right_act(t, self.g) for t in self.tuples}
        assert images == {(3, 1, 2), (2, 1, 3)}

    def test_left_action_is_a_homomorphism(self) -> None:
        h = kb.Permutation([2, 1, 3])
        x = (1, 3)
        assert kb.left_act(self.g * h, x) == kb.left_act(self.g, kb.left_act(h, x))

    def test_right_action_composes(self) -> None:
        h = kb.Permutation([2, 1, 3])
        x = (1, 3, 2)
        assert kb.right_act(x, self.g * h) == kb.right_act(
            kb.right_act(x, self.g), h
        )

    def test_right_action_needs_full_tuples(self) -> None:
        with raises(UnsupportedRightActionError):
            kb.right_act((1, 2), self.g)

    def test_left_action_out_of_range(self) -> None:
        with raises(DegreeMismatchError):
            kb.left_act(self.g, (1, 4))

    def test_coordinates_and_concatenate(self) -> None:
        assert kb.coordinates((3, 1, 2)) == frozenset({1, 2, 3})
        assert kb.concatenate((1, 2), (4,)) == (1, 2, 4)
        with raises(DiagonalViolationError):
            kb.concatenate((1, 2), (2, 3))

    def test_check_tuple(self) -> None:
        assert kb.check_tuple([2, 1], 3) == (2, 1)
        with raises(DiagonalViolationError):
            kb.check_tuple((1, 1), 3)
        with raises(PreconditionError):
            kb.check_tuple((0, 1), 3)

    def test_project(self) -> None:
        assert kb.project(self.tuples, [1]) == {(1,)}
        assert kb.project(self.tuples, [3, 2]) == {(3, 2), (2, 3)}
        with raises(PreconditionError):
            kb.project(self.tuples, [4])
        with raises(PreconditionError):
            kb.project(self.tuples, [1, 1])
