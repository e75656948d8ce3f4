import math
import typing as t

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import grassmann_calculus as calculus

P = calculus.Partition


@st.composite
def partition_strategy(
    draw: t.Callable[..., t.Any], max_parts: int = 4, max_part: int = 4
) -> calculus.Partition:
    parts = draw(st.lists(st.integers(min_value=1, max_value=max_part), max_size=max_parts))
    return P(sorted(parts, reverse=True))


# partitions.Partition


def test_partition_strips_trailing_zeros():
    assert P([3, 1, 0, 0]) == P([3, 1])
    assert P([3, 1, 0]).parts == (3, 1)
    assert len(P([0, 0])) == 0
    assert hash(P([2, 0])) == hash(P([2]))


@pytest.mark.parametrize("parts", [[1, 2], [3, 1, 2], [-1], [2, -1]])
def test_partition_invalid(parts: list):
    with pytest.raises(calculus.PartitionError) as exc_info:
        P(parts)

    assert exc_info.value.parts == tuple(parts)


def test_partition_str():
    assert str(P([3, 1])) == "[3,1]"
    assert str(P()) == "[]"
    assert repr(P([2, 2])) == "Partition((2, 2))"


def test_partition_pad():
    assert P([2, 1]).pad(4) == (2, 1, 0, 0)
    assert P().pad(2) == (0, 0)

    with pytest.raises(calculus.PartitionError):
        P([1, 1, 1]).pad(2)


def test_partition_order():
    assert P([3]) > P([2, 1]) > P([1, 1, 1])
    assert sorted([P([1, 1]), P([2]), P()]) == [P(), P([1, 1]), P([2])]


# partitions.weight / conjugate / rectangle


@pytest.mark.parametrize(
    ("parts", "expected"),
    [
        ([],           []),
        ([1],          [1]),
        ([3],          [1, 1, 1]),
        ([3, 1],       [2, 1, 1]),
        ([2, 2],       [2, 2]),
        ([4, 4, 4],    [3, 3, 3, 3]),
        ([3, 2, 2, 1], [4, 3, 1]),
    ],  # fmt: skip
)
def test_conjugate(parts: list, expected: list):
    assert calculus.conjugate(P(parts)) == P(expected)
    assert calculus.weight(P(parts)) == sum(parts)


@given(partition_strategy())
def test_conjugate_involution(partition: calculus.Partition):
    conjugate = calculus.conjugate(partition)

    assert calculus.conjugate(conjugate) == partition
    assert conjugate.weight == partition.weight


def test_rectangle():
    assert calculus.rectangle(2, 3) == P([3, 3])
    assert calculus.rectangle(3, 0) == P()

    with pytest.raises(calculus.SetupError):
        calculus.rectangle(0, 1)

    with pytest.raises(calculus.SetupError):
        calculus.rectangle(1, -1)


# partitions.add


@pytest.mark.parametrize(
    ("first", "second", "pad_to", "expected"),
    [
        ([1],    [2, 2], 2, [3, 2]),
        ([1, 1], [2, 2], 2, [3, 3]),
        ([],     [2, 2], 2, [2, 2]),
        ([2],    [1],    1, [3]),
        ([2, 1], [],     3, [2, 1]),
    ],  # fmt: skip
)
def test_add(first: list, second: list, pad_to: int, expected: list):
    assert calculus.add(P(first), P(second), pad_to) == P(expected)


def test_add_too_long():
    with pytest.raises(calculus.PartitionError):
        calculus.add(P([1, 1, 1]), P([2, 2]), 2)


# partitions.pieri_add_box / remove_box


@pytest.mark.parametrize(
    ("parts", "max_rows", "expected"),
    [
        ([],     3, [[1]]),
        ([1],    1, [[2]]),
        ([1],    2, [[2], [1, 1]]),
        ([2, 1], 2, [[3, 1], [2, 2]]),
        ([2, 1], 3, [[3, 1], [2, 2], [2, 1, 1]]),
        ([1, 1], 2, [[2, 1]]),
    ],  # fmt: skip
)
def test_pieri_add_box(parts: list, max_rows: int, expected: list):
    assert calculus.pieri_add_box(P(parts), max_rows) == [P(grown) for grown in expected]


def test_pieri_add_box_too_long():
    with pytest.raises(calculus.PartitionError):
        calculus.pieri_add_box(P([1, 1]), 1)


@pytest.mark.parametrize(
    ("parts", "expected"),
    [
        ([],        []),
        ([1],       [[]]),
        ([2, 2],    [[2, 1]]),
        ([3, 1],    [[3], [2, 1]]),
        ([3, 2, 1], [[3, 2], [3, 1, 1], [2, 2, 1]]),
    ],  # fmt: skip
)
def test_remove_box(parts: list, expected: list):
    assert calculus.remove_box(P(parts)) == [P(shrunk) for shrunk in expected]


@given(partition_strategy(), st.integers(min_value=1, max_value=5))
def test_pieri_add_box_inverts_remove_box(partition: calculus.Partition, max_rows: int):
    if len(partition) > max_rows:
        return

    for grown in calculus.pieri_add_box(partition, max_rows):
        assert grown.weight == partition.weight + 1
        assert len(grown) <= max_rows
        assert partition in calculus.remove_box(grown)


@pytest.mark.parametrize("max_rows", range(1, 5))
@pytest.mark.parametrize("weight", range(7))
def test_pieri_add_box_exhaustive(weight: int, max_rows: int):
    for partition in calculus.iter_partitions(weight, max_rows):
        expected = [
            grown
            for grown in calculus.iter_partitions(weight + 1, max_rows)
            if all(a >= b for a, b in zip(grown.pad(max_rows), partition.pad(max_rows)))
        ]
        assert calculus.pieri_add_box(partition, max_rows) == expected


# partitions.iter_partitions


def test_iter_partitions_order():
    assert calculus.iter_partitions(4) == [P([4]), P([3, 1]), P([2, 2]), P([2, 1, 1]), P([1, 1, 1, 1])]
    assert calculus.iter_partitions(4, 2) == [P([4]), P([3, 1]), P([2, 2])]


@pytest.mark.parametrize(
    ("weight", "max_length", "expected"),
    [
        (0,  None, [P()]),
        (0,  0,    [P()]),
        (-1, None, []),
        (3,  0,    []),
    ],  # fmt: skip
)
def test_iter_partitions_edges(weight: int, max_length: int, expected: list):
    assert calculus.iter_partitions(weight, max_length) == expected


@pytest.mark.parametrize(
    ("weight", "count"),
    [(0, 1), (1, 1), (2, 2), (3, 3), (4, 5), (5, 7), (6, 11), (7, 15), (8, 22)],
)
def test_iter_partitions_count(weight: int, count: int):
    found = calculus.iter_partitions(weight)

    assert len(found) == count
    assert len(set(found)) == count
    assert all(partition.weight == weight for partition in found)


# partitions.syt_count_*


@pytest.mark.parametrize(
    ("parts", "expected"),
    [
        ([],           1),
        ([5],          1),
        ([1, 1, 1, 1], 1),
        ([2, 1],       2),
        ([2, 2],       2),
        ([3, 1],       3),
        ([3, 2],       5),
        ([3, 1, 1],    6),
        ([3, 3],       5),
        ([4, 2],       9),
        ([3, 2, 1],    16),
        ([4, 4, 4],    462),
    ],  # fmt: skip
)
def test_syt_count_known(parts: list, expected: int):
    partition = P(parts)

    assert calculus.syt_count_formula(partition) == expected
    assert calculus.syt_count_hook(partition) == expected
    assert calculus.syt_count_bruteforce(partition) == expected


@pytest.mark.parametrize("weight", range(7))
def test_syt_count_sum_of_squares(weight: int):
    # Tableau counts are the dimensions of the irreducible representations of S_n.
    total = sum(calculus.syt_count_formula(partition) ** 2 for partition in calculus.iter_partitions(weight))
    assert total == math.factorial(weight)


@settings(max_examples=50)
@given(partition_strategy(max_parts=3, max_part=3))
def test_syt_count_routes_agree(partition: calculus.Partition):
    formula = calculus.syt_count_formula(partition)

    assert calculus.syt_count_hook(partition) == formula
    assert calculus.syt_count_bruteforce(partition) == formula
    if partition:
        assert sum(calculus.syt_count_formula(smaller) for smaller in calculus.remove_box(partition)) == formula


def test_syt_count_bruteforce_cap():
    with pytest.raises(calculus.PartitionError):
        calculus.syt_count_bruteforce(P([5, 4, 4]))

    with pytest.raises(calculus.PartitionError):
        calculus.syt_count_bruteforce(P([2, 1]), cap=2)

    assert calculus.syt_count_bruteforce(P([2, 1]), cap=3) == 2
