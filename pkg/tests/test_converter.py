import json
import typing as t

import pytest

import grassmann_calculus as calculus
from grassmann_calculus import converter

P = calculus.Partition


# converter.partition_*


@pytest.mark.parametrize(
    ("literal", "expected"),
    [
        ("[]",        P()),
        ("[5]",       P([5])),
        ("[2,1]",     P([2, 1])),
        (" [3, 1] ",  P([3, 1])),
        ("[2,2,0]",   P([2, 2])),
    ],  # fmt: skip
)
def test_partition_from_str(literal: str, expected: calculus.Partition):
    assert converter.partition_from_str(literal) == expected


@pytest.mark.parametrize("literal", ["2,1", "[2,-1]", "[a]", "[2,,1]", "[1.0]", ""])
def test_partition_from_str_malformed(literal: str):
    with pytest.raises(calculus.MatchFailure):
        converter.partition_from_str(literal)


def test_partition_from_str_increasing():
    with pytest.raises(calculus.ConversionError) as exc_info:
        converter.partition_from_str("[1,2]")

    assert isinstance(exc_info.value.errors[0], calculus.PartitionError)


@pytest.mark.parametrize("data", [[2, True], "[2,1]", [2.0], {"parts": [1]}, None])
def test_partition_from_json_invalid(data: t.Any):
    with pytest.raises(calculus.ConversionError):
        converter.partition_from_json(data)


# converter.rational_*


def test_rational_json():
    assert converter.rational_from_json(3) == 3
    assert converter.rational_from_json("-2/4") == calculus.utils.rational(-1, 2)
    assert converter.rational_to_json(calculus.utils.rational(6, 3)) == "2"
    assert converter.rational_to_json(calculus.utils.rational(-1, 3)) == "-1/3"

    with pytest.raises(calculus.ConversionError):
        converter.rational_from_json(1.5)

    with pytest.raises(calculus.ConversionError):
        converter.rational_from_json(False)


# converter.generator_table_* / graded_element_*


def test_generator_table_json():
    data = {"n": 2, "generators": [{"name": "c1", "degree": 1}, {"name": "b0", "degree": 0}]}
    table = converter.generator_table_from_json(data)

    assert table.generators == (("c1", 1), ("b0", 0))
    assert table.n == 2
    assert converter.generator_table_to_json(table) == data


@pytest.mark.parametrize(
    "data",
    [
        [],
        {"n": 2},
        {"n": "2", "generators": []},
        {"n": 2, "generators": [{"name": "c1"}]},
        {"n": 2, "generators": ["c1"]},
    ],
)
def test_generator_table_json_invalid(data: t.Any):
    with pytest.raises(calculus.ConversionError):
        converter.generator_table_from_json(data)


def test_graded_element_json(generic_table: calculus.GeneratorTable):
    data = [
        {"monomial": {"c1": 2}, "coeff": "1"},
        {"monomial": {"c2": 1}, "coeff": "-1/2"},
        {"monomial": {"c1": 2}, "coeff": 1},
    ]
    element = converter.graded_element_from_json(data, generic_table)

    assert str(element) == "2*c1^2 - 1/2*c2"
    assert converter.graded_element_to_json(element) == [
        {"monomial": {"c1": 2}, "coeff": "2"},
        {"monomial": {"c2": 1}, "coeff": "-1/2"},
    ]
    assert converter.graded_element_to_json(generic_table.one) == [{"monomial": {}, "coeff": "1"}]


def test_graded_element_json_invalid(generic_table: calculus.GeneratorTable):
    with pytest.raises(calculus.ConversionError):
        converter.graded_element_from_json([{"monomial": {"c1": "2"}, "coeff": "1"}], generic_table)

    with pytest.raises(calculus.RingMismatchError):
        converter.graded_element_from_json([{"monomial": {"H": 1}, "coeff": "1"}], generic_table)


# converter.setup_* / fibered_class_*


def test_fibered_class_json(
    surface_setup: calculus.GrassSetup, surface_table: calculus.GeneratorTable
):
    data = [
        {"mu": [2], "coeff": [{"monomial": {}, "coeff": "1"}]},
        {"mu": [], "coeff": [{"monomial": {"c1": 1}, "coeff": "3"}]},
        {"mu": [2], "coeff": [{"monomial": {}, "coeff": "1"}]},
    ]
    fibered = converter.fibered_class_from_json(data, surface_setup, surface_table)

    assert fibered.coefficient(P([2])) == 2
    assert fibered.coefficient(P()) == surface_table.gen("c1") * 3
    assert converter.fibered_class_to_json(fibered) == [
        {"mu": [], "coeff": [{"monomial": {"c1": 1}, "coeff": "3"}]},
        {"mu": [2], "coeff": [{"monomial": {}, "coeff": "2"}]},
    ]


def test_fibered_class_json_too_long(
    surface_setup: calculus.GrassSetup, surface_table: calculus.GeneratorTable
):
    data = [{"mu": [1, 1], "coeff": [{"monomial": {}, "coeff": "1"}]}]

    with pytest.raises(calculus.SupportError):
        converter.fibered_class_from_json(data, surface_setup, surface_table)


def test_setup_json():
    setup = converter.setup_from_json({"n": 2, "r": 3, "d": 1})

    assert setup == calculus.GrassSetup(2, 3, 1)
    assert converter.setup_to_json(setup) == {"n": 2, "r": 3, "d": 1}

    with pytest.raises(calculus.ConversionError):
        converter.setup_from_json({"n": 2, "r": 3})

    with pytest.raises(calculus.SetupError):
        converter.setup_from_json({"n": 2, "r": 3, "d": 3})


# converter.from_json / to_json / dumps


def test_from_json_dispatch(
    surface_setup: calculus.GrassSetup, surface_table: calculus.GeneratorTable
):
    assert converter.from_json(calculus.Partition, [1]) == P([1])
    assert converter.from_json(calculus.GrassSetup, {"n": 2, "r": 2, "d": 1}) == surface_setup

    # Context is only forwarded to converters that accept it.
    element = converter.from_json(
        calculus.GradedElement,
        [{"monomial": {"c1": 1}, "coeff": "1"}],
        table=surface_table,
        setup=surface_setup,
    )
    assert element == surface_table.gen("c1")

    with pytest.raises(calculus.ConversionError):
        converter.from_json(float, 1.0)


def test_to_json_nested(surface_table: calculus.GeneratorTable):
    data = {
        "partition": P([2, 1]),
        "values": (calculus.utils.rational(1, 2), 3),
        "element": surface_table.gen("c2"),
        "plain": "text",
    }

    assert converter.to_json(data) == {
        "partition": [2, 1],
        "values": ["1/2", 3],
        "element": [{"monomial": {"c2": 1}, "coeff": "1"}],
        "plain": "text",
    }


def test_dumps_deterministic():
    first = converter.dumps({"b": [1, 2], "a": {"z": "1/2", "y": None}})
    second = converter.dumps(json.loads(first))

    assert first == second
    assert first.endswith("\n")
    assert first.index('"a"') < first.index('"b"')
