from __future__ import annotations

import inspect
import json
import typing as t

from sympy.polys.domains import QQ

from . import chow, exceptions, grassmann, partitions, patterns, types_, utils

__all__ = ["CONVERTER_MAP", "from_json", "to_json", "dumps", "partition_from_str"]


ConverterSig = t.Callable[..., t.Any]
JSON = t.Any


def _expect(data: JSON, kind: t.Union[type, t.Tuple[type, ...]], name: str) -> t.Any:
    if not isinstance(data, kind) or isinstance(data, bool):
        raise exceptions.ConversionError(
            f"Expected {name} to be {getattr(kind, '__name__', kind)}, got {type(data).__name__}.",
            name,
        )
    return data


def partition_from_json(data: JSON) -> partitions.Partition:
    """Convert a JSON array of integers such as ``[3, 1]`` to a :class:`~.partitions.Partition`."""
    parts = [_expect(part, int, "partition part") for part in _expect(data, list, "partition")]
    try:
        return partitions.Partition(parts)
    except exceptions.PartitionError as exc:
        raise exceptions.ConversionError(exc.message, "partition", [exc]) from exc


def partition_to_json(partition: partitions.Partition) -> JSON:
    return list(partition.parts)


def partition_from_str(literal: str) -> partitions.Partition:
    """Convert a partition literal such as ``"[2,1]"`` to a :class:`~.partitions.Partition`.

    Raises
    ------
    :class:`~.exceptions.MatchFailure`
        The literal is not a JSON array of nonnegative integers.
    :class:`~.exceptions.ConversionError`
        The parts are not weakly decreasing.
    """
    if not patterns.PARTITION.fullmatch(literal.strip()):
        raise exceptions.MatchFailure(
            f"Input '{literal}' did not match r'{patterns.PARTITION.pattern}'.",
            "partition",
            patterns.PARTITION,
        )
    return partition_from_json(json.loads(literal))


def rational_from_json(data: JSON) -> types_.Rational:
    """Convert a ``"p/q"`` string, or a plain integer, to an exact rational."""
    if isinstance(data, int) and not isinstance(data, bool):
        return QQ(data)
    return utils.parse_rational(_expect(data, str, "coefficient"), "coefficient")


def rational_to_json(value: types_.Rational) -> JSON:
    return utils.format_rational(value)


def generator_table_from_json(data: JSON) -> chow.GeneratorTable:
    """Convert ``{"n": 2, "generators": [{"name": "c1", "degree": 1}, ...]}`` to a
    :class:`~.chow.GeneratorTable`.
    """
    data = _expect(data, dict, "generator table")
    generators = [
        (
            _expect(_expect(entry, dict, "generator").get("name"), str, "generator name"),
            _expect(entry.get("degree"), int, "generator degree"),
        )
        for entry in _expect(data.get("generators"), list, "generators")
    ]
    return chow.GeneratorTable(generators, _expect(data.get("n"), int, "n"))


def generator_table_to_json(table: chow.GeneratorTable) -> JSON:
    return {
        "n": table.n,
        "generators": [{"name": name, "degree": degree} for name, degree in table.generators],
    }


def graded_element_from_json(data: JSON, table: chow.GeneratorTable) -> chow.GradedElement:
    """Convert a list of ``{"monomial": {generator: exponent}, "coeff": "p/q"}`` terms to an
    element of ``table``.
    """
    terms: t.List[t.Tuple[types_.Monomial, types_.Rational]] = []
    for entry in _expect(data, list, "graded element"):
        entry = _expect(entry, dict, "term")
        exponents = _expect(entry.get("monomial", {}), dict, "monomial")
        for exp in exponents.values():
            _expect(exp, int, "exponent")
        terms.append((table.monomial(exponents), rational_from_json(entry.get("coeff"))))
    return table.from_terms(terms)


def graded_element_to_json(element: chow.GradedElement) -> JSON:
    return [
        {
            "monomial": {
                name: exp for name, exp in zip(element.table.names, monomial) if exp
            },
            "coeff": rational_to_json(coeff),
        }
        for monomial, coeff in element.terms()
    ]


def setup_from_json(data: JSON) -> grassmann.GrassSetup:
    """Convert ``{"n": 2, "r": 3, "d": 1}`` to a :class:`~.grassmann.GrassSetup`."""
    data = _expect(data, dict, "setup")
    return grassmann.GrassSetup(
        _expect(data.get("n"), int, "n"),
        _expect(data.get("r"), int, "r"),
        _expect(data.get("d"), int, "d"),
    )


def setup_to_json(setup: grassmann.GrassSetup) -> JSON:
    return {"n": setup.n, "r": setup.r, "d": setup.d}


def fibered_class_from_json(
    data: JSON,
    setup: grassmann.GrassSetup,
    table: chow.GeneratorTable,
) -> grassmann.FiberedClass:
    """Convert a list of ``{"mu": [...], "coeff": <graded element>}`` terms to a class on
    ``Gr_d(E)``. Repeated partitions are summed.

    Raises
    ------
    :class:`~.exceptions.SupportError`
        A partition has more than ``d`` parts.
    """
    collected: t.Dict[partitions.Partition, chow.GradedElement] = {}
    for entry in _expect(data, list, "fibered class"):
        entry = _expect(entry, dict, "fibered term")
        mu = partition_from_json(entry.get("mu"))
        coeff = graded_element_from_json(entry.get("coeff"), table)
        collected[mu] = collected[mu] + coeff if mu in collected else coeff
    return grassmann.FiberedClass(setup, table, collected)


def fibered_class_to_json(fibered: grassmann.FiberedClass) -> JSON:
    return [
        {"mu": partition_to_json(mu), "coeff": graded_element_to_json(coeff)}
        for mu, coeff in fibered.terms()
    ]


# flake8: noqa: E241
CONVERTER_MAP: t.Mapping[type, t.Tuple[ConverterSig, ConverterSig]] = {
    # fmt: off
    partitions.Partition:  (partition_from_json,       partition_to_json),
    QQ.dtype:              (rational_from_json,        rational_to_json),
    chow.GeneratorTable:   (generator_table_from_json, generator_table_to_json),
    chow.GradedElement:    (graded_element_from_json,  graded_element_to_json),
    grassmann.GrassSetup:  (setup_from_json,           setup_to_json),
    grassmann.FiberedClass: (fibered_class_from_json,  fibered_class_to_json),
    # fmt: on
}
"""A mapping of a type to a tuple of two converter functions. The first converts from parsed
JSON to that type, the second converts the type back to JSON-compatible data. Converters for
types that only make sense relative to a table or setup take those as extra keyword arguments.
"""


def from_json(type_: type, data: JSON, **context: t.Any) -> t.Any:
    """Convert parsed JSON to ``type_`` using :data:`CONVERTER_MAP`. Context values (such as
    ``table`` or ``setup``) are forwarded only to converters that accept them.

    Raises
    ------
    :class:`~.exceptions.ConversionError`
        No converter is registered for the type, or the data does not fit its schema.
    """
    try:
        conv, _ = CONVERTER_MAP[type_]
    except KeyError:
        raise exceptions.ConversionError(
            f"No JSON converter for {type_!r}.", type_.__name__
        ) from None

    accepted = inspect.signature(conv).parameters
    return conv(data, **{key: value for key, value in context.items() if key in accepted})


def to_json(value: t.Any) -> JSON:
    """Convert a value to JSON-compatible data using :data:`CONVERTER_MAP`. Values with a
    ``to_json`` method, lists and tuples, dicts, and JSON scalars are handled as well.
    """
    for type_, (_, conv) in CONVERTER_MAP.items():
        if isinstance(value, type_):
            return conv(value)

    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, (list, tuple)):
        return [to_json(item) for item in t.cast(t.Sequence[t.Any], value)]
    if isinstance(value, dict):
        mapping = t.cast(t.Dict[t.Any, t.Any], value)
        return {str(key): to_json(item) for key, item in mapping.items()}
    return value


def dumps(data: JSON) -> str:
    """Serialize JSON-compatible data deterministically: sorted keys, fixed indentation."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
