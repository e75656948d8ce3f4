from __future__ import annotations

import inspect
import typing as t

from sympy.polys.domains import QQ

from . import exceptions, patterns, types_

__all__ = [
    "rational",
    "format_rational",
    "parse_rational",
    "id_spec_from_signature",
    "extract_case_params",
    "signature",
]


def rational(numerator: t.Union[int, types_.Rational], denominator: int = 1) -> types_.Rational:
    """Build an exact rational number in sympy's ``QQ`` domain.

    Raises
    ------
    ZeroDivisionError:
        The denominator is zero.
    """
    if denominator == 0:
        raise ZeroDivisionError("A rational number cannot have denominator zero.")
    return QQ.convert(numerator) / QQ(denominator)


def format_rational(value: types_.Rational) -> str:
    """Format an exact rational as ``"p/q"``, or ``"p"`` when it is integral."""
    value = QQ.convert(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(literal: str, name: str = "rational") -> types_.Rational:
    """Parse a ``"p"`` or ``"p/q"`` literal into an exact rational.

    Parameters
    ----------
    literal: :class:`str`
        The literal to parse.
    name: :class:`str`
        The name of the field being parsed, used in error messages.

    Raises
    ------
    :class:`~.exceptions.MatchFailure`
        The literal is not a valid rational.
    """
    if not (match := patterns.RATIONAL.fullmatch(literal.strip())):
        raise exceptions.MatchFailure(
            f"Input '{literal}' for {name} did not match r'{patterns.RATIONAL.pattern}'.",
            name,
            patterns.RATIONAL,
        )
    return QQ(int(match["num"]), int(match["den"] or 1))


def id_spec_from_signature(name: str, sep: str, signature: inspect.Signature) -> str:
    """Analyze a case function signature to create a format string for case identifiers.

    Parameters
    ----------
    name: :class:`str`
        The name of the verification case.
    sep: :class:`str`
        The separator placed between the name and each parameter value.
    signature: :class:`inspect.Signature`
        The function signature of the case callback.

    Returns
    -------
    :class:`str`
        The case identifier spec, e.g. ``"delta:{r}:{d}"``.
    """
    case_params = extract_case_params(signature)
    if not case_params:
        return name

    return name + sep + sep.join(f"{{{param.name}}}" for param in case_params)


def extract_case_params(signature: inspect.Signature) -> t.Tuple[inspect.Parameter, ...]:
    """Extract the parameters of a case callback that make up its identifier: every
    keyword-only parameter. Positional parameters are reserved for injected values and are not
    part of the identifier.

    Raises
    ------
    TypeError:
        A keyword-only parameter has no annotation, so its values cannot be converted.
    """
    case_params = tuple(
        param
        for param in signature.parameters.values()
        if param.kind is inspect.Parameter.KEYWORD_ONLY
    )
    for param in case_params:
        if param.annotation is inspect.Parameter.empty:
            raise TypeError(
                f"Case parameter '{param.name}' must be annotated so that its values can be "
                "converted."
            )
    return case_params


def signature(callback: t.Callable[..., t.Any]) -> inspect.Signature:
    """Return the signature of a callback with every annotation resolved to a real object, even
    when the defining module uses postponed evaluation of annotations.
    """
    sig = inspect.signature(callback)
    hints = t.get_type_hints(callback)
    return sig.replace(
        parameters=[
            param.replace(annotation=hints.get(param.name, param.annotation))
            for param in sig.parameters.values()
        ],
        return_annotation=hints.get("return", sig.return_annotation),
    )
