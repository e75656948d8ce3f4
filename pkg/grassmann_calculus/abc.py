from __future__ import annotations

import abc
import sys
import typing as t

from . import exceptions, params, patterns, utils

if sys.version_info >= (3, 10):
    from typing import ParamSpec

else:
    from typing_extensions import ParamSpec


T = t.TypeVar("T")
P = ParamSpec("P")


class BaseCase(abc.ABC, t.Generic[P, T]):
    """The base class of verification cases. A case wraps a callback whose keyword-only
    parameters make up its identifier, so that every invocation can be named, serialized as a
    string, and replayed from that string alone (for instance in a worker process).
    """

    callback: t.Callable[..., t.Any]
    """The callback function wrapped by this case."""

    name: str
    """The name is used to determine the case id spec; see `~.build_case_id`."""

    id_spec: str
    """The spec that case identifiers match. Also used to create new case ids; see
    `~.build_case_id`.
    """

    sep: str
    """The symbol(s) used to separate individual components of a case id. Defaults to ':'."""

    params: t.List[params.ParamInfo]
    """A list that contains the processed keyword-only callback parameters. These parameters
    contain extra information about their regex pattern(s) and converter(s).
    """

    def __init__(self, callback: t.Callable[..., t.Any], *, name: str, sep: str = ":") -> None:
        if not patterns.CASE_NAME.fullmatch(name):
            raise ValueError(
                f"Invalid case name {name!r}; expected r'{patterns.CASE_NAME.pattern}'."
            )

        self.callback = callback
        self.name = name
        self.sep = sep
        self.__name__ = callback.__name__
        self.__doc__ = callback.__doc__
        self._signature = utils.signature(callback)

        self.id_spec = utils.id_spec_from_signature(name, sep, self._signature)
        self.params = [
            params.ParamInfo.from_param(param)
            for param in utils.extract_case_params(self._signature)
        ]

    @abc.abstractmethod
    def __call__(self, *args: P.args, **kwargs: P.kwargs) -> T:
        """Run the case with the given parameters."""
        ...

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.id_spec!r}>"

    def parse_case_id(self, case_id: str) -> t.Tuple[str, ...]:
        """Parse a case id into its raw parameter values.

        Parameters
        ----------
        case_id: :class:`str`
            The case id that is to be parsed.

        Raises
        ------
        :class:`~.exceptions.ConversionError`:
            The case id is not valid for this case.

        Returns
        -------
        Tuple[:class:`str`, ...]:
            The raw parameter values extracted from the case id.
        """
        name, *values = case_id.split(self.sep)
        # Trailing optional parameters may be left out of the id entirely.
        omitted = self.params[len(values) :]
        if (
            name != self.name
            or len(values) > len(self.params)
            or not all(param.optional for param in omitted)
        ):
            raise exceptions.ConversionError(
                f"Case spec {self.id_spec} did not match case id {case_id}.", self.name
            )

        return tuple(values)

    def convert_params(self, raw: t.Mapping[str, t.Any]) -> t.Dict[str, t.Any]:
        """Convert raw parameter values (strings or parsed JSON) for every parameter of this case.
        Parameters missing from ``raw`` fall back to their defaults.

        Raises
        ------
        :class:`~.exceptions.ConversionError`:
            A value failed to convert, or a required parameter is missing.
        """
        converted: t.Dict[str, t.Any] = {}
        for param in self.params:
            if param.name in raw:
                converted[param.name] = param.convert(raw[param.name])
            elif param.optional:
                converted[param.name] = param.default
            else:
                raise exceptions.ConversionError(
                    f"Case {self.name} requires a value for parameter {param.name}.", param.name
                )
        return converted

    def invoke(self, case_id: str) -> T:
        """Parse and convert a case id, then run the callback with the converted parameters."""
        values = self.parse_case_id(case_id)
        return self(**self.convert_params(dict(zip((param.name for param in self.params), values))))

    def build_case_id(self, *args: P.args, **kwargs: P.kwargs) -> str:
        """Build a case id by passing values for the case's parameters. Assuming the values
        entered are valid according to the case's typehints, the case id is guaranteed to be
        parsed back by :meth:`parse_case_id`.

        Parameters
        ----------
        *args: :class:`Any`
            This method takes the same arguments as the decorated case function itself.
        **kwargs: :class:`Any`
            Any of the args as mentioned above can also be passed as keyword arguments.

        Returns
        -------
        :class:`str`
            A case id matching the spec of this case.
        """
        if args:
            # Change args into kwargs so that they line up with the parameters.
            names = [param.name for param in self.params]
            args_as_kwargs: t.Dict[str, t.Any] = dict(zip(names, args))

            if overlap := kwargs.keys() & args_as_kwargs:
                # Emulate standard python behaviour by disallowing duplicate names for args/kwargs.
                raise TypeError(
                    f"'build_case_id' got multiple values for argument(s) '{', '.join(overlap)}'"
                )

            kwargs.update(args_as_kwargs)  # This is safe as we ensured there is no overlap.

        values = [param.to_str(kwargs.get(param.name, param.default)) for param in self.params]
        # Unset trailing optional parameters are left out of the id.
        while values and values[-1] == "" and self.params[len(values) - 1].optional:
            values.pop()
        return self.sep.join([self.name, *values])

    @abc.abstractmethod
    def sweep(self, config: t.Any) -> t.Iterator[t.Dict[str, t.Any]]:
        """Yield the parameter sets this case runs with under a suite configuration, in a
        deterministic order.
        """
        ...
