from __future__ import annotations

import inspect
import sys
import typing as t

from . import converter, exceptions, partitions, patterns

if sys.version_info >= (3, 10):
    from types import NoneType, UnionType

    _UnionTypes = {t.Union, UnionType}
    _NoneTypes = {None, NoneType}

else:
    _UnionTypes = {t.Union}
    _NoneTypes = {None, type(None)}

__all__: t.List[str] = ["ParamInfo"]


StrConverterSig = t.Callable[[str], t.Any]

ConverterData = t.Tuple[t.List[type], t.List[t.Pattern[str]], t.List[StrConverterSig]]
"""Parsed converter data: the annotated types, their patterns and their string converters."""


REGEX_MAP: t.Dict[type, t.Pattern[str]] = {
    # fmt: off
    int:                  patterns.INT,
    partitions.Partition: patterns.PARTITION,
    # fmt: on
}

STR_CONVERTER_MAP: t.Dict[type, StrConverterSig] = {
    # fmt: off
    int:                  int,
    partitions.Partition: converter.partition_from_str,
    # fmt: on
}


class ParamInfo:
    """Helper class that stores information about a case parameter. Mainly instantiated
    through `ParamInfo.from_param`. Contains the conversion strategy used to convert command-line
    strings and JSON values to any of the parameter's annotated types.
    """

    param: inspect.Parameter
    """The case parameter this :class:`ParamInfo` expands on."""

    types: t.Tuple[type, ...]
    """The annotated types, in annotation order. ``None`` is stripped from optional unions."""

    converters: t.Tuple[StrConverterSig, ...]
    """String converter functions, aligned with :attr:`types`. In param conversion, a converter
    is only called when the input string matches the corresponding regex pattern.
    """

    regex: t.Tuple[t.Pattern[str], ...]
    """The patterns that string input is validated against, aligned with :attr:`types`."""

    def __init__(
        self,
        param: inspect.Parameter,
        *,
        types: t.Optional[t.Sequence[type]] = None,
        converters: t.Optional[t.Sequence[StrConverterSig]] = None,
        regex: t.Optional[t.Sequence[t.Pattern[str]]] = None,
    ) -> None:
        self.param = param
        self.types = () if types is None else tuple(types)
        self.converters = () if converters is None else tuple(converters)
        self.regex = () if regex is None else tuple(regex)

    @classmethod
    def from_param(cls, param: inspect.Parameter) -> ParamInfo:
        """Build a :class:`ParamInfo` from a given parameter.

        Parameters
        ----------
        param: :class:`inspect.Parameter`
            The parameter from which to build the :class:`ParamInfo`. Its annotation must already
            be resolved; see :func:`~.utils.signature`.
        """
        self = cls(param)

        types, regex, converters = self.parse_annotation()
        self.types += tuple(types)
        self.regex += tuple(regex)
        self.converters += tuple(converters)

        return self

    def parse_annotation(self, annotation: t.Any = ...) -> ConverterData:
        """Parse a conversion strategy from a case parameter annotation.

        Raises
        ------
        TypeError:
            The parameter is annotated such that it failed to parse. Valid annotations are
            :class:`int`, :class:`~.partitions.Partition`, and :class:`typing.Optional`s and
            :class:`typing.Union`s of these types.

        Returns
        -------
        Tuple[List[:class:`type`], List[:class:`re.Pattern`], List[Callable]]:
            The annotated types, the patterns against which string input is matched, and the
            converter functions that turn matching strings into values.
        """
        if annotation is Ellipsis:
            annotation = self.param.annotation

        if t.get_origin(annotation) in _UnionTypes:
            return self._parse_union(annotation)

        if annotation in STR_CONVERTER_MAP:
            return [annotation], [REGEX_MAP[annotation]], [STR_CONVERTER_MAP[annotation]]

        raise TypeError(f"{annotation!r} is not a valid type annotation for a case parameter.")

    def _parse_union(self, annotation: t.Any) -> ConverterData:
        """Parse a :class:`typing.Union` annotation into the corresponding types, regex patterns
        and converter functions. Automatically removes any ``None``s from the union and sets the
        default of the parameter to ``None`` if it is not yet set.
        """
        types: t.List[type] = []
        regex: t.List[t.Pattern[str]] = []
        converters: t.List[StrConverterSig] = []

        for arg in t.get_args(annotation):
            if arg in _NoneTypes:
                if self.param.default is inspect.Parameter.empty:
                    self.param = self.param.replace(default=None)
                continue

            arg_types, arg_regex, arg_converters = self.parse_annotation(arg)
            types += arg_types
            regex += arg_regex
            converters += arg_converters

        return types, regex, converters

    @property
    def default(self) -> t.Any:
        """The default value of the parameter. If this is `inspect.Parameter.empty`, this
        parameter is considered default-less, and thus required.
        """
        return self.param.default

    @property
    def optional(self) -> bool:
        """Whether or not this parameter is optional."""
        return self.default is not inspect.Parameter.empty

    @property
    def name(self) -> str:
        """The name of the parameter."""
        return self.param.name

    def convert(self, argument: t.Any) -> t.Any:
        """Convert an input argument for this parameter into any of its annotated types.
        Conversion results are returned as soon as the first converter passes, so the order in
        which types were annotated in e.g. a :class:`typing.Union` is preserved.

        Strings (as they appear in case identifiers and on the command line) are validated
        against the pattern of each type before conversion; parsed JSON values go through the
        JSON converters. An empty string converts to the default of an optional parameter.

        Raises
        ------
        :class:`~.exceptions.ConversionError`:
            All converters failed for the given input argument. All individual conversion errors
            that occured during conversions are stored inside this exception.
        """
        if isinstance(argument, str):
            if argument == "" and self.optional:
                return self.default
            converted, errors = self._convert_and_validate(argument)
        else:
            converted, errors = self._convert_json(argument)

        if not errors:
            return converted

        raise exceptions.ConversionError(
            f"Failed to convert parameter {self.name}: {errors[-1]}", self.name, errors
        )

    def _convert_and_validate(self, argument: str) -> t.Tuple[t.Any, t.List[ValueError]]:
        """For internal use only. Run converters on an argument after validating that the argument
        can be of the correct type using regex.
        """
        match_cache: t.Set[t.Pattern[str]] = set()  # Prevent matching the same regex again.
        errors: t.List[ValueError] = []

        for regex, conv in zip(self.regex, self.converters):
            if regex not in match_cache:
                if regex.fullmatch(argument.strip()):
                    match_cache.add(regex)
                else:
                    errors.append(
                        exceptions.MatchFailure(
                            f"Input '{argument}' did not match r'{regex.pattern}'.",
                            self.name,
                            regex,
                        )
                    )
                    continue

            try:
                return conv(argument.strip()), []
            except ValueError as exc:
                errors.append(exc)

        return self.default, errors

    def _convert_json(self, argument: t.Any) -> t.Tuple[t.Any, t.List[ValueError]]:
        """For internal use only. Convert an already parsed JSON value."""
        if argument is None and self.optional:
            return self.default, []

        errors: t.List[ValueError] = []
        for type_ in self.types:
            if isinstance(argument, type_) and not isinstance(argument, bool):
                return argument, []

            if type_ in converter.CONVERTER_MAP:
                try:
                    return converter.from_json(type_, argument), []
                except ValueError as exc:
                    errors.append(exc)
            else:
                errors.append(
                    exceptions.ConversionError(
                        f"Expected {self.name} to be {type_.__name__}, got {argument!r}.", self.name
                    )
                )

        return self.default, errors

    def to_str(self, argument: t.Any) -> str:
        """Serialize a value of this parameter for use in a case identifier. ``None`` becomes the
        empty string.
        """
        if argument is None:
            return ""
        if isinstance(argument, tuple(self.types)):
            return str(argument)

        raise exceptions.ConversionError(
            f"Cannot serialize {argument!r} as parameter {self.name}.", self.name
        )
