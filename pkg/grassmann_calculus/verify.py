"""Executable checks of the push-forward identities.

Every check is a :class:`Case`: a function of keyword-only parameters that returns a list of
:class:`Identity` pairs, registered under a :class:`~.types_.CaseName` with the :func:`case`
decorator. Calling a case returns a :class:`VerificationReport`; :func:`run_suite` runs every
registered case over the sweep described by a :class:`SuiteConfig`. All comparisons are exact.
"""

from __future__ import annotations

import concurrent.futures
import logging
import sys
import time
import typing as t

from . import abc, chow, converter, exceptions, grassmann, ineq, partitions, types_, utils

if sys.version_info >= (3, 10):
    from typing import ParamSpec

else:
    from typing_extensions import ParamSpec

__all__ = [
    "Identity",
    "VerificationReport",
    "Case",
    "SuiteConfig",
    "REGISTRY",
    "case",
    "verify_syt",
    "verify_inversion",
    "verify_duality",
    "verify_f_identities",
    "verify_f1_f2",
    "verify_corollary_chi",
    "verify_segre_identity",
    "verify_delta",
    "verify_classical_segre",
    "iter_case_ids",
    "run_case",
    "parse_case_name",
    "run_suite",
    "summarize",
    "reports_to_json",
    "format_table",
]

_LOGGER = logging.getLogger(__name__)

P = ParamSpec("P")

Value = t.Union[chow.GradedElement, types_.Rational]
SweepCallback = t.Callable[["SuiteConfig"], t.Iterable[t.Dict[str, t.Any]]]


def _render(value: Value) -> str:
    if isinstance(value, chow.GradedElement):
        return str(value)
    return utils.format_rational(value)


class Identity(t.NamedTuple):
    """A labelled equation ``lhs = rhs`` between two exact values of the same kind."""

    label: str
    lhs: Value
    rhs: Value

    @property
    def residual(self) -> Value:
        """``lhs - rhs``, recomputed on every access."""
        return self.lhs - self.rhs

    @property
    def holds(self) -> bool:
        return not self.residual

    def perturbed(self, amount: types_.Rational) -> Identity:
        return self._replace(rhs=self.rhs + amount)

    def to_json(self) -> t.Dict[str, str]:
        return {
            "label": self.label,
            "lhs": _render(self.lhs),
            "rhs": _render(self.rhs),
            "residual": _render(self.residual),
        }


class VerificationReport:
    """The outcome of one verification case.

    A report passes exactly when every identity has a zero residual. The elapsed time is kept
    for diagnostics but is only serialized on request, so that two runs produce identical JSON.
    """

    __slots__ = ("case_id", "case_name", "params", "identities", "elapsed")

    case_id: str
    """The identifier of the case, e.g. ``"delta:2:1"``."""

    case_name: types_.CaseName
    params: t.Dict[str, t.Any]
    identities: t.Tuple[Identity, ...]

    elapsed: float
    """Wall-clock seconds spent in the case callback."""

    def __init__(
        self,
        case_id: str,
        case_name: types_.CaseName,
        params: t.Mapping[str, t.Any],
        identities: t.Iterable[Identity],
        elapsed: float = 0.0,
    ) -> None:
        self.case_id = case_id
        self.case_name = case_name
        self.params = dict(params)
        self.identities = tuple(identities)
        self.elapsed = elapsed

    @property
    def lhs(self) -> t.Tuple[Value, ...]:
        return tuple(identity.lhs for identity in self.identities)

    @property
    def rhs(self) -> t.Tuple[Value, ...]:
        return tuple(identity.rhs for identity in self.identities)

    @property
    def residual(self) -> t.Tuple[Value, ...]:
        return tuple(identity.residual for identity in self.identities)

    @property
    def status(self) -> types_.Status:
        if all(identity.holds for identity in self.identities):
            return types_.Status.PASS
        return types_.Status.FAIL

    @property
    def passed(self) -> bool:
        return self.status is types_.Status.PASS

    def perturbed(self, amount: types_.Rational) -> VerificationReport:
        """Return a copy with ``amount`` added to the right-hand side of the first identity.
        Used as a negative control: a nonzero amount must turn the report into a failure.
        """
        identities = list(self.identities)
        if identities:
            identities[0] = identities[0].perturbed(amount)
        return VerificationReport(
            self.case_id, self.case_name, self.params, identities, self.elapsed
        )

    def to_json(self, include_timings: bool = False) -> t.Dict[str, t.Any]:
        data: t.Dict[str, t.Any] = {
            "case": self.case_id,
            "name": self.case_name.value,
            "params": converter.to_json(self.params),
            "status": self.status.value,
            "identities": [identity.to_json() for identity in self.identities],
        }
        if include_timings:
            data["elapsed"] = round(self.elapsed, 6)
        return data

    def table_rows(self) -> t.List[str]:
        """Render the report for the plain-text table: one status line, plus one line per failing
        identity showing its residual.
        """
        rows = [f"{self.status.value.upper():<4}  {self.case_id}"]
        for identity in self.identities:
            if not identity.holds:
                rows.append(f"      {identity.label}: residual {_render(identity.residual)}")
        return rows

    def __repr__(self) -> str:
        return f"<VerificationReport {self.case_id} {self.status.value}>"


class Case(abc.BaseCase[P, VerificationReport]):
    """A registered verification case. Mainly created using :func:`case`.

    Calling a case with keyword arguments runs the wrapped check and wraps the resulting
    identities into a timed :class:`VerificationReport`.

    Parameters
    ----------
    callback: Callable[..., Sequence[:class:`Identity`]]
        The check. All of its parameters must be keyword-only and annotated with :class:`int`
        or :class:`~.partitions.Partition`.
    name: :class:`~.types_.CaseName`
        The name the case is registered under.
    sweep: Callable[[:class:`SuiteConfig`], Iterable[Dict[:class:`str`, Any]]]
        Produces the parameter sets the case runs with under a suite configuration.
    sep: :class:`str`
        The separator between the name and parameter values of case ids. Defaults to ':'.
    """

    case_name: types_.CaseName
    """The name the case is registered under."""

    def __init__(
        self,
        callback: t.Callable[..., t.Sequence[Identity]],
        *,
        name: types_.CaseName,
        sweep: SweepCallback,
        sep: str = ":",
    ) -> None:
        super().__init__(callback, name=name.value, sep=sep)
        self.case_name = name
        self._sweep = sweep

    def __call__(self, *args: P.args, **kwargs: P.kwargs) -> VerificationReport:
        case_id = self.build_case_id(*args, **kwargs)

        start = time.perf_counter()
        identities = self.callback(*args, **kwargs)
        elapsed = time.perf_counter() - start

        # Unset optional parameters are left out, as in the case id.
        params = {
            param.name: kwargs[param.name]
            for param in self.params
            if kwargs.get(param.name) is not None
        }
        return VerificationReport(case_id, self.case_name, params, identities, elapsed)

    def sweep(self, config: SuiteConfig) -> t.Iterator[t.Dict[str, t.Any]]:
        yield from self._sweep(config)


REGISTRY: t.Dict[types_.CaseName, Case[...]] = {}
"""Every registered case by name. The suite runs them in :class:`~.types_.CaseName` order."""


def case(
    name: types_.CaseName,
    *,
    sweep: SweepCallback,
    sep: str = ":",
) -> t.Callable[[t.Callable[P, t.Sequence[Identity]]], Case[P]]:
    """Create a new :class:`Case` from a decorated function and register it under ``name``.

    - Every parameter of the function must be keyword-only; these make up the case id.
    - The function returns the identities to check; the case measures time and builds the
      report.

    Raises
    ------
    ValueError:
        A case with the same name is already registered.
    """

    def wrapper(func: t.Callable[P, t.Sequence[Identity]]) -> Case[P]:
        if name in REGISTRY:
            raise ValueError(f"A case named {name.value!r} is already registered.")

        registered = Case[P](func, name=name, sweep=sweep, sep=sep)
        REGISTRY[name] = registered
        return registered

    return wrapper


_LIMIT_DEFAULTS: t.Dict[str, int] = {
    # fmt: off
    "r_max":                6,
    "g_r_max":              8,
    "corollary_n":          4,
    "corollary_extra":      4,
    "syt_max_weight":       8,
    "duality_max_weight":   5,
    "inversion_max_degree": 6,
    "segre_max_i":          4,
    "classical_max_n":      4,
    "classical_r_max":      4,
    # fmt: on
}


class SuiteConfig:
    """The parameter ranges and options of a suite run. Every field has a default, so
    ``SuiteConfig()`` describes the default sweep.

    Parameters
    ----------
    r_max: :class:`int`
        The largest rank for the delta, f1f2, corollary and segre cases.
    g_r_max: :class:`int`
        The largest rank for the tableau-count identities.
    corollary_n: :class:`int`
        The base dimension of the corollary case.
    corollary_extra: :class:`int`
        How far past ``d(r - d)`` the corollary case sweeps ``N``.
    syt_max_weight: :class:`int`
        The largest weight of the shapes in the tableau case.
    duality_max_weight: :class:`int`
        The largest weight of the shapes in the duality case; also its base dimension.
    inversion_max_degree: :class:`int`
        The largest degree for the inversion case.
    segre_max_i: :class:`int`
        The largest Segre index for the projective bundle case.
    classical_max_n: :class:`int`
        The largest base dimension for the classical inequality case.
    classical_r_max: :class:`int`
        The largest rank for the classical inequality case.
    only: Optional[Sequence[:class:`~.types_.CaseName`]]
        The cases to run. ``None`` runs every registered case.
    fixed: Optional[Mapping[:class:`str`, Any]]
        Parameter filters: only parameter sets whose value for the named parameter equals the
        given value run. Filters apply to the cases that have that parameter.
    workers: :class:`int`
        The number of worker processes. ``1`` runs in-process.
    perturb: Optional[Mapping[:class:`~.types_.CaseName`, Rational]]
        Amounts added to the first right-hand side of every report of a case.
    syt_bruteforce_cap: Optional[:class:`int`]
        The largest weight the tableau case enumerates by brute force. ``None`` uses
        :attr:`~.partitions.LIMITS.SYT_BRUTEFORCE_CAP`. The cap is written into the case ids.
    """

    __slots__ = (*_LIMIT_DEFAULTS, "only", "fixed", "workers", "perturb", "syt_bruteforce_cap")

    r_max: int
    g_r_max: int
    corollary_n: int
    corollary_extra: int
    syt_max_weight: int
    duality_max_weight: int
    inversion_max_degree: int
    segre_max_i: int
    classical_max_n: int
    classical_r_max: int
    only: t.Optional[t.Tuple[types_.CaseName, ...]]
    fixed: t.Dict[str, t.Any]
    workers: int
    perturb: t.Dict[types_.CaseName, types_.Rational]
    syt_bruteforce_cap: t.Optional[int]

    def __init__(
        self,
        *,
        only: t.Optional[t.Iterable[types_.CaseName]] = None,
        fixed: t.Optional[t.Mapping[str, t.Any]] = None,
        workers: int = 1,
        perturb: t.Optional[t.Mapping[types_.CaseName, types_.Rational]] = None,
        syt_bruteforce_cap: t.Optional[int] = None,
        **limits: int,
    ) -> None:
        if unknown := limits.keys() - _LIMIT_DEFAULTS.keys():
            raise TypeError(
                f"SuiteConfig got unexpected keyword argument(s) {', '.join(sorted(unknown))}"
            )

        for key, default in _LIMIT_DEFAULTS.items():
            setattr(self, key, limits.get(key, default))

        self.only = None if only is None else tuple(only)
        self.fixed = {} if fixed is None else dict(fixed)
        self.workers = workers
        self.perturb = {} if perturb is None else dict(perturb)
        self.syt_bruteforce_cap = syt_bruteforce_cap

    @classmethod
    def from_json(cls, data: t.Any) -> SuiteConfig:
        """Build a configuration from a parsed JSON object. Every key is optional.

        Raises
        ------
        :class:`~.exceptions.ConfigError`
            The document is not an object, a key is unknown, or a value is malformed.
        """
        if not isinstance(data, dict):
            raise exceptions.ConfigError(
                f"A suite configuration must be an object, got {type(data).__name__}."
            )
        data = t.cast(t.Dict[str, t.Any], data)

        if unknown := sorted(data.keys() - set(cls.__slots__)):
            raise exceptions.ConfigError(
                f"Unknown configuration key(s): {', '.join(unknown)}.", unknown[0]
            )

        limits: t.Dict[str, int] = {}
        for key in _LIMIT_DEFAULTS.keys() & data.keys():
            limits[key] = _config_int(data[key], key, minimum=0)

        return cls(
            only=_config_only(data["only"]) if "only" in data else None,
            fixed=_config_fixed(data.get("fixed", {})),
            workers=_config_int(data.get("workers", 1), "workers", minimum=1),
            perturb=_config_perturb(data.get("perturb", {})),
            syt_bruteforce_cap=(
                _config_int(data["syt_bruteforce_cap"], "syt_bruteforce_cap", minimum=0)
                if data.get("syt_bruteforce_cap") is not None
                else None
            ),
            **limits,
        )

    def with_overrides(
        self,
        *,
        only: t.Optional[t.Iterable[types_.CaseName]] = None,
        fixed: t.Optional[t.Mapping[str, t.Any]] = None,
        workers: t.Optional[int] = None,
        syt_bruteforce_cap: t.Optional[int] = None,
    ) -> SuiteConfig:
        """Return a copy with the given options replaced. ``fixed`` filters are merged into the
        existing ones.
        """
        return type(self)(
            only=self.only if only is None else only,
            fixed={**self.fixed, **(fixed or {})},
            workers=self.workers if workers is None else workers,
            perturb=self.perturb,
            syt_bruteforce_cap=(
                self.syt_bruteforce_cap if syt_bruteforce_cap is None else syt_bruteforce_cap
            ),
            **{key: getattr(self, key) for key in _LIMIT_DEFAULTS},
        )

    def __repr__(self) -> str:
        fields = ", ".join(f"{key}={getattr(self, key)!r}" for key in self.__slots__)
        return f"SuiteConfig({fields})"


def _config_int(value: t.Any, key: str, *, minimum: int) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise exceptions.ConfigError(
            f"Configuration key {key!r} must be an integer >= {minimum}, got {value!r}.", key
        )
    return value


def parse_case_name(value: t.Any, key: str = "case") -> types_.CaseName:
    """Convert a case name such as ``"delta"`` to a :class:`~.types_.CaseName`.

    Raises
    ------
    :class:`~.exceptions.ConfigError`
        The name is not registered.
    """
    try:
        return types_.CaseName(value)
    except ValueError:
        choices = ", ".join(name.value for name in types_.CaseName)
        raise exceptions.ConfigError(
            f"Unknown case {value!r} in {key!r}; expected one of {choices}.", key
        ) from None


def _config_only(value: t.Any) -> t.Tuple[types_.CaseName, ...]:
    if not isinstance(value, list):
        raise exceptions.ConfigError(
            f"Configuration key 'only' must be a list, got {value!r}.", "only"
        )
    return tuple(parse_case_name(item, "only") for item in t.cast(t.List[t.Any], value))


def _config_fixed(value: t.Any) -> t.Dict[str, t.Any]:
    if not isinstance(value, dict):
        raise exceptions.ConfigError(
            f"Configuration key 'fixed' must be an object, got {value!r}.", "fixed"
        )

    known = {param.name for registered in REGISTRY.values() for param in registered.params}
    if unknown := sorted(t.cast(t.Dict[str, t.Any], value).keys() - known):
        raise exceptions.ConfigError(
            f"Unknown parameter(s) in 'fixed': {', '.join(unknown)}.", "fixed"
        )
    return dict(t.cast(t.Dict[str, t.Any], value))


def _config_perturb(value: t.Any) -> t.Dict[types_.CaseName, types_.Rational]:
    if not isinstance(value, dict):
        raise exceptions.ConfigError(
            f"Configuration key 'perturb' must be an object, got {value!r}.", "perturb"
        )

    perturb: t.Dict[types_.CaseName, types_.Rational] = {}
    for name, amount in t.cast(t.Dict[str, t.Any], value).items():
        try:
            perturb[parse_case_name(name, "perturb")] = converter.rational_from_json(amount)
        except exceptions.ConversionError as exc:
            raise exceptions.ConfigError(
                f"Invalid perturbation for {name!r}: {exc.message}", "perturb"
            ) from exc
    return perturb


# Sweeps.


def _sweep_ranks(r_max: int) -> t.Iterator[t.Dict[str, t.Any]]:
    for r in range(2, r_max + 1):
        for d in range(1, r):
            yield {"r": r, "d": d}


def _sweep_syt(config: SuiteConfig) -> t.Iterator[t.Dict[str, t.Any]]:
    for weight in range(config.syt_max_weight + 1):
        for partition in partitions.iter_partitions(weight):
            yield {"partition": partition, "cap": config.syt_bruteforce_cap}


def _sweep_inversion(config: SuiteConfig) -> t.Iterator[t.Dict[str, t.Any]]:
    for n in range(1, config.inversion_max_degree + 1):
        yield {"n": n}


def _sweep_duality(config: SuiteConfig) -> t.Iterator[t.Dict[str, t.Any]]:
    for weight in range(config.duality_max_weight + 1):
        for partition in partitions.iter_partitions(weight):
            yield {"partition": partition, "n": config.duality_max_weight}


def _sweep_f_identities(config: SuiteConfig) -> t.Iterator[t.Dict[str, t.Any]]:
    return _sweep_ranks(config.g_r_max)


def _sweep_f1_f2(config: SuiteConfig) -> t.Iterator[t.Dict[str, t.Any]]:
    return _sweep_ranks(config.r_max)


def _sweep_corollary(config: SuiteConfig) -> t.Iterator[t.Dict[str, t.Any]]:
    for ranks in _sweep_ranks(config.r_max):
        reldim = ranks["d"] * (ranks["r"] - ranks["d"])
        for N in range(reldim + config.corollary_extra + 1):
            yield {**ranks, "n": config.corollary_n, "N": N}


def _sweep_segre(config: SuiteConfig) -> t.Iterator[t.Dict[str, t.Any]]:
    for r in range(2, config.r_max + 1):
        for i in range(config.segre_max_i + 1):
            yield {"r": r, "i": i}


def _sweep_delta(config: SuiteConfig) -> t.Iterator[t.Dict[str, t.Any]]:
    return _sweep_ranks(config.r_max)


def _sweep_classical(config: SuiteConfig) -> t.Iterator[t.Dict[str, t.Any]]:
    for r in range(2, config.classical_r_max + 1):
        for n in range(1, config.classical_max_n + 1):
            for k in range(1, n + 1):
                yield {"r": r, "n": n, "k": k}


# Cases.


def _rational_identity(label: str, lhs: int, rhs: t.Union[int, types_.Rational]) -> Identity:
    return Identity(label, utils.rational(lhs), utils.rational(rhs))


@case(types_.CaseName.SYT, sweep=_sweep_syt)
def verify_syt(
    *, partition: partitions.Partition, cap: t.Optional[int] = None
) -> t.List[Identity]:
    """Count tableaux of a shape by the Frobenius formula and check it against the hook length
    formula, the corner-removal recursion and, for shapes of weight at most ``cap``, brute force.
    ``cap`` defaults to :attr:`~.partitions.LIMITS.SYT_BRUTEFORCE_CAP`.
    """
    cap = partitions.LIMITS.SYT_BRUTEFORCE_CAP if cap is None else cap
    formula = partitions.syt_count_formula(partition)
    recursion = (
        sum(partitions.syt_count_formula(smaller) for smaller in partitions.remove_box(partition))
        if partition
        else 1
    )

    identities = [
        _rational_identity("hook", formula, partitions.syt_count_hook(partition)),
        _rational_identity("recursion", formula, recursion),
    ]
    if partition.weight <= cap:
        bruteforce = partitions.syt_count_bruteforce(partition, cap)
        identities.append(_rational_identity("bruteforce", formula, bruteforce))
    return identities


@case(types_.CaseName.INVERSION, sweep=_sweep_inversion)
def verify_inversion(*, n: int) -> t.List[Identity]:
    """Check ``c · (1/c) = 1`` for the generic total Chern class of rank ``n`` up to degree
    ``n``, and the low-degree unsigned Segre classes ``s_1 = c_1``, ``s_2 = c_1^2 - c_2``.
    """
    if n < 1:
        raise exceptions.SetupError(f"The degree must be positive, got n={n}.", "n", n)

    table = chow.chern_table(n, n)
    chern = chow.chern_series(table, n)
    segre = chow.segre_series(chern)
    c1 = table.gen("c1")

    identities = [
        Identity("c*(1/c)", (chern * chow.invert_total_class(chern)).total(), table.one),
        Identity("s1", segre[1], c1),
    ]
    if n >= 2:
        identities.append(Identity("s2", segre[2], c1 * c1 - table.gen("c2")))
    return identities


@case(types_.CaseName.DUALITY, sweep=_sweep_duality)
def verify_duality(*, partition: partitions.Partition, n: int) -> t.List[Identity]:
    """Check that the Schur determinant of the conjugate shape in the Chern classes equals the
    Schur determinant of the shape in the unsigned Segre classes.
    """
    if partition.weight > n:
        raise exceptions.SetupError(
            f"The shape {partition} does not fit in degree n={n}.", "partition", partition
        )

    table = chow.chern_table(n, n)
    chern = chow.chern_series(table, n)
    return [
        Identity(
            "conjugate",
            chow.schur_det(partitions.conjugate(partition).parts, chern),
            chow.schur_det(partition.parts, chow.segre_series(chern)),
        )
    ]


@case(types_.CaseName.F_IDENTITIES, sweep=_sweep_f_identities)
def verify_f_identities(*, r: int, d: int) -> t.List[Identity]:
    """Check the ratios of the tableau counts of ε grown by one box, a column of two and a row
    of two against ε itself.
    """
    identities = grassmann.f_coefficient_identities(grassmann.GrassSetup(0, r, d))
    return [
        Identity("f(eps+1)", *identities.one_box),
        Identity("f(eps+p2)", *identities.column),
        Identity("f(eps+2)", *identities.row),
    ]


@case(types_.CaseName.F1F2, sweep=_sweep_f1_f2)
def verify_f1_f2(*, r: int, d: int) -> t.List[Identity]:
    """Push ``χ^(m-1)``, ``χ^m`` and ``χ^(m+1)`` forward over a surface and compare with their
    tableau-count expressions.
    """
    setup = grassmann.GrassSetup(2, r, d)
    table = setup.base_table()
    segre = chow.segre_series(chow.chern_series(table, r))
    chi = grassmann.chi(setup, table)
    c1, c2 = table.gen("c1"), table.gen("c2")
    m = setup.m
    f_eps = partitions.syt_count_formula(setup.epsilon)

    def _pushed(exponent: int) -> chow.GradedElement:
        return grassmann.pushforward(grassmann.power(chi, exponent), setup, segre)

    row = utils.rational(m * (m + 1) * d * (d + 1), 2 * r * (r + 1)) * f_eps
    column = utils.rational(m * (m + 1) * d * (d - 1), 2 * r * (r - 1)) * f_eps
    return [
        Identity("chi^(m-1)", _pushed(m - 1), table.scalar(f_eps)),
        Identity("chi^m", _pushed(m), c1 * utils.rational(m * d, r) * f_eps),
        Identity("chi^(m+1)", _pushed(m + 1), (c1 * c1 - c2) * row + c2 * column),
    ]


@case(types_.CaseName.COROLLARY, sweep=_sweep_corollary)
def verify_corollary_chi(*, r: int, d: int, n: int, N: int) -> t.List[Identity]:
    """Compare the Pieri expansion of ``π_*χ^N`` with its tableau-count closed form."""
    setup = grassmann.GrassSetup(n, r, d)
    table = setup.base_table()
    segre = chow.segre_series(chow.chern_series(table, r))
    return [
        Identity(
            "pieri=closed",
            grassmann.pushforward(grassmann.power(grassmann.chi(setup, table), N), setup, segre),
            grassmann.pushforward_chi_power_closedform(N, setup, segre),
        )
    ]


@case(types_.CaseName.SEGRE, sweep=_sweep_segre)
def verify_segre_identity(*, r: int, i: int) -> t.List[Identity]:
    """Check ``π_*ξ^(r-1+i) = s_i(E)`` on the projective bundle of a rank ``r`` bundle over an
    ``i``-dimensional base, by both push-forward routes.
    """
    if i < 0:
        raise exceptions.SetupError(f"The Segre index must be nonnegative, got i={i}.", "i", i)

    setup = grassmann.GrassSetup(i, r, 1)
    table = setup.base_table()
    segre = chow.segre_series(chow.chern_series(table, r))
    exponent = r - 1 + i
    return [
        Identity(
            "pieri",
            grassmann.pushforward(
                grassmann.power(grassmann.chi(setup, table), exponent), setup, segre
            ),
            segre.component(i),
        ),
        Identity(
            "closed",
            grassmann.pushforward_chi_power_closedform(exponent, setup, segre),
            segre.component(i),
        ),
    ]


@case(types_.CaseName.DELTA, sweep=_sweep_delta)
def verify_delta(*, r: int, d: int) -> t.List[Identity]:
    """Push ``θ_d^m · [Z]`` forward over a surface, where ``[Z] = χ·β_0 + β_1`` is a divisor
    with formal coefficients, and compare with the discriminant expression

        -(m(m+1)(m-1) / (r(r+1)(r-1))) · f^ε · β_0 · (c_2 - ((r-1)/2r) c_1^2).

    The second identity checks that no monomial containing ``β_1`` survives.
    """
    setup = grassmann.GrassSetup(2, r, d)
    table = setup.base_table([("b0", 0), ("b1", 1)])
    segre = chow.segre_series(chow.chern_series(table, r))
    c1, c2 = table.gen("c1"), table.gen("c2")
    b0, b1 = table.gen("b0"), table.gen("b1")
    m = setup.m

    divisor = grassmann.leray_hirsch_divisor(setup, b0, b1)
    product = grassmann.power(grassmann.theta(setup, c1), m) * divisor
    value = chow.degree_part(grassmann.pushforward(product, setup, segre), 2)

    coefficient = -utils.rational(m * (m + 1) * (m - 1), r * (r + 1) * (r - 1))
    f_eps = partitions.syt_count_formula(setup.epsilon)
    target = b0 * chow.discriminant(r, c1, c2) * coefficient * f_eps
    b1_part = value - chow.specialize(value, {"b1": 0}, table)
    return [
        Identity("discriminant", value, target),
        Identity("b1-free", b1_part, table.zero),
    ]


@case(types_.CaseName.CLASSICAL, sweep=_sweep_classical)
def verify_classical_segre(*, r: int, n: int, k: int) -> t.List[Identity]:
    """Specialize the inequality expression to ``β_0 = 1`` and ``β_i = 0`` for ``i > 0`` and
    compare with ``s_k(E) · H^(n-k)``.
    """
    N = r - 1
    table = ineq.segre_table(r, n, N)
    symbolic = ineq.segre_lhs_symbolic(r, n, k, N, table)

    target = chow.GeneratorTable([*chow.chern_table(r, n).generators, ("H", 1)], n)
    values: t.Dict[str, chow.Operand] = {f"b{i}": 0 for i in range(1, N + 1)}
    values["b0"] = 1

    segre = chow.segre_series(chow.chern_series(target, r))
    return [
        Identity(
            "classical",
            chow.specialize(symbolic, values, target),
            segre.component(k) * target.gen("H") ** (n - k),
        )
    ]


# Suite.


def iter_case_ids(config: SuiteConfig) -> t.Iterator[str]:
    """Yield the ids of every case run under ``config``, in suite order.

    Raises
    ------
    :class:`~.exceptions.ConfigError`
        A ``fixed`` filter value does not convert to the parameter's type.
    """
    for name in types_.CaseName:
        if config.only is not None and name not in config.only:
            continue

        registered = REGISTRY[name]
        filters: t.Dict[str, t.Any] = {}
        for param in registered.params:
            if param.name in config.fixed:
                try:
                    filters[param.name] = param.convert(config.fixed[param.name])
                except exceptions.ConversionError as exc:
                    raise exceptions.ConfigError(exc.message, param.name) from exc

        for values in registered.sweep(config):
            if all(values[key] == value for key, value in filters.items()):
                yield registered.build_case_id(**values)


def run_case(case_id: str) -> VerificationReport:
    """Run a single case from its id, e.g. ``"delta:2:1"``.

    Raises
    ------
    :class:`~.exceptions.ConfigError`
        The id does not name a registered case.
    :class:`~.exceptions.ConversionError`
        The parameter values in the id do not convert.
    """
    name, _, _ = case_id.partition(":")
    return REGISTRY[parse_case_name(name, "case")].invoke(case_id)


def run_suite(config: t.Optional[SuiteConfig] = None) -> t.List[VerificationReport]:
    """Run every selected case over its sweep and return the reports in suite order.

    With ``config.workers > 1`` the cases are distributed over a process pool; the reports are
    still returned in suite order, so the result does not depend on the number of workers.
    """
    config = SuiteConfig() if config is None else config
    case_ids = list(iter_case_ids(config))

    if config.workers > 1 and len(case_ids) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=config.workers) as executor:
            reports = list(executor.map(run_case, case_ids))
    else:
        reports = [run_case(case_id) for case_id in case_ids]

    for index, report in enumerate(reports):
        if report.case_name in config.perturb:
            reports[index] = report = report.perturbed(config.perturb[report.case_name])
        _LOGGER.debug("%s %s (%.3fs)", report.status.value, report.case_id, report.elapsed)

    summary = summarize(reports)
    _LOGGER.info(
        "Ran %d verification cases: %d passed, %d failed.",
        summary["total"],
        summary["passed"],
        summary["failed"],
    )
    return reports


def summarize(reports: t.Sequence[VerificationReport]) -> t.Dict[str, t.Any]:
    """Return the aggregate counts and status of a suite run. An empty run passes."""
    passed = sum(report.passed for report in reports)
    return {
        "total": len(reports),
        "passed": passed,
        "failed": len(reports) - passed,
        "status": (types_.Status.PASS if passed == len(reports) else types_.Status.FAIL).value,
    }


def reports_to_json(
    reports: t.Sequence[VerificationReport], include_timings: bool = False
) -> t.Dict[str, t.Any]:
    return {
        "reports": [report.to_json(include_timings) for report in reports],
        "summary": summarize(reports),
    }


def format_table(reports: t.Sequence[VerificationReport]) -> str:
    summary = summarize(reports)
    rows = [row for report in reports for row in report.table_rows()]
    rows.append(f"{summary['passed']} passed, {summary['failed']} failed")
    return "\n".join(rows) + "\n"
