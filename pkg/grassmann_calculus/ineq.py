"""Segre inequalities for subvarieties of a projective bundle.

For a codimension ``N`` subvariety of ``P(E)`` with class ``Σ β_i ξ^(N-i)`` and an ample class
``H``, the inequality expressions are ``Σ_i β_i · s_(k-i)(E) · H^(n-k)`` for ``k = 1..n``. This
module expands them symbolically and evaluates them against user-supplied intersection numbers.
It reports signs and never decides whether the inputs come from a nef configuration.
"""

from __future__ import annotations

import logging
import typing as t

from sympy.polys.domains import QQ

from . import chow, converter, exceptions, types_

__all__ = [
    "IntersectionTable",
    "InequalityValue",
    "segre_table",
    "segre_lhs_symbolic",
    "required_monomials",
    "evaluate",
    "check_inequalities",
]

_LOGGER = logging.getLogger(__name__)


def _check_range(r: int, n: int, N: int) -> None:
    if r < 2:
        raise exceptions.SetupError(f"The rank must be at least 2, got r={r}.", "r", r)
    if n < 1:
        raise exceptions.SetupError(f"The base dimension must be positive, got n={n}.", "n", n)
    if not 1 <= N <= r - 1:
        raise exceptions.SetupError(
            f"The codimension must satisfy 1 <= N <= r-1, got N={N}.", "N", N
        )


def segre_table(r: int, n: int, N: int) -> chow.GeneratorTable:
    """Return the generator table of the inequality expressions: ``b0 .. bN`` (``b_i`` of degree
    ``i``), the Chern generators ``c1 .. c_min(r, n)`` of ``E``, and ``H`` of degree 1, truncated
    at ``n``.

    Raises
    ------
    :class:`~.exceptions.SetupError`
        ``r < 2``, ``n < 1`` or ``N`` outside ``1..r-1``.
    """
    _check_range(r, n, N)
    return chow.GeneratorTable(
        [(f"b{i}", i) for i in range(N + 1)]
        + [(f"c{k}", k) for k in range(1, min(r, n) + 1)]
        + [("H", 1)],
        n,
    )


def segre_lhs_symbolic(
    r: int, n: int, k: int, N: int, table: t.Optional[chow.GeneratorTable] = None
) -> chow.GradedElement:
    """Return ``Σ_{i=0}^{min(N, k)} b_i · s_(k-i)(E) · H^(n-k)`` with the unsigned Segre classes
    expanded in Chern generators.

    Terms with ``i > N`` vanish because ``β_i = 0`` there; terms with ``k - i < 0`` vanish because
    negative Segre classes are zero. Neither kind appears in the result.

    Parameters
    ----------
    r: :class:`int`
        The rank of ``E``.
    n: :class:`int`
        The dimension of the base.
    k: :class:`int`
        The index of the inequality, ``1 <= k <= n``.
    N: :class:`int`
        The codimension of the subvariety, ``1 <= N <= r - 1``.
    table: Optional[:class:`~.chow.GeneratorTable`]
        The table to expand in. Defaults to :func:`segre_table` ``(r, n, N)``.

    Raises
    ------
    :class:`~.exceptions.SetupError`
        A parameter is out of range.
    """
    _check_range(r, n, N)
    if not 1 <= k <= n:
        raise exceptions.SetupError(f"The index must satisfy 1 <= k <= n={n}, got k={k}.", "k", k)

    table = segre_table(r, n, N) if table is None else table
    segre = chow.segre_series(chow.chern_series(table, r))
    hyperplane = table.gen("H") ** (n - k)
    return sum(
        (table.gen(f"b{i}") * segre.component(k - i) * hyperplane for i in range(min(N, k) + 1)),
        table.zero,
    )


def required_monomials(r: int, n: int, N: int) -> t.List[str]:
    """Return the sorted keys of every monomial occurring in some inequality expression for
    ``k = 1..n``: exactly the entries an intersection table must provide.
    """
    table = segre_table(r, n, N)
    keys = {
        table.monomial_key(monomial)
        for k in range(1, n + 1)
        for monomial, _ in segre_lhs_symbolic(r, n, k, N, table).terms()
    }
    return sorted(keys)


class IntersectionTable(t.Mapping[types_.Monomial, types_.Rational]):
    """A table of intersection numbers: a map from monomials of degree exactly ``n`` to
    rationals. Tables are immutable. Missing entries are never read as zero.

    Parameters
    ----------
    table: :class:`~.chow.GeneratorTable`
        The generator table the monomials are written in.
    values: Mapping[Tuple[:class:`int`, ...], Rational]
        The intersection numbers keyed by exponent vector.

    Raises
    ------
    :class:`~.exceptions.DegreeError`
        A key does not have degree ``n``.
    """

    __slots__ = ("table", "_values")

    table: chow.GeneratorTable
    _values: t.Dict[types_.Monomial, types_.Rational]

    def __init__(
        self,
        table: chow.GeneratorTable,
        values: t.Mapping[types_.Monomial, types_.Rational],
    ) -> None:
        self.table = table
        self._values = {}
        for monomial, value in values.items():
            degree = table.degree_of(monomial)
            if degree != table.n:
                raise exceptions.DegreeError(
                    f"Intersection number {table.monomial_key(monomial)} has degree {degree}, "
                    f"expected {table.n}.",
                    table.n,
                    degree,
                )
            self._values[monomial] = QQ.convert(value)

    @classmethod
    def from_json(cls, data: t.Any, table: chow.GeneratorTable) -> IntersectionTable:
        """Build a table from a JSON object such as ``{"b0*c1^2": "4", "b0*c2": "1"}``. Keys
        follow the canonical monomial key grammar; values are ``"p/q"`` strings or integers.

        Raises
        ------
        :class:`~.exceptions.ConversionError`
            The document is not an object, or a key or value does not parse.
        :class:`~.exceptions.RingMismatchError`
            A key names an undeclared generator.
        """
        if not isinstance(data, dict):
            raise exceptions.ConversionError(
                f"Expected an intersection table object, got {type(data).__name__}.", "table"
            )

        values: t.Dict[types_.Monomial, types_.Rational] = {}
        for key, value in t.cast(t.Dict[str, t.Any], data).items():
            monomial = table.parse_monomial_key(key)
            if monomial in values:
                raise exceptions.ConversionError(f"Duplicate intersection number for {key!r}.", key)
            values[monomial] = converter.rational_from_json(value)
        return cls(table, values)

    def to_json(self) -> t.Dict[str, str]:
        return {
            self.table.monomial_key(monomial): converter.rational_to_json(value)
            for monomial, value in self._values.items()
        }

    def __getitem__(self, monomial: types_.Monomial) -> types_.Rational:
        return self._values[monomial]

    def __iter__(self) -> t.Iterator[types_.Monomial]:
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __repr__(self) -> str:
        return f"IntersectionTable({self.to_json()})"


def evaluate(expr: chow.GradedElement, table: IntersectionTable) -> types_.Rational:
    """Evaluate an expression linearly against an intersection table.

    Raises
    ------
    :class:`~.exceptions.RingMismatchError`
        The expression and the table use different generator tables.
    :class:`~.exceptions.MissingMonomialError`
        Some monomials of the expression have no intersection number; all of them are listed.
    """
    if expr.table != table.table:
        raise exceptions.RingMismatchError(
            f"Cannot evaluate an element of {expr.table!r} against a table over {table.table!r}."
        )

    missing = [
        expr.table.monomial_key(monomial) for monomial, _ in expr.terms() if monomial not in table
    ]
    if missing:
        raise exceptions.MissingMonomialError(
            f"The intersection table has no entry for {', '.join(missing)}.", missing
        )

    return sum((coeff * table[monomial] for monomial, coeff in expr.terms()), QQ.zero)


class InequalityValue(t.NamedTuple):
    """The value of the ``k``-th inequality expression."""

    k: int
    value: types_.Rational

    @property
    def sign(self) -> int:
        return (self.value > 0) - (self.value < 0)

    @property
    def violated(self) -> bool:
        """Whether the value is negative."""
        return self.value < 0

    def to_json(self) -> t.Dict[str, t.Any]:
        return {
            "k": self.k,
            "value": converter.rational_to_json(self.value),
            "sign": self.sign,
            "violated": self.violated,
        }


def check_inequalities(r: int, n: int, N: int, table: IntersectionTable) -> t.List[InequalityValue]:
    """Evaluate every inequality expression ``k = 1..n`` against ``table``.

    Violations are flagged, not raised: the inputs need not come from a configuration for
    which the inequalities hold.

    Raises
    ------
    :class:`~.exceptions.MissingMonomialError`
        The table does not cover the expressions. Every missing key across all ``k`` is listed.
    """
    values: t.List[InequalityValue] = []
    missing: t.List[str] = []
    for k in range(1, n + 1):
        try:
            expr = segre_lhs_symbolic(r, n, k, N, table.table)
            values.append(InequalityValue(k, evaluate(expr, table)))
        except exceptions.MissingMonomialError as exc:
            missing.extend(key for key in exc.keys if key not in missing)

    if missing:
        raise exceptions.MissingMonomialError(
            f"The intersection table has no entry for {', '.join(missing)}.", missing
        )

    _LOGGER.debug(
        "Evaluated %d inequalities for r=%d, n=%d, N=%d: %d violated.",
        len(values),
        r,
        n,
        N,
        sum(value.violated for value in values),
    )
    return values
