"""Truncated graded polynomial rings over the rationals.

A :class:`GeneratorTable` declares named generators with nonnegative degrees and a truncation
degree ``n``; it models the rational Chow ring of an ``n``-dimensional base in which every class
of interest is a polynomial in the declared symbols. Elements are sparse sympy polynomials over
``QQ`` from which every monomial of weighted degree above ``n`` is discarded. Since the
discarded monomials form an ideal, truncating after each operation agrees with computing in the
quotient ring.
"""

from __future__ import annotations

import typing as t

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement, PolyRing, ring

from . import exceptions, patterns, types_, utils

__all__ = [
    "GeneratorTable",
    "GradedElement",
    "ClassSeries",
    "mul",
    "invert_total_class",
    "segre_series",
    "chern_series",
    "chern_table",
    "schur_det",
    "discriminant",
    "degree_part",
    "specialize",
]

Scalar = t.Union[int, types_.Rational]
Operand = t.Union["GradedElement", int, types_.Rational]


class GeneratorTable:
    """An ordered table of graded generators with a fixed truncation degree.

    Two tables are equal when they declare the same generators, with the same degrees, in the
    same order, and truncate at the same degree. Elements of unequal tables never mix.

    Parameters
    ----------
    generators: Iterable[Tuple[:class:`str`, :class:`int`]]
        The ``(name, degree)`` pairs of the generators, in declaration order. Degree-0
        generators are permitted and stay formal symbols.
    n: :class:`int`
        The truncation degree: the dimension of the base.

    Raises
    ------
    :class:`~.exceptions.SetupError`
        No generators were declared, a name is invalid or repeated, a degree is negative, or
        ``n`` is negative.
    """

    __slots__ = ("names", "degrees", "n", "_ring", "_index")

    names: t.Tuple[str, ...]
    """The generator names, in declaration order."""

    degrees: t.Tuple[int, ...]
    """The generator degrees, aligned with :attr:`names`."""

    n: int
    """The truncation degree. Monomials of higher degree are discarded."""

    _ring: PolyRing
    _index: t.Dict[str, int]

    def __init__(self, generators: t.Iterable[t.Tuple[str, int]], n: int) -> None:
        pairs = [(str(name), int(degree)) for name, degree in generators]
        if not pairs:
            raise exceptions.SetupError(
                "A generator table needs at least one generator.", "generators", pairs
            )
        if n < 0:
            raise exceptions.SetupError(
                f"The truncation degree must be nonnegative, got {n}.", "n", n
            )

        for name, degree in pairs:
            if not patterns.GENERATOR.fullmatch(name):
                raise exceptions.SetupError(f"Invalid generator name {name!r}.", "generators", name)
            if degree < 0:
                raise exceptions.SetupError(
                    f"Generator {name!r} has negative degree {degree}.", "generators", name
                )

        self.names = tuple(name for name, _ in pairs)
        if len(set(self.names)) != len(self.names):
            raise exceptions.SetupError(
                f"Generator names must be unique: {self.names}.", "generators", self.names
            )

        self.degrees = tuple(degree for _, degree in pairs)
        self.n = n
        self._ring = ring(",".join(self.names), QQ)[0]
        self._index = {name: index for index, name in enumerate(self.names)}

    @property
    def ring(self) -> PolyRing:
        """The underlying (untruncated) sympy polynomial ring."""
        return self._ring

    @property
    def generators(self) -> t.Tuple[t.Tuple[str, int], ...]:
        """The ``(name, degree)`` pairs in declaration order."""
        return tuple(zip(self.names, self.degrees))

    @property
    def zero(self) -> GradedElement:
        return GradedElement(self, self._ring.zero)

    @property
    def one(self) -> GradedElement:
        return GradedElement(self, self._ring.one)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GeneratorTable):
            return NotImplemented
        return self.generators == other.generators and self.n == other.n

    def __hash__(self) -> int:
        return hash((self.generators, self.n))

    def __reduce__(self) -> t.Tuple[t.Any, ...]:
        # Pickle the declaration only; the sympy ring is rebuilt on load.
        return (GeneratorTable, (self.generators, self.n))

    def __repr__(self) -> str:
        gens = ", ".join(f"{name}:{degree}" for name, degree in self.generators)
        return f"GeneratorTable([{gens}], n={self.n})"

    def index(self, name: str) -> int:
        """Return the position of a generator in the table.

        Raises
        ------
        :class:`~.exceptions.RingMismatchError`
            The table declares no generator of that name.
        """
        try:
            return self._index[name]
        except KeyError:
            raise exceptions.RingMismatchError(
                f"Generator {name!r} is not declared in {self!r}."
            ) from None

    def degree_of(self, monomial: types_.Monomial) -> int:
        """Return the weighted degree of an exponent vector."""
        return sum(exp * degree for exp, degree in zip(monomial, self.degrees))

    def gen(self, name: str) -> GradedElement:
        """Return the generator of the given name as an element."""
        return GradedElement(self, self._ring.gens[self.index(name)])

    def scalar(self, value: Scalar) -> GradedElement:
        """Return a rational multiple of the unit."""
        return GradedElement(self, self._ring.ground_new(QQ.convert(value)))

    def monomial(self, exponents: t.Mapping[str, int]) -> types_.Monomial:
        """Build an exponent vector from a ``{name: exponent}`` mapping."""
        vector = [0] * len(self.names)
        for name, exp in exponents.items():
            if exp < 0:
                raise exceptions.DegreeError(f"Negative exponent {exp} for {name!r}.", 0, exp)
            vector[self.index(name)] += exp
        return tuple(vector)

    def from_terms(self, terms: t.Iterable[t.Tuple[types_.Monomial, Scalar]]) -> GradedElement:
        """Build an element from ``(exponent vector, coefficient)`` pairs. Repeated monomials are
        summed; monomials above the truncation degree are dropped.
        """
        collected: t.Dict[types_.Monomial, types_.Rational] = {}
        for monomial, coeff in terms:
            if len(monomial) != len(self.names):
                raise exceptions.RingMismatchError(
                    f"Monomial {monomial} does not match the {len(self.names)} generators "
                    f"of {self!r}."
                )
            collected[monomial] = collected.get(monomial, QQ.zero) + QQ.convert(coeff)
        return GradedElement(self, self._ring.from_dict({m: c for m, c in collected.items() if c}))

    def monomial_key(self, monomial: types_.Monomial) -> str:
        """Return the canonical key of a monomial: generator factors in declaration order joined
        by ``*``, exponents above one written with ``^``, and ``1`` for the unit monomial.
        """
        factors = [
            name if exp == 1 else f"{name}^{exp}"
            for name, exp in zip(self.names, monomial)
            if exp
        ]
        return "*".join(factors) or "1"

    def parse_monomial_key(self, key: str) -> types_.Monomial:
        """Parse a canonical monomial key back into an exponent vector.

        Raises
        ------
        :class:`~.exceptions.MatchFailure`
            The key does not follow the key grammar.
        :class:`~.exceptions.RingMismatchError`
            The key names a generator this table does not declare.
        """
        key = key.strip()
        if not patterns.MONOMIAL_KEY.fullmatch(key):
            raise exceptions.MatchFailure(
                f"Monomial key {key!r} did not match r'{patterns.MONOMIAL_KEY.pattern}'.",
                "monomial",
                patterns.MONOMIAL_KEY,
            )
        if key == "1":
            return (0,) * len(self.names)

        exponents: t.Dict[str, int] = {}
        for factor in key.split("*"):
            match = patterns.MONOMIAL_FACTOR.fullmatch(factor)
            assert match is not None  # Guaranteed by the MONOMIAL_KEY match above.
            exponents[match["name"]] = exponents.get(match["name"], 0) + int(match["exp"] or 1)
        return self.monomial(exponents)

    def truncate(self, poly: PolyElement) -> PolyElement:
        """Drop every monomial of degree above :attr:`n`."""
        if all(self.degree_of(monomial) <= self.n for monomial in poly.keys()):
            return poly
        return self._ring.from_dict(
            {
                monomial: coeff
                for monomial, coeff in poly.items()
                if self.degree_of(monomial) <= self.n
            }
        )


def _element_from_terms(
    table: GeneratorTable, terms: t.Iterable[t.Tuple[types_.Monomial, int, int]]
) -> GradedElement:
    return table.from_terms((monomial, utils.rational(p, q)) for monomial, p, q in terms)


class GradedElement:
    """An element of a truncated graded ring: a rational polynomial in the generators of a
    :class:`GeneratorTable` with no monomial above the truncation degree.

    Elements are immutable. Arithmetic with another element requires both to share a table;
    :class:`int` and exact rational operands are treated as multiples of the unit.
    """

    __slots__ = ("table", "poly")

    table: GeneratorTable
    """The generator table this element belongs to."""

    poly: PolyElement
    """The underlying sympy polynomial, already truncated."""

    def __init__(self, table: GeneratorTable, poly: PolyElement) -> None:
        self.table = table
        self.poly = table.truncate(poly)

    def __reduce__(self) -> t.Tuple[t.Any, ...]:
        terms = tuple(
            (monomial, int(coeff.numerator), int(coeff.denominator))
            for monomial, coeff in self.poly.items()
        )
        return (_element_from_terms, (self.table, terms))

    def _coerce(self, other: Operand) -> PolyElement:
        if isinstance(other, GradedElement):
            if other.table != self.table:
                raise exceptions.RingMismatchError(
                    f"Cannot combine elements of {self.table!r} and {other.table!r}."
                )
            return other.poly
        return self.table.ring.ground_new(QQ.convert(other))

    def __add__(self, other: Operand) -> GradedElement:
        return GradedElement(self.table, self.poly + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: Operand) -> GradedElement:
        return GradedElement(self.table, self.poly - self._coerce(other))

    def __rsub__(self, other: Operand) -> GradedElement:
        return GradedElement(self.table, self._coerce(other) - self.poly)

    def __neg__(self) -> GradedElement:
        return GradedElement(self.table, -self.poly)

    def __mul__(self, other: Operand) -> GradedElement:
        return GradedElement(self.table, self.poly * self._coerce(other))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> GradedElement:
        if exponent < 0:
            raise exceptions.DegreeError(
                "Graded elements cannot be inverted in general.", 0, exponent
            )
        result = self.table.one
        for _ in range(exponent):
            result = result * self
        return result

    def __bool__(self) -> bool:
        return bool(self.poly)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GradedElement):
            return self.table == other.table and self.poly == other.poly
        if isinstance(other, int) or QQ.of_type(other):
            return self.poly == self.table.ring.ground_new(QQ.convert(other))
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.table, frozenset(self.poly.items())))

    def __repr__(self) -> str:
        return f"GradedElement({self})"

    def __str__(self) -> str:
        terms = self.terms()
        if not terms:
            return "0"

        pieces: t.List[str] = []
        for position, (monomial, coeff) in enumerate(terms):
            key = self.table.monomial_key(monomial)
            magnitude = -coeff if coeff < 0 else coeff
            if key == "1":
                body = utils.format_rational(magnitude)
            elif magnitude == 1:
                body = key
            else:
                body = f"{utils.format_rational(magnitude)}*{key}"

            if position == 0:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(pieces)

    def terms(self) -> t.List[t.Tuple[types_.Monomial, types_.Rational]]:
        """Return the nonzero terms ordered by degree, then lexicographically with higher powers
        of earlier generators first. This order is used for every serialization.
        """
        return sorted(
            self.poly.items(),
            key=lambda item: (self.table.degree_of(item[0]), tuple(-exp for exp in item[0])),
        )

    def coefficient(self, exponents: t.Mapping[str, int]) -> types_.Rational:
        """Return the coefficient of the monomial given as a ``{name: exponent}`` mapping."""
        return self.poly.get(self.table.monomial(exponents), QQ.zero)

    def degrees(self) -> t.Set[int]:
        """Return the set of degrees in which this element has nonzero terms."""
        return {self.table.degree_of(monomial) for monomial in self.poly.keys()}

    def homogeneous_degree(self) -> t.Optional[int]:
        """Return the common degree of all terms, or ``None`` if there are none or they differ."""
        degrees = self.degrees()
        return degrees.pop() if len(degrees) == 1 else None

    def is_homogeneous(self, degree: int) -> bool:
        """Whether every term has the given degree. Zero is homogeneous of every degree."""
        return self.degrees() <= {degree}

    def involves(self, name: str) -> bool:
        """Whether any term contains the named generator."""
        index = self.table.index(name)
        return any(monomial[index] for monomial in self.poly.keys())

    def require_degree(self, degree: int, what: str = "element") -> GradedElement:
        """Return this element after checking that it is homogeneous of ``degree``.

        Raises
        ------
        :class:`~.exceptions.DegreeError`
            The element has a term of another degree.
        """
        if not self.is_homogeneous(degree):
            raise exceptions.DegreeError(
                f"Expected {what} to be homogeneous of degree {degree}, got {self}.",
                degree,
                self.homogeneous_degree(),
            )
        return self


class ClassSeries(t.Sequence[GradedElement]):
    """A total class ``1 + x_1 + ... + x_n`` stored by components, ``x_k`` homogeneous of
    degree ``k``. Component zero is the unit, so every series is invertible.

    Indexing within ``0..n`` returns the stored components; :meth:`component` additionally
    follows the convention ``x_k = 0`` for ``k < 0`` and ``k > n``.

    Raises
    ------
    :class:`~.exceptions.CalculusError`
        Component zero is not the unit.
    :class:`~.exceptions.DegreeError`
        A component is not homogeneous of its index.
    """

    __slots__ = ("table", "_components")

    table: GeneratorTable
    _components: t.Tuple[GradedElement, ...]

    def __init__(self, table: GeneratorTable, components: t.Iterable[GradedElement]) -> None:
        given = list(components)
        if len(given) > table.n + 1:
            given = given[: table.n + 1]
        given += [table.zero] * (table.n + 1 - len(given))

        if given[0] != table.one:
            raise exceptions.CalculusError(f"A total class must start with 1, got {given[0]}.")
        for degree, component in enumerate(given):
            if component.table != table:
                raise exceptions.RingMismatchError(
                    f"Component {degree} does not belong to {table!r}."
                )
            component.require_degree(degree, f"component {degree}")

        self.table = table
        self._components = tuple(given)

    def __len__(self) -> int:
        return len(self._components)

    @t.overload
    def __getitem__(self, index: int) -> GradedElement:
        ...

    @t.overload
    def __getitem__(self, index: slice) -> t.Sequence[GradedElement]:
        ...

    def __getitem__(
        self, index: t.Union[int, slice]
    ) -> t.Union[GradedElement, t.Sequence[GradedElement]]:
        return self._components[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassSeries):
            return NotImplemented
        return self._components == other._components

    def __hash__(self) -> int:
        return hash(self._components)

    def __repr__(self) -> str:
        return f"ClassSeries({' + '.join(f'[{c}]' for c in self._components)})"

    def __mul__(self, other: ClassSeries) -> ClassSeries:
        product = [
            sum((self.component(i) * other.component(k - i) for i in range(k + 1)), self.table.zero)
            for k in range(self.table.n + 1)
        ]
        return ClassSeries(self.table, product)

    def component(self, degree: int) -> GradedElement:
        """Return the degree ``degree`` component, zero outside ``0..n``."""
        if 0 <= degree < len(self._components):
            return self._components[degree]
        return self.table.zero

    def total(self) -> GradedElement:
        """Return the sum of all components as a single element."""
        return sum(self._components, self.table.zero)


def mul(a: GradedElement, b: GradedElement) -> GradedElement:
    """Return the truncated graded product of two elements of the same table.

    Raises
    ------
    :class:`~.exceptions.RingMismatchError`
        The operands belong to different tables.
    """
    return a * b


def invert_total_class(series: ClassSeries) -> ClassSeries:
    """Return the series ``t`` with ``series * t = 1`` up to the truncation degree.

    The components are the signed inverse: the degree one component of ``1/c`` is ``-c_1``.
    Use :func:`segre_series` for the unsigned Segre classes.
    """
    table = series.table
    if series.component(0) != table.one:
        raise exceptions.CalculusError(
            f"Cannot invert a total class starting with {series.component(0)}."
        )

    inverse = [table.one]
    for k in range(1, table.n + 1):
        tail = (series.component(i) * inverse[k - i] for i in range(1, k + 1))
        inverse.append(-sum(tail, table.zero))
    return ClassSeries(table, inverse)


def segre_series(chern: ClassSeries) -> ClassSeries:
    """Return the unsigned Segre series of a total Chern class: ``s_k = (-1)^k (1/c)_k``.

    In particular ``s_1 = c_1`` and ``s_2 = c_1^2 - c_2``. Every Schur determinant of Segre
    classes in this package uses these unsigned components.
    """
    inverse = invert_total_class(chern)
    return ClassSeries(
        chern.table, (comp if k % 2 == 0 else -comp for k, comp in enumerate(inverse))
    )


def chern_table(rank: int, n: int, prefix: str = "c") -> GeneratorTable:
    """Return a table declaring the generic Chern generators ``{prefix}1 .. {prefix}min(rank, n)``
    of a rank ``rank`` bundle over an ``n``-dimensional base.

    ``{prefix}1`` is declared even when ``rank`` or ``n`` is zero, so the table is never empty; it
    truncates away in degree zero.
    """
    top = max(min(rank, n), 1)
    return GeneratorTable([(f"{prefix}{k}", k) for k in range(1, top + 1)], n)


def chern_series(table: GeneratorTable, rank: int, prefix: str = "c") -> ClassSeries:
    """Return the generic formal total Chern class ``1 + c1 + ... + c_min(rank, n)`` of a rank
    ``rank`` bundle, reading the generators ``{prefix}1``, ``{prefix}2``, ... from the table.

    Raises
    ------
    :class:`~.exceptions.RingMismatchError`
        A required Chern generator is not declared.
    :class:`~.exceptions.DegreeError`
        A Chern generator is declared with the wrong degree.
    """
    components = [table.one]
    for k in range(1, min(rank, table.n) + 1):
        components.append(table.gen(f"{prefix}{k}").require_degree(k, f"{prefix}{k}"))
    return ClassSeries(table, components)


def schur_det(seq: t.Sequence[int], series: ClassSeries) -> GradedElement:
    """Return the Schur determinant ``det[x_{seq_i + j - i}]`` of a class series.

    ``seq`` may be any finite integer sequence; entries outside ``0..n`` are zero by
    convention, so non-partition sequences evaluate to their signed straightened value or to
    zero. The empty sequence gives 1, and a one-part sequence ``(k)`` gives ``x_k``.
    """
    table = series.table
    size = len(seq)
    if size == 0:
        return table.one
    # The determinant is homogeneous of degree sum(seq).
    if not 0 <= sum(seq) <= table.n:
        return table.zero

    entries = [
        [series.component(seq[i] + j - i).poly for j in range(size)] for i in range(size)
    ]
    matrix = DomainMatrix(entries, (size, size), table.ring.to_domain())
    return GradedElement(table, matrix.det())


def discriminant(rank: int, c1: GradedElement, c2: GradedElement) -> GradedElement:
    """Return the discriminant ``c2 - ((rank - 1) / (2 rank)) c1^2``.

    Raises
    ------
    :class:`~.exceptions.SetupError`
        The rank is not positive.
    :class:`~.exceptions.DegreeError`
        ``c1`` is not of degree 1 or ``c2`` is not of degree 2.
    """
    if rank < 1:
        raise exceptions.SetupError(f"The rank must be positive, got {rank}.", "r", rank)
    c1.require_degree(1, "c1")
    c2.require_degree(2, "c2")
    return c2 - c1 * c1 * utils.rational(rank - 1, 2 * rank)


def degree_part(element: GradedElement, degree: int) -> GradedElement:
    """Return the homogeneous degree ``degree`` part of an element."""
    table = element.table
    return GradedElement(
        table,
        table.ring.from_dict(
            {
                monomial: coeff
                for monomial, coeff in element.poly.items()
                if table.degree_of(monomial) == degree
            }
        ),
    )


def specialize(
    element: GradedElement,
    values: t.Mapping[str, Operand],
    target: GeneratorTable,
) -> GradedElement:
    """Substitute generators of ``element`` and read the result in ``target``.

    Generators named in ``values`` are replaced by the given element or scalar; every other
    generator is mapped to the generator of the same name in ``target``.

    Raises
    ------
    :class:`~.exceptions.RingMismatchError`
        A generator is neither substituted nor declared in ``target``.
    """
    images: t.List[GradedElement] = []
    for name in element.table.names:
        value = values[name] if name in values else target.gen(name)
        images.append(value if isinstance(value, GradedElement) else target.scalar(value))

    result = target.zero
    for monomial, coeff in element.poly.items():
        term = target.scalar(coeff)
        for image, exp in zip(images, monomial):
            if exp:
                term = term * image**exp
        result = result + term
    return result
