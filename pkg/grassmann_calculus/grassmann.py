"""Classes on a Grassmann bundle and their push-forward to the base.

A class on ``Gr_d(E)`` is represented in the Leray-Hirsch basis of Schur determinants of the
universal quotient: a finite sum of terms ``α_μ ⊗ Δ_μ(s(Q))`` with ``α_μ`` pulled back from the
base and ``μ`` of length at most ``d``. Powers of ``χ = c_1(Q) = s_1(Q)`` are expanded one box at
a time with the Pieri rule; the push-forward maps ``Δ_μ(s(Q))`` to ``Δ_{μ-ε}(s(E))``.
"""

from __future__ import annotations

import logging
import math
import typing as t

from . import chow, exceptions, partitions, types_, utils

__all__ = [
    "GrassSetup",
    "FiberedClass",
    "CoefficientIdentity",
    "FCoefficientIdentities",
    "chi",
    "theta",
    "lambda_class",
    "mul_by_chi",
    "mul_by_pullback",
    "power",
    "pushforward",
    "pushforward_chi_power_closedform",
    "f_coefficient_identities",
    "leray_hirsch_divisor",
    "d1_polynomial_class",
]

_LOGGER = logging.getLogger(__name__)

_EMPTY = partitions.Partition()
_BOX = partitions.Partition((1,))


class GrassSetup:
    """The ambient data of a Grassmann bundle ``Gr_d(E) -> X`` of rank ``d`` quotients of a rank
    ``r`` bundle over an ``n``-dimensional base.

    Parameters
    ----------
    n: :class:`int`
        The dimension of the base, i.e. the truncation degree of its ring.
    r: :class:`int`
        The rank of ``E``; at least 2.
    d: :class:`int`
        The rank of the universal quotient; ``0 < d < r``.

    Raises
    ------
    :class:`~.exceptions.SetupError`
        A parameter is out of range.
    """

    __slots__ = ("n", "r", "d")

    n: int
    r: int
    d: int

    def __init__(self, n: int, r: int, d: int) -> None:
        if n < 0:
            raise exceptions.SetupError(
                f"The base dimension must be nonnegative, got n={n}.", "n", n
            )
        if r < 2:
            raise exceptions.SetupError(f"The rank must be at least 2, got r={r}.", "r", r)
        if not 0 < d < r:
            raise exceptions.SetupError(
                f"The quotient rank must satisfy 0 < d < r={r}, got d={d}.", "d", d
            )

        self.n = n
        self.r = r
        self.d = d

    @property
    def epsilon(self) -> partitions.Partition:
        """The rectangle ε with ``d`` rows of length ``r - d``."""
        return partitions.rectangle(self.d, self.r - self.d)

    @property
    def reldim(self) -> int:
        """The relative dimension ``d(r - d)``; push-forward lowers degrees by this much."""
        return self.d * (self.r - self.d)

    @property
    def m(self) -> int:
        """The dimension of a fiber plus one, ``d(r - d) + 1``."""
        return self.reldim + 1

    def base_table(self, extra: t.Iterable[t.Tuple[str, int]] = ()) -> chow.GeneratorTable:
        """Return a generator table for the base with the Chern generators ``c1 .. c_min(r, n)``
        of ``E`` declared first, followed by ``extra``.
        """
        chern = [(f"c{k}", k) for k in range(1, min(self.r, self.n) + 1)]
        generators = chern + list(extra)
        if not generators:
            # A point base still needs a symbol for the ring; c1 is truncated away anyway.
            generators = [("c1", 1)]
        return chow.GeneratorTable(generators, self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrassSetup):
            return NotImplemented
        return (self.n, self.r, self.d) == (other.n, other.r, other.d)

    def __hash__(self) -> int:
        return hash((self.n, self.r, self.d))

    def __repr__(self) -> str:
        return f"GrassSetup(n={self.n}, r={self.r}, d={self.d})"


class FiberedClass:
    """A class on ``Gr_d(E)``: a finite sum of terms ``α_μ ⊗ Δ_μ(s(Q))``.

    The coefficients ``α_μ`` live in the base table and every key ``μ`` has at most ``d`` parts.
    Zero coefficients are dropped. Mixed-degree sums are allowed; see
    :meth:`term_degrees` and :meth:`homogeneous_degree`.

    Raises
    ------
    :class:`~.exceptions.SupportError`
        A key has more than ``d`` parts.
    :class:`~.exceptions.RingMismatchError`
        A coefficient does not belong to ``table``.
    """

    __slots__ = ("setup", "table", "_terms")

    setup: GrassSetup
    """The Grassmann bundle this class lives on."""

    table: chow.GeneratorTable
    """The generator table of the base, holding every coefficient."""

    _terms: t.Dict[partitions.Partition, chow.GradedElement]

    def __init__(
        self,
        setup: GrassSetup,
        table: chow.GeneratorTable,
        terms: t.Optional[t.Mapping[partitions.Partition, chow.GradedElement]] = None,
    ) -> None:
        self.setup = setup
        self.table = table
        self._terms = {}
        for mu, coeff in (terms or {}).items():
            if len(mu) > setup.d:
                raise exceptions.SupportError(
                    f"Schur term {mu} has more than d={setup.d} parts and vanishes on Gr_d(E)."
                )
            if coeff.table != table:
                raise exceptions.RingMismatchError(
                    f"The coefficient of {mu} does not belong to {table!r}."
                )
            if coeff:
                self._terms[mu] = coeff

    @classmethod
    def unit(cls, setup: GrassSetup, table: chow.GeneratorTable) -> FiberedClass:
        """Return the unit class ``1 ⊗ Δ_∅``."""
        return cls(setup, table, {_EMPTY: table.one})

    def terms(self) -> t.List[t.Tuple[partitions.Partition, chow.GradedElement]]:
        """Return the terms ordered by weight of ``μ``, then lexicographically."""
        return sorted(self._terms.items(), key=lambda item: (item[0].weight, item[0].parts))

    def coefficient(self, mu: partitions.Partition) -> chow.GradedElement:
        """Return the coefficient of ``Δ_μ(s(Q))``, zero if absent."""
        return self._terms.get(mu, self.table.zero)

    @property
    def support(self) -> t.FrozenSet[partitions.Partition]:
        return frozenset(self._terms)

    def term_degrees(self) -> t.Dict[partitions.Partition, t.Optional[int]]:
        """Return ``deg(α_μ) + |μ|`` per term, or ``None`` for terms whose coefficient is not
        homogeneous.
        """
        degrees: t.Dict[partitions.Partition, t.Optional[int]] = {}
        for mu, coeff in self._terms.items():
            degree = coeff.homogeneous_degree()
            degrees[mu] = None if degree is None else degree + mu.weight
        return degrees

    def homogeneous_degree(self) -> t.Optional[int]:
        """Return the common total degree of all terms, or ``None`` if the class is zero or of
        mixed degree.
        """
        degrees = set(self.term_degrees().values())
        if len(degrees) != 1 or None in degrees:
            return None
        return degrees.pop()

    def _check_compatible(self, other: FiberedClass) -> None:
        if other.setup != self.setup or other.table != self.table:
            raise exceptions.RingMismatchError(
                f"Cannot combine classes on {self.setup!r} over {self.table!r} and "
                f"{other.setup!r} over {other.table!r}."
            )

    def _as_pullback(self, other: chow.Operand) -> chow.GradedElement:
        return other if isinstance(other, chow.GradedElement) else self.table.scalar(other)

    def __add__(self, other: FiberedClass) -> FiberedClass:
        self._check_compatible(other)
        summed = dict(self._terms)
        for mu, coeff in other._terms.items():
            summed[mu] = summed[mu] + coeff if mu in summed else coeff
        return FiberedClass(self.setup, self.table, summed)

    def __neg__(self) -> FiberedClass:
        negated = {mu: -coeff for mu, coeff in self._terms.items()}
        return FiberedClass(self.setup, self.table, negated)

    def __sub__(self, other: FiberedClass) -> FiberedClass:
        return self + (-other)

    def __mul__(self, other: t.Union[FiberedClass, chow.Operand]) -> FiberedClass:
        if not isinstance(other, FiberedClass):
            return mul_by_pullback(self, self._as_pullback(other))

        # Only affine-linear right factors a·χ + π*α; general Schur products need
        # Littlewood-Richardson coefficients.
        self._check_compatible(other)
        other._require_affine("the right factor of a product")
        product = mul_by_pullback(self, other.coefficient(_EMPTY))
        if other.coefficient(_BOX):
            product = product + mul_by_pullback(mul_by_chi(self), other.coefficient(_BOX))
        return product

    def __rmul__(self, other: chow.Operand) -> FiberedClass:
        return mul_by_pullback(self, self._as_pullback(other))

    def __pow__(self, exponent: int) -> FiberedClass:
        return power(self, exponent)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiberedClass):
            return NotImplemented
        return (
            self.setup == other.setup
            and self.table == other.table
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.setup, self.table, frozenset(self._terms.items())))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"FiberedClass({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({coeff})⊗Δ{mu}" for mu, coeff in self.terms())

    def _require_affine(self, what: str) -> None:
        if not self.support <= {_EMPTY, _BOX}:
            outside = sorted(self.support - {_EMPTY, _BOX})
            raise exceptions.SupportError(
                f"Expected {what} to be of the form a·χ + π*α, but it has terms "
                f"{', '.join(map(str, outside))}."
            )


def chi(setup: GrassSetup, table: t.Optional[chow.GeneratorTable] = None) -> FiberedClass:
    """Return ``χ = c_1(Q)``, which equals ``1 ⊗ Δ_(1)(s(Q))`` since ``c_1 = s_1``.

    For ``d = 1`` this is the hyperplane class ``ξ`` of the projective bundle.
    """
    table = setup.base_table() if table is None else table
    return FiberedClass(setup, table, {_BOX: table.one})


def theta(setup: GrassSetup, c1E: chow.GradedElement) -> FiberedClass:
    """Return ``θ_d = χ - (d/r) c_1(E)``.

    Raises
    ------
    :class:`~.exceptions.DegreeError`
        ``c1E`` is not of degree 1.
    """
    c1E.require_degree(1, "c1(E)")
    table = c1E.table
    return FiberedClass(
        setup,
        table,
        {_BOX: table.one, _EMPTY: -c1E * utils.rational(setup.d, setup.r)},
    )


def lambda_class(setup: GrassSetup, c1E: chow.GradedElement) -> FiberedClass:
    """Return ``λ(E) = ξ - (1/r) c_1(E)`` on the projective bundle of ``E``; ``r λ(E)`` is the
    relative anticanonical class. This is ``θ_1``.

    Raises
    ------
    :class:`~.exceptions.SetupError`
        The setup is not a projective bundle (``d != 1``).
    """
    if setup.d != 1:
        raise exceptions.SetupError(
            f"λ(E) lives on the projective bundle, got d={setup.d}.", "d", setup.d
        )
    return theta(setup, c1E)


def mul_by_chi(fibered: FiberedClass) -> FiberedClass:
    """Multiply a class by ``χ``: every term ``α ⊗ Δ_μ`` becomes the sum of ``α ⊗ Δ_μ'`` over
    the partitions ``μ'`` obtained from ``μ`` by adding one box in at most ``d`` rows.
    """
    grown: t.Dict[partitions.Partition, chow.GradedElement] = {}
    for mu, coeff in fibered.terms():
        for bigger in partitions.pieri_add_box(mu, fibered.setup.d):
            grown[bigger] = grown[bigger] + coeff if bigger in grown else coeff
    return FiberedClass(fibered.setup, fibered.table, grown)


def mul_by_pullback(fibered: FiberedClass, alpha: chow.GradedElement) -> FiberedClass:
    """Multiply every coefficient of a class by a class ``α`` pulled back from the base."""
    if alpha.table != fibered.table:
        raise exceptions.RingMismatchError(
            f"Cannot pull back an element of {alpha.table!r} to {fibered.table!r}."
        )
    terms = {mu: coeff * alpha for mu, coeff in fibered.terms()}
    return FiberedClass(fibered.setup, fibered.table, terms)


def power(fibered: FiberedClass, exponent: int) -> FiberedClass:
    """Raise an affine-linear class ``a·χ + π*α`` to a nonnegative power.

    Pullbacks are central, so ``(a·χ + π*α)^N = Σ_k C(N, k) a^k α^(N-k) χ^k``; the powers of
    ``χ`` are expanded with :func:`mul_by_chi`.

    Raises
    ------
    :class:`~.exceptions.SupportError`
        The class has terms other than ``Δ_∅`` and ``Δ_(1)``.
    :class:`~.exceptions.SetupError`
        The exponent is negative.
    """
    if exponent < 0:
        raise exceptions.SetupError(
            f"Exponents must be nonnegative, got {exponent}.", "N", exponent
        )
    fibered._require_affine("the base of a power")

    a = fibered.coefficient(_BOX)
    alpha = fibered.coefficient(_EMPTY)
    setup, table = fibered.setup, fibered.table

    chi_power = FiberedClass.unit(setup, table)
    result = FiberedClass(setup, table)
    for k in range(exponent + 1):
        coeff = a**k * alpha ** (exponent - k) * math.comb(exponent, k)
        if coeff:
            result = result + mul_by_pullback(chi_power, coeff)
        if k < exponent:
            chi_power = mul_by_chi(chi_power)

    _LOGGER.debug(
        "Expanded a power %d on %r into %d Schur terms.", exponent, setup, len(result.support)
    )
    return result


def pushforward(
    fibered: FiberedClass, setup: GrassSetup, segre: chow.ClassSeries
) -> chow.GradedElement:
    """Push a class on ``Gr_d(E)`` forward to the base.

    Each term ``α ⊗ Δ_μ(s(Q))`` maps to ``α · Δ_{μ-ε}(s(E))``, where ``μ`` is padded with zeros
    to length ``d`` and the difference is taken componentwise; sequences with negative entries
    are resolved by the determinant itself. Degrees drop by ``d(r - d)``.

    Parameters
    ----------
    fibered: :class:`FiberedClass`
        The class to push forward.
    setup: :class:`GrassSetup`
        The Grassmann bundle; must be the one the class lives on.
    segre: :class:`~.chow.ClassSeries`
        The unsigned Segre series of ``E`` on the base table.

    Raises
    ------
    :class:`~.exceptions.SetupError`
        The class lives on another Grassmann bundle.
    :class:`~.exceptions.RingMismatchError`
        The Segre series belongs to another table.
    """
    if fibered.setup != setup:
        raise exceptions.SetupError(
            f"The class lives on {fibered.setup!r}, not {setup!r}.", "setup", setup
        )
    if segre.table != fibered.table:
        raise exceptions.RingMismatchError(
            f"The Segre series belongs to {segre.table!r}, not {fibered.table!r}."
        )

    table = fibered.table
    epsilon = setup.epsilon.pad(setup.d)
    result = table.zero
    for mu, coeff in fibered.terms():
        # Δ_{μ-ε} is homogeneous of degree |μ| - d(r-d); skip terms that vanish by degree.
        shifted_degree = mu.weight - setup.reldim
        if shifted_degree < 0 or shifted_degree > table.n:
            continue

        seq = [a - b for a, b in zip(mu.pad(setup.d), epsilon)]
        result = result + coeff * chow.schur_det(seq, segre)
    return result


def pushforward_chi_power_closedform(
    exponent: int, setup: GrassSetup, segre: chow.ClassSeries
) -> chow.GradedElement:
    """Return ``π_*χ^N`` from the tableau-count closed form
    ``Σ_{|λ| = N - d(r-d)} f^{λ+ε} Δ_λ(s(E))``, summing over partitions ``λ`` of length at most
    ``d``. Exponents below ``d(r - d)`` give zero, as do exponents beyond ``d(r - d) + n`` by
    truncation.
    """
    table = segre.table
    excess = exponent - setup.reldim
    if excess < 0 or excess > table.n:
        return table.zero

    epsilon = setup.epsilon
    result = table.zero
    for lam in partitions.iter_partitions(excess, setup.d):
        count = partitions.syt_count_formula(partitions.add(lam, epsilon, setup.d))
        result = result + chow.schur_det(lam.parts, segre) * count
    return result


class CoefficientIdentity(t.NamedTuple):
    """Both sides of an exact identity between rationals."""

    lhs: types_.Rational
    rhs: types_.Rational

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


class FCoefficientIdentities(t.NamedTuple):
    """The three tableau-count identities for the rectangle ε grown by one or two boxes."""

    one_box: CoefficientIdentity
    """``f^{ε+1} = (md/r) f^ε``."""

    column: CoefficientIdentity
    """``f^{ε+p(2)} = m(m+1)d(d-1)/(2r(r-1)) f^ε``; both sides are zero when ``d = 1``."""

    row: CoefficientIdentity
    """``f^{ε+2} = m(m+1)d(d+1)/(2r(r+1)) f^ε``."""


def f_coefficient_identities(setup: GrassSetup) -> FCoefficientIdentities:
    """Evaluate both sides of the tableau-count identities for ``ε + (1)``, ``ε + (1, 1)`` and
    ``ε + (2)`` exactly. Equality is for the caller to assert.
    """
    r, d, m = setup.r, setup.d, setup.m
    epsilon = setup.epsilon
    f_eps = partitions.syt_count_formula(epsilon)

    def _f_plus(lam: t.Tuple[int, ...]) -> types_.Rational:
        shape = partitions.add(partitions.Partition(lam), epsilon, d)
        return utils.rational(partitions.syt_count_formula(shape))

    one_box = CoefficientIdentity(_f_plus((1,)), utils.rational(m * d, r) * f_eps)
    column = CoefficientIdentity(
        _f_plus((1, 1)) if d >= 2 else utils.rational(0),
        utils.rational(m * (m + 1) * d * (d - 1), 2 * r * (r - 1)) * f_eps,
    )
    row = CoefficientIdentity(
        _f_plus((2,)), utils.rational(m * (m + 1) * d * (d + 1), 2 * r * (r + 1)) * f_eps
    )
    return FCoefficientIdentities(one_box, column, row)


def leray_hirsch_divisor(
    setup: GrassSetup, beta0: chow.GradedElement, beta1: chow.GradedElement
) -> FiberedClass:
    """Return the divisor class ``[Z] = χ·π*β_0 + π*β_1`` of its Leray-Hirsch decomposition.

    Raises
    ------
    :class:`~.exceptions.DegreeError`
        ``β_0`` is not of degree 0 or ``β_1`` is not of degree 1.
    """
    beta0.require_degree(0, "β0")
    beta1.require_degree(1, "β1")
    return FiberedClass(setup, beta0.table, {_BOX: beta0, _EMPTY: beta1})


def d1_polynomial_class(
    setup: GrassSetup, betas: t.Sequence[chow.GradedElement], codim: int
) -> FiberedClass:
    """Return the class ``Σ_{i=0}^{N} π*β_i · ξ^{N-i}`` of a codimension ``N`` subvariety of the
    projective bundle of ``E``.

    Parameters
    ----------
    setup: :class:`GrassSetup`
        A projective bundle setup (``d = 1``).
    betas: Sequence[:class:`~.chow.GradedElement`]
        The classes ``β_0, ..., β_N``; ``β_i`` must be of degree ``i``.
    codim: :class:`int`
        The codimension ``N``, with ``1 <= N <= r - 1``.

    Raises
    ------
    :class:`~.exceptions.SetupError`
        ``d != 1``, ``N`` is out of range, or the number of classes is not ``N + 1``.
    :class:`~.exceptions.DegreeError`
        Some ``β_i`` is not of degree ``i``.
    """
    if setup.d != 1:
        raise exceptions.SetupError(f"Expected a projective bundle, got d={setup.d}.", "d", setup.d)
    if not 1 <= codim <= setup.r - 1:
        raise exceptions.SetupError(
            f"The codimension must satisfy 1 <= N <= r-1, got N={codim}.", "N", codim
        )
    if len(betas) != codim + 1:
        raise exceptions.SetupError(
            f"Expected {codim + 1} classes β_0..β_{codim}, got {len(betas)}.", "betas", len(betas)
        )

    table = betas[0].table
    terms: t.Dict[partitions.Partition, chow.GradedElement] = {}
    for i, beta in enumerate(betas):
        terms[partitions.Partition((codim - i,))] = beta.require_degree(i, f"β{i}")
    return FiberedClass(setup, table, terms)
