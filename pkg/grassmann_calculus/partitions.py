from __future__ import annotations

import functools
import itertools
import math
import typing as t

from sympy.utilities.iterables import partitions as _integer_partitions

from . import exceptions

__all__ = [
    "LIMITS",
    "Partition",
    "weight",
    "conjugate",
    "rectangle",
    "add",
    "pieri_add_box",
    "remove_box",
    "iter_partitions",
    "syt_count_formula",
    "syt_count_hook",
    "syt_count_bruteforce",
]


class LIMITS:
    """A configuration namespace for the tunable limits of the combinatorial engine."""

    SYT_BRUTEFORCE_CAP = 12
    """The largest weight for which :func:`syt_count_bruteforce` enumerates labelings. Shapes of
    this size enumerate in well under a second; larger shapes should use the formula.
    """


@functools.total_ordering
class Partition(t.Sequence[int]):
    """A weakly decreasing sequence of positive integers.

    Partitions are stored without trailing zeros, so every partition has exactly one
    representation and can be used as a mapping key. Trailing zeros passed to the constructor
    are stripped; padding is always explicit (see :meth:`pad`).

    Partitions order lexicographically by their parts, which is the order used for every
    deterministic listing in this package.

    Parameters
    ----------
    parts: Iterable[:class:`int`]
        The parts of the partition, largest first.

    Raises
    ------
    :class:`~.exceptions.PartitionError`
        The parts are negative or not weakly decreasing.
    """

    __slots__ = ("_parts",)

    _parts: t.Tuple[int, ...]

    def __init__(self, parts: t.Iterable[int] = ()) -> None:
        data = tuple(int(part) for part in parts)
        if any(part < 0 for part in data):
            raise exceptions.PartitionError(f"Partition parts must be nonnegative: {data}.", data)

        if any(a < b for a, b in zip(data, data[1:])):
            raise exceptions.PartitionError(f"Partition parts must not increase: {data}.", data)

        end = len(data)
        while end and data[end - 1] == 0:
            end -= 1
        self._parts = data[:end]

    @property
    def parts(self) -> t.Tuple[int, ...]:
        """The parts of this partition, without trailing zeros."""
        return self._parts

    @property
    def weight(self) -> int:
        """The number of boxes of the Young diagram, i.e. the sum of the parts."""
        return sum(self._parts)

    def pad(self, length: int) -> t.Tuple[int, ...]:
        """Return the parts padded with zeros to the given length.

        Raises
        ------
        :class:`~.exceptions.PartitionError`
            The partition is longer than ``length``.
        """
        if length < len(self._parts):
            raise exceptions.PartitionError(
                f"Cannot pad a partition of length {len(self._parts)} to length {length}.",
                self._parts,
            )
        return self._parts + (0,) * (length - len(self._parts))

    def __len__(self) -> int:
        return len(self._parts)

    @t.overload
    def __getitem__(self, index: int) -> int:
        ...

    @t.overload
    def __getitem__(self, index: slice) -> t.Tuple[int, ...]:
        ...

    def __getitem__(self, index: t.Union[int, slice]) -> t.Union[int, t.Tuple[int, ...]]:
        return self._parts[index]

    def __iter__(self) -> t.Iterator[int]:
        return iter(self._parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self._parts == other._parts

    def __lt__(self, other: Partition) -> bool:
        return self._parts < other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"Partition({self._parts})"

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self._parts)) + "]"


def weight(partition: Partition) -> int:
    """Return the weight |λ| of a partition."""
    return partition.weight


def conjugate(partition: Partition) -> Partition:
    """Return the conjugate partition: the column lengths of the Young diagram.

    Conjugation is an involution; the conjugate of a one-row partition ``(k)`` is the column
    of ``k`` ones.
    """
    if not partition:
        return Partition()
    return Partition(
        sum(1 for part in partition if part > column) for column in range(partition[0])
    )


def rectangle(rows: int, entry: int) -> Partition:
    """Return the partition with ``rows`` parts all equal to ``entry``.

    With ``rows = d`` and ``entry = r - d`` this is the rectangle ε of the Grassmann bundle
    push-forward. A zero ``entry`` yields the empty partition.

    Raises
    ------
    :class:`~.exceptions.SetupError`
        ``rows`` is not positive, or ``entry`` is negative.
    """
    if rows < 1:
        raise exceptions.SetupError(
            f"A rectangle needs at least one row, got {rows}.", "rows", rows
        )
    if entry < 0:
        raise exceptions.SetupError(
            f"Rectangle entries must be nonnegative, got {entry}.", "entry", entry
        )
    return Partition((entry,) * rows)


def add(first: Partition, second: Partition, pad_to: int) -> Partition:
    """Add two partitions componentwise after padding both with zeros to length ``pad_to``.

    Parameters
    ----------
    first: :class:`Partition`
        The first summand, e.g. λ.
    second: :class:`Partition`
        The second summand, e.g. the rectangle ε.
    pad_to: :class:`int`
        The common length to pad to; must be at least the length of both operands.

    Raises
    ------
    :class:`~.exceptions.PartitionError`
        An operand is longer than ``pad_to``, or the componentwise sum is not weakly
        decreasing.

    Returns
    -------
    :class:`Partition`
        The canonicalized componentwise sum.
    """
    total = tuple(a + b for a, b in zip(first.pad(pad_to), second.pad(pad_to)))
    if any(a < b for a, b in zip(total, total[1:])):
        raise exceptions.PartitionError(
            f"The sum of {first} and {second} is not a partition: {list(total)}.", total
        )
    return Partition(total)


def pieri_add_box(partition: Partition, max_rows: int) -> t.List[Partition]:
    """Return every partition obtained by adding a single box to ``partition`` while keeping
    at most ``max_rows`` rows, in lexicographically decreasing order.

    Raises
    ------
    :class:`~.exceptions.PartitionError`
        The partition already has more than ``max_rows`` rows.
    """
    parts = partition.pad(max_rows)
    grown: t.List[Partition] = []
    for row in range(max_rows):
        if row == 0 or parts[row - 1] > parts[row]:
            grown.append(Partition(parts[:row] + (parts[row] + 1,) + parts[row + 1 :]))
    return grown


def remove_box(partition: Partition) -> t.List[Partition]:
    """Return every partition obtained by removing one removable corner from ``partition``, in
    lexicographically decreasing order. The empty partition has no corners.
    """
    parts = partition.parts
    shrunk: t.List[Partition] = []
    for row in reversed(range(len(parts))):
        if row == len(parts) - 1 or parts[row] > parts[row + 1]:
            shrunk.append(Partition(parts[:row] + (parts[row] - 1,) + parts[row + 1 :]))
    return shrunk


def iter_partitions(weight: int, max_length: t.Optional[int] = None) -> t.List[Partition]:
    """Return all partitions of ``weight`` with at most ``max_length`` parts, in
    lexicographically decreasing order.

    The empty partition is the only partition of weight zero.
    """
    if weight < 0 or (weight > 0 and max_length is not None and max_length < 1):
        return []
    if weight == 0:
        return [Partition()]

    found = [
        Partition(
            itertools.chain.from_iterable(
                itertools.repeat(part, count)
                for part, count in sorted(multiplicities.items(), reverse=True)
            )
        )
        for multiplicities in _integer_partitions(weight, m=max_length)
    ]
    return sorted(found, reverse=True)


def syt_count_formula(partition: Partition) -> int:
    """Count the standard Young tableaux of a shape with the Frobenius determinant formula.

    With ``q`` the length of λ and shifted parts ``l_i = λ_i + q - i``, the count is
    ``|λ|! / (l_1! ... l_q!) * prod_{i<j} (l_i - l_j)``. Shapes of length at most one (the
    empty partition included) have exactly one tableau.
    """
    q = len(partition)
    if q <= 1:
        return 1

    shifted = [part + q - 1 - row for row, part in enumerate(partition)]
    numerator = math.factorial(partition.weight) * math.prod(
        a - b for a, b in itertools.combinations(shifted, 2)
    )
    return numerator // math.prod(math.factorial(value) for value in shifted)


def syt_count_hook(partition: Partition) -> int:
    """Count the standard Young tableaux of a shape with the hook length formula."""
    columns = conjugate(partition)
    hooks = math.prod(
        (part - column) + (columns[column] - row) - 1
        for row, part in enumerate(partition)
        for column in range(part)
    )
    return math.factorial(partition.weight) // hooks


def syt_count_bruteforce(partition: Partition, cap: t.Optional[int] = None) -> int:
    """Count the standard Young tableaux of a shape by exhaustive placement.

    The labels ``1..|λ|`` are placed one at a time, each into a cell that keeps the filled
    region a Young diagram inside λ; every complete placement is one tableau.

    Parameters
    ----------
    partition: :class:`Partition`
        The shape to count tableaux of.
    cap: Optional[:class:`int`]
        The largest weight that may be enumerated. Defaults to
        :attr:`LIMITS.SYT_BRUTEFORCE_CAP`.

    Raises
    ------
    :class:`~.exceptions.PartitionError`
        The weight of the shape exceeds the cap.
    """
    cap = LIMITS.SYT_BRUTEFORCE_CAP if cap is None else cap
    if partition.weight > cap:
        raise exceptions.PartitionError(
            f"Refusing to enumerate tableaux of {partition}: weight {partition.weight} exceeds "
            f"the cap of {cap}.",
            partition.parts,
        )

    target = partition.parts

    def _count(filled: t.Tuple[int, ...]) -> int:
        if filled == target:
            return 1

        total = 0
        for row, length in enumerate(filled):
            if length < target[row] and (row == 0 or filled[row - 1] > length):
                total += _count(filled[:row] + (length + 1,) + filled[row + 1 :])
        return total

    return _count((0,) * len(target))
