from __future__ import annotations

import enum
import sys
import typing as t

__all__ = [
    "TypeAlias",
    "Rational",
    "Monomial",
    "OutputFormat",
    "Status",
    "CaseName",
]

if sys.version_info >= (3, 10):
    from typing import TypeAlias
else:
    from typing_extensions import TypeAlias


Rational: TypeAlias = t.Any
"""An exact rational number: an element of sympy's ``QQ`` domain. Depending on the installed
ground types this is either ``PythonMPQ`` or ``gmpy2.mpq``; both support exact arithmetic with
:class:`int` and with each other.
"""

Monomial: TypeAlias = t.Tuple[int, ...]
"""An exponent vector over the generators of a :class:`~.chow.GeneratorTable`, in declaration
order.
"""


class OutputFormat(str, enum.Enum):
    """A string enum that contains all supported output formats."""

    JSON = "json"
    """Machine-readable JSON with sorted keys."""

    TABLE = "table"
    """A plain-text table for human consumption."""


class Status(str, enum.Enum):
    """The outcome of a single verification case."""

    PASS = "pass"
    """Every residual is exactly zero."""

    FAIL = "fail"
    """At least one residual is nonzero."""


class CaseName(str, enum.Enum):
    """A string enum that contains the names of all registered verification cases, in the
    order in which the suite runs them.
    """

    SYT = "syt"
    """Standard Young tableau counts: formula, hook product, brute force and recursion."""

    INVERSION = "inversion"
    """Inversion of a generic total Chern class: c · (1/c) = 1."""

    DUALITY = "duality"
    """Duality between conjugate Schur determinants of c(E) and s(E)."""

    F_IDENTITIES = "f-identities"
    """Ratios of tableau counts of ε plus one or two boxes."""

    F1F2 = "f1f2"
    """Push-forwards of χ^(m-1), χ^m and χ^(m+1) on a surface."""

    COROLLARY = "corollary"
    """Pieri route against the closed form for π_*χ^N."""

    SEGRE = "segre"
    """Projective bundle identity π_*ξ^(r-1+i) = s_i(E)."""

    DELTA = "delta"
    """The discriminant push-forward of θ^m · [Z] and the vanishing of its β₁ part."""

    CLASSICAL = "classical"
    """The classical specialization of the H-nef Segre inequality expression."""
