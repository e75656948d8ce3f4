import re
import typing as t

__all__: t.List[str] = [
    "INT",
    "RATIONAL",
    "GENERATOR",
    "MONOMIAL_FACTOR",
    "MONOMIAL_KEY",
    "PARTITION",
    "CASE_NAME",
]


INT: t.Pattern[str] = re.compile(r"[-+]?\d+")
"""A pattern that matches an integer number. Also matches a leading + or -."""

RATIONAL: t.Pattern[str] = re.compile(r"(?P<num>[-+]?\d+)(?:/(?P<den>\d*[1-9]\d*))?")
"""A pattern that matches an exact rational number written as ``p`` or ``p/q``, with ``q > 0``.
The numerator and denominator are captured as ``num`` and ``den``.
"""

GENERATOR: t.Pattern[str] = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
"""A pattern that matches a generator name, e.g. ``c1``, ``b0`` or ``H``."""

MONOMIAL_FACTOR: t.Pattern[str] = re.compile(
    r"(?P<name>[A-Za-z][A-Za-z0-9_]*)(?:\^(?P<exp>[1-9]\d*))?"
)
"""A pattern that matches a single factor of a monomial key: a generator name, optionally
followed by ``^`` and a positive exponent.
"""

MONOMIAL_KEY: t.Pattern[str] = re.compile(
    r"1|[A-Za-z][A-Za-z0-9_]*(?:\^[1-9]\d*)?(?:\*[A-Za-z][A-Za-z0-9_]*(?:\^[1-9]\d*)?)*"
)
"""A pattern that matches a canonical monomial key such as ``b0*c1^2`` or ``H^2``. The unit
monomial is written ``1``.
"""

PARTITION: t.Pattern[str] = re.compile(r"\[\s*(?:\d+(?:\s*,\s*\d+)*)?\s*\]")
"""A pattern that matches a partition literal written as a JSON array of integers, e.g.
``[3,1]`` or ``[]``. Ordering is validated on conversion, not by the pattern.
"""

CASE_NAME: t.Pattern[str] = re.compile(r"[a-z][a-z0-9]*(?:-[a-z0-9]+)*")
"""A pattern that matches a verification case name, e.g. ``delta`` or ``f-identities``."""
