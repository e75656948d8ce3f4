"""
grassmann-calculus
~~~~~~~~~~~~~~~~~~
Exact symbolic push-forward computations on Grassmann bundles: Schur determinants of Chern and
Segre classes, Pieri expansions of powers of c1(Q), tableau-count closed forms, and a
deterministic verification suite for the resulting identities.
:license: MIT, see LICENSE for more details.
"""

__version__ = "0.1.0"


from . import patterns, utils  # pyright: ignore  # TODO: explicit imports and __all__
from .chow import *
from .converter import *
from .exceptions import *
from .grassmann import *
from .ineq import *
from .params import *
from .partitions import *
from .types_ import *
from .verify import *
