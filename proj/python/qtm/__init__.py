"""Python facade over the compiled two-qubit thermal machine core."""

from ._qtm import *  # noqa: F401,F403
from ._qtm import __doc__  # noqa: F401
