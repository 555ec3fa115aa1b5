"""Characteristic cycles of highest weight Harish-Chandra modules.

Exact combinatorial computation of characteristic cycles and leading term
cycles for the simple hermitian-type groups, backed by a C++ core.
"""

from ._core import *  # noqa: F401,F403
from ._core import __all__  # noqa: F401
