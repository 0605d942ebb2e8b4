"""Alternation-free hypergraphs: freeness checks, induced 0/1 pattern search,
proper colorings, shallow hitting sets, and extremal constructions."""

from ._altfree import *  # noqa: F401,F403
from ._altfree import __doc__  # noqa: F401
