"""Sparse-correlation graph filtrations, Betti-0 curves and jackknife
rank-sum group comparison."""

from ._core import *  # noqa: F401,F403
from ._core import __version__, SparsephError  # noqa: F401
