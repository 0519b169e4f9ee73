"""Equivariant Pieri resolutions, Betti tables and their decompositions."""

from _pieri import *  # noqa: F401,F403
