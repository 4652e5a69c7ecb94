"""Multi-photon waveguide-array simulation in the pseudo-energy representation."""

from ._focklat import *  # noqa: F401,F403
from ._focklat import __version__  # noqa: F401
