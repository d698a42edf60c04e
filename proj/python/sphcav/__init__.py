"""Resonant modes of spherical cavities with wedge and cone boundaries.

Lengths are in millimetres and angles in degrees unless a name says otherwise.
"""

from ._core import *  # noqa: F401,F403
from ._core import DomainError, Error, NotFoundError  # noqa: F401

__version__ = "0.1.0"
