# SPDX-License-Identifier: Apache-2.0
"""Fractional moduli of smoothness of trigonometric polynomials."""

from ._fracmod import *  # noqa: F401,F403
from ._fracmod import FracmodError, TrigPoly

__all__ = [name for name in dir() if not name.startswith("_")]
