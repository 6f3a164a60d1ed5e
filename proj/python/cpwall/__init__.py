# Copyright 2026 The cpwall Authors
# SPDX-License-Identifier: Apache-2.0
"""Atom-wall dispersion potential engine."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

__version__ = "0.1.0"
