# SPDX-FileCopyrightText: Copyright (c) 2026 the chtr authors
# SPDX-License-Identifier: Apache-2.0
"""LTE uplink pilot-grid channel sounding.

Simulates the uplink reference-signal grid over a flat Rayleigh fading
channel, estimates the channel per pilot resource element, captures the
estimates in the fixed-point .chtr trace container and evaluates one-step
channel prediction against a Wiener-filter bound.
"""

from chtr._core import *  # noqa: F401,F403
from chtr._core import __version__  # noqa: F401
