"""Deterministic head-mouse simulator.

Emulates the sensor, tilt-to-cursor mapping, pedal debouncing, and HID
report generation of an Arduino head-mouse, and replays recorded traces
bit-reproducibly. Everything lives in the compiled `_core` extension.
"""

from headmouse._core import *  # noqa: F401,F403
from headmouse._core import __doc__  # noqa: F401

__version__ = "0.1.0"
