"""Time sources for solver budgets.

``WallClock`` reads the monotonic clock.  ``WorkClock`` counts units of work
reported by the engines and converts them to virtual seconds, so budgets and
reported times are identical from run to run.
"""
from __future__ import annotations

import time


class WallClock:
    deterministic = False

    def __init__(self):
        self._t0 = time.monotonic()

    def now(self) -> float:
        return time.monotonic() - self._t0

    def tick(self, units: int = 1) -> None:
        pass


class WorkClock:
    deterministic = True

    def __init__(self, seconds_per_unit: float = 1e-4):
        self.unit = seconds_per_unit
        self.units = 0

    def now(self) -> float:
        return self.units * self.unit

    def tick(self, units: int = 1) -> None:
        self.units += units


class Deadline:
    """A budget measured on a clock, starting now."""

    def __init__(self, clock, seconds=None):
        self.clock = clock
        self.start = clock.now()
        self.seconds = seconds

    def elapsed(self) -> float:
        return self.clock.now() - self.start

    def expired(self) -> bool:
        return self.seconds is not None and self.elapsed() > self.seconds
