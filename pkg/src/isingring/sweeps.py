"""Parameter sweeps over field, temperature and ring size.

A sweep evaluates one quantity on a grid of ``B`` (and optionally ``T``)
values and returns a table whose rows follow the grid order: ``B`` outer,
``T`` inner. Every grid point is computed independently, so the table does
not depend on how many worker processes are used.
"""
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from . import bell, measures, thermal
from .bell import OptimizerConfig
from .errors import IsingRingError
from .linalg import partial_trace
from .model import RingParams, ground_state

QUANTITIES = (
    "negativity",
    "tripartite-negativity",
    "n-concurrence",
    "svetlichny",
    "spectrum",
    "magnetization",
    "thermal-svetlichny",
)


class SweepError(IsingRingError):
    """Invalid sweep specification."""


@dataclass(frozen=True)
class GridRange:
    start: float
    stop: float
    steps: int

    def __post_init__(self):
        if int(self.steps) != self.steps or self.steps < 2:
            raise SweepError(f"range needs at least 2 steps, got {self.steps}")
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise SweepError("range bounds must be finite")
        if not self.start < self.stop:
            raise SweepError(f"range start {self.start} must be below stop {self.stop}")

    @classmethod
    def parse(cls, text):
        """Parse ``start:stop:steps``; both endpoints are included."""
        parts = text.split(":")
        if len(parts) != 3:
            raise SweepError(f"range {text!r} is not of the form start:stop:steps")
        try:
            start, stop = float(parts[0]), float(parts[1])
            steps = int(parts[2])
        except ValueError:
            raise SweepError(f"range {text!r} has non-numeric fields") from None
        return cls(start, stop, steps)

    def values(self):
        return np.linspace(self.start, self.stop, self.steps)


@dataclass(frozen=True)
class SweepSpec:
    quantity: str
    n: int
    j: float
    b_range: GridRange
    t_range: Optional[GridRange] = None
    output: Optional[str] = None
    format: str = "csv"

    def __post_init__(self):
        q, n = self.quantity, self.n
        if q not in QUANTITIES:
            raise SweepError(f"unknown quantity {q!r}; choose from {', '.join(QUANTITIES)}")
        if self.format not in ("csv", "svg"):
            raise SweepError(f"format must be csv or svg, got {self.format!r}")
        try:
            RingParams(n, self.j, max(self.b_range.start, 0.0))
        except IsingRingError as exc:
            raise SweepError(str(exc)) from None
        if self.b_range.start < 0:
            raise SweepError("field values must be non-negative")
        if q == "tripartite-negativity" and n != 3:
            raise SweepError("tripartite-negativity requires n = 3")
        if q == "n-concurrence" and n % 2:
            raise SweepError("n-concurrence requires an even n")
        if q == "thermal-svetlichny" and self.t_range is None:
            raise SweepError("thermal-svetlichny requires a temperature range")
        if q in ("svetlichny", "spectrum") and self.t_range is not None:
            raise SweepError(f"{q} is a zero-temperature quantity; drop the temperature range")
        if self.t_range is not None and self.t_range.start <= 0:
            raise SweepError("temperatures must be positive")

    @property
    def header(self):
        if self.quantity == "spectrum":
            return ["b", "j", "n", "level", "value"]
        if self.t_range is not None:
            return ["b", "t", "j", "n", "value"]
        return ["b", "j", "n", "value"]

    def points(self):
        bs = self.b_range.values()
        ts = self.t_range.values() if self.t_range is not None else [None]
        return [(float(b), None if t is None else float(t)) for b in bs for t in ts]


def _state(p, t):
    return ground_state(p) if t is None else thermal.thermal_state(p, t)


def point_value(quantity, n, j, b, t=None, cfg: Optional[OptimizerConfig] = None):
    """Value of ``quantity`` for one ring at field ``b`` and temperature ``t``.

    ``t=None`` means the ground state. ``negativity`` on rings larger than two
    spins refers to the reduced state of sites 1 and 2.
    """
    p = RingParams(n, j, b)
    if quantity == "spectrum":
        return thermal.energy_spectrum(p)
    rho = _state(p, t)
    if quantity == "negativity":
        pair = rho if n == 2 else partial_trace(rho, {1, 2})
        return measures.negativity(pair, {1})
    if quantity == "tripartite-negativity":
        return measures.tripartite_negativity(rho)
    if quantity == "n-concurrence":
        return measures.n_concurrence(rho)
    if quantity == "magnetization":
        return thermal.magnetization(rho)
    if quantity in ("svetlichny", "thermal-svetlichny"):
        return bell.optimize(bell.svetlichny_polynomial(n), rho, cfg).value
    raise SweepError(f"unknown quantity {quantity!r}")


def _point_job(args):
    return point_value(*args)


def compute_sweep(spec: SweepSpec, cfg: Optional[OptimizerConfig] = None,
                  workers: int = 1) -> Tuple[List[str], List[tuple]]:
    """Evaluate ``spec`` and return ``(header, rows)`` in grid order."""
    cfg = cfg or OptimizerConfig()
    points = spec.points()
    jobs = [(spec.quantity, spec.n, spec.j, b, t, cfg) for b, t in points]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(_point_job, jobs))
    else:
        values = [_point_job(job) for job in jobs]

    rows = []
    for (b, t), value in zip(points, values):
        if spec.quantity == "spectrum":
            rows += [(b, spec.j, spec.n, level, float(e)) for level, e in enumerate(value)]
        elif t is None:
            rows.append((b, spec.j, spec.n, float(value)))
        else:
            rows.append((b, t, spec.j, spec.n, float(value)))
    return spec.header, rows
