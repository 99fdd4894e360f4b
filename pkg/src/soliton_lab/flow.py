"""Ricci flow ``dg/dt = -2 rho(g)`` on a fixed bracket structure.

The metric evolves as a symmetric matrix while the structure constants stay
put.  Integration is classical fixed-step RK4 in floating point.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Any, TextIO

import numpy as np

from .core import MetricLieAlgebra
from .curvature import curvature
from .scalars import FLOAT

__all__ = ["FlowTrajectory", "ricci_rhs", "integrate", "self_similarity_check", "trajectory_csv",
           "write_trajectory_csv"]


@dataclass
class FlowTrajectory:
    times: list[float]
    metrics: list[np.ndarray]
    taus: list[float]
    signatures: list[tuple[int, int]]
    step: float
    degenerated: bool = False
    message: str = ""
    diagnostics: dict[str, Any] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.times)

    def to_dict(self) -> dict[str, Any]:
        return {"times": self.times, "taus": self.taus,
                "metrics": [m.tolist() for m in self.metrics],
                "signatures": [list(s) for s in self.signatures], "step": self.step,
                "degenerated": self.degenerated, "message": self.message}


def _signature(g: np.ndarray) -> tuple[int, int]:
    w = np.linalg.eigvalsh(g)
    tol = 1e-12 * max(1.0, float(np.max(np.abs(w))))
    return int(np.sum(w > tol)), int(np.sum(w < -tol))


def ricci_rhs(c: np.ndarray, g: np.ndarray) -> tuple[np.ndarray, float]:
    """``-2 rho`` and ``tau`` of the metric ``g`` on brackets ``c``."""
    pkg = curvature(MetricLieAlgebra(c, g, FLOAT))
    rho = np.asarray(pkg.rho, dtype=float)
    return -(rho + rho.T), float(pkg.tau)


def integrate(a: MetricLieAlgebra, T: float, h: float, det_tol: float = 1e-10) -> FlowTrajectory:
    """RK4 from ``g(0) = a.g`` up to time ``T`` with step ``h``.

    Stops early with ``degenerated=True`` if the signature changes or
    ``|det g|`` drops below ``det_tol`` times its initial value.
    """
    if T < 0 or h <= 0:
        raise ValueError("need T >= 0 and h > 0")
    c = np.asarray(a.c, dtype=float)
    g = np.asarray(a.g, dtype=float).copy()
    steps = int(round(T / h))
    if abs(steps * h - T) > 1e-9 * max(1.0, T):
        raise ValueError(f"horizon {T} is not a multiple of the step {h}")
    sig0 = _signature(g)
    det0 = abs(np.linalg.det(g))
    k1, tau = ricci_rhs(c, g)
    traj = FlowTrajectory([0.0], [g.copy()], [tau], [sig0], h)
    for s in range(1, steps + 1):
        try:
            k2, _ = ricci_rhs(c, g + 0.5 * h * k1)
            k3, _ = ricci_rhs(c, g + 0.5 * h * k2)
            k4, _ = ricci_rhs(c, g + h * k3)
        except (ValueError, np.linalg.LinAlgError):
            traj.degenerated, traj.message = True, f"degeneration at t={s * h:.6g}: singular stage metric"
            break
        g = g + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
        g = 0.5 * (g + g.T)
        if not np.all(np.isfinite(g)):
            traj.degenerated, traj.message = True, f"non-finite metric at t={s * h:.6g}"
            break
        sig = _signature(g)
        if sig != sig0 or abs(np.linalg.det(g)) < det_tol * det0:
            traj.degenerated, traj.message = True, f"degeneration at t={s * h:.6g}: signature {sig}"
            break
        k1, tau = ricci_rhs(c, g)
        traj.times.append(s * h)
        traj.metrics.append(g.copy())
        traj.taus.append(tau)
        traj.signatures.append(sig)
    return traj


def self_similarity_check(traj: FlowTrajectory, c: Any) -> float:
    """``max |tau(t)(1 - 2ct) - tau_0| / max(1, |tau_0|)`` along the trajectory."""
    c = float(c)
    tau0 = traj.taus[0]
    dev = max(abs(tau * (1 - 2 * c * t) - tau0) for t, tau in zip(traj.times, traj.taus))
    return dev / max(1.0, abs(tau0))


def write_trajectory_csv(traj: FlowTrajectory, out: TextIO) -> None:
    n = traj.metrics[0].shape[0]
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["t", "tau"] + [f"g_{i + 1}{j + 1}" for i in range(n) for j in range(n)])
    for t, tau, g in zip(traj.times, traj.taus, traj.metrics):
        w.writerow([f"{t:.12g}", repr(float(tau))] + [repr(float(x)) for x in g.flat])


def trajectory_csv(traj: FlowTrajectory) -> str:
    buf = io.StringIO()
    write_trajectory_csv(traj, buf)
    return buf.getvalue()
