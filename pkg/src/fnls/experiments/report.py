"""Experiment reports: raw series, log-log fits and pass/fail bookkeeping."""

import csv
import os
from dataclasses import dataclass, field

import numpy as np


def loglog_fit(x, y):
    """Least-squares slope/intercept of log y vs log x with residual.

    Returns (slope, intercept, residual) where residual is the RMS of the
    log-domain misfit. Requires at least 3 points.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.size < 3:
        raise ValueError("log-log fit needs at least 3 points")
    lx, ly = np.log(x), np.log(y)
    A = np.vstack([lx, np.ones_like(lx)]).T
    (slope, intercept), res, *_ = np.linalg.lstsq(A, ly, rcond=None)
    rms = float(np.sqrt(res[0] / x.size)) if res.size else float(
        np.sqrt(np.mean((A @ [slope, intercept] - ly) ** 2))
    )
    return float(slope), float(intercept), rms


@dataclass
class ExperimentReport:
    name: str
    inputs: dict = field(default_factory=dict)
    series: list = field(default_factory=list)  # list of row dicts
    fits: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)  # name -> bool
    notes: list = field(default_factory=list)

    @property
    def passed(self):
        return all(self.checks.values()) if self.checks else True

    def add_row(self, **row):
        self.series.append(row)

    def summary_lines(self):
        lines = [f"experiment: {self.name}"]
        for k in sorted(self.inputs):
            lines.append(f"input {k} = {self.inputs[k]}")
        for k in sorted(self.fits):
            lines.append(f"fit {k} = {self.fits[k]:.6g}")
        for k, ok in self.checks.items():
            lines.append(f"check {k}: {'PASS' if ok else 'FAIL'}")
        for note in self.notes:
            lines.append(f"note: {note}")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return lines

    def write(self, outdir):
        os.makedirs(outdir, exist_ok=True)
        if self.series:
            keys = list(self.series[0].keys())
            with open(os.path.join(outdir, "report.csv"), "w", newline="") as fh:
                writer = csv.DictWriter(fh, fieldnames=keys)
                writer.writeheader()
                writer.writerows(self.series)
        with open(os.path.join(outdir, "summary.txt"), "w") as fh:
            fh.write("\n".join(self.summary_lines()) + "\n")
