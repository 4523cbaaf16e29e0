"""JSON report assembly. Big integers are written as decimal strings."""

from __future__ import annotations

import json
from importlib import resources
from typing import Optional

from .core.types import RankingSet, SlaterSpectrum
from .inference import DegenerateSummary, PosteriorSummary, degree_of_linearity, thresholds
from .io import MatrixFile

SCHEMA_VERSION = "1.0"


def load_schema() -> dict:
    return json.loads(resources.files("rankability").joinpath("schemas/report.v1.json").read_text())


def _sign(x: Optional[float]) -> Optional[int]:
    if x is None:
        return None
    return (x > 0) - (x < 0)


def input_block(mf: MatrixFile) -> dict:
    return {"path": mf.path, "m": mf.matrix.m, "t": mf.matrix.t, "labels": list(mf.display_labels())}


def summary_block(summary: PosteriorSummary) -> dict:
    return {
        "z": summary.z,
        "mode": summary.mode,
        "mode_status": summary.mode_status.value,
        "mean": summary.mean,
        "sigma": summary.sigma,
        "sigma_sign": _sign(summary.sigma),
        "lambda": summary.lambda_,
        "s_hat": summary.s_hat,
        "t": summary.t,
        "diagnostics": list(summary.diagnostics),
    }


def degenerate_block(deg: Optional[DegenerateSummary]) -> Optional[dict]:
    if deg is None:
        return None
    return {
        "mean_tilde": deg.mean_tilde,
        "sigma_tilde": deg.sigma_tilde,
        "s_th": deg.s_th,
        "lambda_th": deg.lambda_th,
        "z_tilde": deg.z_tilde,
    }


def rankings_block(rankings: RankingSet, labels, max_list: Optional[int]) -> dict:
    ordered = sorted(rankings)
    listed = ordered if max_list is None else ordered[:max_list]
    return {
        "count": str(len(rankings)),
        "listed": [[labels[i] for i in r] for r in listed],
        "truncated": len(listed) < len(ordered),
    }


def analysis_report(command: str, mf: MatrixFile, *, s_hat: int,
                    spectrum: Optional[SlaterSpectrum] = None,
                    summary: Optional[PosteriorSummary] = None,
                    degenerate: Optional[DegenerateSummary] = None,
                    rankings: Optional[RankingSet] = None,
                    max_list: Optional[int] = None) -> dict:
    t = mf.matrix.t
    if spectrum is not None:
        a_s = spectrum.a_s_hat
    elif rankings is not None:
        a_s = len(rankings)
    else:
        a_s = None
    th = None
    if t >= 1:
        s_th, lam_th = thresholds(t)
        th = {"s_th": s_th, "lambda_th": lam_th}
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "input": input_block(mf),
        "spectrum": spectrum.to_string() if spectrum is not None else None,
        "s_hat": s_hat,
        "a_s_hat": str(a_s) if a_s is not None else None,
        "lambda": degree_of_linearity(s_hat, t) if t >= 1 else None,
        "thresholds": th,
        "summary": summary_block(summary) if summary is not None else None,
        "degenerate": degenerate_block(degenerate),
        "rankings": rankings_block(rankings, mf.display_labels(), max_list) if rankings is not None else None,
    }
