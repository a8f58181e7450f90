"""Stable JSON/CSV serialization helpers.

All numerics serialize as decimal strings (big integers exceed native
JSON number ranges; ball values carry a value/radius/bits triple), keys
are emitted sorted, so identical inputs produce byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json

import mpmath

from .balls import RealBall
from .bounds import BoundReport
from .roots import RootSet


def ball_to_json(ball: RealBall) -> dict:
    digits = max(17, int(ball.prec * 0.30103) + 2)
    return {
        "bits": ball.prec,
        "radius": mpmath.nstr(ball.rad, 8, min_fixed=1, max_fixed=0),
        "value": mpmath.nstr(ball.mid, digits, min_fixed=1, max_fixed=0),
    }


def complex_ball_to_json(ball) -> dict:
    digits = max(17, int(ball.prec * 0.30103) + 2)
    return {
        "bits": ball.prec,
        "imag": mpmath.nstr(ball.mid.imag, digits, min_fixed=1, max_fixed=0),
        "radius": mpmath.nstr(ball.rad, 8, min_fixed=1, max_fixed=0),
        "real": mpmath.nstr(ball.mid.real, digits, min_fixed=1, max_fixed=0),
    }


def rootset_to_json(rs: RootSet) -> dict:
    return {
        "dominant": ball_to_json(rs.dominant),
        "k": rs.k,
        "roots": [complex_ball_to_json(r) for r in rs.roots],
    }


def bound_report_to_json(report: BoundReport) -> dict:
    return {
        "M": str(report.M),
        "N": str(report.N),
        "a": ball_to_json(report.a),
        "b": ball_to_json(report.b),
        "c": ball_to_json(report.c),
        "c1": ball_to_json(report.c1),
        "c2": ball_to_json(report.c2),
        "c3": ball_to_json(report.c3),
        "d": report.d,
        "k": report.k,
        "lambda": ball_to_json(report.lam),
        "precision_bits": report.precision_bits,
        "rounding": "outward-ball",
    }


def json_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def csv_dumps(rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()
