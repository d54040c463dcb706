"""Deterministic text renderings of study results.

All floating-point values are formatted with 17 significant digits so that
identical configurations produce byte-identical artifacts.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .stats import Histogram, SpacingMeasure, Spectrum


def fmt_num(value) -> str:
    """Fixed formatting: ints verbatim, everything else %.17g of the float."""
    if isinstance(value, bool):
        raise TypeError("bool is not a CSV value")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return f"{float(value):.17g}"


def spectrum_csv(spectrum: Spectrum) -> str:
    """One eigenvalue per line, no header."""
    return "\n".join(fmt_num(v) for v in spectrum.values) + "\n"


def spacing_csv(measure: SpacingMeasure) -> str:
    lines = ["location,mass"]
    for loc, mass in measure.atoms:
        lines.append(f"{fmt_num(loc)},{fmt_num(mass)}")
    return "\n".join(lines) + "\n"


def histogram_csv(hist: Histogram) -> str:
    lines = ["bin_center,density"]
    for center, density in hist.bins:
        lines.append(f"{fmt_num(center)},{fmt_num(density)}")
    return "\n".join(lines) + "\n"


def rows_csv(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(fmt_num(v) for v in row))
    return "\n".join(lines) + "\n"


def sparsity_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
