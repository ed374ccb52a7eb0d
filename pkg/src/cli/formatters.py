"""Rendering results for the command line."""

import csv
import io
import json
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence

from ..arith.rational import format_decimal, format_rational
from ..models.convergence import ConvergenceReport, PairedEstimate
from ..models.enums import OutputKind
from ..models.output_format import OutputFormat
from ..models.weight_vector import WeightVector


class ResultFormatter:
    """Render values in the configured output format.

    Exact text and CSV show rationals as "p/q"; JSON keeps them as strings
    so they reparse exactly, and reals as numbers. With ``decimal`` set,
    rationals are shown as decimals everywhere.
    """

    def __init__(self, output: OutputFormat, decimal: bool = False):
        self.output = output
        self.decimal = decimal

    @property
    def kind(self) -> OutputKind:
        return self.output.kind

    def text(self, value: Any) -> str:
        """One value as text."""
        if value is None:
            return ""
        if isinstance(value, Fraction):
            if self.decimal:
                return format_decimal(value, self.output.decimal_digits)
            return format_rational(value)
        if isinstance(value, float):
            return format_decimal(value, self.output.decimal_digits)
        return str(value)

    def json_value(self, value: Any) -> Any:
        """One value as a JSON-ready object."""
        if isinstance(value, Fraction):
            return float(value) if self.decimal else format_rational(value)
        if isinstance(value, (list, tuple)):
            return [self.json_value(item) for item in value]
        if isinstance(value, dict):
            return {key: self.json_value(item) for key, item in value.items()}
        return value

    def line(self, values: Iterable[Any]) -> str:
        return " ".join(self.text(value) for value in values)

    def dumps(self, data: Dict[str, Any]) -> str:
        return json.dumps(self.json_value(data), indent=2)

    def table(self, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
        """CSV with a header row."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([self.text(value) for value in row])
        return buffer.getvalue().rstrip("\n")


def render_corrections(
    formatter: ResultFormatter,
    alpha: Fraction,
    m: int,
    c: Sequence[Fraction],
    b: Optional[Sequence[Fraction]] = None
) -> str:
    if formatter.kind is OutputKind.JSON:
        data: Dict[str, Any] = {"alpha": alpha, "m": m, "c": list(c)}
        if b is not None:
            data["b"] = list(b)
        return formatter.dumps(data)

    if formatter.kind is OutputKind.CSV:
        header = ["i", "c"] + (["b"] if b is not None else [])
        rows = [
            [i, value] + ([b[i]] if b is not None else [])
            for i, value in enumerate(c)
        ]
        return formatter.table(header, rows)

    lines = [formatter.line(c)]
    if b is not None:
        lines.append("b: " + formatter.line(b))
    return "\n".join(lines)


def weights_data(weights: WeightVector, degree: int) -> Dict[str, Any]:
    """Fields of the weights JSON document."""
    spec = weights.spec
    return {
        "alpha": spec.alpha,
        "beta": spec.beta,
        "m_left": spec.m_left,
        "m_right": spec.m_right,
        "n": spec.n,
        "lo": weights.lo,
        "weights": list(weights.weights),
        "exactness_degree": degree,
    }


def render_weights(
    formatter: ResultFormatter,
    weights: WeightVector,
    degree: int,
    name: Optional[str] = None
) -> str:
    spec = weights.spec
    if formatter.kind is OutputKind.JSON:
        data = weights_data(weights, degree)
        if name is not None:
            data = {"name": name, **data}
        return formatter.dumps(data)

    if formatter.kind is OutputKind.CSV:
        if name is None:
            return formatter.table(["index", "weight"], zip(weights.indices, weights.weights))
        parameters = [spec.alpha, spec.beta, spec.m_left, spec.m_right, spec.n]
        return formatter.table(
            ["index", "weight", "alpha", "beta", "m_left", "m_right", "n"],
            ([index, weight] + parameters for index, weight in zip(weights.indices, weights.weights)),
        )

    lines = [
        formatter.line(weights.weights),
        f"indices: {weights.lo}..{weights.hi}",
        f"exactness degree: {degree}",
    ]
    if name is not None:
        lines.append(
            f"alpha={format_rational(spec.alpha)} beta={format_rational(spec.beta)} "
            f"m_left={spec.m_left} m_right={spec.m_right} n={spec.n}"
        )
    return "\n".join(lines)


def render_estimate(formatter: ResultFormatter, estimate: Any) -> str:
    if formatter.kind is OutputKind.JSON:
        return formatter.dumps({"estimate": estimate})
    if formatter.kind is OutputKind.CSV:
        return formatter.table(["estimate"], [[estimate]])
    return formatter.text(estimate)


def render_paired(formatter: ResultFormatter, paired: PairedEstimate) -> str:
    if formatter.kind is OutputKind.JSON:
        return formatter.dumps(dict(paired._asdict()))
    if formatter.kind is OutputKind.CSV:
        return formatter.table(list(paired._fields), [list(paired)])
    return formatter.line(paired)


def render_report(formatter: ResultFormatter, report: ConvergenceReport) -> str:
    ratios: List[Optional[float]] = [None] + list(report.ratios)
    orders: List[Optional[float]] = [None] + list(report.level_orders)

    if formatter.kind is OutputKind.JSON:
        return formatter.dumps({
            "alpha": report.alpha,
            "beta": report.beta,
            "m": report.m,
            "levels": [
                {"n": level.n, "h": level.h, "estimate": level.estimate,
                 "error": level.error, "ratio": ratio}
                for level, ratio in zip(report.levels, ratios)
            ],
            "estimated_order": report.estimated_order,
            "exact": report.exact,
        })

    rows = [
        [level.n, level.h, level.estimate, level.error, ratio, order]
        for level, ratio, order in zip(report.levels, ratios, orders)
    ]
    header = ["n", "h", "estimate", "error", "ratio", "order"]
    if formatter.kind is OutputKind.CSV:
        # trailer row: order,exact or order,<estimate>
        trailer = ["order", "exact" if report.exact else report.estimated_order]
        return formatter.table(header, rows + [trailer])

    lines = ["\t".join(header)]
    lines.extend("\t".join(formatter.text(value) or "-" for value in row) for row in rows)
    if report.exact:
        lines.append("order: exact")
    else:
        lines.append(f"order: {formatter.text(report.estimated_order)}")
    return "\n".join(lines)
