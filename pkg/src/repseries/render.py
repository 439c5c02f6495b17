"""Text, LaTeX and JSON emitters for series results and class tables."""
from __future__ import annotations

import json
from fractions import Fraction

from .classes import ClassTable
from .exactpoly import BiPoly, TruncatedSeries, UniPoly, format_poly
from .groups import DegreeTable
from .series import SeriesResult


def _num(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def latex_poly(coeffs, variable: str) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if i == 0 else (variable if i == 1 else f"{variable}^{{{i}}}")
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mag.denominator == 1:
            body = f"{mag.numerator}{mono}"
        else:
            body = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}{mono}"
        sign = "-" if c < 0 else "+"
        terms.append(body if not terms and c > 0 else (f"-{body}" if not terms else f"{sign} {body}"))
    return " ".join(terms) if terms else "0"


def _t_power(k: int, latex: bool) -> str:
    if k == 1:
        return "t"
    return f"t^{{{k}}}" if latex else f"t^{k}"


def text(value) -> str:
    return _num(value) if isinstance(value, Fraction) else str(value)


def latex(value) -> str:
    if isinstance(value, Fraction):
        return _num(value)
    if isinstance(value, UniPoly):
        return latex_poly(value.coeffs, value.variable)
    if isinstance(value, TruncatedSeries):
        return latex_poly(value.coeffs, value.variable) + f" + O({value.variable}^{{{value.order + 1}}})"
    if isinstance(value, BiPoly):
        if not value.parts:
            return "0"
        pieces = []
        orders = []
        for k, p in value.parts:
            if isinstance(p, TruncatedSeries):
                orders.append(p.order)
            body = latex_poly(p.coeffs, p.variable)
            pieces.append(body if k == 0 else f"\\left({body}\\right){_t_power(k, True)}")
        tail = f" + O(s^{{{min(orders) + 1}}})" if orders else ""
        return " + ".join(pieces) + tail
    raise TypeError(type(value))


def _coeff_list(p) -> list[str]:
    return [_num(c) for c in p.coeffs]


def result_json(res: SeriesResult) -> dict:
    g = res.group
    doc = {
        "formula": res.formula_id,
        "group": g.canonical_name,
        "rank": g.rank,
        "weyl_order": str(g.weyl_order),
        "parameter": res.parameter,
    }
    v = res.value
    if isinstance(v, Fraction):
        doc["value"] = _num(v)
    elif isinstance(v, BiPoly):
        var = "s"
        doc["variable"] = var
        doc["t_parts"] = [{"t_degree": k, "coefficients": _coeff_list(p)} for k, p in v.parts]
        if any(isinstance(p, TruncatedSeries) for _, p in v.parts):
            doc["order"] = res.parameter
    else:
        doc["variable"] = v.variable
        doc["coefficients"] = _coeff_list(v)
        if isinstance(v, TruncatedSeries):
            doc["order"] = v.order
    return doc


def table_json(table: ClassTable) -> dict:
    g = table.group
    return {
        "formula": "classes",
        "group": g.canonical_name,
        "rank": g.rank,
        "weyl_order": str(table.weyl_order),
        "central_torus_rank": g.central_torus_rank,
        "records": [
            {
                "size": str(r.size),
                "char_poly": _coeff_list(r.char_poly),
                "det_one_plus_sw": _coeff_list(r.det_one_plus_sw),
                "det_one_minus_q2w": _coeff_list(r.det_one_minus_q2w),
            }
            for r in table.records
        ],
    }


def table_text(table: ClassTable, fmt: str = "text") -> str:
    g = table.group
    if fmt == "latex":
        rows = [f"{r.size} & ${latex_poly(r.char_poly.coeffs, 'x')}$ & "
                f"${latex_poly(r.det_one_plus_sw.coeffs, 's')}$ \\\\" for r in table.records]
        head = "size & $\\det(x-w)$ & $\\det(1+sw)$ \\\\"
        return "\n".join(["\\begin{tabular}{rll}", head, *rows, "\\end{tabular}"])
    lines = [f"{g.canonical_name}: rank {g.rank}, |W| = {table.weyl_order}, "
             f"central torus rank {g.central_torus_rank}"]
    for r in table.records:
        lines.append(f"{r.size:>10}  det(x - w) = {format_poly(r.char_poly.coeffs, 'x'):<28}"
                     f"  det(1 + sw) = {r.det_one_plus_sw}")
    return "\n".join(lines)


def degrees_doc(deg: DegreeTable, fmt: str) -> str:
    if fmt == "json":
        return dumps({"formula": "degrees", "group": deg.group.canonical_name,
                      "rank": deg.group.rank, "weyl_order": str(deg.group.weyl_order),
                      "degrees": [str(d) for d in deg.degrees]})
    return ", ".join(str(d) for d in deg.degrees)


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2)
