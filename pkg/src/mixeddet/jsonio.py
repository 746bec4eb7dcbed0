"""JSON file formats for matrices, pencils, and polynomials.

Rationals travel as strings ("p/q" or "p") so nothing is ever rounded.
Matrix files look like::

    {"n": 2, "entries": [[["1","0"], ["0","1"]], [["0","-1"], ["1","0"]]]}

with each entry a [re, im] pair.  Non-Hermitian input is rejected with the
offending entry named, unless the file sets "symmetrize": true, in which
case (M + M*)/2 is taken.  Multivariate polynomials are lists of
[exponent-vector, coefficient] pairs in graded-lex order; univariate
polynomials are plain coefficient arrays, low degree first.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import List, Union

from .matcore import GaussianRational, HermitianMatrix, Pencil
from .polycore import MultiPoly, UniPoly

_MINUS_VARIANTS = str.maketrans({"−": "-", "–": "-"})


def parse_rational(value: Union[str, int]) -> Fraction:
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.translate(_MINUS_VARIANTS).strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse rational {value!r}: {exc}") from None
    raise ValueError(f"not a rational: {value!r} (rationals must be strings or ints)")


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def parse_gaussian(value) -> GaussianRational:
    if isinstance(value, (str, int)):
        return GaussianRational(parse_rational(value))
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return GaussianRational(parse_rational(value[0]), parse_rational(value[1]))
    raise ValueError(f"matrix entries must be [re, im] pairs, got {value!r}")


def format_gaussian(x: GaussianRational) -> List[str]:
    return [format_rational(x.re), format_rational(x.im)]


def matrix_from_obj(obj: dict) -> HermitianMatrix:
    if not isinstance(obj, dict) or "n" not in obj or "entries" not in obj:
        raise ValueError('matrix JSON needs keys "n" and "entries"')
    n = obj["n"]
    entries = obj["entries"]
    if not isinstance(n, int) or n < 0:
        raise ValueError(f'"n" must be a nonnegative integer, got {n!r}')
    if len(entries) != n or any(len(row) != n for row in entries):
        raise ValueError(f'"entries" must be an {n}x{n} array')
    rows = []
    for i, row in enumerate(entries):
        out = []
        for j, cell in enumerate(row):
            try:
                out.append(parse_gaussian(cell))
            except ValueError as exc:
                raise ValueError(f"entry ({i + 1},{j + 1}): {exc}") from None
        rows.append(out)
    if obj.get("symmetrize"):
        return HermitianMatrix.hermitian_part(rows)
    for i in range(n):
        for j in range(i, n):
            if rows[i][j] != rows[j][i].conjugate():
                raise ValueError(
                    f"not Hermitian at entries ({i + 1},{j + 1})/({j + 1},{i + 1}): "
                    f"{rows[i][j]} vs {rows[j][i]} (set \"symmetrize\": true to average)"
                )
    return HermitianMatrix(rows, check=False)


def matrix_to_obj(a: HermitianMatrix) -> dict:
    return {
        "n": a.n,
        "entries": [[format_gaussian(e) for e in row] for row in a.rows],
    }


def pencil_from_obj(obj: dict) -> Pencil:
    if not isinstance(obj, dict) or "coeffs" not in obj or "constant" not in obj:
        raise ValueError('pencil JSON needs keys "coeffs" and "constant"')
    coeffs = [matrix_from_obj(m) for m in obj["coeffs"]]
    constant = matrix_from_obj(obj["constant"])
    ell = obj.get("ell", len(coeffs))
    if ell != len(coeffs):
        raise ValueError(f'"ell" = {ell} does not match {len(coeffs)} coefficients')
    return Pencil(tuple(coeffs), constant)


def pencil_to_obj(p: Pencil) -> dict:
    return {
        "ell": p.ell,
        "coeffs": [matrix_to_obj(a) for a in p.coeffs],
        "constant": matrix_to_obj(p.constant),
    }


def unipoly_from_obj(obj) -> UniPoly:
    if not isinstance(obj, list):
        raise ValueError("univariate polynomial JSON must be a coefficient array")
    return UniPoly([parse_rational(c) for c in obj])


def unipoly_to_obj(p: UniPoly) -> List[str]:
    return [format_rational(c) for c in p.coeffs]


def multipoly_from_obj(obj, nvars: int = None) -> MultiPoly:
    if not isinstance(obj, list):
        raise ValueError("polynomial JSON must be a list")
    terms = []
    width = nvars
    for item in obj:
        if not (isinstance(item, list) and len(item) == 2 and isinstance(item[0], list)):
            raise ValueError(
                "multivariate terms must be [exponent-vector, coefficient] pairs"
            )
        exps, coeff = item
        if width is None:
            width = len(exps)
        elif len(exps) != width:
            raise ValueError(f"inconsistent exponent-vector length in {item!r}")
        terms.append((tuple(int(x) for x in exps), parse_rational(coeff)))
    if width is None:
        raise ValueError("cannot infer the variable count of an empty polynomial")
    return MultiPoly(width, terms)


def multipoly_to_obj(f: MultiPoly) -> list:
    return [[list(e), format_rational(c)] for e, c in f.sorted_terms()]


def poly_from_obj(obj) -> Union[UniPoly, MultiPoly]:
    """Load either polynomial flavor, deciding by shape."""
    if isinstance(obj, list) and obj and isinstance(obj[0], list):
        return multipoly_from_obj(obj)
    return unipoly_from_obj(obj)


def load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def load_matrix(path: str) -> HermitianMatrix:
    return matrix_from_obj(load_json(path))


def load_pencil(path: str) -> Pencil:
    return pencil_from_obj(load_json(path))


def load_poly(path: str):
    return poly_from_obj(load_json(path))
