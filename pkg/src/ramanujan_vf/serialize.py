"""Lossless JSON encoding of polynomials and derivations.

Graded polynomial schema::

    {"p": int | null, "vars": ["e2", "e4", "e6"],
     "terms": [{"exp": [i, j, k], "num": "<int>", "den": "<int>"}, ...]}

Big integers travel as decimal strings. Mod-p polynomials store residues
with ``"den": "1"``.
"""

from __future__ import annotations

from fractions import Fraction

from .graded import VARS, Derivation, GradedPoly
from .unipoly import UniPoly, fp_poly


def poly_to_json(P: GradedPoly) -> dict:
    terms = []
    for exp, c in P.sorted_terms():
        c = Fraction(c)
        terms.append({"exp": list(exp), "num": str(c.numerator), "den": str(c.denominator)})
    return {"p": P.p, "vars": list(VARS), "terms": terms}


def poly_from_json(obj: dict) -> GradedPoly:
    if list(obj.get("vars", VARS)) != list(VARS):
        raise ValueError(f"unsupported variables {obj.get('vars')}")
    p = obj.get("p")
    terms = {}
    for t in obj["terms"]:
        terms[tuple(t["exp"])] = Fraction(int(t["num"]), int(t["den"]))
    return GradedPoly(terms, p)


def derivation_to_json(D: Derivation) -> dict:
    return {var: poly_to_json(img) for var, img in zip(VARS, D.images)}


def derivation_from_json(obj: dict) -> Derivation:
    return Derivation(*(poly_from_json(obj[v]) for v in VARS))


def unipoly_to_json(f: UniPoly) -> dict:
    """Coefficients (low degree first) as residue strings; F_p only."""
    return {"p": f.field.p, "var": "t", "coeffs": [str(c) for c in f.residues()]}


def unipoly_from_json(obj: dict) -> UniPoly:
    return fp_poly([int(c) for c in obj["coeffs"]], obj["p"])
