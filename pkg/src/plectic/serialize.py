"""Structured-text (JSON) records for the package's value types.

Rational coefficients travel as exact decimal-free strings like "-3/2";
omitted terms are zero.  Term lists are sorted by index tuple so identical
values always serialize to identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .chartforms import PolyForm, PolyMap, VectorPolyForm
from .entropy import EntropyReport
from .exterior import ConstForm
from .linear import VectorValuedForm
from .polynomial import Polynomial


def fraction_str(x) -> str:
    return str(Fraction(x))


def parse_fraction(s) -> Fraction:
    return Fraction(s)


def const_form_to_dict(f: ConstForm) -> dict:
    return {
        "dim": f.dim,
        "degree": f.degree,
        "terms": [
            {"indices": list(idx), "coeff": fraction_str(c)}
            for _, idx, c in f.nonzero_terms()
        ],
    }


def const_form_from_dict(d: dict) -> ConstForm:
    terms = {tuple(t["indices"]): parse_fraction(t["coeff"]) for t in d["terms"]}
    return ConstForm.from_terms(d["dim"], d["degree"], terms)


def vector_form_to_dict(w: VectorValuedForm) -> dict:
    return {
        "dim": w.dim,
        "k": w.k,
        "components": [const_form_to_dict(c) for c in w.components],
    }


def vector_form_from_dict(d: dict) -> VectorValuedForm:
    w = VectorValuedForm([const_form_from_dict(c) for c in d["components"]])
    if w.dim != d["dim"] or w.k != d["k"]:
        raise ValueError("header does not match the component shapes")
    return w


def polynomial_to_list(p: Polynomial) -> list:
    return [
        {"exps": list(e), "coeff": fraction_str(p.terms[e])}
        for e in sorted(p.terms)
    ]


def polynomial_from_list(nvars: int, items) -> Polynomial:
    return Polynomial(nvars, {tuple(t["exps"]): parse_fraction(t["coeff"])
                              for t in items})


def polyform_to_dict(w: PolyForm) -> dict:
    return {
        "nvars": w.nvars,
        "degree": w.degree,
        "terms": [
            {"indices": list(idx), "poly": polynomial_to_list(w.terms[idx])}
            for idx in sorted(w.terms)
        ],
    }


def polyform_from_dict(d: dict) -> PolyForm:
    nvars = d["nvars"]
    terms = {
        tuple(t["indices"]): polynomial_from_list(nvars, t["poly"])
        for t in d["terms"]
    }
    return PolyForm(nvars, d["degree"], terms)


def vector_polyform_to_dict(w: VectorPolyForm) -> dict:
    return {
        "nvars": w.nvars,
        "degree": w.degree,
        "components": [polyform_to_dict(c) for c in w.components],
    }


def vector_polyform_from_dict(d: dict) -> VectorPolyForm:
    return VectorPolyForm(tuple(polyform_from_dict(c) for c in d["components"]))


def polymap_to_dict(f: PolyMap) -> dict:
    return {
        "source": f.source,
        "target": f.target,
        "components": [polynomial_to_list(p) for p in f.components],
    }


def polymap_from_dict(d: dict) -> PolyMap:
    comps = [polynomial_from_list(d["source"], items) for items in d["components"]]
    return PolyMap(d["source"], d["target"], comps)


def entropy_report_to_dict(r: EntropyReport) -> dict:
    return {
        "arity": r.arity,
        "values": [
            fraction_str(v) if isinstance(v, (int, Fraction)) else repr(v)
            for v in r.values
        ],
        "weights": list(r.weights),
        "entropy_nats": r.entropy,
        "disorder": r.disorder,
    }


def presentation_record_to_dict(record) -> dict:
    return {
        "base_dim": record.chart.base_dim,
        "k": record.chart.k,
        "m": record.chart.m,
        "total_dim": record.chart.total_dim,
        "center": [fraction_str(c) for c in record.center],
        "potential_supplied": record.potential_supplied,
        "potential": vector_polyform_to_dict(record.potential),
        "embedding": polymap_to_dict(record.embedding),
        "residual": vector_polyform_to_dict(record.residual),
        "exact_match": record.exact_match,
        "degenerate_at_center": record.degenerate_at_center,
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"
