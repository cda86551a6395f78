"""JSON documents for classes and certificates, and their independent re-check."""

from __future__ import annotations

from .criteria import Certificate, IndecomposabilityResult, b_monomial
from .gf2poly import PolyContext
from .linratfun import parse_rational
from .milnor import MilnorAction
from .repring import RepElement, format_monomial, parse_element
from .tomdieck import b_coefficient


def class_doc(action: MilnorAction, e: RepElement) -> dict:
    return {
        "m": action.m,
        "n": action.n,
        "rank": action.rank,
        "hom": action.hom.subsets() if action.hom is not None else None,
        "degree": action.dim,
        "monomials": [format_monomial(x) for x in e.sorted_monomials()],
    }


def certificate_doc(cert: Certificate) -> dict:
    return {
        "k": cert.k,
        "kind": cert.kind,
        "b_monomial": str(cert.b_index),
        "witness_numerator": str(cert.witness.num),
        "witness_denominator": cert.witness.denominator_strings(),
    }


def certify_doc(action: MilnorAction, e: RepElement, result: IndecomposabilityResult) -> dict:
    return {
        "class": class_doc(action, e),
        "certificate": certificate_doc(result.certificate) if result.proven else None,
        "verdict": result.verdict,
        "tried": [{"k": k, "kind": kind} for k, kind in result.tried],
    }


def element_from_doc(doc: dict) -> RepElement:
    cls = doc["class"]
    return parse_element(" + ".join(cls["monomials"]) or "0", cls["rank"])


def recheck(doc: dict) -> bool:
    """Recompute the certified coefficient from the listed monomials alone.

    True iff the recomputed coefficient equals the stored witness and is nonzero.
    """
    cert = doc.get("certificate")
    if not cert:
        return False
    e = element_from_doc(doc)
    ctx = PolyContext(e.rank)
    stored = parse_rational(ctx, cert["witness_numerator"], cert["witness_denominator"])
    if cert["k"] <= doc["class"]["degree"]:
        return False
    fresh = b_coefficient(e, b_monomial(cert["k"], cert["kind"]), ctx)
    return bool(fresh) and fresh == stored and str(fresh.num) == cert["witness_numerator"]
