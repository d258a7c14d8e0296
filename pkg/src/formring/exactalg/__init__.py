"""Exact arithmetic over the base rings used by the constructions."""

from .homs import Compose, Reduce, Specialize, apply_hom
from .linalg import (det, hnf_rows, identity, inverse_unimodular, invariant_factors,
                     matmul, smith_normal_form, transpose)
from .rings import (ZZ, ContextError, FractionField, Integers, IntegersMod, Mod,
                    NotDivisible, Poly, PolyRing, RatFunc, content, parse_context,
                    ring_ops, universal_ring)

__all__ = [
    "ZZ", "Compose", "ContextError", "FractionField", "Integers", "IntegersMod",
    "Mod", "NotDivisible", "Poly", "PolyRing", "RatFunc", "Reduce", "Specialize",
    "apply_hom", "content", "det", "hnf_rows", "identity", "inverse_unimodular",
    "invariant_factors", "matmul", "parse_context", "ring_ops",
    "smith_normal_form", "transpose", "universal_ring",
]
