"""Borel orbits in height-two spherical nilpotent orbits: enumeration, typed
weak orders, closure orders and non-normality certificates."""

from __future__ import annotations

from .posets import (
    Certificate,
    FamilySpec,
    TypedWeakGraph,
    build_weak_graph,
    classify_induction,
    find_nonnormal_certificates,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "FamilySpec",
    "TypedWeakGraph",
    "build_weak_graph",
    "classify_induction",
    "find_nonnormal_certificates",
]
