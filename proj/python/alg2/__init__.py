"""Exact classification of 2-dimensional algebras over Q and prime fields."""

from alg2._core import (
    Algebra,
    DomainError,
    ParseError,
    algebra,
    catalog,
    classify,
    enumerate_f2,
    enumerate_fq,
    errata,
    fingerprint,
    idempotents,
    is_jordan,
    isomorphic,
    multiply,
    parse_algebra,
    representative,
    transform,
)

__all__ = [
    "Algebra",
    "DomainError",
    "ParseError",
    "algebra",
    "catalog",
    "classify",
    "enumerate_f2",
    "enumerate_fq",
    "errata",
    "fingerprint",
    "idempotents",
    "is_jordan",
    "isomorphic",
    "multiply",
    "parse_algebra",
    "representative",
    "transform",
]
