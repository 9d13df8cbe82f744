"""Exact Hochschild, cyclic and bivariant periodic cyclic computations over Q."""

import json

from ._core import (
    Algebra,
    DimensionCapError,
    Ideal,
    InvariantError,
    NonNilpotentError,
    ParseError,
    hochschild_dims,
)
from . import _core

__all__ = [
    "Algebra",
    "DimensionCapError",
    "Ideal",
    "InvariantError",
    "NonNilpotentError",
    "ParseError",
    "hochschild_dims",
    "hp",
    "verify_excision",
    "verify_goodwillie",
    "check_h_unital",
    "fedosov_identities",
]


def hp(source, target=None, max_degree=6, window=2):
    """Bivariant HP grid report; the target defaults to Q."""
    return json.loads(_core._hp(source, target or Algebra.ground_field(), max_degree, window))


def verify_excision(ideal, target=None, max_degree=6, window=2):
    return json.loads(_core._excision(ideal, target or Algebra.ground_field(), max_degree, window))


def verify_goodwillie(ideal, max_degree=6, window=2):
    return json.loads(_core._goodwillie(ideal, max_degree, window))


def check_h_unital(k, embeddings, max_degree=6):
    return json.loads(_core._h_unital(k, list(embeddings), max_degree))


def fedosov_identities(algebra, n, cap=200):
    return json.loads(_core._fedosov(algebra, n, cap))
