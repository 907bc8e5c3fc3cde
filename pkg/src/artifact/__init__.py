"""Exact orbital integrals, Shalika germs and tree counts as rational functions of q."""

from .halfint import HalfInt
from .qrat import QRat, parse_qrat, q, qpow

__all__ = ["HalfInt", "QRat", "parse_qrat", "q", "qpow"]
