"""Frozen Jacobian algebras of ice quivers with potential: Groebner bases,
finite-dimensional module theory, the bimodule complex res(A), and checks of
the internal Calabi-Yau property and its consequences."""

from .field import QQ, GF
from .parser import load, parse_ice_qp
from .pipeline import check_file, check_text

__version__ = "0.1.0"

__all__ = ["QQ", "GF", "load", "parse_ice_qp", "check_file", "check_text", "__version__"]
