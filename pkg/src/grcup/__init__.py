"""Groebner bases for the mod 2 cohomology subring of oriented Grassmannians G~(n,3)."""

__version__ = "0.1.0"

from .f2poly import Poly, format_poly, normal_form, parse_poly  # noqa: E402
from .grassmann_ideal import ideal_generators, paper_family  # noqa: E402
from .groebner import buchberger, is_groebner, reduce_basis  # noqa: E402
from .invariants import report  # noqa: E402

__all__ = [
    "Poly", "format_poly", "normal_form", "parse_poly", "ideal_generators",
    "paper_family", "buchberger", "is_groebner", "reduce_basis", "report",
]
