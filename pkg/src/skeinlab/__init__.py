"""skeinlab: exact link invariants via resolving trees over pluggable algebras."""

from skeinlab.laurent import LaurentPoly
from skeinlab.diagram import LinkDiagram, Crossing, parse_pd

__all__ = ["LaurentPoly", "LinkDiagram", "Crossing", "parse_pd"]
__version__ = "0.1.0"
