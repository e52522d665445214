"""Exact computations with arc algebras, the colored cup-diagram algebra and Tanisaki ideals."""
from .arc_algebra import ArcAlgebra, arc_algebra, h_multiply
from .colored import ColoredAlgebra, colored_algebra, k_multiply
from .diagrams import CupDiagram, ExtSeq, HalfIndex, SignSeq, cup_diagrams, enumerate_sequences
from .gluing import GluedDiagram, glue, glue_extended

__all__ = [
    "ArcAlgebra", "ColoredAlgebra", "CupDiagram", "ExtSeq", "GluedDiagram", "HalfIndex", "SignSeq",
    "arc_algebra", "colored_algebra", "cup_diagrams", "enumerate_sequences", "glue", "glue_extended",
    "h_multiply", "k_multiply",
]
__version__ = "0.1.0"
