"""Full heaps over affine Dynkin diagrams and the Weyl group actions on their ideals."""

from .cartan import CartanMatrix, DynkinDiagram, RootVector, catalog_diagram, null_root
from .catalog import catalog_heap, h3_heap
from .heap import FiniteHeap, PeriodicHeap, load_motif, validate

__version__ = "0.1.0"

__all__ = [
    "CartanMatrix",
    "DynkinDiagram",
    "RootVector",
    "catalog_diagram",
    "null_root",
    "catalog_heap",
    "h3_heap",
    "FiniteHeap",
    "PeriodicHeap",
    "load_motif",
    "validate",
]
