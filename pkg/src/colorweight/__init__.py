"""Universal weight systems of the color Lie algebra A1_e on chord and Jacobi diagrams."""

from colorweight.diagram import ChordDiagram, DiagramSum, parse_chord
from colorweight.jacobi import JacobiDiagram, stu_resolve
from colorweight.poly import CenterPoly, EpsCoeff
from colorweight.weights import WeightSystem, weight_jacobi, weight_recurrence

__version__ = "0.1.0"
