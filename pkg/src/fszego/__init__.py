"""Generalized Fekete-Szego functional |a3 - lam a2^2| - mu |a2|: sharp bounds
for univalent and convex maps, extremal families, and numerical certification."""

__version__ = "0.1.0"

from .bounds import BoundReport, FunctionClass, Side, lower_K, lower_S, upper_K, upper_S
from .families import Family, FamilyMember, convex_alpha, koebe_rotation, lower_extremal, two_param, zero_a2
from .functional import CoeffPair, FunctionalParams, fekete_szego_gen
from .series import TruncatedSeries
