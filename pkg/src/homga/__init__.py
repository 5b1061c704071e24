"""Exact computations with twisted operads, braces and cohomology of
hom-associative algebras and hom-dialgebras."""

from .exactlin import Q, parse_rational, format_rational
from .homassoc import Cochain, HomAssociativeAlgebra, validate_hom_algebra
from .homdialg import HomDialgebra, TreeCochain, validate_hom_dialgebra
from .trees import PlanarBinaryTree, enumerate_trees, face, bullet, r0, ri

__all__ = [
    "Q", "parse_rational", "format_rational",
    "Cochain", "HomAssociativeAlgebra", "validate_hom_algebra",
    "HomDialgebra", "TreeCochain", "validate_hom_dialgebra",
    "PlanarBinaryTree", "enumerate_trees", "face", "bullet", "r0", "ri",
]
