# Algebra package
from .cliffordodd import OddNilHeckeAlgebra
from .frobenius import BUILTIN_NAMES, FrobeniusSuperalgebra, builtin
from .linear import Element
from .nilcoxeter import NilCoxeterAlgebra
from .nilhecke import NilHeckeAlgebra
from .polynomial import PolynomialAlgebra
from .symgroup import Permutation

__all__ = [
    "OddNilHeckeAlgebra", "BUILTIN_NAMES", "FrobeniusSuperalgebra", "builtin",
    "Element", "NilCoxeterAlgebra", "NilHeckeAlgebra", "PolynomialAlgebra",
    "Permutation",
]
