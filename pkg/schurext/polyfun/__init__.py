"""
Polynomial functors evaluated on weight spaces: explicit bases and the
action of specialization and generization maps.
"""
from schurext.polyfun.expr import (
    Atom,
    Divided,
    Exterior,
    FunctorExpr,
    Schur,
    Symmetric,
    Weyl,
    kuhn_dual,
    parse_functor,
    tensor,
)
from schurext.polyfun.hook import TableauMonomial, hook_reduce, monomial, standard_monomials
from schurext.polyfun.space import (
    WeightSpace,
    generization_matrix,
    specialization_matrix,
    weight_space,
)

__all__ = [
    "Atom",
    "Divided",
    "Exterior",
    "FunctorExpr",
    "Schur",
    "Symmetric",
    "TableauMonomial",
    "WeightSpace",
    "Weyl",
    "generization_matrix",
    "hook_reduce",
    "kuhn_dual",
    "monomial",
    "parse_functor",
    "specialization_matrix",
    "standard_monomials",
    "tensor",
    "weight_space",
]
