"""Binary symplectic machinery and gadget analysis for stabilizer codes.

Exact arithmetic only: finite fields GF(p^m), the symplectic group Sp(2n, 2)
acting on projective Paulis, stabilizer-code standard forms, and exhaustive
searches over transversal gadgets and code automorphisms.
"""

from clifford_nogo.field import FieldElement, FieldSpec, find_irreducible, find_primitive
from clifford_nogo.symplectic import (
    PauliVec,
    SymplecticMatrix,
    element_order,
    group_order,
    is_symplectic,
    symplectic_product,
)

__all__ = [
    "FieldElement",
    "FieldSpec",
    "PauliVec",
    "SymplecticMatrix",
    "element_order",
    "find_irreducible",
    "find_primitive",
    "group_order",
    "is_symplectic",
    "symplectic_product",
]
