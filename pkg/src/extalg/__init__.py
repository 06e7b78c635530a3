"""Exact computations in the exterior algebra E(n) and the structures built on it.

Submodules
----------
fields        QQ and GF(p) scalars
exactla       sparse exact linear algebra
exterior      multivectors, wedge, contraction, Hodge dual, meet
simplicial    face rings, reduced (co)homology, Hilbert series
arrangements  matroids and Orlik-Solomon algebras
lie           derivation differentials and Lie algebra cohomology
clifford      Clifford algebras of symmetric forms
tate          graded E-modules, resolutions, Tate windows, BGG
io, cli       file formats and the command line
"""
from .fields import GF, QQ, parse_field
from .exterior import (
    DualVector, MultiVector, basis, contract, hodge_dual, meet, mono, wedge,
)
from .simplicial import (
    SimplicialComplex, from_facets, hilbert_series_face_ring, reduced_cohomology,
    reduced_homology,
)
from .arrangements import (
    Matroid, VectorConfiguration, check_exchange, complement_betti,
    matroid_from_vectors, orlik_solomon,
)
from .lie import Bracket, derivation_from_bracket, is_differential, jacobi_holds, lie_cohomology
from .clifford import SymmetricForm, geometric_product, multiplication_table, signature_form
from .tate import (
    ExteriorMatrix, GradedEModule, bgg_linear_complex, cohomology_table,
    minimal_injective_resolution, minimal_projective_resolution, module_from_matrix,
    tate_window,
)

__all__ = [
    "GF", "QQ", "parse_field",
    "DualVector", "MultiVector", "basis", "contract", "hodge_dual", "meet", "mono", "wedge",
    "SimplicialComplex", "from_facets", "hilbert_series_face_ring", "reduced_cohomology",
    "reduced_homology",
    "Matroid", "VectorConfiguration", "check_exchange", "complement_betti",
    "matroid_from_vectors", "orlik_solomon",
    "Bracket", "derivation_from_bracket", "is_differential", "jacobi_holds", "lie_cohomology",
    "SymmetricForm", "geometric_product", "multiplication_table", "signature_form",
    "ExteriorMatrix", "GradedEModule", "bgg_linear_complex", "cohomology_table",
    "minimal_injective_resolution", "minimal_projective_resolution", "module_from_matrix",
    "tate_window",
]

__version__ = "0.1.0"
