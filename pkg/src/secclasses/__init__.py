"""Exact-arithmetic secondary characteristic classes of foliations.

Truncated Weil complexes and their cohomology, the Vey basis and the
rigidity predicate, Pontrjagin independence certificates over product
test cycles, and Koszul frame models certifying the rigid families.
All coefficients are exact rationals; every report is deterministic.
"""

__version__ = "0.1.0"

from .algebra import Element, GeneratorMismatch, GeneratorSet, basis_of_degree
from .dga import (CohomologyReport, DegreeMismatch, Differential, NotACocycle,
                  class_nonzero, cohomology)
from .frames import (CharacteristicMap, FrameCertificate, FrameModel,
                     IndexOutOfRange, build_frame_model,
                     certify_projective_family, certify_sphere_family,
                     permanence_family)
from .models import (BundleMap, Factor, IndependenceReport, ModelRing,
                     PontrjaginMonomial, admissible_monomials, canonical_bundle,
                     cp2, evaluate_on_cycle, independence_certificate,
                     product_model, pullback, sphere_model,
                     verify_symmetric_multiple, whitney_pullback, x_model)
from .weil import (OddCodimension, RigidFamilyEntry, VeyIndex, godbillon_vey,
                   is_rigid, rigid_count_table, spherical_rigid_classes,
                   vey_basis, vey_counts_by_degree, weil_complex)

__all__ = [
    "Element", "GeneratorMismatch", "GeneratorSet", "basis_of_degree",
    "CohomologyReport", "DegreeMismatch", "Differential", "NotACocycle",
    "class_nonzero", "cohomology",
    "CharacteristicMap", "FrameCertificate", "FrameModel", "IndexOutOfRange",
    "build_frame_model", "certify_projective_family", "certify_sphere_family",
    "permanence_family",
    "BundleMap", "Factor", "IndependenceReport", "ModelRing",
    "PontrjaginMonomial", "admissible_monomials", "canonical_bundle", "cp2",
    "evaluate_on_cycle", "independence_certificate", "product_model",
    "pullback", "sphere_model", "verify_symmetric_multiple",
    "whitney_pullback", "x_model",
    "OddCodimension", "RigidFamilyEntry", "VeyIndex", "godbillon_vey",
    "is_rigid", "rigid_count_table", "spherical_rigid_classes", "vey_basis",
    "vey_counts_by_degree", "weil_complex",
    "__version__",
]
