"""Circulant-graph isomorphism toolkit.

Connection sets live in reduced form (jumps in [1, n//2]).  Two isomorphism
mechanisms are implemented and independently verified: unit multiplication
of the jump set (Type-1) and the residue-class rotation map (Type-2), plus
exhaustive pair enumeration, parametric families, and a brute-force oracle.
"""

from ._speed import BACKEND
from .adam import AdamOrbit, multiply, orbit, type1_witness
from .circulant import (
    SPECTRUM_TOL,
    ConnectionSet,
    EdgeSet,
    cospectral,
    degree,
    realize,
    scale,
    spectrum,
)
from .classify import (
    Identical,
    NotIsomorphicByTheseMethods,
    PairClassification,
    Type1,
    Type2,
    classify_pair,
    extend_pair,
    type2_partners,
)
from .enumeration import EnumerationReport, FamilyRecord, PairRecord, enumerate_type2
from .errors import DomainError
from .families import FamilyCheck, FamilyParams, family_generate, family_verify
from .modring import reflexive_reduce, totient, units, valid_type2_moduli
from .oracle import (
    CrossValidation,
    IsoWitness,
    brute_force_isomorphic,
    cross_validate,
    fingerprint,
    verify_mapping,
)
from .theta import ThetaImage, ThetaParams, apply, detect_circulant, jump_shortcut, vertex_map

__version__ = "0.1.0"

__all__ = [
    "AdamOrbit",
    "BACKEND",
    "ConnectionSet",
    "CrossValidation",
    "DomainError",
    "EdgeSet",
    "EnumerationReport",
    "FamilyCheck",
    "FamilyParams",
    "FamilyRecord",
    "Identical",
    "IsoWitness",
    "NotIsomorphicByTheseMethods",
    "PairClassification",
    "PairRecord",
    "SPECTRUM_TOL",
    "ThetaImage",
    "ThetaParams",
    "Type1",
    "Type2",
    "apply",
    "brute_force_isomorphic",
    "classify_pair",
    "cospectral",
    "cross_validate",
    "degree",
    "detect_circulant",
    "enumerate_type2",
    "extend_pair",
    "family_generate",
    "family_verify",
    "fingerprint",
    "jump_shortcut",
    "multiply",
    "orbit",
    "realize",
    "reflexive_reduce",
    "scale",
    "spectrum",
    "totient",
    "type1_witness",
    "type2_partners",
    "units",
    "valid_type2_moduli",
    "verify_mapping",
    "vertex_map",
]
