"""Exact calculus for augmentations of map-germs."""

from __future__ import annotations

from .ade import FunctionType, classify_function, is_morse, modality_of_function
from .augmentation import (
    AugCodimReport,
    AugmentedGerm,
    LiftedFieldsReport,
    analyze_augmentation,
    augmentation_codim,
    build_versal,
    check_lifted_fields,
    lifted_fields,
    verify_versal,
)
from .ae_calculus import (
    CodimReport,
    JetModel,
    VersalReport,
    ae_codim,
    check_opsu,
    initial_speeds,
    is_versal,
    tangent_image,
)
from .catalog import (
    Catalog,
    CatalogEntry,
    CatalogMatch,
    catalog_lookup,
    core_instance,
    load_catalog,
)
from .errors import (
    ContextMismatch,
    ExprSyntaxError,
    GermFileError,
    GermforgeError,
    HypothesesUnmet,
    InvalidAugmentingFunction,
    InvalidInput,
    NonSingularGerm,
    NotAnUnfoldingOf,
    NotCertifiedByOrder,
    NotStable,
    UnknownVariable,
)
from .germfile import GermFile, load_germ_file, loads_germ_file
from .germs import MapGerm, Opsu, SubstantialFlag, Unfolding, augment
from .local_algebra import (
    QuotientReport,
    milnor,
    quotient_dim,
    quotient_monomial_basis,
    tjurina,
)
from .parser import parse_function, parse_polynomial
from .poly import Polynomial, VarContext, hessian_corank_at_origin, jacobian
from .quasihomog import QuasihomReport, WeightSystem, find_weights, is_r_equiv_quasihomogeneous
from .simplicity import (
    SimplicityVerdict,
    TableEntry,
    TableInstance,
    catalog_verdict,
    decide_simplicity,
    generate_table44,
    modality_of_augmentation,
    simplicity_of_augmentation,
)

__version__ = "0.1.0"

__all__ = [
    "AugCodimReport",
    "AugmentedGerm",
    "Catalog",
    "CatalogEntry",
    "CatalogMatch",
    "CodimReport",
    "ContextMismatch",
    "ExprSyntaxError",
    "FunctionType",
    "GermFile",
    "GermFileError",
    "GermforgeError",
    "HypothesesUnmet",
    "InvalidAugmentingFunction",
    "InvalidInput",
    "JetModel",
    "LiftedFieldsReport",
    "MapGerm",
    "NonSingularGerm",
    "NotAnUnfoldingOf",
    "NotCertifiedByOrder",
    "NotStable",
    "Opsu",
    "Polynomial",
    "QuasihomReport",
    "QuotientReport",
    "SimplicityVerdict",
    "SubstantialFlag",
    "TableEntry",
    "TableInstance",
    "Unfolding",
    "UnknownVariable",
    "VarContext",
    "VersalReport",
    "WeightSystem",
    "ae_codim",
    "analyze_augmentation",
    "augment",
    "augmentation_codim",
    "build_versal",
    "catalog_lookup",
    "catalog_verdict",
    "check_lifted_fields",
    "check_opsu",
    "classify_function",
    "core_instance",
    "decide_simplicity",
    "find_weights",
    "generate_table44",
    "hessian_corank_at_origin",
    "initial_speeds",
    "is_morse",
    "is_r_equiv_quasihomogeneous",
    "is_versal",
    "jacobian",
    "lifted_fields",
    "load_catalog",
    "load_germ_file",
    "loads_germ_file",
    "milnor",
    "modality_of_augmentation",
    "modality_of_function",
    "parse_function",
    "parse_polynomial",
    "quotient_dim",
    "quotient_monomial_basis",
    "simplicity_of_augmentation",
    "tangent_image",
    "tjurina",
    "verify_versal",
]
