"""Exact-arithmetic wall-divisor decisions for Hilbert schemes of points
on K3 surfaces and for generalised Kummer manifolds.

Everything is computed over the integers and rationals; no floating point
is used anywhere.
"""

from __future__ import annotations

from .binforms import DegenerateFormError, canonical_form, class_id, rank2_isometric
from .catalog import (
    CatalogEntry,
    classification_complete,
    delta_move,
    entry_record,
    export_catalog,
    generate_catalog,
    genus_move,
    is_prime_power,
    realize_gram,
    seed_lattice,
)
from .curves import (
    BNParams,
    SquareReport,
    bn_dims,
    bn_rho,
    curve_class,
    curve_square,
    dual_divisor,
    exists_pencil,
    exists_pencil_via_rho,
    is_wall_by_square,
    minimal_square_bound,
)
from .model import (
    CurveClass,
    DivisorClass,
    DomainError,
    SurfaceContext,
    ambient_gram,
    divisor_divisibility,
    embed_divisor,
    exceptional_vector,
    moduli_dim,
    moduli_vector,
    mukai_pairing,
    mukai_square,
    polarization_vector,
    sheaf_vector,
)
from .subvarieties import (
    SubvarietyDescriptor,
    bundle_bound_holds,
    bundle_locus,
    chi_value,
    lagrangian_plane,
    nodal_family_loci,
    series_family_loci,
)
from .walls import (
    SpanLattice,
    WallVerdict,
    Witness,
    box_witnesses,
    enumerate_witnesses,
    mbm_bound_check,
    primitive_dual_divisor,
    primitive_integral_divisor,
    saturated_span,
    wall_test,
)

__version__ = "0.1.0"

__all__ = [
    "BNParams",
    "CatalogEntry",
    "CurveClass",
    "DegenerateFormError",
    "DivisorClass",
    "DomainError",
    "SpanLattice",
    "SquareReport",
    "SubvarietyDescriptor",
    "SurfaceContext",
    "WallVerdict",
    "Witness",
    "ambient_gram",
    "bn_dims",
    "bn_rho",
    "box_witnesses",
    "bundle_bound_holds",
    "bundle_locus",
    "canonical_form",
    "chi_value",
    "class_id",
    "classification_complete",
    "curve_class",
    "curve_square",
    "delta_move",
    "divisor_divisibility",
    "dual_divisor",
    "embed_divisor",
    "entry_record",
    "enumerate_witnesses",
    "exceptional_vector",
    "exists_pencil",
    "exists_pencil_via_rho",
    "export_catalog",
    "generate_catalog",
    "genus_move",
    "is_prime_power",
    "is_wall_by_square",
    "lagrangian_plane",
    "mbm_bound_check",
    "minimal_square_bound",
    "moduli_dim",
    "moduli_vector",
    "mukai_pairing",
    "mukai_square",
    "nodal_family_loci",
    "polarization_vector",
    "primitive_dual_divisor",
    "primitive_integral_divisor",
    "rank2_isometric",
    "realize_gram",
    "saturated_span",
    "seed_lattice",
    "series_family_loci",
    "sheaf_vector",
    "wall_test",
]
