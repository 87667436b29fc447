"""Exact invariants of algebraic tori presented as Galois lattices.

The compiled core exposes the preset catalog, the lattice operations
(invariants, coinvariants, projection lattice, duals), group cohomology with
its two independent oracles, the dual-torus constructions with the
cocharacter sandwich, and the unramified Weil-model cocycle suite.
"""

from toral._core import (
    FinGenAbGroup,
    GaloisLattice,
    LocalArithmeticData,
    RationalLattice,
    ToralError,
    analyze_document_json,
    analyze_json,
    brute_force_cohomology,
    catalog,
    cohomology,
    coinvariants,
    cyclic_oracle,
    dual_module,
    fixed_point_characters,
    fixed_point_component_group,
    invariants,
    oracle_sweep,
    preset,
    preset_arithmetic,
    projection_lattice,
    sandwich,
    weil_suite,
)

__all__ = [
    "FinGenAbGroup",
    "GaloisLattice",
    "LocalArithmeticData",
    "RationalLattice",
    "ToralError",
    "analyze_document_json",
    "analyze_json",
    "brute_force_cohomology",
    "catalog",
    "cohomology",
    "coinvariants",
    "cyclic_oracle",
    "dual_module",
    "fixed_point_characters",
    "fixed_point_component_group",
    "invariants",
    "oracle_sweep",
    "preset",
    "preset_arithmetic",
    "projection_lattice",
    "sandwich",
    "weil_suite",
]
