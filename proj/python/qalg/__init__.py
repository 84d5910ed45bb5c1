"""Exact symbolic toolkit for the nondegenerate Kepler-Coulomb system.

Thin python layer over the C++ core: algebraic spectrum, relation-catalog
verification, the radial finite-difference oracle, and the relation DSL.
"""

try:
    from qalg._qalg import (
        build_operator_str,
        canonical_expression,
        compare_spectra_json,
        energy_exact,
        radial_eigenvalue,
        spectrum,
        verify_catalog_text,
        zero_suite,
    )
except ImportError:  # running against a bare build tree
    from _qalg import (
        build_operator_str,
        canonical_expression,
        compare_spectra_json,
        energy_exact,
        radial_eigenvalue,
        spectrum,
        verify_catalog_text,
        zero_suite,
    )

__all__ = [
    "build_operator_str",
    "canonical_expression",
    "compare_spectra_json",
    "energy_exact",
    "radial_eigenvalue",
    "spectrum",
    "verify_catalog_text",
    "zero_suite",
]
