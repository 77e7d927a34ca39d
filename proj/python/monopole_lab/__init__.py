"""BPS monopoles in constant-curvature spaces, Wigner D-functions, isotopic gauge
transitions and radial Dirac spectra on the unit 3-sphere.

The heavy lifting is done by the compiled ``_core`` extension; this package
re-exports its functions unchanged.
"""

from ._core import (  # noqa: F401
    MonopoleSolution,
    UnsupportedError,
    D_function,
    __version__,
    charge_admissible,
    chi_from_r,
    d_matrix,
    d_small,
    gibbs_compose,
    n_a_consistent_angles,
    n_a_square_defect,
    pauli_min_j,
    rotation_from_gibbs,
    selection_factor,
    selection_rule,
    sigma,
    spectrum,
    verify_gauge,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
