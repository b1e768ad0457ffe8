"""Exact engine for genus-2 formal Fourier-Jacobi series."""

from __future__ import annotations

from .cyclotomic import CycNumber, cyc, root_of_unity
from .errors import (
    BadWeight,
    DegenerateGram,
    DivisionByZero,
    FormalFJError,
    IncompatiblePrecision,
    IncompatibleShapes,
    NonInvertibleLeadingCoefficient,
    NotSymmetric,
    PrecisionTooLow,
    Report,
    UnsupportedWeight,
    ZeroDivisor,
)
from .fjseries import (
    FormalFJSeries,
    MeromorphicFJSeries,
    fj_constant,
    fj_invert,
    fj_is_symmetric,
    fj_meromorphic_expansion,
    fj_pair,
    fj_tensor,
    validate_fj,
)
from .jacobi import JacobiForm, WeakJacobiForm, jacobi_basis, validate_jacobi, weak_generators
from .lattice import EvenLattice, discriminant_form, s_space_dim
from .qseries import QSeries, QZSeries, eisenstein_q
from .representation import (
    DiscriminantForm,
    Representation,
    invariant_subspace,
    rep_dsum,
    rep_dual,
    rep_hom,
    rep_tensor,
    rep_trivial,
    rep_weil_genus2,
    weil_rep_genus1,
)
from .siegel import SiegelForm, expected_dimension, fj_to_siegel, siegel_to_fj, symmetric_space

__version__ = "0.1.0"
