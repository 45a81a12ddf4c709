"""Exact Baker-Campbell-Hausdorff components and free Lie algebra checks.

Two independent routes to the components C_n of log(e^A e^B):
:func:`bch_direct` expands the truncated series, :func:`bch_recurrence`
solves the commutator recurrence degree by degree.  :func:`certify` and the
``verify`` module check the results and the supporting identities.
"""

from .algebra import (
    BCH_ALPHABET,
    Alphabet,
    AlphabetMismatchError,
    NcPoly,
    ad,
    ad_pow,
    coefficient,
    commutator,
    homogeneous_component,
    left_mul,
    poly_add,
    poly_mul,
    poly_scale,
    pure_power_coefficients,
    right_mul,
)
from .bch import (
    BchResult,
    Certificate,
    InversionError,
    bch_direct_result,
    bch_recurrence,
    certify,
    invert_ad,
    invert_ad_b,
    recurrence_rhs,
)
from .lie import (
    NotLieError,
    RightNormedCombination,
    check_ad_injectivity,
    check_baker_identity,
    check_derivation,
    check_rPa,
    dynkin_is_lie,
    expand_rightnormed,
    rightnormed_form,
    rmap,
)
from .series import (
    TruncatedSeries,
    bch_direct,
    check_exp_ad_identity,
    ts_exp,
    ts_log,
    ts_mul,
)

__version__ = "0.1.0"
