"""Exact verification and acceleration of rational hypergeometric series.

The package certifies a first-order shift recurrence for a balanced
four-parameter term family, generates the single (rate -1/4) and double
(rate -1/1024) accelerated series it implies for admissible (a, b, n), and
numerically certifies a catalog of published series for 1/pi, 1/pi^2,
zeta(3) and pi^2 against independently computed reference constants with
rigorous error bounds throughout.
"""

from .accel import (
    AcceleratedSeries,
    AccelParams,
    GeneralTerm,
    NotCollapsibleError,
    Theorem,
    accelerate_t1,
    accelerate_t2,
    iterate_t1,
    iterate_t2,
    mathcal_R,
    r1,
    r2,
    r3,
    r4,
    reindex,
    t2_pieces,
    t2_scale,
)
from .catalog import CatalogEntry, CatalogError, builtin_catalog, by_id, load, save
from .certify import (
    Certificate,
    CheckMode,
    FFamily,
    check_certificate,
    f_shift_ratios,
    g_at_zero,
    tail_condition,
    theorem1_certificate,
)
from .exact import (
    MalformedInputError,
    MultiPoly,
    PoleError,
    RatFun,
    ratfun_equal,
    ratfun_eval,
    ratfun_normalize,
)
from .hyperterm import (
    Base,
    CannotBoundError,
    RawF,
    SeriesSpec,
    TargetConstant,
    UnsupportedSpecError,
    asymptotic_rate,
    pochhammer,
    series_spec,
    shift_normalize,
    tail_bound,
    term_ratio,
    term_value,
)
from .precision import (
    ConvergenceTooSlowError,
    EvalReport,
    HPFloat,
    check_glaisher_partial,
    check_guillera_partial,
    check_identity8,
    digits_agreement,
    ref_pi,
    ref_zeta3,
    sum_series,
    target_value,
    verify_entry,
)

__version__ = "0.1.0"
