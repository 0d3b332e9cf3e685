"""Exact checks of symmetry identities for Fibonacci-type and Horadam sequences."""

from .exactnum import PHI, BigRational, QuadElem, qf_add, qf_inv, qf_mul, qf_to_interval
from .identities import (
    CATALOG,
    CheckResult,
    IdentityId,
    IdentityParams,
    check_jeannin41,
    check_lemma_howard,
    check_lemma_vajda10a,
    check_lemma_vajda21,
    cross_check,
    eval_sides,
    limit_consistency,
    rederive,
)
from .sequences import (
    HoradamParams,
    SeedPair,
    SequenceHandle,
    alpha_beta,
    binet_w,
    fibonacci,
    gen_fib,
    horadam_u,
    horadam_w,
    lucas,
)
from .series import SeriesSpec, closed_form, evaluate, partial_sum, tail_bound
from .sweep import Grid, SweepReport, sweep
from .telescope import AbstractSequence, LemmaSides, telescope_fs, telescope_fs1, telescope_fs2

__version__ = "0.1.0"
