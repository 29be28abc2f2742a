"""Truncated q-series engine and congruence checker for regular overpartitions."""

from .congruence import CongruenceClaim, check_claim, source_series
from .errors import (
    InsufficientPrecision,
    NotAUnit,
    NotCoprime,
    ParseError,
    QVerifyError,
    SeriesError,
    TooLarge,
    UnknownCheck,
    UnknownIdentity,
)
from .eta import EtaQuotientSpec, expand_eta_quotient, gen_lmu_regular, gen_overpartitions, gen_ppo
from .expr import eval_expr, f, phi, phi_neg, q
from .identities import verify_all, verify_identity
from .kernels import BACKEND
from .parse import parse_eta
from .report import CheckReport, Witness
from .series import TruncatedSeries, eq_up_to, extract_progression, invert, mul
from .theorems import run_all, run_check

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CheckReport", "CongruenceClaim", "EtaQuotientSpec", "InsufficientPrecision",
    "NotAUnit", "NotCoprime", "ParseError", "QVerifyError", "SeriesError", "TooLarge",
    "TruncatedSeries", "UnknownCheck", "UnknownIdentity", "Witness", "check_claim", "eq_up_to",
    "eval_expr", "expand_eta_quotient", "extract_progression", "f", "gen_lmu_regular",
    "gen_overpartitions", "gen_ppo", "invert", "mul", "parse_eta", "phi", "phi_neg", "q",
    "run_all", "run_check", "source_series", "verify_all", "verify_identity",
]
