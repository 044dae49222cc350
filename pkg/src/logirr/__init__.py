"""Exact linear forms in logarithms, arithmetic denominator savings, saddle
asymptotics, and assembled irrationality-exponent bounds for log 2, the
span of log 2 and pi, and the span of log 2 and log 3."""

__version__ = "0.1.0"

from .exact import BigFloat, GaussianRational, Rational, lcm_upto, ordp_factorial, primes_in
from .logforms import HGParams, LogLinearForm, linear_form, integral_value
from .valuation import StepFunction, phi_denominator, phi_tilde, minimize_varpi, digamma
from .asympt import BoundReport, ExponentProduct, assemble_bound
from .simforms import HataConfig, HataFamily, expand_form, hata_bound
from .polyforms import hn_validate, hn_simultaneous_forms, rhin_polynomial, search_gstar
from .hyper import gauss_2f1, appell_f1, ramanujan_pi

__all__ = [
    "BigFloat", "GaussianRational", "Rational",
    "lcm_upto", "ordp_factorial", "primes_in",
    "HGParams", "LogLinearForm", "linear_form", "integral_value",
    "StepFunction", "phi_denominator", "phi_tilde", "minimize_varpi", "digamma",
    "BoundReport", "ExponentProduct", "assemble_bound",
    "HataConfig", "HataFamily", "expand_form", "hata_bound",
    "hn_validate", "hn_simultaneous_forms", "rhin_polynomial", "search_gstar",
    "gauss_2f1", "appell_f1", "ramanujan_pi",
]
