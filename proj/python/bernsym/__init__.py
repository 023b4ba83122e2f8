"""Exact generalized Bernoulli numbers, Dirichlet characters, power sums,
p-adic invariant integrals, and machine verification of their symmetry
identities.

All exact values cross the boundary as strings ("p/q") or as
{"order": m, "coeffs": [...]} dicts describing elements of the m-th
cyclotomic field in its power basis, matching the CLI's JSON output.
"""

from ._core import (
    bernoulli_number,
    bernoulli_poly,
    characters,
    chi_eval,
    convergence,
    euler_phi,
    gen_bernoulli_number,
    gen_bernoulli_poly,
    gen_bernoulli_series_egf,
    padic_valuation,
    power_sum,
    riemann_sum,
    shift_check,
    verify,
)

__all__ = [
    "bernoulli_number",
    "bernoulli_poly",
    "characters",
    "chi_eval",
    "convergence",
    "euler_phi",
    "gen_bernoulli_number",
    "gen_bernoulli_poly",
    "gen_bernoulli_series_egf",
    "padic_valuation",
    "power_sum",
    "riemann_sum",
    "shift_check",
    "verify",
]
