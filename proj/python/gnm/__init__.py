"""Exact independence numbers and first-moment predictions for G(n, m)."""

from ._gnm import (
    BudgetExceeded,
    Graph,
    NotMaximum,
    alpha_bruteforce,
    alpha_exact,
    classify_pair,
    complement,
    count_min2_matrices,
    count_variables,
    eta_bar,
    extend_from_mis,
    induced_subgraph,
    is_augmented_ind_set,
    is_extended_ind_set,
    is_independent,
    k_vanilla,
    k_zero,
    log_expected_ind_sets,
    log_x_prime,
    max_extended_order,
    phi,
    phi_exact_mixture,
    predict,
    run_suite,
    sample_gnm,
    sample_gnp,
    solve_lambda_c,
    suite_names,
    trunc_pmf,
)

__all__ = [name for name in dir() if not name.startswith("_")]
