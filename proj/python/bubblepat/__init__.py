"""Python interface to the bubblepat core."""

from ._bubblepat import (
    BasisResult,
    Classification,
    CountSequence,
    CrossCheck,
    DownsetReport,
    Error,
    Permutation,
    __version__,
    append_max,
    apply_chain,
    basis_one_lr,
    basis_special_three,
    basis_two_lr,
    bubble,
    bubble_k,
    bubble_recursive,
    check_set_class,
    classify,
    contains,
    count_av,
    count_av_naive,
    downset_check,
    empirical_basis,
    enumerate_sn,
    gamma,
    generate_r,
    growth_estimate,
    in_inverse_class,
    inverse_basis,
    inverse_basis_set,
    lr_decompose,
    minimal_elements,
    one_point_deletions,
    parse,
    practical_cap,
    run_suite,
    set_practical_cap,
    stack_pass,
    standardize,
    verify_gamma,
    witness_pair,
)

__all__ = [
    "BasisResult",
    "Classification",
    "CountSequence",
    "CrossCheck",
    "DownsetReport",
    "Error",
    "Permutation",
    "__version__",
    "append_max",
    "apply_chain",
    "basis_one_lr",
    "basis_special_three",
    "basis_two_lr",
    "bubble",
    "bubble_k",
    "bubble_recursive",
    "check_set_class",
    "classify",
    "contains",
    "count_av",
    "count_av_naive",
    "downset_check",
    "empirical_basis",
    "enumerate_sn",
    "gamma",
    "generate_r",
    "growth_estimate",
    "in_inverse_class",
    "inverse_basis",
    "inverse_basis_set",
    "lr_decompose",
    "minimal_elements",
    "one_point_deletions",
    "parse",
    "practical_cap",
    "run_suite",
    "set_practical_cap",
    "stack_pass",
    "standardize",
    "verify_gamma",
    "witness_pair",
]
