"""Exact verification toolkit for the graded-algebra side of loop space
homology: Euler-Poincare series, free graded Lie dimension oracles and
Bockstein module decompositions over F_p."""

from f2lie._core import (
    basis_census,
    chi_symmetric,
    chi_tensor,
    chi_w,
    closed_form_eupo,
    commutator_dims,
    default_grid,
    free_lie_dims,
    hilbert_f2k,
    hilbert_omega2,
    hilbert_omegaj,
    jacobi_check,
    not_verifiable,
    run_all,
    verify_eupo,
    verify_filtration,
    verify_homosl,
    verify_sigma2l,
    verify_sigma_f2,
    verify_sll,
    verify_smash_kl,
    CapTooLargeError,
    F2LieError,
)

__all__ = [
    "basis_census",
    "chi_symmetric",
    "chi_tensor",
    "chi_w",
    "closed_form_eupo",
    "commutator_dims",
    "default_grid",
    "free_lie_dims",
    "hilbert_f2k",
    "hilbert_omega2",
    "hilbert_omegaj",
    "jacobi_check",
    "not_verifiable",
    "run_all",
    "verify_eupo",
    "verify_filtration",
    "verify_homosl",
    "verify_sigma2l",
    "verify_sigma_f2",
    "verify_sll",
    "verify_smash_kl",
    "CapTooLargeError",
    "F2LieError",
]
