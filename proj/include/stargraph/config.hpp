#pragma once

namespace stargraph {

/// Numerical knobs shared across the library. Defaults are the values the
/// test suites and the CLI assume; override per call where a different
/// trade-off is wanted.
struct Config {
    // kernel
    double series_rho_pi = 1e-3;   ///< |rho|*pi below which phi/phi_x switch to Taylor series
    double deriv_series_lambda = 1.0;  ///< |lambda| below which lambda-derivatives use series
    int nu_max = 4;                ///< maximal supported lambda-derivative order
    double confluent_rel = 1e-4;   ///< |l^2 - lambda| < confluent_rel*(1+|lambda|) -> limit branch

    // forward solver
    int n_low = 3;                 ///< shells handled by exhaustive contour subdivision
    double im_rho_max = 5.0;       ///< half-height of the low-shell sweep in the rho plane
    double newton_step_tol = 1e-13;
    int newton_max_iter = 50;
    double residual_rel = 1e-9;    ///< eigenvalue residual bound relative to shell scale
    double cluster_radius_rel = 1e-7;  ///< multiplicity clustering radius factor

    // products
    int n_direct_default = 300;
    int tail_factor = 10;          ///< n_tail = tail_factor * n_direct by default
    double ref_guard = 1e-8;       ///< switch to locally deflated product near reference zeros

    // inverse
    double chi_guard = 1e-6;       ///< floor for |phi_s(pi, mu)| relative to shell scale
    double case_ii_detect = 1e-8;
    double case_ii_ambiguous = 1e-6;
    double ill_cond_threshold = 1e10;
    int k_out_default = 64;

    // characterization
    double plateau_threshold = 0.05;   ///< last-decile growth fraction accepted as plateau
    int min_shells_decidable = 50;
    double mu_match_tol = 1e-6;

    // Z_h membership test
    int zh_depth = 20;
    double zh_tol = 1e-8;
};

}  // namespace stargraph
