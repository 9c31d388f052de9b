#pragma once

#include "stargraph/common.hpp"
#include "stargraph/config.hpp"
#include "stargraph/spectrum.hpp"

#include <vector>

namespace stargraph {

enum class HClass { Star, Bullet, Inadmissible };

/// One group of equal Robin coefficients (grouping normalizes equal values
/// to be consecutive, keeping first-occurrence order).
struct HGroup {
    Complex value;
    std::vector<int> edges;  // 0-based original edge indices
    int multiplicity() const { return static_cast<int>(edges.size()); }
};

struct HConfiguration {
    std::vector<Complex> h;  // original order
    HClass cls = HClass::Inadmissible;
    std::vector<HGroup> groups;
    Complex z1;               // multiplicity-weighted mean of h
    std::vector<Complex> zk;  // roots of the (deflated) stationary polynomial
    double min_separation = 0.0;  // smallest pairwise distance in {h_g} u {z_k}

    int m() const { return static_cast<int>(h.size()); }
    int group_count() const { return static_cast<int>(groups.size()); }
    bool has_repeats() const { return group_count() < m(); }
};

/// Grouping, stationary polynomial roots and admissibility class of h.
HConfiguration classify_h(const std::vector<Complex>& h);

/// The m-1 roots of P(z) = d/dz prod (z - h_j), deflated under repeats.
/// Throws RootFindingFailure if a refined root fails the residual bound.
std::vector<Complex> stationary_roots(const std::vector<Complex>& h);

/// Branch layout of the eigenvalue shells: branch 1 sits near integers with
/// constant z1; every other branch near half-integers with its constant.
struct AsymptoticTemplate {
    struct Branch {
        Complex z;
        int mu_edge = -1;  // >= 0: branch tracking the Dirichlet zeros of that edge
    };
    Complex z1;
    std::vector<Complex> zk;
    std::vector<Branch> branches;  // size m; branches[0] = {z1, -1}

    int m() const { return static_cast<int>(branches.size()); }

    /// sqrt(lambda^0_{nk}); k is 1-based. Branch 1 requires n >= 1.
    Complex sqrt_value(int n, int k) const {
        if (k == 1) {
            if (n == 0) return std::sqrt(Complex(2.0 / kPi) * z1);
            return static_cast<double>(n) + z1 / (kPi * n);
        }
        const double c = n + 0.5;
        return c + branches[static_cast<std::size_t>(k - 1)].z / (kPi * c);
    }
    Complex value(int n, int k) const {
        const Complex s = sqrt_value(n, k);
        return s * s;
    }
};

AsymptoticTemplate make_template(const HConfiguration& hconf);

/// Template eigenvalues for shells 0..N-1; the n = 0 shell entries are
/// extrapolations flagged as placeholders.
Spectrum asymptotic_spectrum(const AsymptoticTemplate& tmpl, int N);

struct ZhResult {
    bool member = false;
    double margin = 0.0;            // distance from h to the nearest element
    std::vector<Complex> elements;  // computed elements of Z_h
};

/// Tests h against the exclusion set Z_h = {-rho cot(rho/2)/(2 pi):
/// sin(rho) = rho, rho != 0}, using the first `depth` root pairs.
ZhResult zh_member(Complex h, int depth = 20, const Config& cfg = {});

struct RemainderProfile {
    // one row per branch k = 1..m
    std::vector<std::vector<Complex>> kappa;
    std::vector<std::vector<double>> partial_sums;  // running sum of |kappa|^2
    std::vector<double> plateau_ratio;              // last-decile growth fraction
};

/// Remainder sequences kappa_{nk} of the shell asymptotics, with their
/// partial-sum-of-squares profiles.
RemainderProfile fit_remainders(const Spectrum& spectrum, const AsymptoticTemplate& tmpl);

}  // namespace stargraph
