#pragma once

#include <complex>
#include <numbers>
#include <vector>

namespace stargraph {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// A point of the spectral plane together with a chosen square root of
/// lambda. Every quantity in this library is an even function of rho, so
/// the sign of the root never matters; the principal branch is the default.
struct SpectralPoint {
    Complex lambda;
    Complex rho;

    static SpectralPoint from_lambda(Complex lambda) {
        return {lambda, std::sqrt(lambda)};
    }
    static SpectralPoint from_rho(Complex rho) { return {rho * rho, rho}; }
};

/// Finite expansion over {cos(l x)}, l = 0..K, on [0, pi].
struct CosineSeries {
    std::vector<Complex> coeff;

    int modes() const { return static_cast<int>(coeff.size()); }
    Complex eval(double x) const {
        Complex v = 0.0;
        for (std::size_t l = 0; l < coeff.size(); ++l)
            v += coeff[l] * std::cos(static_cast<double>(l) * x);
        return v;
    }
    /// L2(0,pi) norm of the series.
    double l2_norm() const {
        double s = 0.0;
        for (std::size_t l = 0; l < coeff.size(); ++l)
            s += std::norm(coeff[l]) * (l == 0 ? kPi : kPi / 2.0);
        return std::sqrt(s);
    }
};

inline double l2_distance(const CosineSeries& a, const CosineSeries& b) {
    CosineSeries d;
    d.coeff.resize(std::max(a.coeff.size(), b.coeff.size()), Complex(0.0));
    for (std::size_t l = 0; l < d.coeff.size(); ++l) {
        Complex ca = l < a.coeff.size() ? a.coeff[l] : Complex(0.0);
        Complex cb = l < b.coeff.size() ? b.coeff[l] : Complex(0.0);
        d.coeff[l] = ca - cb;
    }
    return d.l2_norm();
}

}  // namespace stargraph
