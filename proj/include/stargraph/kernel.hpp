#pragma once

#include "stargraph/common.hpp"
#include "stargraph/config.hpp"

#include <map>

namespace stargraph::kernel {

/// Entire function of lambda of the form
///   sum_e a_e rho^e cos(rho x) + sum_e b_e rho^e sin(rho x),
/// closed under d/dlambda = (2 rho)^{-1} d/drho. Exponent parity (even for
/// cos terms, odd for sin terms) keeps every instance even in rho, hence a
/// single-valued entire function of lambda. Near rho = 0 the terms with
/// negative exponents cancel; evaluation switches to the Taylor series in
/// lambda there.
class TrigPoly {
public:
    TrigPoly() = default;
    explicit TrigPoly(double x) : x_(x) {}

    void add_cos(int rho_power, Complex coeff) { cos_[rho_power] += coeff; }
    void add_sin(int rho_power, Complex coeff) { sin_[rho_power] += coeff; }

    TrigPoly dlambda() const;
    TrigPoly dlambda(int order) const;

    Complex eval(const SpectralPoint& sp, const Config& cfg = {}) const;

    double x() const { return x_; }

private:
    Complex eval_closed(const SpectralPoint& sp) const;
    Complex eval_series(Complex lambda) const;

    double x_ = 0.0;
    std::map<int, Complex> cos_;  // even exponents
    std::map<int, Complex> sin_;  // odd exponents
};

/// Seeds: phi(x,.) = cos(rho x) + h sin(rho x)/rho and its x-derivative.
TrigPoly phi_poly(double x, Complex h);
TrigPoly phi_x_poly(double x, Complex h);

/// (c0 + T(lambda)) / (lambda - pole) with a removable singularity at the
/// pole, evaluated through the Taylor expansion of the numerator when
/// lambda is close to it.
class ConfluentRatio {
public:
    ConfluentRatio(Complex c0, TrigPoly num, Complex pole)
        : c0_(c0), num_(std::move(num)), pole_(pole) {}

    Complex eval(const SpectralPoint& sp, const Config& cfg = {}) const;
    /// order-th lambda-derivative of the ratio.
    Complex eval_dlambda(const SpectralPoint& sp, int order,
                         const Config& cfg = {}) const;

private:
    Complex c0_;
    TrigPoly num_;
    Complex pole_;
};

// -- public kernel operations ------------------------------------------------

/// phi(x, lambda) = cos(rho x) + h sin(rho x)/rho; phi(x, 0) = 1 + h x.
Complex phi(double x, const SpectralPoint& sp, Complex h, const Config& cfg = {});

/// d phi / dx = -rho sin(rho x) + h cos(rho x).
Complex phi_x(double x, const SpectralPoint& sp, Complex h, const Config& cfg = {});

/// order-th lambda-derivative of phi. Throws OrderTooHigh beyond cfg.nu_max.
Complex phi_dlambda(double x, const SpectralPoint& sp, Complex h, int order,
                    const Config& cfg = {});

/// order-th lambda-derivative of phi_x.
Complex phi_x_dlambda(double x, const SpectralPoint& sp, Complex h, int order,
                      const Config& cfg = {});

/// int_0^pi cos(l x) phi(x, lambda) dx in closed form.
Complex cos_moment(int l, const SpectralPoint& sp, Complex h, const Config& cfg = {});

/// order-th lambda-derivative of cos_moment.
Complex cos_moment_dlambda(int l, const SpectralPoint& sp, Complex h, int order,
                           const Config& cfg = {});

/// int_0^pi phi(x, lambda)^2 dx (bilinear, no conjugation).
Complex phi_self_inner(const SpectralPoint& sp, Complex h, const Config& cfg = {});

/// int_0^pi phi(x, lambda1) phi(x, lambda2) dx (bilinear).
Complex phi_pair_inner(const SpectralPoint& a, const SpectralPoint& b, Complex h,
                       const Config& cfg = {});

/// int_0^pi sin(rho(pi - t))/rho cos(l t) dt  (Volterra sine kernel moment).
Complex sin_kernel_moment(int l, const SpectralPoint& sp, const Config& cfg = {});
Complex sin_kernel_moment_dlambda(int l, const SpectralPoint& sp, int order,
                                  const Config& cfg = {});

/// int_0^pi cos(rho(pi - t)) cos(l t) dt.
Complex cos_kernel_moment(int l, const SpectralPoint& sp, const Config& cfg = {});
Complex cos_kernel_moment_dlambda(int l, const SpectralPoint& sp, int order,
                                  const Config& cfg = {});

}  // namespace stargraph::kernel
