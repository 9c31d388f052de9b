#include "stargraph/kernel.hpp"

#include "stargraph/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace stargraph::kernel {

namespace {

// Factorials up to the largest index the series evaluations can reach.
double factorial(int n) {
    static const auto table = [] {
        std::array<double, 171> t{};
        t[0] = 1.0;
        for (std::size_t i = 1; i < t.size(); ++i)
            t[i] = t[i - 1] * static_cast<double>(i);
        return t;
    }();
    return table[static_cast<std::size_t>(n)];
}

}  // namespace

TrigPoly TrigPoly::dlambda() const {
    // d/dlambda [rho^e cos(rho x)] = (e/2) rho^{e-2} cos - (x/2) rho^{e-1} sin
    // d/dlambda [rho^e sin(rho x)] = (e/2) rho^{e-2} sin + (x/2) rho^{e-1} cos
    TrigPoly out(x_);
    for (const auto& [e, a] : cos_) {
        if (e != 0) out.add_cos(e - 2, 0.5 * static_cast<double>(e) * a);
        out.add_sin(e - 1, -0.5 * x_ * a);
    }
    for (const auto& [e, b] : sin_) {
        if (e != 0) out.add_sin(e - 2, 0.5 * static_cast<double>(e) * b);
        out.add_cos(e - 1, 0.5 * x_ * b);
    }
    return out;
}

TrigPoly TrigPoly::dlambda(int order) const {
    TrigPoly out = *this;
    for (int i = 0; i < order; ++i) out = out.dlambda();
    return out;
}

Complex TrigPoly::eval_closed(const SpectralPoint& sp) const {
    const Complex c = std::cos(sp.rho * x_);
    const Complex s = std::sin(sp.rho * x_);
    Complex v = 0.0;
    for (const auto& [e, a] : cos_) v += a * std::pow(sp.rho, e) * c;
    for (const auto& [e, b] : sin_) v += b * std::pow(sp.rho, e) * s;
    return v;
}

Complex TrigPoly::eval_series(Complex lambda) const {
    // Collect Taylor coefficients of lambda^q. Terms that would contribute
    // to q < 0 cancel identically and are dropped.
    constexpr int kMaxQ = 48;
    std::array<Complex, kMaxQ + 1> cq{};
    for (const auto& [e, a] : cos_) {
        const int q0 = e / 2;
        for (int k = 0; k + q0 <= kMaxQ; ++k) {
            const int q = q0 + k;
            if (q < 0) continue;
            const double mag = std::pow(x_, 2 * k) / factorial(2 * k);
            cq[q] += a * ((k % 2 == 0) ? mag : -mag);
        }
    }
    for (const auto& [e, b] : sin_) {
        const int q0 = (e + 1) / 2;  // e odd, division exact
        for (int k = 0; k + q0 <= kMaxQ; ++k) {
            const int q = q0 + k;
            if (q < 0) continue;
            const double mag = std::pow(x_, 2 * k + 1) / factorial(2 * k + 1);
            cq[q] += b * ((k % 2 == 0) ? mag : -mag);
        }
    }
    Complex v = 0.0;
    for (int q = kMaxQ; q >= 0; --q) v = v * lambda + cq[q];
    return v;
}

Complex TrigPoly::eval(const SpectralPoint& sp, const Config& cfg) const {
    int e_min = 1;
    if (!cos_.empty()) e_min = std::min(e_min, cos_.begin()->first);
    if (!sin_.empty()) e_min = std::min(e_min, sin_.begin()->first);

    const double arho = std::abs(sp.rho);
    const bool use_series = (e_min >= -1)
                                ? (arho * kPi < cfg.series_rho_pi)
                                : (std::abs(sp.lambda) <= cfg.deriv_series_lambda);
    return use_series ? eval_series(sp.lambda) : eval_closed(sp);
}

TrigPoly phi_poly(double x, Complex h) {
    TrigPoly p(x);
    p.add_cos(0, 1.0);
    p.add_sin(-1, h);
    return p;
}

TrigPoly phi_x_poly(double x, Complex h) {
    TrigPoly p(x);
    p.add_cos(0, h);
    p.add_sin(1, -1.0);
    return p;
}

Complex ConfluentRatio::eval(const SpectralPoint& sp, const Config& cfg) const {
    return eval_dlambda(sp, 0, cfg);
}

Complex ConfluentRatio::eval_dlambda(const SpectralPoint& sp, int order,
                                     const Config& cfg) const {
    const Complex delta = sp.lambda - pole_;
    if (std::abs(delta) >= cfg.confluent_rel * (1.0 + std::abs(sp.lambda))) {
        // r = N/(lambda-pole); r^{(nu)} = (N^{(nu)} - nu r^{(nu-1)})/(lambda-pole)
        Complex r = (c0_ + num_.eval(sp, cfg)) / delta;
        for (int nu = 1; nu <= order; ++nu) {
            const Complex dn = num_.dlambda(nu).eval(sp, cfg);
            r = (dn - static_cast<double>(nu) * r) / delta;
        }
        return r;
    }
    // Taylor around the pole. N(pole) = 0 by construction, so
    // r(pole+d) = sum_{j>=0} N^{(j+1)}(pole) d^j / (j+1)!.
    const SpectralPoint at_pole = SpectralPoint::from_lambda(pole_);
    constexpr int kExtra = 6;
    Complex sum = 0.0;
    for (int j = order; j <= order + kExtra; ++j) {
        const Complex dn = num_.dlambda(j + 1).eval(at_pole, cfg);
        const double w = factorial(j) / (factorial(j - order) * factorial(j + 1));
        sum += dn * w * std::pow(delta, j - order);
    }
    return sum;
}

Complex phi(double x, const SpectralPoint& sp, Complex h, const Config& cfg) {
    return phi_poly(x, h).eval(sp, cfg);
}

Complex phi_x(double x, const SpectralPoint& sp, Complex h, const Config& cfg) {
    return phi_x_poly(x, h).eval(sp, cfg);
}

Complex phi_dlambda(double x, const SpectralPoint& sp, Complex h, int order,
                    const Config& cfg) {
    if (order < 0 || order > cfg.nu_max)
        throw OrderTooHigh("phi_dlambda: derivative order " + std::to_string(order) +
                           " exceeds nu_max = " + std::to_string(cfg.nu_max));
    return phi_poly(x, h).dlambda(order).eval(sp, cfg);
}

Complex phi_x_dlambda(double x, const SpectralPoint& sp, Complex h, int order,
                      const Config& cfg) {
    if (order < 0 || order > cfg.nu_max)
        throw OrderTooHigh("phi_x_dlambda: derivative order " + std::to_string(order) +
                           " exceeds nu_max = " + std::to_string(cfg.nu_max));
    return phi_x_poly(x, h).dlambda(order).eval(sp, cfg);
}

namespace {

// Numerator of the cos_moment ratio:
//   N(lambda) = (-1)^l rho sin(rho pi) + h (1 - (-1)^l cos(rho pi)).
ConfluentRatio cos_moment_ratio(int l, Complex h) {
    const double sgn = (l % 2 == 0) ? 1.0 : -1.0;
    TrigPoly num(kPi);
    num.add_sin(1, sgn);
    num.add_cos(0, -h * sgn);
    return ConfluentRatio(h, std::move(num),
                          Complex(static_cast<double>(l) * l, 0.0));
}

}  // namespace

Complex cos_moment(int l, const SpectralPoint& sp, Complex h, const Config& cfg) {
    return cos_moment_ratio(l, h).eval(sp, cfg);
}

Complex cos_moment_dlambda(int l, const SpectralPoint& sp, Complex h, int order,
                           const Config& cfg) {
    return cos_moment_ratio(l, h).eval_dlambda(sp, order, cfg);
}

Complex phi_self_inner(const SpectralPoint& sp, Complex h, const Config& cfg) {
    // pi/2 + O E / 2 + h O^2 + h^2 (pi/2 - O E / 2)/lambda,
    // with O = sin(rho pi)/rho, E = cos(rho pi).
    TrigPoly o_poly(kPi), e_poly(kPi);
    o_poly.add_sin(-1, 1.0);
    e_poly.add_cos(0, 1.0);
    const Complex O = o_poly.eval(sp, cfg);
    const Complex E = e_poly.eval(sp, cfg);

    Complex q;  // (pi/2 - O E / 2)/lambda, removable at 0
    if (std::abs(sp.rho) * kPi < 1e-2) {
        // pi/2 - sin(2 rho pi)/(4 rho) = sum_{k>=1} (-1)^{k+1} (2 pi)^{2k+1} lambda^k /(4 (2k+1)!)
        Complex acc = 0.0;
        Complex lpow = 1.0;  // lambda^{k-1}
        for (int k = 1; k <= 24; ++k) {
            const double mag = std::pow(2.0 * kPi, 2 * k + 1) / (4.0 * factorial(2 * k + 1));
            acc += ((k % 2 == 1) ? mag : -mag) * lpow;
            lpow *= sp.lambda;
        }
        q = acc;
    } else {
        q = (kPi / 2.0 - O * E / 2.0) / sp.lambda;
    }
    return kPi / 2.0 + O * E / 2.0 + h * O * O + h * h * q;
}

Complex phi_pair_inner(const SpectralPoint& a, const SpectralPoint& b, Complex h,
                       const Config& cfg) {
    const Complex diff = a.lambda - b.lambda;
    if (std::abs(diff) <= 1e-8 * (1.0 + std::abs(a.lambda) + std::abs(b.lambda))) {
        return phi_self_inner(SpectralPoint::from_lambda(0.5 * (a.lambda + b.lambda)),
                              h, cfg);
    }
    // Lagrange identity: (lb - la) int phi_a phi_b = [phi_b phi_a' - phi_a phi_b']_0^pi,
    // and the x = 0 boundary term vanishes by the shared Robin condition.
    const Complex pa = phi(kPi, a, h, cfg), pb = phi(kPi, b, h, cfg);
    const Complex da = phi_x(kPi, a, h, cfg), db = phi_x(kPi, b, h, cfg);
    return (pb * da - pa * db) / (b.lambda - a.lambda);
}

namespace {

// Numerator of sin_kernel_moment: (-1)^l - cos(rho pi).
ConfluentRatio sin_kernel_ratio(int l) {
    const double sgn = (l % 2 == 0) ? 1.0 : -1.0;
    TrigPoly num(kPi);
    num.add_cos(0, -1.0);
    return ConfluentRatio(sgn, std::move(num),
                          Complex(static_cast<double>(l) * l, 0.0));
}

// Numerator of cos_kernel_moment: rho sin(rho pi).
ConfluentRatio cos_kernel_ratio(int l) {
    TrigPoly num(kPi);
    num.add_sin(1, 1.0);
    return ConfluentRatio(0.0, std::move(num),
                          Complex(static_cast<double>(l) * l, 0.0));
}

}  // namespace

Complex sin_kernel_moment(int l, const SpectralPoint& sp, const Config& cfg) {
    return sin_kernel_ratio(l).eval(sp, cfg);
}

Complex sin_kernel_moment_dlambda(int l, const SpectralPoint& sp, int order,
                                  const Config& cfg) {
    return sin_kernel_ratio(l).eval_dlambda(sp, order, cfg);
}

Complex cos_kernel_moment(int l, const SpectralPoint& sp, const Config& cfg) {
    return cos_kernel_ratio(l).eval(sp, cfg);
}

Complex cos_kernel_moment_dlambda(int l, const SpectralPoint& sp, int order,
                                  const Config& cfg) {
    return cos_kernel_ratio(l).eval_dlambda(sp, order, cfg);
}

}  // namespace stargraph::kernel
