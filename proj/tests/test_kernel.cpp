#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stargraph/errors.hpp"
#include "stargraph/kernel.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace stargraph;
using kernel::cos_moment;
using kernel::phi;
using kernel::phi_dlambda;
using kernel::phi_self_inner;
using kernel::phi_x;

namespace {
SpectralPoint L(Complex lambda) { return SpectralPoint::from_lambda(lambda); }
}  // namespace

TEST_CASE("phi closed-form values") {
    const Complex h(0.7, -0.3);
    CHECK(std::abs(phi(kPi, L(0.0), h) - (1.0 + h * kPi)) < 1e-14);
    CHECK(std::abs(phi(kPi, L(1.0), 0.0) - Complex(-1.0)) < 1e-14);
    CHECK(std::abs(phi(kPi, L(0.25), h) - 2.0 * h) < 1e-14);
}

TEST_CASE("phi_x closed-form values") {
    const Complex h(1.5, 0.25);
    CHECK(std::abs(phi_x(kPi, L(0.0), h) - h) < 1e-14);
    CHECK(std::abs(phi_x(kPi, L(1.0), 0.0)) < 1e-13);
    CHECK(std::abs(phi_x(kPi, L(0.25), 1.0) - Complex(-0.5)) < 1e-14);
}

TEST_CASE("evenness in rho") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> ux(0.0, kPi);
    for (int trial = 0; trial < 100; ++trial) {
        const double x = ux(rng);
        const Complex rho = oracles::random_in_disk(rng, 8.0);
        const Complex h = oracles::random_in_disk(rng, 3.0);
        const auto plus = SpectralPoint::from_rho(rho);
        const auto minus = SpectralPoint::from_rho(-rho);
        for (int order = 0; order <= 4; ++order) {
            const Complex a = phi_dlambda(x, plus, h, order);
            const Complex b = phi_dlambda(x, minus, h, order);
            CHECK(std::abs(a - b) <= 1e-13 * (1.0 + std::abs(a)));
        }
        const Complex ma = cos_moment(2, plus, h);
        const Complex mb = cos_moment(2, minus, h);
        CHECK(std::abs(ma - mb) <= 1e-13 * (1.0 + std::abs(ma)));
    }
}

TEST_CASE("smoothness at lambda = 0") {
    const Complex h(0.4, 1.1);
    const double x = 2.0;
    for (double eps : {1e-6, 1e-7, 1e-9, 1e-12}) {
        const Complex v = phi(x, L(Complex(eps, eps / 3.0)), h);
        CHECK(std::abs(v - (1.0 + h * x)) <= 20.0 * eps);
    }
}

TEST_CASE("differential equation residual in x") {
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> ux(0.2, kPi - 0.2);
    for (int trial = 0; trial < 20; ++trial) {
        const double x = ux(rng);
        const Complex lambda = oracles::random_in_disk(rng, 30.0);
        const Complex h = oracles::random_in_disk(rng, 2.0);
        const double dx = 1e-4;
        const Complex second = (phi(x + dx, L(lambda), h) - 2.0 * phi(x, L(lambda), h) +
                                phi(x - dx, L(lambda), h)) /
                               (dx * dx);
        CHECK(std::abs(-second - lambda * phi(x, L(lambda), h)) < 1e-6);
    }
}

TEST_CASE("initial conditions exact") {
    const Complex h(2.0, -1.0);
    for (Complex lambda : {Complex(3.0, 0.5), Complex(-4.0, 1.0), Complex(0.0)}) {
        CHECK(phi(0.0, L(lambda), h) == Complex(1.0));
        CHECK(phi_x(0.0, L(lambda), h) == h);
    }
}

TEST_CASE("phi lambda-derivatives against Richardson differences") {
    const Complex h(1.0, -0.5);
    auto f = [&](Complex lam) { return oracles::ref_phi(kPi, lam, h); };

    CHECK(std::abs(phi_dlambda(kPi, L(1.0), 0.0, 1) -
                   oracles::richardson_dlambda([](Complex lam) {
                       return oracles::ref_phi(kPi, lam, 0.0);
                   }, 1.0)) < 1e-9);

    const Complex z(2.3, 0.1);
    for (int order = 1; order <= 2; ++order) {
        const Complex got = phi_dlambda(kPi, L(z), h, order);
        const Complex ref = oracles::fd_dlambda(f, z, order, order == 1 ? 1e-5 : 1e-3);
        CHECK(std::abs(got - ref) <= 1e-7 * (1.0 + std::abs(got)));
    }
}

TEST_CASE("phi_dlambda order guard") {
    CHECK(std::abs(phi_dlambda(1.0, L(2.0), 0.5, 0) - phi(1.0, L(2.0), 0.5)) == 0.0);
    CHECK_THROWS_AS((void)phi_dlambda(1.0, L(2.0), 0.5, 5), OrderTooHigh);
}

TEST_CASE("cos_moment closed-form values") {
    const Complex h(0.8, 0.2);
    CHECK(std::abs(cos_moment(0, L(0.0), h) - (kPi + h * kPi * kPi / 2.0)) < 1e-13);
    CHECK(std::abs(cos_moment(1, L(1.0), 0.0) - Complex(kPi / 2.0)) < 1e-13);
}

TEST_CASE("cos_moment and phi_self_inner against adaptive quadrature") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> ul(0, 8);
    for (int trial = 0; trial < 60; ++trial) {
        const Complex lambda = trial % 3 == 0 ? oracles::random_lambda_in_strip(rng, 100.0)
                                              : oracles::random_in_disk(rng, 40.0);
        const Complex h = oracles::random_in_disk(rng, 2.0);
        const int l = ul(rng);
        const Complex want = oracles::integrate(
            [&](double x) { return std::cos(l * x) * oracles::ref_phi(x, lambda, h); }, 0.0,
            kPi);
        CHECK(std::abs(cos_moment(l, L(lambda), h) - want) <= 1e-10 * (1.0 + std::abs(want)));

        const Complex want2 = oracles::integrate(
            [&](double x) {
                const Complex p = oracles::ref_phi(x, lambda, h);
                return p * p;
            },
            0.0, kPi);
        CHECK(std::abs(phi_self_inner(L(lambda), h) - want2) <=
              1e-10 * (1.0 + std::abs(want2)));
    }
}

TEST_CASE("cos_moment confluent branch") {
    // lambda close to l^2 goes through the Taylor limit; compare to quadrature.
    for (double off : {0.0, 1e-9, 1e-6, 5e-5}) {
        const Complex lambda = Complex(4.0 + off, off / 2.0);
        const Complex h(1.0, 1.0);
        const Complex want = oracles::integrate(
            [&](double x) { return std::cos(2.0 * x) * oracles::ref_phi(x, lambda, h); }, 0.0,
            kPi);
        CHECK(std::abs(cos_moment(2, L(lambda), h) - want) <= 1e-11 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("phi_self_inner special values") {
    CHECK(std::abs(phi_self_inner(L(0.25), 0.0) - Complex(kPi / 2.0)) < 1e-13);
    CHECK(std::abs(phi_self_inner(L(0.0), 0.0) - Complex(kPi)) < 1e-13);
    // int (1 + h x)^2 dx = pi + h pi^2 + h^2 pi^3 / 3
    const Complex h(0.5, -0.25);
    CHECK(std::abs(phi_self_inner(L(0.0), h) -
                   (kPi + h * kPi * kPi + h * h * kPi * kPi * kPi / 3.0)) < 1e-12);
}

TEST_CASE("phi_pair_inner matches quadrature") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const Complex la = oracles::random_in_disk(rng, 30.0);
        const Complex lb = oracles::random_in_disk(rng, 30.0);
        const Complex h = oracles::random_in_disk(rng, 2.0);
        const Complex want = oracles::integrate(
            [&](double x) { return oracles::ref_phi(x, la, h) * oracles::ref_phi(x, lb, h); },
            0.0, kPi);
        CHECK(std::abs(kernel::phi_pair_inner(L(la), L(lb), h) - want) <=
              1e-10 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("adjoint kernel moments match quadrature") {
    std::mt19937_64 rng(1212);
    std::uniform_int_distribution<int> ul(0, 6);
    for (int trial = 0; trial < 30; ++trial) {
        const Complex lambda = oracles::random_in_disk(rng, 50.0);
        const Complex rho = std::sqrt(lambda);
        const int l = ul(rng);
        const Complex want_s = oracles::integrate(
            [&](double t) {
                const Complex arg = rho * (kPi - t);
                const Complex sk = std::abs(rho) < 1e-9 ? Complex(kPi - t)
                                                        : std::sin(arg) / rho;
                return sk * std::cos(l * t);
            },
            0.0, kPi);
        CHECK(std::abs(kernel::sin_kernel_moment(l, L(lambda)) - want_s) <=
              1e-10 * (1.0 + std::abs(want_s)));
        const Complex want_c = oracles::integrate(
            [&](double t) { return std::cos(rho * (kPi - t)) * std::cos(l * t); }, 0.0, kPi);
        CHECK(std::abs(kernel::cos_kernel_moment(l, L(lambda)) - want_c) <=
              1e-10 * (1.0 + std::abs(want_c)));
    }
}

TEST_CASE("cos_moment_dlambda against finite differences") {
    const Complex h(0.3, 0.9);
    auto f = [&](Complex lam) {
        return cos_moment(3, SpectralPoint::from_lambda(lam), h);
    };
    for (Complex z : {Complex(20.0, 1.0), Complex(-3.0, 0.4)}) {
        const Complex got = kernel::cos_moment_dlambda(3, L(z), h, 1);
        const Complex ref = oracles::richardson_dlambda(f, z);
        CHECK(std::abs(got - ref) <= 1e-7 * (1.0 + std::abs(got)));
    }
}
