#include "stargraph/asymptotics.hpp"

#include "stargraph/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace stargraph {

namespace {

// Coefficients (ascending) of prod_{g != skip} (z - value_g), weighted sums.
std::vector<Complex> stationary_poly(const std::vector<HGroup>& groups) {
    const int s = static_cast<int>(groups.size());
    std::vector<Complex> p(static_cast<std::size_t>(s), Complex(0.0));
    for (int g = 0; g < s; ++g) {
        std::vector<Complex> q{Complex(1.0)};
        for (int g2 = 0; g2 < s; ++g2) {
            if (g2 == g) continue;
            std::vector<Complex> next(q.size() + 1, Complex(0.0));
            for (std::size_t i = 0; i < q.size(); ++i) {
                next[i] -= groups[static_cast<std::size_t>(g2)].value * q[i];
                next[i + 1] += q[i];
            }
            q = std::move(next);
        }
        const double mult = groups[static_cast<std::size_t>(g)].multiplicity();
        for (std::size_t i = 0; i < q.size(); ++i)
            p[i] += mult * q[i];
    }
    return p;  // degree s-1, leading coefficient sum of multiplicities
}

Complex poly_eval(const std::vector<Complex>& c, Complex z) {
    Complex v = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * z + c[i];
    return v;
}

Complex poly_eval_deriv(const std::vector<Complex>& c, Complex z) {
    Complex v = 0.0;
    for (std::size_t i = c.size(); i-- > 1;)
        v = v * z + static_cast<double>(i) * c[i];
    return v;
}

// Companion-matrix eigenvalues plus one Newton polish.
std::vector<Complex> poly_roots(const std::vector<Complex>& coeff) {
    const int deg = static_cast<int>(coeff.size()) - 1;
    if (deg <= 0) return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i)
        companion(i, deg - 1) = -coeff[static_cast<std::size_t>(i)] / coeff.back();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion);
    std::vector<Complex> roots;
    roots.reserve(static_cast<std::size_t>(deg));
    for (int i = 0; i < deg; ++i) {
        Complex z = solver.eigenvalues()(i);
        const Complex dp = poly_eval_deriv(coeff, z);
        if (std::abs(dp) > 0) z -= poly_eval(coeff, z) / dp;
        roots.push_back(z);
    }
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
}

double min_pairwise_distance(const std::vector<Complex>& values) {
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            d = std::min(d, std::abs(values[i] - values[j]));
    return d;
}

}  // namespace

HConfiguration classify_h(const std::vector<Complex>& h) {
    if (h.size() < 2)
        throw ValidationError("classify_h: at least two edges required");

    HConfiguration conf;
    conf.h = h;
    for (int j = 0; j < static_cast<int>(h.size()); ++j) {
        auto it = std::find_if(conf.groups.begin(), conf.groups.end(), [&](const HGroup& g) {
            return g.value == h[static_cast<std::size_t>(j)];
        });
        if (it == conf.groups.end())
            conf.groups.push_back({h[static_cast<std::size_t>(j)], {j}});
        else
            it->edges.push_back(j);
    }

    Complex mean = 0.0;
    for (const Complex& v : h) mean += v;
    conf.z1 = mean / static_cast<double>(h.size());

    const auto poly = stationary_poly(conf.groups);
    conf.zk = poly_roots(poly);

    std::vector<Complex> all;
    for (const auto& g : conf.groups) all.push_back(g.value);
    all.insert(all.end(), conf.zk.begin(), conf.zk.end());
    double maxabs = 0.0;
    for (const Complex& v : all) maxabs = std::max(maxabs, std::abs(v));
    const double distinct_tol = 1e-10 * (1.0 + maxabs);
    conf.min_separation = min_pairwise_distance(all);

    const bool distinct = conf.min_separation > distinct_tol;
    if (!conf.has_repeats()) {
        conf.cls = distinct ? HClass::Star : HClass::Inadmissible;
    } else {
        bool z1_clear = true;
        for (const Complex& v : all)
            if (std::abs(v - conf.z1) <= distinct_tol) z1_clear = false;
        conf.cls = (distinct && z1_clear) ? HClass::Bullet : HClass::Inadmissible;
    }
    return conf;
}

std::vector<Complex> stationary_roots(const std::vector<Complex>& h) {
    const HConfiguration conf = classify_h(h);
    if (conf.cls == HClass::Inadmissible)
        throw ValidationError("stationary_roots: configuration is inadmissible");
    const auto poly = stationary_poly(conf.groups);
    double scale = 0.0;
    for (const Complex& c : poly) scale = std::max(scale, std::abs(c));
    for (const Complex& z : conf.zk) {
        if (std::abs(poly_eval(poly, z)) > 1e-12 * scale)
            throw RootFindingFailure("stationary_roots: residual above 1e-12 * scale");
    }
    return conf.zk;
}

AsymptoticTemplate make_template(const HConfiguration& hconf) {
    AsymptoticTemplate tmpl;
    tmpl.z1 = hconf.z1;
    tmpl.zk = hconf.zk;
    tmpl.branches.push_back({hconf.z1, -1});
    for (const Complex& z : hconf.zk) tmpl.branches.push_back({z, -1});
    for (const auto& g : hconf.groups) {
        for (int copy = 1; copy < g.multiplicity(); ++copy)
            tmpl.branches.push_back({g.value, g.edges.front()});
    }
    return tmpl;
}

Spectrum asymptotic_spectrum(const AsymptoticTemplate& tmpl, int N) {
    if (N < 1) throw ValidationError("asymptotic_spectrum: N >= 1 required");
    Spectrum sp;
    sp.m = tmpl.m();
    sp.source = NumberingSource::computed;
    for (int n = 0; n < N; ++n)
        for (int k = 1; k <= tmpl.m(); ++k)
            sp.entries.push_back({n, k, tmpl.value(n, k), 1, n == 0});
    sp.recompute_n_simple();
    return sp;
}

ZhResult zh_member(Complex h, int depth, const Config& cfg) {
    if (depth < 1) throw ValidationError("zh_member: depth >= 1 required");
    ZhResult res;
    for (int l = 1; l <= depth; ++l) {
        // Seed for the l-th upper-half-plane root of sin(rho) = rho.
        const double xr = 2.0 * kPi * l + kPi / 2.0;
        Complex rho(xr, std::log(2.0 * xr));
        bool converged = false;
        for (int it = 0; it < 50; ++it) {
            const Complex f = std::sin(rho) - rho;
            const Complex df = std::cos(rho) - 1.0;
            const Complex step = f / df;
            rho -= step;
            if (std::abs(step) < 1e-14 * (1.0 + std::abs(rho))) {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw NewtonDivergence("zh_member: sin(rho)=rho seed " + std::to_string(l) +
                                   " did not converge");
        const Complex elem = -rho / (2.0 * kPi) * (std::cos(rho / 2.0) / std::sin(rho / 2.0));
        res.elements.push_back(elem);
        res.elements.push_back(std::conj(elem));
    }
    double margin = std::numeric_limits<double>::infinity();
    for (const Complex& e : res.elements) margin = std::min(margin, std::abs(h - e));
    res.margin = margin;
    res.member = margin < cfg.zh_tol;
    return res;
}

RemainderProfile fit_remainders(const Spectrum& spectrum, const AsymptoticTemplate& tmpl) {
    RemainderProfile prof;
    const int m = tmpl.m();
    prof.kappa.resize(static_cast<std::size_t>(m));
    prof.partial_sums.resize(static_cast<std::size_t>(m));
    prof.plateau_ratio.assign(static_cast<std::size_t>(m), 0.0);

    for (int k = 1; k <= m; ++k) {
        auto& row = prof.kappa[static_cast<std::size_t>(k - 1)];
        auto& sums = prof.partial_sums[static_cast<std::size_t>(k - 1)];
        double acc = 0.0;
        for (const auto& e : spectrum.entries) {
            if (e.k != k || e.n < 1 || e.placeholder) continue;
            const double n = e.n;
            const Complex sq = std::sqrt(e.lambda);
            Complex kap;
            if (k == 1)
                kap = n * (sq - n) - tmpl.z1 / kPi;
            else
                kap = n * n *
                      (sq - (n + 0.5) -
                       tmpl.branches[static_cast<std::size_t>(k - 1)].z / (kPi * (n + 0.5)));
            row.push_back(kap);
            acc += std::norm(kap);
            sums.push_back(acc);
        }
        if (!sums.empty() && sums.back() > 0.0) {
            const std::size_t cut =
                static_cast<std::size_t>(0.9 * static_cast<double>(sums.size()));
            const double at_cut = cut == 0 ? 0.0 : sums[cut - 1];
            prof.plateau_ratio[static_cast<std::size_t>(k - 1)] =
                (sums.back() - at_cut) / sums.back();
        }
    }
    return prof;
}

}  // namespace stargraph
