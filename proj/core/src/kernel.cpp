#include "stabledrift/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stabledrift/quadrature.hpp"

namespace stabledrift {

namespace {

constexpr double kMomentTol = 1e-10;
constexpr double kQuadTol = 1e-13;

double eval_poly(const std::vector<double>& coeffs, double u) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * u + *it;
    return acc;
}

// integral of u^m over [-1, 1]
double monomial_integral(int m) {
    return (m % 2 == 0) ? 2.0 / (m + 1) : 0.0;
}

// Solve the (k+1)x(k+1) moment system for polynomial coefficients on [-1, 1]:
// row j enforces M_j = (j == 0 ? 1 : 0).
std::vector<double> solve_poly_coeffs(int k) {
    const int n = k + 1;
    std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
    for (int j = 0; j < n; ++j) {
        for (int l = 0; l < n; ++l)
            a[j][l] = monomial_integral(l + j);
        a[j][n] = (j == 0) ? 1.0 : 0.0;
    }

    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col]))
                pivot = r;
        if (std::abs(a[pivot][col]) < 1e-14)
            throw std::runtime_error("kernel: singular moment system");
        std::swap(a[col], a[pivot]);
        for (int r = 0; r < n; ++r) {
            if (r == col)
                continue;
            const double factor = a[r][col] / a[col][col];
            for (int c = col; c <= n; ++c)
                a[r][c] -= factor * a[col][c];
        }
    }

    std::vector<double> coeffs(n);
    for (int i = 0; i < n; ++i)
        coeffs[i] = a[i][n] / a[i][i];
    return coeffs;
}

} // namespace

Kernel Kernel::make(int order, KernelFamily family) {
    if (order < 0)
        throw std::domain_error("make_kernel: order must be >= 0");

    Kernel k;
    k.a_ = -1.0;
    k.b_ = 1.0;
    k.order_ = order;

    switch (family) {
    case KernelFamily::uniform:
        if (order > 1)
            throw std::domain_error(
                "make_kernel: uniform kernel satisfies the moment conditions only up to order 1");
        k.name_ = "uniform";
        k.eval_ = [](double) { return 0.5; };
        break;
    case KernelFamily::epanechnikov:
        if (order > 1)
            throw std::domain_error(
                "make_kernel: epanechnikov kernel satisfies the moment conditions only up to order 1");
        k.name_ = "epanechnikov";
        k.eval_ = [](double u) { return 0.75 * (1.0 - u * u); };
        break;
    case KernelFamily::polynomial: {
        k.name_ = "polynomial";
        std::vector<double> coeffs = solve_poly_coeffs(order);
        k.eval_ = [coeffs](double u) { return eval_poly(coeffs, u); };
        break;
    }
    }

    k.find_sign_changes();
    k.certify_and_cache();
    return k;
}

Kernel Kernel::custom(std::function<double(double)> eval, double a, double b,
                      int order, std::string name) {
    if (!(a < 0.0 && 0.0 < b))
        throw std::domain_error("Kernel::custom: support must satisfy A < 0 < B");
    if (order < 0)
        throw std::domain_error("Kernel::custom: order must be >= 0");
    Kernel k;
    k.name_ = std::move(name);
    k.a_ = a;
    k.b_ = b;
    k.order_ = order;
    k.eval_ = std::move(eval);
    k.find_sign_changes();
    k.certify_and_cache();
    return k;
}

void Kernel::find_sign_changes() {
    constexpr int kScan = 4096;
    roots_.clear();
    double prev_u = a_;
    double prev_g = eval_(prev_u);
    for (int i = 1; i <= kScan; ++i) {
        const double u = a_ + (b_ - a_) * i / kScan;
        const double g = eval_(u);
        if ((prev_g < 0.0 && g > 0.0) || (prev_g > 0.0 && g < 0.0)) {
            double lo = prev_u, hi = u, glo = prev_g;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double gm = eval_(mid);
                if ((glo < 0.0) == (gm < 0.0)) {
                    lo = mid;
                    glo = gm;
                } else {
                    hi = mid;
                }
            }
            roots_.push_back(0.5 * (lo + hi));
            if (roots_.size() > 64)
                throw std::runtime_error("kernel: sign-change isolation failed");
        }
        prev_u = u;
        prev_g = g;
    }
}

void Kernel::certify_and_cache() {
    moments_.resize(static_cast<std::size_t>(order_) + 2);
    for (int j = 0; j <= order_ + 1; ++j) {
        moments_[static_cast<std::size_t>(j)] = adaptive_integrate(
            [this, j](double u) { return std::pow(u, j) * eval_(u); }, a_, b_,
            kQuadTol);
    }

    if (std::abs(moments_[0] - 1.0) > kMomentTol)
        throw std::runtime_error("kernel certification failed: M_0 != 1 for " + name_);
    for (int j = 1; j <= order_; ++j) {
        if (std::abs(moments_[static_cast<std::size_t>(j)]) > kMomentTol)
            throw std::runtime_error("kernel certification failed: M_" +
                                     std::to_string(j) + " != 0 for " + name_);
    }
}

double Kernel::moment(int j) const {
    if (j < 0)
        throw std::domain_error("kernel_moment: order must be >= 0");
    if (j <= order_ + 1)
        return moments_[static_cast<std::size_t>(j)];
    return adaptive_integrate(
        [this, j](double u) { return std::pow(u, j) * eval_(u); }, a_, b_, kQuadTol);
}

double Kernel::abs_moment(int j) const {
    if (j < 0)
        throw std::domain_error("abs_moment: order must be >= 0");
    // |G u^j| has kinks at sign changes of G (and u = 0 for odd j); split there.
    std::vector<double> cuts{a_};
    for (double r : roots_)
        cuts.push_back(r);
    if (j % 2 == 1)
        cuts.push_back(0.0);
    cuts.push_back(b_);
    std::sort(cuts.begin(), cuts.end());

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += adaptive_integrate(
            [this, j](double u) { return std::abs(eval_(u) * std::pow(u, j)); },
            cuts[i], cuts[i + 1], kQuadTol);
    return total;
}

AlphaIntegrals Kernel::alpha_integrals(double alpha) const {
    return alpha_integrals_clipped(alpha, a_, b_);
}

AlphaIntegrals Kernel::alpha_integrals_clipped(double alpha, double lo,
                                               double hi) const {
    if (!(alpha > 1.0) || alpha > 2.0)
        throw std::domain_error("kernel_alpha_integrals: alpha must be in (1, 2]");
    AlphaIntegrals out;
    const double clip_lo = std::max(lo, a_);
    const double clip_hi = std::min(hi, b_);
    if (!(clip_lo < clip_hi))
        return out;

    std::vector<double> cuts{clip_lo};
    for (double r : roots_)
        if (r > clip_lo && r < clip_hi)
            cuts.push_back(r);
    cuts.push_back(clip_hi);

    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double piece_pos = adaptive_integrate(
            [this, alpha](double u) {
                const double g = eval_(u);
                return g > 0.0 ? std::pow(g, alpha) : 0.0;
            },
            cuts[i], cuts[i + 1], kQuadTol);
        const double piece_neg = adaptive_integrate(
            [this, alpha](double u) {
                const double g = eval_(u);
                return g < 0.0 ? std::pow(-g, alpha) : 0.0;
            },
            cuts[i], cuts[i + 1], kQuadTol);
        out.pos += piece_pos;
        out.neg += piece_neg;
        out.abs += adaptive_integrate(
            [this, alpha](double u) { return std::pow(std::abs(eval_(u)), alpha); },
            cuts[i], cuts[i + 1], kQuadTol);
    }
    return out;
}

double Kernel::min_value() const {
    constexpr int kScan = 4096;
    double m = eval_(a_);
    for (int i = 1; i <= kScan; ++i)
        m = std::min(m, eval_(a_ + (b_ - a_) * i / kScan));
    return m;
}

Kernel make_kernel(int k, KernelFamily family) { return Kernel::make(k, family); }

double kernel_moment(const Kernel& g, int j) { return g.moment(j); }

AlphaIntegrals kernel_alpha_integrals(const Kernel& g, double alpha) {
    return g.alpha_integrals(alpha);
}

KernelFamily kernel_family_from_name(const std::string& name) {
    if (name == "uniform")
        return KernelFamily::uniform;
    if (name == "epanechnikov")
        return KernelFamily::epanechnikov;
    if (name == "polynomial")
        return KernelFamily::polynomial;
    throw std::domain_error("unknown kernel family: " + name);
}

std::string kernel_family_name(KernelFamily family) {
    switch (family) {
    case KernelFamily::uniform:
        return "uniform";
    case KernelFamily::epanechnikov:
        return "epanechnikov";
    case KernelFamily::polynomial:
        return "polynomial";
    }
    return "unknown";
}

} // namespace stabledrift
