#pragma once

#include <functional>
#include <string>
#include <vector>

namespace stabledrift {

enum class KernelFamily { uniform, epanechnikov, polynomial };

struct AlphaIntegrals {
    double abs = 0.0; // integral of |G|^alpha
    double pos = 0.0; // integral of (G_+)^alpha
    double neg = 0.0; // integral of (G_-)^alpha
};

// A compactly supported weight function G on [A, B] with A < 0 < B that
// integrates to one and has vanishing moments of orders 1..k. Construction
// certifies the moment conditions to 1e-10 and caches M_0..M_{k+1}; kernels
// are immutable afterwards and safe to share across threads.
class Kernel {
public:
    static Kernel make(int order, KernelFamily family);

    // User-supplied weight; certified against the same moment conditions for
    // the requested order. Support must satisfy a < 0 < b.
    static Kernel custom(std::function<double(double)> eval, double a, double b,
                         int order, std::string name = "custom");

    // Zero outside the support.
    double operator()(double u) const {
        return (u < a_ || u > b_) ? 0.0 : eval_(u);
    }

    double support_a() const { return a_; }
    double support_b() const { return b_; }
    int order() const { return order_; }
    const std::string& name() const { return name_; }

    // M_j = integral of u^j G(u); cached for j <= order + 1, quadrature
    // otherwise.
    double moment(int j) const;
    const std::vector<double>& cached_moments() const { return moments_; }

    // Integral of |G(u) u^j|.
    double abs_moment(int j) const;

    // Integrals of (G_+)^alpha, (G_-)^alpha and |G|^alpha over the support,
    // or over the support intersected with [lo, hi].
    AlphaIntegrals alpha_integrals(double alpha) const;
    AlphaIntegrals alpha_integrals_clipped(double alpha, double lo, double hi) const;

    // Interior sign changes of G, used to split the alpha integrals at the
    // kinks of |G|^alpha.
    const std::vector<double>& sign_changes() const { return roots_; }

    // Minimum of G over a dense scan of the support.
    double min_value() const;

private:
    Kernel() = default;
    void find_sign_changes();
    void certify_and_cache();

    std::string name_;
    double a_ = -1.0;
    double b_ = 1.0;
    int order_ = 0;
    std::function<double(double)> eval_;
    std::vector<double> roots_;
    std::vector<double> moments_; // M_0 .. M_{order_+1}
};

// Free functions mirroring the module operations.
Kernel make_kernel(int k, KernelFamily family);
double kernel_moment(const Kernel& g, int j);
AlphaIntegrals kernel_alpha_integrals(const Kernel& g, double alpha);

KernelFamily kernel_family_from_name(const std::string& name);
std::string kernel_family_name(KernelFamily family);

} // namespace stabledrift
