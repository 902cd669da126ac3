#pragma once

#include <random>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "hardy.hpp"
#include "poly.hpp"

namespace bcdisk {

/**
 * @brief Components w_0..w_{n-1} of sum_k (v*)^k w_k, each annihilated by delbar - mu del.
 *
 * T = cplx gives the complex form (v = z); T = Bicomplex the bicomplex form.
 */
template <class T>
struct HoibBundle {
    int order = 1;
    std::vector<Poly<T>> components;
    T mu{};

    void validate(double tol = 1e-12) const {
        if (order < 1) throw std::invalid_argument("HOIB order must be positive");
        if (static_cast<int>(components.size()) != order) throw std::invalid_argument("component count must equal order");
        for (const auto& w : components)
            if (beltrami_apply(w, mu).max_coeff() > tol)
                throw std::invalid_argument("bundle component is not annihilated by the Beltrami operator");
    }
};

/// (delbar - mu del)^k f.
template <class T>
Poly<T> beltrami_power(Poly<T> f, const T& mu, int k) {
    for (int i = 0; i < k; ++i) f = beltrami_apply(f, mu).prune();
    return f;
}

template <class T>
Poly<T> assemble(const HoibBundle<T>& b) {
    b.validate();
    Poly<T> w;
    for (int k = 0; k < b.order; ++k) w += shift_conj(b.components[k], k);
    return w.prune();
}

/// w_k = (1/k!) sum_{j=0}^{n-1-k} ((-1)^j / j!) (v*)^j L^{k+j} w, with L = delbar - mu del.
template <class T>
std::vector<Poly<T>> extract_components(const Poly<T>& w, const T& mu, int n, double tol = 1e-10) {
    if (n < 1) throw std::invalid_argument("HOIB order must be positive");
    std::vector<Poly<T>> iter{w};
    for (int k = 1; k <= n; ++k) iter.push_back(beltrami_apply(iter.back(), mu).prune());
    if (iter[n].max_coeff() > tol)
        throw std::invalid_argument("field is not annihilated by the n-th Beltrami iterate");
    std::vector<Poly<T>> out;
    double kfact = 1.0;
    for (int k = 0; k < n; ++k) {
        if (k > 0) kfact *= k;
        Poly<T> wk;
        double jfact = 1.0;
        for (int j = 0; j + k < n; ++j) {
            if (j > 0) jfact *= j;
            const double s = (j % 2 == 0 ? 1.0 : -1.0) / (jfact * kfact);
            wk += shift_conj(iter[k + j], j) * T(s);
        }
        out.push_back(wk.prune(tol * 1e-3));
    }
    return out;
}

/// A polynomial of degree <= degree in xi = v + mu v*, which L annihilates.
template <class T, class Rng>
Poly<T> random_mu_holomorphic(const T& mu, int degree, Rng& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Poly<T> xi = Poly<T>::var() + Poly<T>::conj_var() * mu;
    Poly<T> out, power = Poly<T>::constant(T(1.0));
    for (int d = 0; d <= degree; ++d) {
        T c;
        if constexpr (std::is_same_v<T, Bicomplex>)
            c = Bicomplex(cplx(u(rng), u(rng)), cplx(u(rng), u(rng)));
        else
            c = cplx(u(rng), u(rng));
        out += power * c;
        power = power * xi;
    }
    return out.prune();
}

template <class T, class Rng>
HoibBundle<T> random_bundle(const T& mu, int order, int degree, Rng& rng) {
    HoibBundle<T> b{order, {}, mu};
    for (int k = 0; k < order; ++k) b.components.push_back(random_mu_holomorphic(mu, degree, rng));
    return b;
}

/// sup over radii of the circle p-means of L^k w, for k = 0..n-1.
template <class T>
std::vector<double> hoib_hardy_seminorms(const Poly<T>& w, const T& mu, int n, double p,
                                         const std::vector<double>& radii, int n_theta = 256) {
    if (n < 1) throw std::invalid_argument("HOIB order must be positive");
    std::vector<double> out;
    Poly<T> f = w;
    for (int k = 0; k < n; ++k) {
        out.push_back(hardy_norm_estimate(f, p, radii, n_theta));
        f = beltrami_apply(f, mu).prune();
    }
    return out;
}

}  // namespace bcdisk
