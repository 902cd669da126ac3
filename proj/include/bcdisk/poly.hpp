#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bicomplex.hpp"

namespace bcdisk {

namespace detail {

inline double magnitude(cplx c) { return std::abs(c); }
inline double magnitude(const Bicomplex& c) { return bc_norm(c); }

inline cplx conj_scalar(cplx c) { return std::conj(c); }
inline Bicomplex conj_scalar(const Bicomplex& c) { return bc_conj(c); }

inline cplx variable(cplx z, const cplx*) { return z; }
inline Bicomplex variable(cplx z, const Bicomplex*) { return bicomplexify(z); }

}  // namespace detail

/**
 * @brief Polynomial sum of c(m,n) v^m (v*)^n.
 *
 * For T = cplx the variable is z and v* = conj(z); for T = Bicomplex it is the
 * bicomplexified point, so v* is the bicomplexification of conj(z).  In both
 * cases d_var/d_conj differentiate in the first/second exponent exactly, which
 * for the bicomplex field are the operators del and delbar.
 */
template <class T>
class Poly {
public:
    using key_type = std::pair<int, int>;
    using map_type = std::map<key_type, T>;

    Poly() = default;

    static Poly constant(const T& c) { return monomial(0, 0, c); }
    static Poly var() { return monomial(1, 0, T(1.0)); }
    static Poly conj_var() { return monomial(0, 1, T(1.0)); }
    static Poly monomial(int m, int n, const T& c) {
        Poly p;
        p.add(m, n, c);
        return p;
    }

    void add(int m, int n, const T& c) {
        if (m < 0 || n < 0) throw std::invalid_argument("negative exponent");
        auto [it, fresh] = c_.try_emplace({m, n}, c);
        if (!fresh) it->second += c;
    }

    T coeff(int m, int n) const {
        auto it = c_.find({m, n});
        return it == c_.end() ? T{} : it->second;
    }

    const map_type& terms() const { return c_; }
    bool empty() const { return c_.empty(); }

    int max_degree() const {
        int d = 0;
        for (const auto& [k, c] : c_) d = std::max(d, k.first + k.second);
        return d;
    }

    /// Largest coefficient magnitude; zero for the zero polynomial.
    double max_coeff() const {
        double s = 0.0;
        for (const auto& [k, c] : c_) s = std::max(s, detail::magnitude(c));
        return s;
    }

    /// Drops coefficients at or below tol.
    Poly& prune(double tol = 0.0) {
        std::erase_if(c_, [tol](const auto& kv) { return detail::magnitude(kv.second) <= tol; });
        return *this;
    }

    T operator()(cplx z) const {
        const int d = max_degree();
        const T v = detail::variable(z, static_cast<const T*>(nullptr));
        const T w = detail::variable(std::conj(z), static_cast<const T*>(nullptr));
        std::vector<T> vp(d + 1, T(1.0)), wp(d + 1, T(1.0));
        for (int k = 1; k <= d; ++k) {
            vp[k] = vp[k - 1] * v;
            wp[k] = wp[k - 1] * w;
        }
        T s{};
        for (const auto& [k, c] : c_) s += c * vp[k.first] * wp[k.second];
        return s;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [k, c] : o.c_) add(k.first, k.second, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [k, c] : o.c_) add(k.first, k.second, -c);
        return *this;
    }
    Poly& operator*=(const T& s) {
        for (auto& [k, c] : c_) c *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= T(-1.0); }
    friend Poly operator*(Poly a, const T& s) { return a *= s; }
    friend Poly operator*(const T& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ka, ca] : a.c_)
            for (const auto& [kb, cb] : b.c_) r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }

private:
    map_type c_;
};

using ComplexPoly = Poly<cplx>;
using PolyField = Poly<Bicomplex>;

/// Formal derivative in the first exponent.
template <class T>
Poly<T> d_var(const Poly<T>& p) {
    Poly<T> r;
    for (const auto& [k, c] : p.terms())
        if (k.first > 0) r.add(k.first - 1, k.second, c * static_cast<double>(k.first));
    return r;
}

/// Formal derivative in the second exponent.
template <class T>
Poly<T> d_conj(const Poly<T>& p) {
    Poly<T> r;
    for (const auto& [k, c] : p.terms())
        if (k.second > 0) r.add(k.first, k.second - 1, c * static_cast<double>(k.second));
    return r;
}

inline PolyField d_z(const PolyField& f) { return d_var(f); }
inline PolyField d_zstar(const PolyField& f) { return d_conj(f); }
inline ComplexPoly d_z(const ComplexPoly& f) { return d_var(f); }
inline ComplexPoly d_zstar(const ComplexPoly& f) { return d_conj(f); }

/// Pointwise conjugate: complex conjugation for complex fields, bc_conj for bicomplex ones.
template <class T>
Poly<T> conj_field(const Poly<T>& p) {
    Poly<T> r;
    for (const auto& [k, c] : p.terms()) r.add(k.second, k.first, detail::conj_scalar(c));
    return r;
}

/// Multiplies by (v*)^k.
template <class T>
Poly<T> shift_conj(const Poly<T>& p, int k) {
    Poly<T> r;
    for (const auto& [key, c] : p.terms()) r.add(key.first, key.second + k, c);
    return r;
}

template <class T>
Poly<T> truncate(const Poly<T>& p, int max_degree) {
    Poly<T> r;
    for (const auto& [k, c] : p.terms())
        if (k.first + k.second <= max_degree) r.add(k.first, k.second, c);
    return r;
}

template <class T>
Poly<T> pow(const Poly<T>& p, int e) {
    Poly<T> r = Poly<T>::constant(T(1.0));
    for (int k = 0; k < e; ++k) r = r * p;
    return r;
}

/// Upper bound of sup |p| over the closed disk (sum of coefficient moduli).
inline double sup_bound(const ComplexPoly& p) {
    double s = 0.0;
    for (const auto& [k, c] : p.terms()) s += std::abs(c);
    return s;
}

/// Upper bound of sup ||f||_B over the closed disk, taken per idempotent component.
inline double sup_bound(const PolyField& f) {
    double a = 0.0, b = 0.0;
    for (const auto& [k, c] : f.terms()) {
        a += std::abs(c.plus());
        b += std::abs(c.minus());
    }
    return std::sqrt(0.5 * (a * a + b * b));
}

/// Exact L2 norm over the unit disk: only pairs with equal m - n interact.
inline double disk_l2_exact(const ComplexPoly& p) {
    double s = 0.0;
    for (const auto& [a, ca] : p.terms())
        for (const auto& [b, cb] : p.terms())
            if (a.first - a.second == b.first - b.second)
                s += (ca * std::conj(cb)).real() * 2.0 * std::numbers::pi /
                     (a.first + a.second + b.first + b.second + 2);
    return std::sqrt(std::max(s, 0.0));
}

/// w+ as a polynomial in z, z*: the plus part of v^m (v*)^n is (z*)^m z^n.
inline ComplexPoly plus_component(const PolyField& f) {
    ComplexPoly r;
    for (const auto& [k, c] : f.terms()) r.add(k.second, k.first, c.plus());
    return r;
}

inline ComplexPoly minus_component(const PolyField& f) {
    ComplexPoly r;
    for (const auto& [k, c] : f.terms()) r.add(k.first, k.second, c.minus());
    return r;
}

inline PolyField from_components(const ComplexPoly& plus, const ComplexPoly& minus) {
    PolyField r;
    for (const auto& [k, c] : plus.terms()) r.add(k.second, k.first, Bicomplex::idem(c, 0.0));
    for (const auto& [k, c] : minus.terms()) r.add(k.first, k.second, Bicomplex::idem(0.0, c));
    return r;
}

/// Embeds a complex polynomial in z, z* into both idempotent components.
inline PolyField embed(const ComplexPoly& p) { return from_components(p, p); }

/// del = p+ d/dz* + p- d/dz, evaluated on the idempotent components.
inline PolyField bc_del(const PolyField& f) {
    return from_components(d_conj(plus_component(f)), d_var(minus_component(f)));
}

/// delbar = p+ d/dz + p- d/dz*, evaluated on the idempotent components.
inline PolyField bc_delbar(const PolyField& f) {
    return from_components(d_var(plus_component(f)), d_conj(minus_component(f)));
}

inline void require_elliptic(const Bicomplex& mu) {
    if (!(bc_norm(mu) < 1.0)) throw std::domain_error("ellipticity violated: ||mu||_B >= 1");
}
inline void require_elliptic(cplx mu) {
    if (!(std::abs(mu) < 1.0)) throw std::domain_error("ellipticity violated: |mu| >= 1");
}

/// delbar f - mu del f.
inline PolyField beltrami_apply(const PolyField& f, const Bicomplex& mu) {
    require_elliptic(mu);
    return bc_delbar(f) - mu * bc_del(f);
}

/// df/dz* - mu df/dz.
inline ComplexPoly beltrami_apply(const ComplexPoly& f, cplx mu) {
    require_elliptic(mu);
    return d_conj(f) - mu * d_var(f);
}

}  // namespace bcdisk
