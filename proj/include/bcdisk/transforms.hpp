#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fd.hpp"
#include "operators.hpp"

namespace bcdisk {

namespace detail {

/// A real-valued coefficient field has equal, real idempotent components.
inline void require_real_field(const PolyField& mu, double tol = 1e-14) {
    const ComplexPoly m = minus_component(mu);
    if ((plus_component(mu) - m).max_coeff() > tol || (conj_field(m) - m).max_coeff() > tol)
        throw std::invalid_argument("coefficient field must be real valued");
}

/// Real value of a real-valued coefficient at z, rejecting |mu| >= 1.
inline double real_coefficient(const Bicomplex& v) {
    const double m = v.sc().real();
    if (!(std::abs(m) < 1.0)) throw std::domain_error("coefficient violates |mu| < 1");
    return m;
}

}  // namespace detail

/// delbar f - mu delbar conj(f).
inline PolyField conj_beltrami_residual(const PolyField& f, const PolyField& mu) {
    detail::require_real_field(mu);
    if (!(sup_bound(mu) < 1.0)) throw std::domain_error("coefficient violates sup |mu| < 1");
    return (bc_delbar(f) - mu * bc_delbar(conj_field(f))).prune();
}

/// delbar w - alpha conj(w).
inline PolyField vekua_residual(const PolyField& w, const PolyField& alpha) {
    return (bc_delbar(w) - alpha * conj_field(w)).prune();
}

/// Pointwise Vekua residual with finite-difference delbar.
template <class W, class A>
Bicomplex vekua_residual_at(const W& w, const A& alpha, cplx z, double h = default_fd_step) {
    return fd_bicomplex(w, z, h).delbar - Bicomplex(alpha(z)) * bc_conj(Bicomplex(w(z)));
}

struct GfoeCoefficients {
    Bicomplex mu1;
    Bicomplex mu2;
    PolyField A;
    PolyField B;

    void validate() const {
        if (!(bc_norm(mu1) + bc_norm(mu2) < 1.0)) throw std::domain_error("ellipticity violated: ||mu1|| + ||mu2|| >= 1");
    }
};

/// delbar w - mu1 del w - mu2 delbar conj(w) - A w - B conj(w) - f.
inline PolyField gfoe_residual(const PolyField& w, const GfoeCoefficients& c, const PolyField& f = {}) {
    c.validate();
    const PolyField wb = conj_field(w);
    return (bc_delbar(w) - c.mu1 * bc_del(w) - c.mu2 * bc_delbar(wb) - c.A * w - c.B * wb - f).prune();
}

/// How the conjugate of w+ enters the component equations.
enum class ComponentConjugate {
    swap,          // conj(w) has plus part w-: exact for every field
    componentwise  // conj(w) has plus part (w+)*: the form used when Sc and Vec are real
};

/**
 * @brief The two complex equations of the idempotent split, as residual polynomials.
 *
 * plus:  dw+/dz - mu1+ dw+/dz* - mu2+ d(c+)/dz - A+ w+ - B+ c+ - f+,
 * minus: dw-/dz* - mu1- dw-/dz - mu2- d(c-)/dz* - A- w- - B- c- - f-,
 * where c+ and c- are the components of conj(w) under the chosen rule.
 */
inline std::pair<ComplexPoly, ComplexPoly> gfoe_split(const PolyField& w, const GfoeCoefficients& c,
                                                      const PolyField& f = {},
                                                      ComponentConjugate rule = ComponentConjugate::swap) {
    c.validate();
    const ComplexPoly wp = plus_component(w), wm = minus_component(w);
    const ComplexPoly cp = rule == ComponentConjugate::swap ? wm : conj_field(wp);
    const ComplexPoly cm = rule == ComponentConjugate::swap ? wp : conj_field(wm);
    const ComplexPoly plus = d_var(wp) - c.mu1.plus() * d_conj(wp) - c.mu2.plus() * d_var(cp) -
                             plus_component(c.A) * wp - plus_component(c.B) * cp - plus_component(f);
    const ComplexPoly minus = d_conj(wm) - c.mu1.minus() * d_var(wm) - c.mu2.minus() * d_conj(cm) -
                              minus_component(c.A) * wm - minus_component(c.B) * cm - minus_component(f);
    return {ComplexPoly(plus).prune(), ComplexPoly(minus).prune()};
}

struct AlphaSeries {
    PolyField alpha;
    int terms = 0;             // geometric terms mu^{2k}, k < terms
    double error_bound = 0.0;  // sup bound of the discarded tail
};

/**
 * @brief alpha = -delbar(mu) / (1 - mu^2) with the geometric series truncated after mu^degree.
 *
 * The tail bound is s^{2K} / (1 - s^2) sup|delbar mu| with s a sup bound of |mu|.
 */
inline AlphaSeries alpha_from_mu(const PolyField& mu, int degree = 12) {
    detail::require_real_field(mu);
    const double s = sup_bound(mu);
    if (!(s < 1.0)) throw std::domain_error("coefficient violates sup |mu| < 1");
    if (degree < 0) throw std::invalid_argument("series degree must be non-negative");
    const PolyField dmu = bc_delbar(mu);
    const PolyField mu2 = mu * mu;
    AlphaSeries out;
    out.terms = degree / 2 + 1;
    PolyField geo, power = PolyField::constant(1.0);
    for (int k = 0; k < out.terms; ++k) {
        geo += power;
        power = power * mu2;
    }
    out.alpha = (-(dmu * geo)).prune();
    out.error_bound = std::pow(s, 2.0 * out.terms) / (1.0 - s * s) * sup_bound(dmu);
    return out;
}

/// Pointwise alpha from the exact delbar of a polynomial mu.
inline Bicomplex alpha_at(const PolyField& mu, cplx z) {
    const double m = detail::real_coefficient(mu(z));
    return -bc_delbar(mu)(z) * (1.0 / (1.0 - m * m));
}

/// Pointwise alpha with delbar(mu) taken by finite differences.
template <class M>
Bicomplex alpha_fd_at(const M& mu, cplx z, double h = default_fd_step) {
    const double m = detail::real_coefficient(Bicomplex(mu(z)));
    return -fd_bicomplex(mu, z, h).delbar * (1.0 / (1.0 - m * m));
}

/// w = (f - mu conj f) / sqrt(1 - mu^2) at a point; mu is real.
inline Bicomplex conjbel_to_vekua(const Bicomplex& f, double mu) {
    if (!(std::abs(mu) < 1.0)) throw std::domain_error("coefficient violates |mu| < 1");
    return (f - bc_conj(f) * mu) * (1.0 / std::sqrt(1.0 - mu * mu));
}

/// f = (w + mu conj w) / sqrt(1 - mu^2) at a point; mu is real.
inline Bicomplex vekua_to_conjbel(const Bicomplex& w, double mu) {
    if (!(std::abs(mu) < 1.0)) throw std::domain_error("coefficient violates |mu| < 1");
    return (w + bc_conj(w) * mu) * (1.0 / std::sqrt(1.0 - mu * mu));
}

template <class F, class M>
BicomplexField conjbel_to_vekua(const F& f, const M& mu) {
    return [f, mu](cplx z) { return conjbel_to_vekua(Bicomplex(f(z)), detail::real_coefficient(Bicomplex(mu(z)))); };
}

template <class W, class M>
BicomplexField vekua_to_conjbel(const W& w, const M& mu) {
    return [w, mu](cplx z) { return vekua_to_conjbel(Bicomplex(w(z)), detail::real_coefficient(Bicomplex(mu(z)))); };
}

/// Exact transform for a constant real mu, where the square root is a number.
inline PolyField conjbel_to_vekua(const PolyField& f, double mu) {
    if (!(std::abs(mu) < 1.0)) throw std::domain_error("coefficient violates |mu| < 1");
    return ((f - conj_field(f) * Bicomplex(mu)) * Bicomplex(1.0 / std::sqrt(1.0 - mu * mu))).prune();
}

}  // namespace bcdisk
