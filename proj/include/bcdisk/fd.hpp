#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "bicomplex.hpp"

namespace bcdisk {

inline constexpr double default_fd_step = 1e-4;

struct Wirtinger {
    cplx dz;
    cplx dzbar;
};

struct BcWirtinger {
    Bicomplex del;
    Bicomplex delbar;
};

namespace detail {

inline void check_stencil(cplx z, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
    if (std::abs(z) + h > 1.0) throw std::domain_error("finite-difference stencil leaves the closed disk");
}

template <class F>
auto central_partials(const F& f, cplx z, double h) {
    check_stencil(z, h);
    const auto fx = (f(z + h) - f(z - h)) * (0.5 / h);
    const auto fy = (f(z + cplx(0.0, h)) - f(z - cplx(0.0, h))) * (0.5 / h);
    return std::pair{fx, fy};
}

}  // namespace detail

/// Centred-difference Wirtinger derivatives of a complex-valued field.
template <class F>
Wirtinger fd_wirtinger(const F& f, cplx z, double h = default_fd_step) {
    const auto [fx, fy] = detail::central_partials(f, z, h);
    return {0.5 * (cplx(fx) - I * cplx(fy)), 0.5 * (cplx(fx) + I * cplx(fy))};
}

/// Centred-difference bicomplex operators: del = (d_x - j d_y)/2, delbar = (d_x + j d_y)/2.
template <class F>
BcWirtinger fd_bicomplex(const F& f, cplx z, double h = default_fd_step) {
    const auto [fx, fy] = detail::central_partials(f, z, h);
    const Bicomplex gx = fx, gy = fy, j = Bicomplex::j();
    return {0.5 * (gx - j * gy), 0.5 * (gx + j * gy)};
}

}  // namespace bcdisk
