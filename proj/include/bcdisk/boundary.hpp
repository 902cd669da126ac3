#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "bicomplex.hpp"

namespace bcdisk {

enum class BoundaryKind { fourier, samples };

/**
 * @brief A function on the unit circle, as Fourier coefficients of e^{ik theta}
 *        or as samples at theta_t = 2 pi t / n.
 *
 * V is cplx for real/complex data and Bicomplex for bicomplex data; the
 * Fourier modes are complex (unit i) scalars multiplying V.
 */
template <class V>
class BoundaryData {
public:
    BoundaryData() = default;

    static BoundaryData from_fourier(std::map<int, V> coeffs) {
        BoundaryData b;
        b.kind_ = BoundaryKind::fourier;
        b.fourier_ = std::move(coeffs);
        return b;
    }

    static BoundaryData from_samples(std::vector<V> values) {
        if (values.empty()) throw std::invalid_argument("boundary samples must be non-empty");
        BoundaryData b;
        b.kind_ = BoundaryKind::samples;
        b.samples_ = std::move(values);
        b.fourier_ = dft(b.samples_);
        return b;
    }

    BoundaryKind kind() const { return kind_; }
    const std::vector<V>& samples() const { return samples_; }

    /// Fourier coefficients; for sampled data these come from the DFT (|k| <= n/2).
    const std::map<int, V>& coefficients() const { return fourier_; }

    V operator()(double theta) const {
        V s{};
        for (const auto& [k, c] : fourier_) s += c * std::polar(1.0, k * theta);
        return s;
    }

    std::vector<V> sample(int n) const {
        if (kind_ == BoundaryKind::samples && static_cast<int>(samples_.size()) == n) return samples_;
        std::vector<V> out(n);
        for (int t = 0; t < n; ++t) out[t] = (*this)(2.0 * std::numbers::pi * t / n);
        return out;
    }

    int max_frequency() const {
        int d = 0;
        for (const auto& [k, c] : fourier_) d = std::max(d, std::abs(k));
        return d;
    }

private:
    static std::map<int, V> dft(const std::vector<V>& v) {
        const int n = static_cast<int>(v.size());
        std::map<int, V> out;
        for (int k = -n / 2; k <= n / 2; ++k) {
            V s{};
            for (int t = 0; t < n; ++t) s += v[t] * std::polar(1.0, -2.0 * std::numbers::pi * k * t / n);
            s *= 1.0 / n;
            // The Nyquist mode is shared between +n/2 and -n/2.
            if (n % 2 == 0 && std::abs(k) == n / 2) s *= 0.5;
            out[k] = s;
        }
        return out;
    }

    BoundaryKind kind_ = BoundaryKind::fourier;
    std::map<int, V> fourier_;
    std::vector<V> samples_;
};

using ComplexBoundary = BoundaryData<cplx>;
using RealBoundary = ComplexBoundary;
using BicomplexBoundary = BoundaryData<Bicomplex>;

/// True when the coefficients are conjugate symmetric (the data is real valued).
inline bool is_real_valued(const RealBoundary& g, double tol = 1e-12) {
    double scale = 1.0;
    for (const auto& [k, c] : g.coefficients()) scale = std::max(scale, std::abs(c));
    for (const auto& [k, c] : g.coefficients()) {
        auto it = g.coefficients().find(-k);
        const cplx partner = it == g.coefficients().end() ? cplx{} : it->second;
        if (std::abs(c - std::conj(partner)) > tol * scale) return false;
    }
    return true;
}

inline RealBoundary cos_mode(int k, double amplitude = 1.0) {
    if (k == 0) return RealBoundary::from_fourier({{0, amplitude}});
    return RealBoundary::from_fourier({{k, 0.5 * amplitude}, {-k, 0.5 * amplitude}});
}

inline RealBoundary sin_mode(int k, double amplitude = 1.0) {
    return RealBoundary::from_fourier({{k, -0.5 * I * amplitude}, {-k, 0.5 * I * amplitude}});
}

/// Real part of a complex trigonometric polynomial sum c_k e^{ik theta}.
inline RealBoundary real_part(const std::map<int, cplx>& coeffs) {
    std::map<int, cplx> out;
    for (const auto& [k, c] : coeffs) {
        out[k] += 0.5 * c;
        out[-k] += 0.5 * std::conj(c);
    }
    return RealBoundary::from_fourier(out);
}

}  // namespace bcdisk
