#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bcdisk {

using cplx = std::complex<double>;

inline constexpr cplx I{0.0, 1.0};

/// Idempotent coordinates (w+, w-) of a bicomplex number.
struct IdempotentPair {
    cplx plus;
    cplx minus;

    friend bool operator==(const IdempotentPair&, const IdempotentPair&) = default;
};

/**
 * @brief Bicomplex number w = Sc w + j Vec w with j^2 = -1 and ij = ji.
 *
 * Values are held in idempotent coordinates, so products are componentwise
 * and the idempotent round trip is bit-exact.
 */
class Bicomplex {
public:
    constexpr Bicomplex() = default;
    constexpr Bicomplex(double x) : p_(x), m_(x) {}
    constexpr Bicomplex(cplx z) : p_(z), m_(z) {}
    Bicomplex(cplx sc, cplx vec) : p_(sc - I * vec), m_(sc + I * vec) {}

    static constexpr Bicomplex idem(cplx plus, cplx minus) {
        Bicomplex w;
        w.p_ = plus;
        w.m_ = minus;
        return w;
    }
    static constexpr Bicomplex idem(const IdempotentPair& q) { return idem(q.plus, q.minus); }

    static constexpr Bicomplex j() { return idem(-I, I); }
    static constexpr Bicomplex p_plus() { return idem(1.0, 0.0); }
    static constexpr Bicomplex p_minus() { return idem(0.0, 1.0); }

    constexpr cplx plus() const { return p_; }
    constexpr cplx minus() const { return m_; }
    cplx sc() const { return 0.5 * (p_ + m_); }
    cplx vec() const { return 0.5 * I * (p_ - m_); }

    Bicomplex& operator+=(const Bicomplex& o) { p_ += o.p_; m_ += o.m_; return *this; }
    Bicomplex& operator-=(const Bicomplex& o) { p_ -= o.p_; m_ -= o.m_; return *this; }
    Bicomplex& operator*=(const Bicomplex& o) { p_ *= o.p_; m_ *= o.m_; return *this; }
    Bicomplex& operator*=(cplx s) { p_ *= s; m_ *= s; return *this; }
    Bicomplex& operator*=(double s) { p_ *= s; m_ *= s; return *this; }
    Bicomplex& operator/=(double s) { p_ /= s; m_ /= s; return *this; }

    friend Bicomplex operator+(Bicomplex a, const Bicomplex& b) { return a += b; }
    friend Bicomplex operator-(Bicomplex a, const Bicomplex& b) { return a -= b; }
    friend Bicomplex operator*(Bicomplex a, const Bicomplex& b) { return a *= b; }
    friend Bicomplex operator*(Bicomplex a, cplx s) { return a *= s; }
    friend Bicomplex operator*(cplx s, Bicomplex a) { return a *= s; }
    friend Bicomplex operator*(Bicomplex a, double s) { return a *= s; }
    friend Bicomplex operator*(double s, Bicomplex a) { return a *= s; }
    friend Bicomplex operator/(Bicomplex a, double s) { return a /= s; }
    friend Bicomplex operator-(const Bicomplex& a) { return idem(-a.p_, -a.m_); }

    friend bool operator==(const Bicomplex& a, const Bicomplex& b) { return a.p_ == b.p_ && a.m_ == b.m_; }

private:
    cplx p_{};
    cplx m_{};
};

inline Bicomplex mul(const Bicomplex& a, const Bicomplex& b) { return a * b; }

/// Cartesian product (u1 + j u2)(v1 + j v2), kept as an oracle for the componentwise one.
inline Bicomplex mul_cartesian(const Bicomplex& a, const Bicomplex& b) {
    const cplx u1 = a.sc(), u2 = a.vec(), v1 = b.sc(), v2 = b.vec();
    return Bicomplex(u1 * v1 - u2 * v2, u1 * v2 + u2 * v1);
}

inline IdempotentPair to_idempotent(const Bicomplex& w) { return {w.plus(), w.minus()}; }
inline Bicomplex from_idempotent(const IdempotentPair& q) { return Bicomplex::idem(q); }

/// Sc w - j Vec w; in idempotent coordinates this swaps the components.
inline Bicomplex bc_conj(const Bicomplex& w) { return Bicomplex::idem(w.minus(), w.plus()); }

inline double bc_norm(const Bicomplex& w) {
    return std::sqrt(0.5 * (std::norm(w.plus()) + std::norm(w.minus())));
}

/// x + iy -> x + jy.
inline Bicomplex bicomplexify(cplx z) { return Bicomplex::idem(std::conj(z), z); }

/// Relative distance in the bicomplex norm.
inline double bc_rel_error(const Bicomplex& a, const Bicomplex& b) {
    const double s = std::max({bc_norm(a), bc_norm(b), 1e-300});
    return bc_norm(a - b) / s;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline double parse_double(std::string_view s, std::string_view what) {
    std::string tmp(trim(s));
    if (tmp.empty()) throw std::invalid_argument("empty number in " + std::string(what));
    char* end = nullptr;
    const double v = std::strtod(tmp.c_str(), &end);
    if (end != tmp.c_str() + tmp.size()) throw std::invalid_argument("bad number '" + tmp + "' in " + std::string(what));
    return v;
}

// Finds where the imaginary term starts: the last sign that is not an exponent sign.
inline std::size_t split_point(std::string_view s) {
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') return k;
    }
    return std::string_view::npos;
}

}  // namespace detail

/// Parses `a`, `bi`, `a+bi` or `a-bi`.
inline cplx parse_complex(std::string_view text) {
    std::string_view s = detail::trim(text);
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    if (s.back() != 'i') return {detail::parse_double(s, text), 0.0};
    s.remove_suffix(1);
    const std::size_t k = detail::split_point(s);
    auto imag_of = [&](std::string_view t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return detail::parse_double(t, text);
    };
    if (k == std::string_view::npos) return {0.0, imag_of(s)};
    return {detail::parse_double(s.substr(0, k), text), imag_of(s.substr(k))};
}

/// Parses `a+bi|c+di` (sc|vec), `idem:p|q`, or a bare complex (vec = 0).
inline Bicomplex parse_bicomplex(std::string_view text) {
    std::string_view s = detail::trim(text);
    bool idem = false;
    if (s.substr(0, 5) == "idem:") {
        idem = true;
        s.remove_prefix(5);
    }
    const std::size_t bar = s.find('|');
    if (bar == std::string_view::npos) {
        if (idem) throw std::invalid_argument("idem: literal needs two components");
        return Bicomplex(parse_complex(s));
    }
    const cplx a = parse_complex(s.substr(0, bar));
    const cplx b = parse_complex(s.substr(bar + 1));
    return idem ? Bicomplex::idem(a, b) : Bicomplex(a, b);
}

inline std::string format_complex(cplx z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (std::signbit(z.imag()) ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

inline std::string format_bicomplex(const Bicomplex& w) {
    return format_complex(w.sc()) + "|" + format_complex(w.vec());
}

inline std::ostream& operator<<(std::ostream& os, const Bicomplex& w) { return os << format_bicomplex(w); }

}  // namespace bcdisk
