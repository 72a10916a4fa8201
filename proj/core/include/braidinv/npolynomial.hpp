#ifndef BRAIDINV_NPOLYNOMIAL_HPP
#define BRAIDINV_NPOLYNOMIAL_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidinv/rational.hpp"

namespace braidinv {

// Polynomial in the formal symbol N. Coefficient index = power of N; no
// trailing zeros (the zero polynomial has an empty coefficient list).
template <typename Coeff>
class BasicNPolynomial {
public:
    BasicNPolynomial() = default;

    static BasicNPolynomial monomial(Coeff c, int power) {
        BasicNPolynomial p;
        if (power < 0) throw std::invalid_argument("negative power of N");
        if (!(c == Coeff(0))) {
            p.coeffs_.resize(static_cast<std::size_t>(power) + 1, Coeff(0));
            p.coeffs_.back() = c;
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Coeff coeff(int power) const {
        if (power < 0 || power >= static_cast<int>(coeffs_.size())) return Coeff(0);
        return coeffs_[static_cast<std::size_t>(power)];
    }

    void add_monomial(Coeff c, int power) {
        if (power < 0) throw std::invalid_argument("negative power of N");
        if (static_cast<int>(coeffs_.size()) <= power)
            coeffs_.resize(static_cast<std::size_t>(power) + 1, Coeff(0));
        coeffs_[static_cast<std::size_t>(power)] = coeffs_[static_cast<std::size_t>(power)] + c;
        trim();
    }

    friend BasicNPolynomial operator+(const BasicNPolynomial& a, const BasicNPolynomial& b) {
        BasicNPolynomial r = a;
        if (r.coeffs_.size() < b.coeffs_.size()) r.coeffs_.resize(b.coeffs_.size(), Coeff(0));
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            r.coeffs_[i] = r.coeffs_[i] + b.coeffs_[i];
        r.trim();
        return r;
    }

    friend BasicNPolynomial operator-(const BasicNPolynomial& a, const BasicNPolynomial& b) {
        BasicNPolynomial r = a;
        if (r.coeffs_.size() < b.coeffs_.size()) r.coeffs_.resize(b.coeffs_.size(), Coeff(0));
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            r.coeffs_[i] = r.coeffs_[i] - b.coeffs_[i];
        r.trim();
        return r;
    }

    friend BasicNPolynomial operator*(const Coeff& c, const BasicNPolynomial& p) {
        BasicNPolynomial r;
        if (c == Coeff(0)) return r;
        r.coeffs_ = p.coeffs_;
        for (auto& x : r.coeffs_) x = x * c;
        r.trim();
        return r;
    }

    friend bool operator==(const BasicNPolynomial& a, const BasicNPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const BasicNPolynomial& a, const BasicNPolynomial& b) {
        return !(a == b);
    }

    Coeff evaluate(Coeff n_value) const {
        Coeff acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * n_value + coeffs_[i];
        return acc;
    }

    // "N^4 + 2*N^2", highest power first; "0" when zero.
    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (int p = degree(); p >= 0; --p) {
            Coeff c = coeff(p);
            if (c == Coeff(0)) continue;
            if (!s.empty()) s += " + ";
            if (p == 0) {
                s += coeff_str(c);
            } else {
                if (!(c == Coeff(1))) s += coeff_str(c) + "*";
                s += (p == 1) ? "N" : "N^" + std::to_string(p);
            }
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const BasicNPolynomial& p) {
        return os << p.str();
    }

private:
    static std::string coeff_str(const Coeff& c) {
        if constexpr (std::is_same_v<Coeff, Rational>)
            return c.str();
        else
            return std::to_string(c);
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == Coeff(0)) coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

using NPolynomial = BasicNPolynomial<std::int64_t>;
using RationalNPolynomial = BasicNPolynomial<Rational>;

inline RationalNPolynomial to_rational_polynomial(const NPolynomial& p) {
    RationalNPolynomial r;
    for (int i = 0; i <= p.degree(); ++i)
        if (p.coeff(i) != 0) r.add_monomial(Rational(p.coeff(i)), i);
    return r;
}

}  // namespace braidinv

#endif
