#ifndef BRAIDINV_SERIES_HPP
#define BRAIDINV_SERIES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "braidinv/rational.hpp"

namespace braidinv {

// Truncated formal power series in hbar with exact rational coefficients.
// All coefficients 0..order are stored; arithmetic is closed at the
// truncation order.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(int order, Rational constant = Rational(0))
        : coeffs_(static_cast<std::size_t>(order) + 1, Rational(0)) {
        if (order < 0) throw std::invalid_argument("negative truncation order");
        coeffs_[0] = constant;
    }

    static TruncatedSeries monomial(int order, Rational c, int power) {
        TruncatedSeries s(order);
        if (power <= order) s.coeffs_[static_cast<std::size_t>(power)] = c;
        return s;
    }

    // e^(c*hbar) truncated: coefficients c^k / k!.
    static TruncatedSeries exponential(int order, Rational c);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    void set_coeff(int k, const Rational& v) { coeffs_[static_cast<std::size_t>(k)] = v; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries operator-() const;

    // Multiplicative inverse; requires a unit constant term.
    TruncatedSeries inverse() const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
        return !(a == b);
    }

    // "c0 + c1*h + c2*h^2 + ... (mod h^<order+1>)" with rationals as p/q.
    std::string str() const;

private:
    void check_order(const TruncatedSeries& o) const {
        if (order() != o.order()) throw std::invalid_argument("series order mismatch");
    }

    std::vector<Rational> coeffs_;
};

}  // namespace braidinv

#endif
