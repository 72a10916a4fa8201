#include "braidinv/series.hpp"

namespace braidinv {

TruncatedSeries TruncatedSeries::exponential(int order, Rational c) {
    TruncatedSeries s(order, Rational(1));
    Rational term(1);
    for (int k = 1; k <= order; ++k) {
        term = term * c / Rational(k);
        s.coeffs_[static_cast<std::size_t>(k)] = term;
    }
    return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_order(b);
    TruncatedSeries r = a;
    for (int k = 0; k <= r.order(); ++k)
        r.coeffs_[static_cast<std::size_t>(k)] += b.coeff(k);
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_order(b);
    TruncatedSeries r = a;
    for (int k = 0; k <= r.order(); ++k)
        r.coeffs_[static_cast<std::size_t>(k)] -= b.coeff(k);
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_order(b);
    TruncatedSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= a.order(); ++j) {
            if (b.coeff(j).is_zero()) continue;
            r.coeffs_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (coeff(0).is_zero())
        throw std::domain_error("series with zero constant term has no inverse");
    TruncatedSeries r(order());
    const Rational c0 = Rational(1) / coeff(0);
    r.set_coeff(0, c0);
    for (int k = 1; k <= order(); ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) acc += coeff(j) * r.coeff(k - j);
        r.set_coeff(k, -acc * c0);
    }
    return r;
}

std::string TruncatedSeries::str() const {
    std::string s;
    for (int k = 0; k <= order(); ++k) {
        if (k) s += " + ";
        s += coeff(k).str();
        if (k == 1) s += "*h";
        if (k > 1) s += "*h^" + std::to_string(k);
    }
    s += " (mod h^" + std::to_string(order() + 1) + ")";
    return s;
}

}  // namespace braidinv
