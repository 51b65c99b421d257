#include "qpp/qseries.hpp"

#include <algorithm>
#include <string>

namespace qpp {

QSeries::QSeries(int order) : order_(order) {
    if (order < 0) {
        throw EngineError("QSeries: negative order " + std::to_string(order));
    }
    c_.assign(static_cast<size_t>(order) + 1, BigRational(0));
}

QSeries QSeries::one(int order) {
    QSeries s(order);
    s.c_[0] = 1;
    return s;
}

QSeries QSeries::constant(const BigRational& v, int order) {
    QSeries s(order);
    s.c_[0] = v;
    return s;
}

const BigRational& QSeries::coeff(int n) const {
    if (n < 0 || n > order_) {
        throw OrderExceeded("QSeries::coeff: index " + std::to_string(n) +
                            " beyond order " + std::to_string(order_));
    }
    return c_[static_cast<size_t>(n)];
}

void QSeries::set_coeff(int n, const BigRational& v) {
    if (n < 0 || n > order_) {
        throw OrderExceeded("QSeries::set_coeff: index " + std::to_string(n) +
                            " beyond order " + std::to_string(order_));
    }
    c_[static_cast<size_t>(n)] = v;
}

void QSeries::add_coeff(int n, const BigRational& v) {
    if (n < 0 || n > order_) {
        throw OrderExceeded("QSeries::add_coeff: index " + std::to_string(n) +
                            " beyond order " + std::to_string(order_));
    }
    c_[static_cast<size_t>(n)] += v;
}

QSeries QSeries::operator-() const {
    QSeries s(order_);
    for (int n = 0; n <= order_; ++n) {
        s.c_[n] = -c_[n];
    }
    return s;
}

QSeries QSeries::operator+(const QSeries& o) const {
    int ord = std::min(order_, o.order_);
    QSeries s(ord);
    for (int n = 0; n <= ord; ++n) {
        s.c_[n] = c_[n] + o.c_[n];
    }
    return s;
}

QSeries QSeries::operator-(const QSeries& o) const {
    int ord = std::min(order_, o.order_);
    QSeries s(ord);
    for (int n = 0; n <= ord; ++n) {
        s.c_[n] = c_[n] - o.c_[n];
    }
    return s;
}

QSeries QSeries::operator*(const QSeries& o) const {
    int ord = std::min(order_, o.order_);
    QSeries s(ord);
    for (int i = 0; i <= ord; ++i) {
        if (c_[i] == 0) {
            continue;
        }
        for (int j = 0; i + j <= ord; ++j) {
            if (o.c_[j] != 0) {
                s.c_[i + j] += c_[i] * o.c_[j];
            }
        }
    }
    return s;
}

QSeries QSeries::scaled(const BigRational& v) const {
    QSeries s(order_);
    for (int n = 0; n <= order_; ++n) {
        s.c_[n] = c_[n] * v;
    }
    return s;
}

QSeries QSeries::truncated(int new_order) const {
    QSeries s(std::min(new_order, order_));
    for (int n = 0; n <= s.order_; ++n) {
        s.c_[n] = c_[n];
    }
    return s;
}

QSeries QSeries::shifted(int k) const {
    if (k < 0) {
        throw EngineError("QSeries::shifted: negative shift");
    }
    QSeries s(order_);
    for (int n = 0; n + k <= order_; ++n) {
        s.c_[n + k] = c_[n];
    }
    return s;
}

QSeries QSeries::inverted() const {
    if (c_[0] == 0) {
        throw NonUnitConstantTerm("inverted: q^0 coefficient is zero");
    }
    QSeries s(order_);
    BigRational inv0 = BigRational(1) / c_[0];
    s.c_[0] = inv0;
    for (int n = 1; n <= order_; ++n) {
        BigRational acc(0);
        for (int i = 1; i <= n; ++i) {
            if (c_[i] != 0 && s.c_[n - i] != 0) {
                acc += c_[i] * s.c_[n - i];
            }
        }
        s.c_[n] = -inv0 * acc;
    }
    return s;
}

QSeries QSeries::divided_by(const QSeries& den) const {
    int ord = std::min(order_, den.order_);
    if (den.c_[0] == 0) {
        throw NonUnitConstantTerm("divided_by: denominator q^0 coefficient is zero");
    }
    QSeries s(ord);
    BigRational inv0 = BigRational(1) / den.c_[0];
    for (int n = 0; n <= ord; ++n) {
        BigRational acc = c_[n];
        for (int i = 1; i <= n; ++i) {
            if (den.c_[i] != 0 && s.c_[n - i] != 0) {
                acc -= den.c_[i] * s.c_[n - i];
            }
        }
        s.c_[n] = inv0 * acc;
    }
    return s;
}

QSeries QSeries::mul_binomial(const BigRational& c, int k) const {
    if (k < 0) {
        throw EngineError("mul_binomial: negative q-power");
    }
    if (k == 0) {
        return scaled(BigRational(1) - c);
    }
    QSeries s = *this;
    for (int n = order_; n >= k; --n) {
        s.c_[n] -= c * c_[n - k];
    }
    return s;
}

QSeries QSeries::div_binomial(const BigRational& c, int k) const {
    if (k < 1) {
        throw NonUnitConstantTerm("div_binomial: q-power must be at least 1");
    }
    QSeries s = *this;
    for (int n = k; n <= order_; ++n) {
        s.c_[n] += c * s.c_[n - k];
    }
    return s;
}

QSeries QSeries::q_derivative() const {
    QSeries s(order_);
    for (int n = 1; n <= order_; ++n) {
        s.c_[n] = c_[n] * n;
    }
    return s;
}

int QSeries::valuation() const {
    for (int n = 0; n <= order_; ++n) {
        if (c_[n] != 0) {
            return n;
        }
    }
    return order_ + 1;
}

bool QSeries::is_zero() const {
    return valuation() > order_;
}

bool QSeries::operator==(const QSeries& o) const {
    return order_ == o.order_ && c_ == o.c_;
}

} // namespace qpp
