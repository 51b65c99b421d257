#include "qpp/pochhammer.hpp"

#include <cstdlib>

#include "qpp/errors.hpp"

namespace qpp {

namespace {

void require_step(int q_step, const char* where) {
    if (q_step < 1) {
        throw EngineError(std::string(where) + ": q_step must be positive");
    }
}

} // namespace

BivarSeries poch_finite(const Monomial& a, int n, int order) {
    require_step(a.q_step, "poch_finite");
    if (n < 0) {
        throw EngineError("poch_finite: negative factor count");
    }
    BivarSeries r = BivarSeries::one(order);
    for (int j = 1; j <= n; ++j) {
        long long k = static_cast<long long>(a.q_exp)
                      + static_cast<long long>(j - 1) * a.q_step;
        if (k > order) {
            break;
        }
        r = r.mul_binomial(a.scalar, a.z_exp, static_cast<int>(k));
    }
    return r;
}

BivarSeries poch_infinite(const Monomial& a, int order) {
    require_step(a.q_step, "poch_infinite");
    if (a.q_exp == 0) {
        throw DivergentFormalProduct(
            "poch_infinite: argument without a positive q power");
    }
    BivarSeries r = BivarSeries::one(order);
    for (long long k = a.q_exp; k <= order; k += a.q_step) {
        r = r.mul_binomial(a.scalar, a.z_exp, static_cast<int>(k));
    }
    return r;
}

BivarSeries product(const ProductSpec& spec, int order) {
    BivarSeries r = BivarSeries::one(order);
    for (const auto& [mono, mult] : spec.factors) {
        require_step(mono.q_step, "product");
        if (mult == 0) {
            continue;
        }
        if (mono.q_exp == 0) {
            throw DivergentFormalProduct(
                "product: infinite factor without a positive q power");
        }
        int passes = std::abs(mult);
        for (int p = 0; p < passes; ++p) {
            for (long long k = mono.q_exp; k <= order; k += mono.q_step) {
                if (mult > 0) {
                    r = r.mul_binomial(mono.scalar, mono.z_exp, static_cast<int>(k));
                } else {
                    r = r.div_binomial(mono.scalar, mono.z_exp, static_cast<int>(k));
                }
            }
        }
    }
    return r;
}

QSeries qs_poch_finite(const BigRational& c, int q_exp, int q_step, int n, int order) {
    require_step(q_step, "qs_poch_finite");
    if (n < 0) {
        throw EngineError("qs_poch_finite: negative factor count");
    }
    QSeries r = QSeries::one(order);
    for (int j = 1; j <= n; ++j) {
        long long k = static_cast<long long>(q_exp)
                      + static_cast<long long>(j - 1) * q_step;
        if (k > order) {
            break;
        }
        r = r.mul_binomial(c, static_cast<int>(k));
    }
    return r;
}

QSeries qs_poch_infinite(const BigRational& c, int q_exp, int q_step, int order) {
    require_step(q_step, "qs_poch_infinite");
    if (q_exp == 0) {
        throw DivergentFormalProduct(
            "qs_poch_infinite: argument without a positive q power");
    }
    QSeries r = QSeries::one(order);
    for (long long k = q_exp; k <= order; k += q_step) {
        r = r.mul_binomial(c, static_cast<int>(k));
    }
    return r;
}

QSeries euler_series(int order) {
    return qs_poch_infinite(BigRational(1), 1, 1, order);
}

QSeries euler_inverse(int order) {
    QSeries r = QSeries::one(order);
    for (int k = 1; k <= order; ++k) {
        r = r.div_binomial(BigRational(1), k);
    }
    return r;
}

QSeries lambert_all(int order) {
    QSeries r(order);
    for (int n = 1; n <= order; ++n) {
        for (int m = n; m <= order; m += n) {
            r.add_coeff(m, BigRational(n));
        }
    }
    return r;
}

QSeries lambert_odd(int order) {
    QSeries r(order);
    for (int n = 1; n <= order; n += 2) {
        for (int m = n; m <= order; m += n) {
            r.add_coeff(m, BigRational(n));
        }
    }
    return r;
}

QSeries lambert_even(int order) {
    QSeries r(order);
    for (int n = 1; 2 * n <= order; ++n) {
        for (int m = 2 * n; m <= order; m += 2 * n) {
            r.add_coeff(m, BigRational(n));
        }
    }
    return r;
}

BivarSeries quintuple_lhs(int order) {
    BivarSeries r(order);
    auto add_term = [&](long long n) -> bool {
        long long e = (3 * n * n + n) / 2;
        if (e > order) {
            return false;
        }
        LaurentPoly p = LaurentPoly::monomial(BigRational(1), static_cast<int>(3 * n));
        p += LaurentPoly::monomial(BigRational(-1), static_cast<int>(-3 * n - 1));
        r.add_coeff_poly(static_cast<int>(e), p);
        return true;
    };
    for (long long n = 0; add_term(n); ++n) {
    }
    for (long long n = -1; add_term(n); --n) {
    }
    return r;
}

QSeries gordon_series(int order) {
    QSeries r(order);
    auto add_term = [&](long long n) -> bool {
        long long e = (3 * n * n + n) / 2;
        if (e > order) {
            return false;
        }
        r.add_coeff(static_cast<int>(e), BigRational(6 * n + 1));
        return true;
    };
    for (long long n = 0; add_term(n); ++n) {
    }
    for (long long n = -1; add_term(n); --n) {
    }
    return r;
}

QSeries jtp_square_series(int order) {
    QSeries r(order);
    r.set_coeff(0, BigRational(1));
    for (long long j = 1; j * j <= order; ++j) {
        r.add_coeff(static_cast<int>(j * j), BigRational(2 * parity_sign(j)));
    }
    return r;
}

QSeries psi_series(int order) {
    QSeries r(order);
    auto add_term = [&](long long n) -> bool {
        long long e = 2 * n * n - n;
        if (e > order) {
            return false;
        }
        r.add_coeff(static_cast<int>(e), BigRational(1));
        return true;
    };
    for (long long n = 0; add_term(n); ++n) {
    }
    for (long long n = -1; add_term(n); --n) {
    }
    return r;
}

FracQSeries eta_quotient(const std::vector<std::pair<int, int>>& spec, int order) {
    BigRational offset(0);
    QSeries body = QSeries::one(order);
    for (const auto& [d, e] : spec) {
        if (d < 1) {
            throw EngineError("eta_quotient: modulus must be positive");
        }
        offset += BigRational(static_cast<long long>(e) * d, 24);
        int passes = std::abs(e);
        for (int p = 0; p < passes; ++p) {
            for (long long k = d; k <= order; k += d) {
                if (e > 0) {
                    body = body.mul_binomial(BigRational(1), static_cast<int>(k));
                } else {
                    body = body.div_binomial(BigRational(1), static_cast<int>(k));
                }
            }
        }
    }
    return FracQSeries(offset, std::move(body));
}

int chi12(long long n) {
    long long r = ((n % 6) + 6) % 6;
    if (r == 1) {
        return 1;
    }
    if (r == 5) {
        return -1;
    }
    return 0;
}

FracQSeries theta_shimura(int order) {
    QSeries body(order);
    for (long long n = 1; (n * n - 1) / 24 <= order; ++n) {
        int chi = chi12(n);
        if (chi == 0) {
            continue;
        }
        body.add_coeff(static_cast<int>((n * n - 1) / 24), BigRational(chi * n * n * n));
    }
    return FracQSeries(BigRational(1, 24), std::move(body));
}

BivarSeries sum_bivariate_terms(const std::function<BivarSeries(int)>& term, int order) {
    BivarSeries r(order);
    for (int n = 0; n <= order; ++n) {
        BivarSeries t = term(n);
        if (t.order() < order) {
            throw EngineError("sum_bivariate_terms: term order too small");
        }
        if (t.valuation() < n) {
            throw ValuationViolation(
                "sum_bivariate_terms: term " + std::to_string(n)
                + " has q-valuation below its index");
        }
        for (int m = n; m <= order; ++m) {
            r.add_coeff_poly(m, t.coeff_poly(m));
        }
    }
    return r;
}

QSeries sum_qseries_terms(const std::function<QSeries(int)>& term, int order) {
    QSeries r(order);
    for (int n = 0; n <= order; ++n) {
        QSeries t = term(n);
        if (t.order() < order) {
            throw EngineError("sum_qseries_terms: term order too small");
        }
        if (t.valuation() < n) {
            throw ValuationViolation(
                "sum_qseries_terms: term " + std::to_string(n)
                + " has q-valuation below its index");
        }
        for (int m = n; m <= order; ++m) {
            r.add_coeff(m, t.coeff(m));
        }
    }
    return r;
}

} // namespace qpp
