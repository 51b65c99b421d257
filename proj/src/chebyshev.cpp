#include "qpp/chebyshev.hpp"

#include "qpp/errors.hpp"
#include "qpp/laurent.hpp"
#include "qpp/partitions.hpp"

namespace qpp {

BigRational u_poly(long long n, const BigRational& x) {
    if (n == -1) {
        return BigRational(0);
    }
    if (n < -1) {
        return -u_poly(-n - 2, x);
    }
    BigRational prev(1);        // U_0
    if (n == 0) {
        return prev;
    }
    BigRational cur = 2 * x;    // U_1
    for (long long i = 1; i < n; ++i) {
        BigRational next = 2 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

int u_half(long long n) {
    static const int table[6] = {1, 1, 0, -1, -1, 0};
    return table[((n % 6) + 6) % 6];
}

bool genfun_check(int M) {
    if (M < 1) {
        throw EngineError("genfun_check: order must be at least 1");
    }
    LaurentPoly sum;
    for (int m = 0; m <= M; ++m) {
        sum.add_term(m, BigRational(u_half(m)));
    }
    LaurentPoly quad = LaurentPoly::constant(BigRational(1));
    quad.add_term(1, BigRational(-1));
    quad.add_term(2, BigRational(1));
    LaurentPoly prod = sum * quad;
    if (prod.coeff(0) != 1) {
        return false;
    }
    for (int e = 1; e <= M; ++e) {
        if (prod.coeff(e) != 0) {
            return false;
        }
    }
    return true;
}

std::string IntervalCase::text() const {
    std::string s = "I" + std::to_string(case_id);
    if (branch == Branch::Primed) {
        s += "'";
    }
    return s;
}

IntervalCase classify(int m, int n, int ell) {
    long long value = (3LL * ell * ell + ell) / 2;
    if (value != n) {
        throw NotPentagonal("classify: " + std::to_string(n)
                            + " is not the pentagonal number of index "
                            + std::to_string(ell));
    }
    IntervalCase c;
    if (ell >= 0) {
        c.branch = Branch::Plain;
        int lo = -3 * ell;
        int hi = 3 * ell + 1;
        if (m < lo) {
            c.case_id = 1;
        } else if (m == lo) {
            c.case_id = 2;
        } else if (m < 1) {
            c.case_id = 3;
        } else if (m < hi) {
            c.case_id = 4;
        } else if (m == hi) {
            c.case_id = 5;
        } else {
            c.case_id = 6;
        }
    } else {
        c.branch = Branch::Primed;
        int hat = -ell;
        int lo = -3 * hat;
        int hi = 3 * hat;
        if (m <= lo) {
            c.case_id = 1;
        } else if (m == lo + 1) {
            c.case_id = 2;
        } else if (m < 1) {
            c.case_id = 3;
        } else if (m < hi) {
            c.case_id = 4;
        } else if (m == hi) {
            c.case_id = 5;
        } else {
            c.case_id = 6;
        }
    }
    return c;
}

long long piecewise_coeff(int m, int n) {
    auto ell = is_pentagonal(n);
    if (!ell) {
        return 0;
    }
    long long acc = 0;
    if (*ell >= 0) {
        int l = *ell;
        if (m > 3 * l) {
            acc -= u_half(m - 3 * l);
        }
        if (m >= -3 * l) {
            acc += u_half(m + 3LL * l + 1);
        }
        if (m >= 1) {
            acc += parity_sign(l) * u_half(m - 1);
        }
    } else {
        int hat = -*ell;
        if (m > -3 * hat) {
            acc -= u_half(m + 3LL * hat);
        }
        if (m >= 3 * hat) {
            acc += u_half(m - 3LL * hat + 1);
        }
        if (m >= 1) {
            acc += parity_sign(hat) * u_half(m - 1);
        }
    }
    return acc;
}

} // namespace qpp
