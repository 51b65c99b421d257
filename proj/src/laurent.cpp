#include "qpp/laurent.hpp"

#include <sstream>

namespace qpp {

LaurentPoly LaurentPoly::constant(const BigRational& c) {
    LaurentPoly p;
    if (c != 0) {
        p.terms_[0] = c;
    }
    return p;
}

LaurentPoly LaurentPoly::monomial(const BigRational& c, int e) {
    LaurentPoly p;
    if (c != 0) {
        p.terms_[e] = c;
    }
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) {
        return true;
    }
    return terms_.size() == 1 && terms_.begin()->first == 0;
}

BigRational LaurentPoly::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigRational(0) : it->second;
}

void LaurentPoly::set_coeff(int e, const BigRational& c) {
    if (c == 0) {
        terms_.erase(e);
    } else {
        terms_[e] = c;
    }
}

void LaurentPoly::add_term(int e, const BigRational& c) {
    if (c == 0) {
        return;
    }
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
        return;
    }
    it->second += c;
    if (it->second == 0) {
        terms_.erase(it);
    }
}

int LaurentPoly::min_exp() const {
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) {
        p.terms_[e] = -c;
    }
    return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly p = *this;
    p += o;
    return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly p = *this;
    p -= o;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly p;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            p.add_term(e1 + e2, c1 * c2);
        }
    }
    return p;
}

LaurentPoly LaurentPoly::scaled(const BigRational& c) const {
    LaurentPoly p;
    if (c == 0) {
        return p;
    }
    for (const auto& [e, v] : terms_) {
        p.terms_[e] = v * c;
    }
    return p;
}

LaurentPoly LaurentPoly::shifted(int de) const {
    LaurentPoly p;
    for (const auto& [e, v] : terms_) {
        p.terms_[e + de] = v;
    }
    return p;
}

LaurentPoly LaurentPoly::diff() const {
    LaurentPoly p;
    for (const auto& [e, v] : terms_) {
        if (e != 0) {
            p.terms_[e - 1] = v * e;
        }
    }
    return p;
}

BigRational LaurentPoly::eval(const BigRational& v) const {
    BigRational acc(0);
    for (const auto& [e, c] : terms_) {
        if (v == 0 && e < 0) {
            throw ZeroSubstitutionWithNegativeExponent(
                "eval: z = 0 substituted into exponent " + std::to_string(e));
        }
        acc += c * rat_pow(v, e);
    }
    return acc;
}

LaurentPoly LaurentPoly::subst_pow(int k) const {
    if (k == 0) {
        throw EngineError("subst_pow: exponent substitution must be nonzero");
    }
    LaurentPoly p;
    for (const auto& [e, c] : terms_) {
        p.terms_[e * k] = c;
    }
    return p;
}

std::string LaurentPoly::text() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string body = rat_text(c < 0 ? BigRational(-c) : c);
        if (first) {
            os << (c < 0 ? "-" : "");
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << body;
        } else {
            if (body != "1") {
                os << body << "*";
            }
            os << "z^" << e;
        }
    }
    return os.str();
}

} // namespace qpp
