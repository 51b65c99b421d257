#include "qpp/serialize.hpp"

#include <sstream>

namespace qpp {

nlohmann::json report_json(const IdentityReport& rep) {
    nlohmann::json j;
    j["id"] = rep.id;
    j["pass"] = rep.pass;
    j["order"] = rep.order_checked;
    if (rep.first_mismatch) {
        nlohmann::json mm;
        if (rep.first_mismatch->m) {
            mm["m"] = *rep.first_mismatch->m;
        } else {
            mm["m"] = nullptr;
        }
        mm["n"] = rep.first_mismatch->n;
        mm["lhs"] = rat_text(rep.first_mismatch->lhs);
        mm["rhs"] = rat_text(rep.first_mismatch->rhs);
        j["first_mismatch"] = mm;
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["elapsed_ms"] = rep.elapsed_ms;
    return j;
}

nlohmann::json reports_json(const std::vector<IdentityReport>& reps) {
    nlohmann::json j = nlohmann::json::array();
    for (const IdentityReport& rep : reps) {
        j.push_back(report_json(rep));
    }
    return j;
}

std::string report_text(const IdentityReport& rep) {
    std::ostringstream out;
    out << (rep.pass ? "pass" : "FAIL") << "  " << rep.id
        << "  (order " << rep.order_checked << ", " << rep.elapsed_ms << " ms)";
    if (rep.first_mismatch) {
        out << "  first mismatch at ";
        if (rep.first_mismatch->m) {
            out << "m=" << *rep.first_mismatch->m << ", ";
        }
        out << "n=" << rep.first_mismatch->n
            << ": " << rat_text(rep.first_mismatch->lhs)
            << " vs " << rat_text(rep.first_mismatch->rhs);
    }
    return out.str();
}

std::string reports_csv(const std::vector<IdentityReport>& reps) {
    std::ostringstream out;
    out << "id,pass,order,mismatch_m,mismatch_n,lhs,rhs,elapsed_ms\n";
    for (const IdentityReport& rep : reps) {
        out << rep.id << ',' << (rep.pass ? "true" : "false") << ','
            << rep.order_checked << ',';
        if (rep.first_mismatch) {
            if (rep.first_mismatch->m) {
                out << *rep.first_mismatch->m;
            }
            out << ',' << rep.first_mismatch->n << ','
                << rat_text(rep.first_mismatch->lhs) << ','
                << rat_text(rep.first_mismatch->rhs);
        } else {
            out << ",,,";
        }
        out << ',' << rep.elapsed_ms << '\n';
    }
    return out.str();
}

std::string ntable_csv(const NTable& tab, int max_n) {
    std::ostringstream out;
    out << "r,s,m,n,count\n";
    for (const auto& [key, cnt] : tab.counts) {
        if (key[0] > max_n) {
            continue;
        }
        out << key[1] << ',' << key[2] << ',' << key[3] << ',' << key[0] << ','
            << cnt << '\n';
    }
    return out.str();
}

nlohmann::json ntable_json(const NTable& tab, int max_n) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [key, cnt] : tab.counts) {
        if (key[0] > max_n) {
            continue;
        }
        j.push_back({{"r", key[1]}, {"s", key[2]}, {"m", key[3]},
                     {"n", key[0]}, {"count", cnt}});
    }
    return j;
}

std::string ntable_text(const NTable& tab, int max_n) {
    std::ostringstream out;
    for (const auto& [key, cnt] : tab.counts) {
        if (key[0] > max_n) {
            continue;
        }
        out << "n=" << key[0] << " r=" << key[1] << " s=" << key[2]
            << " m=" << key[3] << "  " << cnt << '\n';
    }
    return out.str();
}

std::string qseries_text(const QSeries& s) {
    std::ostringstream out;
    for (int n = 0; n <= s.order(); ++n) {
        out << "q^" << n << ": " << rat_text(s.coeff(n)) << '\n';
    }
    return out.str();
}

nlohmann::json qseries_json(const QSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int n = 0; n <= s.order(); ++n) {
        coeffs.push_back(rat_text(s.coeff(n)));
    }
    return {{"order", s.order()}, {"coefficients", coeffs}};
}

std::string qseries_csv(const QSeries& s) {
    std::ostringstream out;
    out << "n,coefficient\n";
    for (int n = 0; n <= s.order(); ++n) {
        out << n << ',' << rat_text(s.coeff(n)) << '\n';
    }
    return out.str();
}

std::string bivar_text(const BivarSeries& s) {
    std::ostringstream out;
    for (int n = 0; n <= s.order(); ++n) {
        out << "q^" << n << ": " << s.coeff_poly(n).text() << '\n';
    }
    return out.str();
}

nlohmann::json bivar_json(const BivarSeries& s) {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 0; n <= s.order(); ++n) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [e, c] : s.coeff_poly(n).terms()) {
            terms.push_back({{"m", e}, {"value", rat_text(c)}});
        }
        rows.push_back({{"n", n}, {"terms", terms}});
    }
    return {{"order", s.order()}, {"coefficients", rows}};
}

std::string bivar_csv(const BivarSeries& s) {
    std::ostringstream out;
    out << "n,m,value\n";
    for (int n = 0; n <= s.order(); ++n) {
        for (const auto& [e, c] : s.coeff_poly(n).terms()) {
            out << n << ',' << e << ',' << rat_text(c) << '\n';
        }
    }
    return out.str();
}

} // namespace qpp
