#include <cstdlib>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qpp/chebyshev.hpp"
#include "qpp/errors.hpp"
#include "qpp/identities.hpp"
#include "qpp/overpartitions.hpp"
#include "qpp/partitions.hpp"
#include "qpp/pochhammer.hpp"
#include "qpp/serialize.hpp"

namespace {

using qpp::BigRational;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kFallbackOrder = 40;

/// Flag beats environment beats the built-in default; a set but malformed
/// environment value is always an error.
int resolve_order(bool flag_given, int flag_value) {
    const char* env = std::getenv("QPP_DEFAULT_ORDER");
    std::optional<int> env_value;
    if (env != nullptr) {
        std::string text(env);
        std::size_t pos = 0;
        long v = 0;
        bool ok = !text.empty();
        if (ok) {
            try {
                v = std::stol(text, &pos, 10);
            } catch (const std::exception&) {
                ok = false;
            }
        }
        if (!ok || pos != text.size() || v <= 0 || v > 100000) {
            throw UsageError("QPP_DEFAULT_ORDER must be a positive integer, got '" +
                             text + "'");
        }
        env_value = static_cast<int>(v);
    }
    if (flag_given) {
        return flag_value;
    }
    if (env_value) {
        return *env_value;
    }
    return kFallbackOrder;
}

int cmd_verify(const std::vector<std::string>& ids, int order,
               const std::string& format) {
    std::vector<const qpp::CheckDef*> selected;
    if (ids.empty()) {
        for (const qpp::CheckDef& def : qpp::registry()) {
            selected.push_back(&def);
        }
    } else {
        for (const std::string& id : ids) {
            selected.push_back(&qpp::find_check(id));
        }
    }
    qpp::Context ctx;
    std::vector<qpp::IdentityReport> reports;
    reports.reserve(selected.size());
    for (const qpp::CheckDef* def : selected) {
        reports.push_back(qpp::run_check(ctx, *def, order));
    }
    if (format == "json") {
        std::cout << qpp::reports_json(reports).dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << qpp::reports_csv(reports);
    } else {
        for (const qpp::IdentityReport& rep : reports) {
            std::cout << qpp::report_text(rep) << '\n';
        }
    }
    for (const qpp::IdentityReport& rep : reports) {
        if (!rep.pass) {
            return 1;
        }
    }
    return 0;
}

std::vector<std::pair<int, int>> parse_eta_spec(const std::string& text) {
    std::vector<std::pair<int, int>> spec;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string token = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (token.empty()) {
            throw qpp::UnknownSeriesName("malformed eta spec near '" + text + "'");
        }
        std::size_t caret = token.find('^');
        try {
            std::size_t pos = 0;
            int base = std::stoi(token.substr(0, caret), &pos, 10);
            if (pos != (caret == std::string::npos ? token.size() : caret) ||
                base <= 0) {
                throw std::invalid_argument(token);
            }
            int power = 1;
            if (caret != std::string::npos) {
                std::string ptext = token.substr(caret + 1);
                power = std::stoi(ptext, &pos, 10);
                if (pos != ptext.size()) {
                    throw std::invalid_argument(token);
                }
            }
            spec.emplace_back(base, power);
        } catch (const std::exception&) {
            throw qpp::UnknownSeriesName("malformed eta spec token '" + token + "'");
        }
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return spec;
}

void print_qseries(const std::string& name, const qpp::QSeries& s,
                   const std::string& format,
                   const std::optional<BigRational>& offset) {
    if (format == "json") {
        nlohmann::json j = qpp::qseries_json(s);
        j["name"] = name;
        if (offset) {
            j["offset"] = qpp::rat_text(*offset);
        }
        std::cout << j.dump(2) << '\n';
    } else if (format == "csv") {
        if (offset) {
            std::cout << "offset," << qpp::rat_text(*offset) << '\n';
        }
        std::cout << qpp::qseries_csv(s);
    } else {
        if (offset) {
            std::cout << "offset: q^" << qpp::rat_text(*offset) << '\n';
        }
        std::cout << qpp::qseries_text(s);
    }
}

int cmd_series(const std::string& name, int order, const std::string& format) {
    using qpp::QSeries;
    if (name == "quintuple") {
        qpp::BivarSeries s = qpp::quintuple_lhs(order);
        if (format == "json") {
            nlohmann::json j = qpp::bivar_json(s);
            j["name"] = name;
            std::cout << j.dump(2) << '\n';
        } else if (format == "csv") {
            std::cout << qpp::bivar_csv(s);
        } else {
            std::cout << qpp::bivar_text(s);
        }
        return 0;
    }
    if (name == "theta-shimura") {
        qpp::FracQSeries f = qpp::theta_shimura(order);
        print_qseries(name, f.body(), format, f.offset());
        return 0;
    }
    if (name.rfind("eta:", 0) == 0) {
        qpp::FracQSeries f = qpp::eta_quotient(parse_eta_spec(name.substr(4)), order);
        print_qseries(name, f.body(), format, f.offset());
        return 0;
    }

    QSeries s(order);
    if (name == "euler") {
        s = qpp::euler_series(order);
    } else if (name == "partitions") {
        s = qpp::euler_inverse(order);
    } else if (name == "spt") {
        s = qpp::spt_series(order);
    } else if (name == "selfconj") {
        s = qpp::qs_poch_infinite(BigRational(-1), 1, 2, order);
    } else if (name == "overpartitions") {
        s = qpp::qs_poch_infinite(BigRational(-1), 1, 1, order)
                .divided_by(qpp::euler_series(order));
    } else if (name == "overpartition-pairs") {
        QSeries o = qpp::qs_poch_infinite(BigRational(-1), 1, 1, order)
                        .divided_by(qpp::euler_series(order));
        s = o * o;
    } else if (name == "gordon") {
        s = qpp::gordon_series(order);
    } else if (name == "psi") {
        s = qpp::psi_series(order);
    } else if (name == "jtp") {
        s = qpp::jtp_square_series(order);
    } else if (name == "lambert-all") {
        s = qpp::lambert_all(order);
    } else if (name == "lambert-odd") {
        s = qpp::lambert_odd(order);
    } else if (name == "lambert-even") {
        s = qpp::lambert_even(order);
    } else {
        throw qpp::UnknownSeriesName("no series is registered under name '" +
                                     name + "'");
    }
    print_qseries(name, s, format, std::nullopt);
    return 0;
}

int cmd_ntable(int max_n, bool force, const std::string& format) {
    if (max_n > 12 && !force) {
        throw qpp::EnumerationBudgetExceeded(
            "table weight " + std::to_string(max_n) +
            " exceeds the default budget of 12; pass --force to override");
    }
    qpp::NTable tab = qpp::build_ntable(max_n);
    if (format == "json") {
        std::cout << qpp::ntable_json(tab, max_n).dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << qpp::ntable_csv(tab, max_n);
    } else {
        std::cout << qpp::ntable_text(tab, max_n);
    }
    return 0;
}

int cmd_coeff(int m, int n, int order, bool force, const std::string& format) {
    if (n < 0) {
        throw UsageError("--n must be non-negative");
    }
    if (n > order) {
        throw UsageError("--n exceeds the working order " + std::to_string(order));
    }
    if (n > 12 && !force) {
        throw qpp::EnumerationBudgetExceeded(
            "table weight " + std::to_string(n) +
            " exceeds the default budget of 12; pass --force to override");
    }
    qpp::Context ctx;
    qpp::BivarSeries es = ctx.s_series(order).truncated(order);
    for (int k = 1; k <= order; ++k) {
        es = es.mul_binomial(BigRational(1), 0, k);
    }
    BigRational series_value = es.coeff(m, n);
    long long predicted = qpp::piecewise_coeff(m, n);
    qpp::BigInt multisum = qpp::blocoeff_multisum(m, n, qpp::build_ntable(n));
    bool agree = series_value == BigRational(predicted) &&
                 series_value == BigRational(multisum);
    if (format == "json") {
        nlohmann::json j;
        j["m"] = m;
        j["n"] = n;
        j["series"] = qpp::rat_text(series_value);
        j["piecewise"] = std::to_string(predicted);
        j["multisum"] = multisum.str();
        j["agree"] = agree;
        std::cout << j.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << "m,n,series,piecewise,multisum,agree\n"
                  << m << ',' << n << ',' << qpp::rat_text(series_value) << ','
                  << predicted << ',' << multisum.str() << ','
                  << (agree ? "true" : "false") << '\n';
    } else {
        std::cout << "coefficient of z^" << m << " q^" << n << '\n'
                  << "  series:    " << qpp::rat_text(series_value) << '\n'
                  << "  piecewise: " << predicted << '\n'
                  << "  multisum:  " << multisum.str() << '\n'
                  << "  agree:     " << (agree ? "yes" : "no") << '\n';
    }
    return agree ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of q-series identities and pair statistics"};
    app.require_subcommand(1);

    int order_flag = 0;
    std::string format = "text";
    std::vector<std::string> ids;
    std::string series_name;
    int table_n = 6;
    int coeff_m = 0;
    int coeff_n = 0;
    bool force = false;

    CLI::App* verify = app.add_subcommand("verify", "Run registered identity checks");
    CLI::Option* verify_order =
        verify->add_option("--order", order_flag, "Truncation order")
            ->check(CLI::PositiveNumber);
    verify->add_option("--id", ids, "Check id to run (repeatable)");
    verify->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    CLI::App* series = app.add_subcommand("series", "Print a named series");
    series->add_option("--name", series_name, "Series name")->required();
    CLI::Option* series_order =
        series->add_option("--order", order_flag, "Truncation order")
            ->check(CLI::PositiveNumber);
    series->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    CLI::App* ntable = app.add_subcommand("ntable", "Dump the counting table");
    ntable->add_option("--n", table_n, "Largest weight to tabulate")
        ->check(CLI::NonNegativeNumber);
    ntable->add_flag("--force", force, "Ignore the enumeration budget");
    ntable->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    CLI::App* coeff = app.add_subcommand(
        "coeff", "Compare one coefficient across series, formula and table");
    coeff->add_option("--m", coeff_m, "z-exponent")->required();
    coeff->add_option("--n", coeff_n, "q-exponent")->required();
    CLI::Option* coeff_order =
        coeff->add_option("--order", order_flag, "Truncation order")
            ->check(CLI::PositiveNumber);
    coeff->add_flag("--force", force, "Ignore the enumeration budget");
    coeff->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            int order = resolve_order(verify_order->count() > 0, order_flag);
            return cmd_verify(ids, order, format);
        }
        if (series->parsed()) {
            int order = resolve_order(series_order->count() > 0, order_flag);
            return cmd_series(series_name, order, format);
        }
        if (ntable->parsed()) {
            return cmd_ntable(table_n, force, format);
        }
        int order = resolve_order(coeff_order->count() > 0, order_flag);
        return cmd_coeff(coeff_m, coeff_n, order, force, format);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const qpp::UnknownCheckId& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const qpp::UnknownSeriesName& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const qpp::EnumerationBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const qpp::EngineError& e) {
        std::cerr << "engine error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}
