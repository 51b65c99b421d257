#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "qpp/errors.hpp"
#include "qpp/identities.hpp"
#include "qpp/partitions.hpp"
#include "qpp/pochhammer.hpp"
#include "qpp/serialize.hpp"

using namespace qpp;

namespace {

using R = BigRational;

const std::vector<std::string> kCanonicalIds = {
    "pentagonal", "gf-spt-new", "watson-spl", "diff2", "dzq-forms",
    "main-id", "chan-mao-1", "chan-mao-2", "spt-ana", "quintuple-deriv",
    "blospt", "bibasic-1", "bibasic-2", "blorank", "corblo",
    "blocoeff", "idenp", "th3", "spt-mod", "etatheta",
    "qpi", "qpi-half", "gordon", "jtp", "psi",
    "disspar-even", "disspar-odd", "slater-38", "slater-39", "claim1",
    "parlemma", "parlemma-odd", "sptpn", "diffeuler", "diffpsc",
    "logdiffsp", "diffk-lemma", "cong-p-5", "cong-p-7", "cong-p-11",
    "cong-spt-5", "cong-spt-7", "cong-spt-13", "deri4th"};

} // namespace

TEST_CASE("registry lists every check once, in canonical order") {
    const auto& defs = registry();
    REQUIRE(defs.size() == kCanonicalIds.size());
    for (size_t i = 0; i < defs.size(); ++i) {
        CHECK(defs[i].id == kCanonicalIds[i]);
        CHECK(!defs[i].description.empty());
        CHECK(!defs[i].anchor.empty());
        CHECK(defs[i].default_order >= 1);
        CHECK(defs[i].cap >= defs[i].default_order);
    }
}

TEST_CASE("lookup by id round-trips and rejects unknown names") {
    CHECK(find_check("pentagonal").id == "pentagonal");
    CHECK(find_check("deri4th").id == "deri4th");
    CHECK_THROWS_AS(find_check("no-such-check"), UnknownCheckId);
    CHECK_THROWS_AS(run_check("no-such-check", 10), UnknownCheckId);
}

TEST_CASE("the full suite passes at a shared small order") {
    auto reports = run_all(12);
    REQUIRE(reports.size() == kCanonicalIds.size());
    for (const auto& rep : reports) {
        CAPTURE(rep.id);
        CHECK(rep.pass);
        CHECK(!rep.first_mismatch.has_value());
        CHECK(rep.order_checked >= 1);
        CHECK(rep.elapsed_ms >= 0);
    }
}

TEST_CASE("repeated runs are deterministic") {
    auto a = run_all(10);
    auto b = run_all(10);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == b[i].id);
        CHECK(a[i].pass == b[i].pass);
        CHECK(a[i].order_checked == b[i].order_checked);
        CHECK(a[i].first_mismatch.has_value() == b[i].first_mismatch.has_value());
    }
}

TEST_CASE("requested orders are clamped to each check's cap") {
    IdentityReport rep = run_check("blorank", 100);
    CHECK(rep.pass);
    CHECK(rep.order_checked == 8);
    IdentityReport small = run_check("pentagonal", 5);
    CHECK(small.pass);
    CHECK(small.order_checked == 5);
}

TEST_CASE("shared context reuses cached series consistently") {
    Context ctx;
    const QSeries& e20 = ctx.euler(20);
    CHECK(e20.order() >= 20);
    CHECK(e20.truncated(20) == euler_series(20));
    CHECK(ctx.euler(8).truncated(8) == euler_series(8));
    CHECK(ctx.partition_at(100) == partition_count(100));
    CHECK(ctx.partition_at(3) == BigInt(3));
    CHECK(ctx.spt(50).coeff(4) == R(10));
    CHECK(ctx.table(6).max_n >= 6);

    Context fresh;
    CHECK(ctx.s_series(12).truncated(8) == fresh.s_series(8).truncated(8));
}

TEST_CASE("a perturbed univariate check localizes its first bad power") {
    CHECK(run_check("pentagonal", 20).pass);
    IdentityReport rep = run_check_with_fault("pentagonal", 20, true, 0, 7, R(1, 3));
    CHECK(!rep.pass);
    REQUIRE(rep.first_mismatch.has_value());
    CHECK(!rep.first_mismatch->m.has_value());
    CHECK(rep.first_mismatch->n == 7);
    CHECK(rep.first_mismatch->lhs - rep.first_mismatch->rhs == R(1, 3));
}

TEST_CASE("a perturbed bivariate check localizes both exponents") {
    CHECK(run_check("qpi", 12).pass);
    IdentityReport rep = run_check_with_fault("qpi", 12, false, 2, 5, R(-2));
    CHECK(!rep.pass);
    REQUIRE(rep.first_mismatch.has_value());
    REQUIRE(rep.first_mismatch->m.has_value());
    CHECK(*rep.first_mismatch->m == 2);
    CHECK(rep.first_mismatch->n == 5);

    CHECK(run_check("blorank", 8).pass);
    IdentityReport rep2 = run_check_with_fault("blorank", 8, true, 1, 3, R(1));
    CHECK(!rep2.pass);
    REQUIRE(rep2.first_mismatch.has_value());
    REQUIRE(rep2.first_mismatch->m.has_value());
    CHECK(*rep2.first_mismatch->m == 1);
    CHECK(rep2.first_mismatch->n == 3);
}

TEST_CASE("fault injection rejects coordinates outside the window") {
    CHECK_THROWS_AS(run_check_with_fault("pentagonal", 10, true, 0, 50, R(1)),
                    OrderExceeded);
}

TEST_CASE("reports serialize to the documented JSON shape") {
    IdentityReport good = run_check("gordon", 15);
    nlohmann::json j = report_json(good);
    CHECK(j.at("id") == "gordon");
    CHECK(j.at("pass") == true);
    CHECK(j.at("order") == 15);
    CHECK(j.at("first_mismatch").is_null());
    CHECK(j.at("elapsed_ms").is_number());

    IdentityReport bad = run_check_with_fault("pentagonal", 20, true, 0, 7, R(1, 3));
    nlohmann::json k = report_json(bad);
    CHECK(k.at("pass") == false);
    REQUIRE(k.at("first_mismatch").is_object());
    CHECK(k.at("first_mismatch").at("m").is_null());
    CHECK(k.at("first_mismatch").at("n") == 7);
    CHECK(k.at("first_mismatch").at("lhs").is_string());
    CHECK(k.at("first_mismatch").at("rhs").is_string());

    IdentityReport bad2 = run_check_with_fault("qpi", 12, false, 2, 5, R(-2));
    nlohmann::json k2 = report_json(bad2);
    CHECK(k2.at("first_mismatch").at("m") == 2);

    nlohmann::json arr = reports_json({good, bad});
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 2);
    CHECK(arr[0].at("id") == "gordon");
}

TEST_CASE("text and CSV renderings carry the verdict") {
    IdentityReport good = run_check("jtp", 15);
    std::string line = report_text(good);
    CHECK(line.find("jtp") != std::string::npos);
    CHECK(line.find("pass") != std::string::npos);

    IdentityReport bad = run_check_with_fault("pentagonal", 20, true, 0, 7, R(1, 3));
    std::string fail_line = report_text(bad);
    CHECK(fail_line.find("FAIL") != std::string::npos);

    std::string csv = reports_csv({good, bad});
    CHECK(csv.rfind("id,pass,order,mismatch_m,mismatch_n,lhs,rhs,elapsed_ms", 0) == 0);
    CHECK(csv.find("\njtp,") != std::string::npos);
    CHECK(csv.find("\npentagonal,") != std::string::npos);
}
