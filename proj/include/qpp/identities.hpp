#ifndef QPP_IDENTITIES_HPP
#define QPP_IDENTITIES_HPP

/// @file identities.hpp
/// @brief Registry of coefficient-exact identity checks with structured reports.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qpp/bivar.hpp"
#include "qpp/overpartitions.hpp"
#include "qpp/qseries.hpp"
#include "qpp/rational.hpp"

namespace qpp {

/// One left/right pair compared coefficient-by-coefficient. Univariate pairs
/// are stored as bivariate series with constant Laurent coefficients and
/// report mismatches without a z-exponent.
struct ComparisonUnit {
    std::string label;
    BivarSeries lhs;
    BivarSeries rhs;
    bool univariate = false;
};

struct Mismatch {
    std::optional<int> m;
    int n = 0;
    BigRational lhs;
    BigRational rhs;
};

struct IdentityReport {
    std::string id;
    bool pass = false;
    int order_checked = 0;
    std::optional<Mismatch> first_mismatch;
    long long elapsed_ms = 0;
};

/// Shared memoized inputs, built lazily and grown on demand.
class Context {
public:
    const QSeries& euler(int order);
    /// The central bivariate sum whose q^n coefficient carries the rank data.
    const BivarSeries& s_series(int order);
    const NTable& table(int max_n);
    /// p(n) backed by a growing cache of the recurrence values.
    BigInt partition_at(int n);
    const QSeries& spt(int order);

private:
    std::optional<QSeries> euler_;
    std::optional<BivarSeries> s_;
    std::optional<NTable> table_;
    std::vector<BigInt> partitions_;
    std::optional<QSeries> spt_;
};

struct CheckDef {
    std::string id;
    std::string description;
    std::string anchor;          // stable internal grouping tag
    int default_order = 40;
    int cap = 200;               // orders above this are clamped
    std::function<std::vector<ComparisonUnit>(Context&, int)> build;
};

/// All registered checks in their canonical run order.
const std::vector<CheckDef>& registry();
/// Lookup by id; throws UnknownCheckId.
const CheckDef& find_check(const std::string& id);

IdentityReport run_check(Context& ctx, const CheckDef& def, int order);
IdentityReport run_check(const std::string& id, int order);
std::vector<IdentityReport> run_all(int order);

/// Re-runs a check after adding delta to one coefficient of one side of its
/// first comparison unit; exercises mismatch localization.
IdentityReport run_check_with_fault(const std::string& id, int order,
                                    bool perturb_lhs, int m, int n,
                                    const BigRational& delta);

} // namespace qpp

#endif
