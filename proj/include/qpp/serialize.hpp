#ifndef QPP_SERIALIZE_HPP
#define QPP_SERIALIZE_HPP

/// @file serialize.hpp
/// @brief Text, CSV and JSON rendering of reports, tables and series.

#include <string>
#include <vector>

#include "json.hpp"

#include "qpp/bivar.hpp"
#include "qpp/identities.hpp"
#include "qpp/overpartitions.hpp"
#include "qpp/qseries.hpp"

namespace qpp {

nlohmann::json report_json(const IdentityReport& rep);
nlohmann::json reports_json(const std::vector<IdentityReport>& reps);
std::string report_text(const IdentityReport& rep);
std::string reports_csv(const std::vector<IdentityReport>& reps);

std::string ntable_csv(const NTable& tab, int max_n);
nlohmann::json ntable_json(const NTable& tab, int max_n);
std::string ntable_text(const NTable& tab, int max_n);

std::string qseries_text(const QSeries& s);
nlohmann::json qseries_json(const QSeries& s);
std::string qseries_csv(const QSeries& s);

std::string bivar_text(const BivarSeries& s);
nlohmann::json bivar_json(const BivarSeries& s);
std::string bivar_csv(const BivarSeries& s);

} // namespace qpp

#endif
