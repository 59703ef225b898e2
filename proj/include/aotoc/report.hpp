// JSON and CSV serialization of experiment outputs.

#pragma once

#include "aotoc/mereology.hpp"
#include "aotoc/optimize.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace aotoc::report {

using nlohmann::json;

inline const char* kCsvHeader = "param,lta_exact,lta_nrc,lta_nrc_plus,gaussian_rate,mutual_info";

json to_json(const mereology::SweepRecord& r);
json to_json(const std::vector<mereology::SweepRecord>& records);
json to_json(const GtpsSpec& spec);  // [[n, d], ...]
json to_json(const optimize::ConjectureReport& report);
json to_json(const optimize::ClassEnumeration& e);

// One row per record; unpopulated metrics are empty cells. The param column
// holds the subset label when one is set, otherwise the numeric parameter.
std::string to_csv(const std::vector<mereology::SweepRecord>& records);
std::string to_csv(const optimize::ConjectureReport& report);

// 17 significant digits.
std::string format_double(double x);

}  // namespace aotoc::report
