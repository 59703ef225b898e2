#include "aotoc/report.hpp"

#include <cstdio>
#include <sstream>

namespace aotoc::report {

namespace {

json optional_number(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

}  // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json to_json(const mereology::SweepRecord& r) {
    json j;
    if (!r.label.empty()) j["label"] = r.label;
    j["param"] = optional_number(r.param);
    if (!r.subset.empty()) j["subset"] = r.subset;
    if (r.eta) j["eta"] = *r.eta;
    j["lta_exact"] = optional_number(r.lta_exact);
    j["lta_nrc"] = optional_number(r.lta_nrc);
    j["lta_nrc_plus"] = optional_number(r.lta_nrc_plus);
    j["gaussian_rate"] = optional_number(r.gaussian_rate);
    j["mutual_info"] = optional_number(r.mutual_info);
    return j;
}

json to_json(const std::vector<mereology::SweepRecord>& records) {
    json arr = json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    return arr;
}

json to_json(const GtpsSpec& spec) {
    json arr = json::array();
    for (const auto& s : spec.sectors()) arr.push_back({s.n, s.d});
    return arr;
}

json to_json(const optimize::ConjectureReport& report) {
    json classes = json::array();
    for (const auto& c : report.classes) {
        classes.push_back({{"spec", to_json(c.spec)},
                           {"best_value", c.best_value},
                           {"conjectured_min", c.conjectured_min},
                           {"gap", c.gap},
                           {"converged", c.converged}});
    }
    return {{"dim", report.dim}, {"classes", classes}, {"violations", report.violations}};
}

json to_json(const optimize::ClassEnumeration& e) {
    json j = {{"dim", e.dim}, {"count", e.count}};
    if (!e.classes.empty()) {
        json classes = json::array();
        for (const auto& c : e.classes) classes.push_back(to_json(c));
        j["classes"] = classes;
    }
    return j;
}

std::string to_csv(const std::vector<mereology::SweepRecord>& records) {
    std::ostringstream os;
    os << kCsvHeader << '\n';
    auto cell = [&](const std::optional<double>& x) { if (x) os << format_double(*x); };
    for (const auto& r : records) {
        if (!r.label.empty()) os << '"' << r.label << '"';
        else cell(r.param);
        os << ',';
        cell(r.lta_exact);
        os << ',';
        cell(r.lta_nrc);
        os << ',';
        cell(r.lta_nrc_plus);
        os << ',';
        cell(r.gaussian_rate);
        os << ',';
        cell(r.mutual_info);
        os << '\n';
    }
    return os.str();
}

std::string to_csv(const optimize::ConjectureReport& report) {
    std::ostringstream os;
    os << "spec,best_value,conjectured_min,gap,converged\n";
    for (const auto& c : report.classes) {
        os << '"' << c.spec.to_string() << "\"," << format_double(c.best_value) << ','
           << format_double(c.conjectured_min) << ',' << format_double(c.gap) << ','
           << (c.converged ? "true" : "false") << '\n';
    }
    return os.str();
}

}  // namespace aotoc::report
