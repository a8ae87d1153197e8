#pragma once

#include <json.hpp>

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace twoadic {

/// One analyzed sequence, as emitted by the CLI. Every numeric field is
/// reproducible by re-invoking the underlying module operation; values too
/// large for machine words travel as decimal strings.
struct AnalysisRecord {
    std::string family = "file";  // generator family or "file"
    std::int64_t param = 0;       // generator parameter (0 for files)
    std::string source;           // path or synthesized description
    std::uint64_t period = 0;
    std::uint64_t weight = 0;
    std::string ac_class;  // autocorrelation classification
    std::string ac;        // 2-adic complexity (decimal)
    std::int64_t lc2 = -1; // linear complexity over F_2; -1 = not computed
    std::vector<std::pair<std::int64_t, std::int64_t>> lc_primes;  // (p, LC_p)
    std::string det = "skipped";  // signed exact determinant or "skipped"
    std::string cert = "skipped"; // max_ac | open | inapplicable | skipped
    std::vector<std::string> notes;
};

inline const char* analysis_csv_header() { return "family,param,N,weight,class,AC,LC2,det,cert"; }

inline std::string to_csv_row(const AnalysisRecord& r) {
    std::ostringstream out;
    out << r.family << ',' << r.param << ',' << r.period << ',' << r.weight << ',' << r.ac_class << ','
        << r.ac << ',' << r.lc2 << ',' << r.det << ',' << r.cert;
    return out.str();
}

inline AnalysisRecord from_csv_row(const std::string& row) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(row);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    if (cells.size() != 9) throw std::invalid_argument("analysis csv: expected 9 columns");
    AnalysisRecord r;
    r.family = cells[0];
    r.param = std::stoll(cells[1]);
    r.period = std::stoull(cells[2]);
    r.weight = std::stoull(cells[3]);
    r.ac_class = cells[4];
    r.ac = cells[5];
    r.lc2 = std::stoll(cells[6]);
    r.det = cells[7];
    r.cert = cells[8];
    return r;
}

inline nlohmann::ordered_json to_json(const AnalysisRecord& r) {
    nlohmann::ordered_json j;
    j["family"] = r.family;
    j["param"] = r.param;
    j["source"] = r.source;
    j["N"] = r.period;
    j["weight"] = r.weight;
    j["class"] = r.ac_class;
    j["AC"] = r.ac;
    j["LC2"] = r.lc2;
    nlohmann::ordered_json lcp = nlohmann::ordered_json::array();
    for (const auto& [p, lc] : r.lc_primes) lcp.push_back({{"p", p}, {"lc", lc}});
    j["LC_p"] = lcp;
    j["det"] = r.det;
    j["cert"] = r.cert;
    j["notes"] = r.notes;
    return j;
}

inline AnalysisRecord from_json(const nlohmann::ordered_json& j) {
    AnalysisRecord r;
    r.family = j.at("family").get<std::string>();
    r.param = j.at("param").get<std::int64_t>();
    r.source = j.at("source").get<std::string>();
    r.period = j.at("N").get<std::uint64_t>();
    r.weight = j.at("weight").get<std::uint64_t>();
    r.ac_class = j.at("class").get<std::string>();
    r.ac = j.at("AC").get<std::string>();
    r.lc2 = j.at("LC2").get<std::int64_t>();
    for (const auto& e : j.at("LC_p"))
        r.lc_primes.emplace_back(e.at("p").get<std::int64_t>(), e.at("lc").get<std::int64_t>());
    r.det = j.at("det").get<std::string>();
    r.cert = j.at("cert").get<std::string>();
    for (const auto& e : j.at("notes")) r.notes.push_back(e.get<std::string>());
    return r;
}

inline std::string to_json_text(const AnalysisRecord& r) { return to_json(r).dump(2) + "\n"; }

inline AnalysisRecord from_json_text(const std::string& text) {
    return from_json(nlohmann::ordered_json::parse(text));
}

}  // namespace twoadic
