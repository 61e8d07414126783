/*
   Copyright 2026 The tracecodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TRACECODES_REPORT_HPP
#define TRACECODES_REPORT_HPP

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tracecodes/codes.hpp"
#include "tracecodes/predict.hpp"
#include "tracecodes/sequence.hpp"

namespace tracecodes {

using ordered_json = nlohmann::ordered_json;

inline std::string default_data_dir() {
#ifdef TRACECODES_DATA_DIR
    return TRACECODES_DATA_DIR;
#else
    return "data";
#endif
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::vector<std::vector<std::string>> load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open data file: " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        rows.push_back(split_csv_line(line));
    }
    return rows;
}

}  // namespace detail

struct ExpectedGenerator {
    std::uint64_t field_poly;
    BinaryPoly generator;
};

/// family name + m -> published generator polynomial and the modulus that
/// reproduces it.
inline std::map<std::pair<std::string, int>, ExpectedGenerator> load_expected_generators(
    const std::string& dir = default_data_dir()) {
    std::map<std::pair<std::string, int>, ExpectedGenerator> out;
    for (auto& row : detail::load_csv(dir + "/expected_generators.csv")) {
        if (row.size() != 4) throw std::invalid_argument("bad expected_generators row");
        out[{row[0], std::stoi(row[1])}] =
            ExpectedGenerator{poly_mask_from_string(row[2]), BinaryPoly::parse(row[3])};
    }
    return out;
}

struct Table2Row {
    std::string family;
    int m, n, k, d_lo, d_hi;
    int dual_k;                      // -1 when unpublished
    int dual_d_lo, dual_d_hi;        // -1 when unpublished
    std::string opt_code, opt_dual;
};

inline std::vector<Table2Row> load_expected_table2(const std::string& dir = default_data_dir()) {
    std::vector<Table2Row> out;
    auto num = [](const std::string& s) { return s == "-" ? -1 : std::stoi(s); };
    for (auto& row : detail::load_csv(dir + "/expected_table2.csv")) {
        if (row.size() != 11) throw std::invalid_argument("bad expected_table2 row");
        out.push_back(Table2Row{row[0], std::stoi(row[1]), std::stoi(row[2]), std::stoi(row[3]),
                                std::stoi(row[4]), std::stoi(row[5]), num(row[6]), num(row[7]),
                                num(row[8]), row[9], row[10]});
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON emitters for the CLI verbs.
// ---------------------------------------------------------------------------

inline ordered_json json_distance(const Distance& d) {
    ordered_json j;
    j["kind"] = d.kind == Distance::Kind::exact ? "exact"
                : d.kind == Distance::Kind::interval ? "interval" : "unknown";
    j["lo"] = d.lo;
    j["hi"] = d.hi;
    return j;
}

inline ordered_json json_cosets(int m, int gamma_t) {
    const CosetTable& tab = CosetTable::bundled(m);
    ordered_json j;
    j["schema_version"] = 1;
    j["m"] = m;
    j["v"] = tab.v();
    ordered_json leaders = ordered_json::array();
    for (std::uint32_t lead : tab.leaders()) {
        ordered_json e;
        e["leader"] = lead;
        e["size"] = tab.size(lead);
        leaders.push_back(e);
    }
    j["cosets"] = leaders;
    if (gamma_t > 0) {
        GammaMachinery g = build_gamma(gamma_t);
        ordered_json gj;
        gj["t"] = gamma_t;
        gj["gamma"] = g.gamma;
        ordered_json eps = ordered_json::object(), bsets = ordered_json::object();
        for (std::uint32_t x : g.gamma) {
            eps[std::to_string(x)] = g.eps.at(x);
            bsets[std::to_string(x)] = g.b_sets.at(x);
        }
        gj["eps"] = eps;
        gj["kappa_support"] = [&] {
            std::vector<std::uint32_t> on;
            for (std::uint32_t x : g.gamma)
                if (g.kappa.at(x)) on.push_back(x);
            return on;
        }();
        gj["b_sets"] = bsets;
        j["gamma"] = gj;
    }
    return j;
}

inline ordered_json json_family_entry(FamilyId id, int m) {
    ordered_json j;
    j["family"] = family_name(id);
    std::string cond;
    switch (id) {
        case FamilyId::F1_intro: cond = "m even, m >= 2"; break;
        case FamilyId::f1: cond = "m odd, m >= 3"; break;
        case FamilyId::f2: cond = "m odd, m >= 5 (stated closed form from m >= 7)"; break;
        case FamilyId::f3: cond = "m odd, m >= 5"; break;
        case FamilyId::f4: cond = "m odd, m >= 5"; break;
        case FamilyId::f5: cond = "m odd, m >= 5 (stated closed form from m >= 7)"; break;
        case FamilyId::f6: cond = "m even, m >= 4"; break;
        case FamilyId::f7: cond = "m even, m >= 4 (stated closed form from m >= 6)"; break;
        case FamilyId::f8: cond = "m even, m >= 6"; break;
    }
    j["conditions"] = cond;
    if (m > 0 && family_valid(id, m)) {
        ordered_json ex = ordered_json::array();
        for (auto e : family_exponents(id, m)) ex.push_back(e);
        j["m"] = m;
        j["exponents"] = ex;
    }
    return j;
}

inline ordered_json json_sequence(FamilyId id, int m, const FieldSpec& fs, const std::string& emit) {
    TraceSequence s = generate(id, fs);
    ordered_json j;
    j["schema_version"] = 1;
    j["family"] = family_name(id);
    j["m"] = m;
    j["field_poly"] = poly_mask_to_string(fs.modulus());
    if (emit == "bits") {
        std::string bits;
        bits.reserve(s.bits.size());
        for (auto b : s.bits) bits += char('0' + b);
        j["bits"] = bits;
    } else if (emit == "poly") {
        SequenceAnalysis a = analyze_dft(s);
        j["minimal_poly"] = a.minimal_poly.to_string();
        j["minimal_poly_hex"] = a.minimal_poly.to_hex();
        j["linear_span"] = a.linear_span;
    } else if (emit == "spectrum") {
        SequenceAnalysis a = analyze_dft(s);
        ordered_json spec = ordered_json::object();
        for (std::uint32_t i : a.index_set) spec[std::to_string(i)] = a.dft[i];
        j["linear_span"] = a.linear_span;
        j["index_set"] = a.index_set;
        j["spectrum"] = spec;
    } else {
        throw std::invalid_argument("unknown emit mode: " + emit);
    }
    return j;
}

inline ordered_json json_prediction(const Prediction& p) {
    ordered_json j;
    j["schema_version"] = 1;
    j["family"] = family_name(p.fam);
    j["m"] = p.m;
    j["n"] = p.v;
    j["leaders"] = p.leaders;
    j["includes_zero"] = p.includes_zero;
    j["span"] = p.span;
    j["dim"] = p.dim;
    j["formula_span"] = p.formula_span;
    j["formula_matches_set"] = p.formula_matches_set;
    j["d_lo"] = p.d_lo;
    j["d_hi"] = p.d_hi;
    j["extrapolated"] = p.extrapolated;
    j["source"] = p.source;
    return j;
}

/// The full per-code report: parameters, generator, defining-set leaders,
/// distance, and the bound battery.
inline ordered_json json_code_report(FamilyId id, int m, const FieldSpec& fs, CodeRecord& code,
                                     bool with_distance, DistanceOptions opt = {}) {
    const CosetTable& tab = CosetTable::bundled(m);
    ordered_json j;
    j["schema_version"] = 1;
    j["family"] = family_name(id);
    j["m"] = m;
    j["n"] = code.n;
    j["k"] = code.k;
    j["generator_hex"] = code.generator.to_hex();
    j["generator_pretty"] = code.generator.to_string();
    std::vector<std::uint32_t> leads;
    for (std::uint32_t z : code.defining_set) {
        std::uint32_t l = tab.leader(z);
        if (std::find(leads.begin(), leads.end(), l) == leads.end()) leads.push_back(l);
    }
    std::sort(leads.begin(), leads.end());
    j["defining_set_leaders"] = leads;
    if (with_distance) certify_distance(code, fs, opt);
    j["distance"] = json_distance(code.distance);
    if (!code.method.empty()) j["distance_method"] = code.method;

    auto [ht, wit] = hartmann_tzeng_bound(code.defining_set, code.n);
    ordered_json bounds;
    bounds["bch"] = bch_bound(code.defining_set, code.n);
    bounds["ht"] = ht;
    ordered_json witj;
    witj["reversed"] = wit.reversed;
    witj["run_start"] = wit.run_start;
    witj["delta"] = wit.delta;
    witj["b"] = wit.b;
    witj["s"] = wit.s;
    bounds["ht_witness"] = witj;
    SpVerdict sp = sphere_packing_check(code.n, code.k, code.distance);
    bounds["sphere_packing"] = to_string(sp);
    j["bounds"] = bounds;
    j["optimal"] = sp == SpVerdict::optimal;
    return j;
}

}  // namespace tracecodes

#endif  // TRACECODES_REPORT_HPP
