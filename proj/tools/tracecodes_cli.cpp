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

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "tracecodes/report.hpp"

using namespace tracecodes;

namespace {

std::pair<int, int> parse_m_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int m = std::stoi(text);
        return {m, m};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

std::vector<FamilyId> parse_families(const std::string& text) {
    if (text.empty() || text == "all") return all_families();
    std::vector<FamilyId> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(family_from_name(tok));
    return out;
}

const FieldSpec& field_for(int m, const std::string& poly_text) {
    if (poly_text.empty()) return FieldSpec::bundled(m);
    static std::map<std::pair<int, std::uint64_t>, FieldSpec> cache;
    std::uint64_t p = poly_mask_from_string(poly_text);
    auto key = std::make_pair(m, p);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, FieldSpec(m, p)).first;
    return it->second;
}

int run_verify(const std::vector<FamilyId>& fams, int m_lo, int m_hi, const std::string& poly,
               std::uint64_t budget, int jobs, const std::string& data_dir,
               const std::string& format) {
    auto table2 = load_expected_table2(data_dir);
    auto find_row = [&](FamilyId id, int m) -> const Table2Row* {
        for (auto& r : table2)
            if (r.family == family_name(id) && r.m == m) return &r;
        return nullptr;
    };
    bool all_ok = true;
    for (FamilyId id : fams) {
        for (int m = m_lo; m <= m_hi; ++m) {
            if (!family_valid(id, m)) continue;
            const FieldSpec& fs = field_for(m, poly);
            const CosetTable& tab = CosetTable::bundled(m);
            TraceSequence s = generate(id, fs);
            SequenceAnalysis dft = analyze_dft(s), bm = analyze_bm(s);
            Prediction pred = predict(id, m, tab);
            CrosscheckReport cx = crosscheck(pred, dft, fs, tab);
            bool pair_ok = cx.ok() && dft.minimal_poly == bm.minimal_poly;
            std::string note;
            if (!cx.formula_ok && pred.formula_span >= 0)
                note += " [stated span formula off: " + std::to_string(pred.formula_span) +
                        " vs computed " + std::to_string(dft.linear_span) + "]";

            CodeRecord code = build_code(dft.minimal_poly, fs);
            DistanceOptions opt;
            opt.bz.budget = budget;
            opt.bz.jobs = jobs;
            certify_distance(code, fs, opt);
            if (code.distance.is_exact() &&
                !(pred.d_lo <= int(code.distance.lo) && int(code.distance.lo) <= pred.d_hi))
                note += " [distance outside the stated bounds]";

            std::string expected = "-";
            if (const Table2Row* row = find_row(id, m)) {
                bool row_ok = row->n == int(code.n) && row->k == int(code.k) &&
                              int(code.distance.hi) >= row->d_lo &&
                              int(code.distance.lo) <= row->d_hi;
                if (row->dual_k >= 0) {
                    CodeRecord dc = dual(code, fs);
                    row_ok = row_ok && row->dual_k == int(dc.k);
                    if (row->dual_d_lo >= 0) {
                        certify_distance(dc, fs, opt);
                        row_ok = row_ok && int(dc.distance.hi) >= row->dual_d_lo &&
                                 int(dc.distance.lo) <= row->dual_d_hi;
                    }
                }
                expected = row_ok ? "match" : "MISMATCH";
                pair_ok = pair_ok && row_ok;
            }
            all_ok = all_ok && pair_ok;

            if (format == "json") {
                ordered_json j = json_prediction(pred);
                j["crosscheck_ok"] = cx.ok();
                j["bm_dft_agree"] = dft.minimal_poly == bm.minimal_poly;
                j["computed_span"] = dft.linear_span;
                j["code_k"] = code.k;
                j["distance"] = json_distance(code.distance);
                j["published_row"] = expected;
                std::cout << j.dump(2) << "\n";
            } else {
                std::printf(
                    "%-8s m=%-2d span=%-4u crosscheck=%s bm/dft=%s code=[%u,%u] d=%s%u..%u (%s) "
                    "published=%s%s\n",
                    family_name(id).c_str(), m, dft.linear_span, cx.ok() ? "ok" : "FAIL",
                    dft.minimal_poly == bm.minimal_poly ? "ok" : "FAIL", code.n, code.k,
                    code.distance.is_exact() ? "" : "~", code.distance.lo, code.distance.hi,
                    code.method.c_str(), expected.c_str(), note.c_str());
            }
        }
    }
    std::printf("verify: %s\n", all_ok ? "all checks passed" : "MISMATCHES FOUND");
    return all_ok ? 0 : 1;
}

int run_table2(std::uint64_t budget, int jobs, const std::string& data_dir) {
    auto rows = load_expected_table2(data_dir);
    std::printf(
        "family,m,n,k,d_lo,d_hi,dual_k,dual_d_lo,dual_d_hi,"
        "computed_k,computed_d_lo,computed_d_hi,computed_dual_k,computed_dual_d_lo,"
        "computed_dual_d_hi,row_match\n");
    bool all_ok = true;
    for (auto& r : rows) {
        if (r.m > 8) continue;
        FamilyId id = family_from_name(r.family);
        const FieldSpec& fs = FieldSpec::bundled(r.m);
        CodeRecord code = build_code(analyze_dft(generate(id, fs)).minimal_poly, fs);
        DistanceOptions opt;
        opt.bz.budget = budget;
        opt.bz.jobs = jobs;
        certify_distance(code, fs, opt);
        CodeRecord dc = dual(code, fs);
        const bool have_dual_d = r.dual_d_lo >= 0;
        if (have_dual_d) certify_distance(dc, fs, opt);
        bool ok = int(code.k) == r.k && int(code.distance.lo) <= r.d_hi &&
                  int(code.distance.hi) >= r.d_lo;
        if (r.dual_k >= 0) ok = ok && int(dc.k) == r.dual_k;
        if (have_dual_d)
            ok = ok && int(dc.distance.lo) <= r.dual_d_hi && int(dc.distance.hi) >= r.dual_d_lo;
        all_ok = all_ok && ok;
        std::printf("%s,%d,%d,%d,%d,%d,%d,%d,%d,%u,%u,%u,%u,%d,%d,%s\n", r.family.c_str(), r.m,
                    r.n, r.k, r.d_lo, r.d_hi, r.dual_k, r.dual_d_lo, r.dual_d_hi, code.k,
                    code.distance.lo, code.distance.hi, dc.k,
                    have_dual_d ? int(dc.distance.lo) : -1, have_dual_d ? int(dc.distance.hi) : -1,
                    ok ? "yes" : "NO");
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary cyclic codes from trace sequences over GF(2^m)"};
    app.require_subcommand(1);

    std::string data_dir = default_data_dir();
    std::string poly, poly_config, format = "pretty";
    std::uint64_t budget = 400'000'000;
    int jobs = 0;
    app.add_option("--data", data_dir, "data directory with the published reference tables");
    app.add_option("--poly", poly, "override the field modulus, e.g. x^7+x^3+1");
    app.add_option("--poly-config", poly_config, "config file of per-m modulus overrides");
    app.add_option("--format", format, "output format: pretty|json");
    app.add_option("--jobs", jobs, "worker threads (default: hardware)");
    app.add_option("--budget", budget, "work budget for the distance search");

    int m = 0, gamma_t = 0;
    auto* sc_cosets = app.add_subcommand("cosets", "dump 2-cyclotomic cosets and gamma tables");
    sc_cosets->add_option("--m", m, "extension degree")->required();
    sc_cosets->add_option("--t", gamma_t, "also dump the gamma table at this t");

    bool list = false;
    std::string check_fam;
    auto* sc_families = app.add_subcommand("families", "the polynomial catalog");
    sc_families->add_flag("--list", list, "print the catalog");
    sc_families->add_option("--check", check_fam, "verify permutation status of one family");
    sc_families->add_option("--m", m, "extension degree");

    std::string fam_name_opt, emit = "poly";
    auto* sc_seq = app.add_subcommand("sequence", "trace sequence and its analysis");
    sc_seq->add_option("--family", fam_name_opt, "family id")->required();
    sc_seq->add_option("--m", m, "extension degree")->required();
    sc_seq->add_option("--emit", emit, "bits|poly|spectrum");

    auto* sc_pred = app.add_subcommand("predict", "closed-form prediction");
    sc_pred->add_option("--family", fam_name_opt, "family id")->required();
    sc_pred->add_option("--m", m, "extension degree")->required();

    std::string distance_mode = "exact";
    auto* sc_code = app.add_subcommand("code", "build the cyclic code and certify its distance");
    sc_code->add_option("--family", fam_name_opt, "family id")->required();
    sc_code->add_option("--m", m, "extension degree")->required();
    sc_code->add_option("--distance", distance_mode, "exact|bounds");

    std::string m_range = "2..8", fam_list = "all";
    auto* sc_verify = app.add_subcommand("verify", "crosscheck closed forms against computation");
    sc_verify->add_option("--family", fam_list, "comma list of families or 'all'");
    sc_verify->add_option("--m", m_range, "degree or range a..b");

    auto* sc_table2 = app.add_subcommand("table2", "recompute the published parameter ledger");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!poly_config.empty()) FieldSpec::load_config(poly_config);
        if (!poly.empty() && m > 0) FieldSpec::override_default(m, poly_mask_from_string(poly));

        if (sc_cosets->parsed()) {
            std::cout << json_cosets(m, gamma_t).dump(2) << "\n";
        } else if (sc_families->parsed()) {
            if (!check_fam.empty()) {
                FamilyId id = family_from_name(check_fam);
                if (m == 0) throw std::invalid_argument("--check needs --m");
                ordered_json j = json_family_entry(id, m);
                const bool perm = is_permutation(id, m, field_for(m, poly));
                j["permutation"] = perm;
                PermClaim claim = family_permutation_claim(id, m);
                j["published_claim"] = claim == PermClaim::permutation        ? "permutation"
                                       : claim == PermClaim::non_permutation ? "non_permutation"
                                                                             : "unspecified";
                j["claim_matches"] =
                    claim == PermClaim::unspecified || perm == (claim == PermClaim::permutation);
                std::cout << j.dump(2) << "\n";
            } else {
                ordered_json arr = ordered_json::array();
                for (FamilyId id : all_families()) arr.push_back(json_family_entry(id, m));
                std::cout << arr.dump(2) << "\n";
            }
        } else if (sc_seq->parsed()) {
            FamilyId id = family_from_name(fam_name_opt);
            std::cout << json_sequence(id, m, field_for(m, poly), emit).dump(2) << "\n";
        } else if (sc_pred->parsed()) {
            FamilyId id = family_from_name(fam_name_opt);
            std::cout << json_prediction(predict(id, m, CosetTable::bundled(m))).dump(2) << "\n";
        } else if (sc_code->parsed()) {
            FamilyId id = family_from_name(fam_name_opt);
            const FieldSpec& fs = field_for(m, poly);
            CodeRecord code = build_code(analyze_dft(generate(id, fs)).minimal_poly, fs);
            DistanceOptions opt;
            opt.bz.jobs = jobs;
            opt.bz.budget =
                distance_mode == "bounds" ? std::min<std::uint64_t>(budget, 20'000'000) : budget;
            std::cout << json_code_report(id, m, fs, code, true, opt).dump(2) << "\n";
        } else if (sc_verify->parsed()) {
            auto [lo, hi] = parse_m_range(m_range);
            return run_verify(parse_families(fam_list), lo, hi, poly, budget, jobs, data_dir,
                              format);
        } else if (sc_table2->parsed()) {
            return run_table2(budget, jobs, data_dir);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
