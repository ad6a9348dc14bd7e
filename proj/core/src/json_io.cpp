#include "nimseq/json_io.hpp"

namespace nimseq {

namespace {

template <class T>
T convert(const Json& j, const char* what) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("bad ") + what + " JSON: " + e.what());
    }
}

std::vector<std::pair<Int, Int>> entries(const std::map<Int, Int>& m) {
    return {m.begin(), m.end()};
}

}  // namespace

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what(),
                              static_cast<Int>(e.byte));
    }
}

void to_json(Json& j, const ProblemInstance& inst) {
    j = Json{{"p", inst.ys.period},
             {"diff_sets", inst.ys.diff_sets},
             {"seed", inst.seed},
             {"periodic_start", inst.ys.periodic_start}};
    if (!inst.ys.prefix_sets.empty()) j["prefix_sets"] = inst.ys.prefix_sets;
}

void from_json(const Json& j, ProblemInstance& inst) {
    inst = {};
    j.at("p").get_to(inst.ys.period);
    j.at("diff_sets").get_to(inst.ys.diff_sets);
    inst.seed = j.value("seed", std::vector<Int>{});
    inst.ys.periodic_start = j.value("periodic_start", Int{0});
    inst.ys.prefix_sets = j.value("prefix_sets", std::vector<std::vector<Int>>{});
}

void to_json(Json& j, const PeriodCertificate& cert) {
    j = Json{{"preperiod", cert.preperiod}, {"period", cert.period}, {"diff_period", cert.diff_period}};
}

void from_json(const Json& j, PeriodCertificate& cert) {
    j.at("preperiod").get_to(cert.preperiod);
    j.at("period").get_to(cert.period);
    j.at("diff_period").get_to(cert.diff_period);
}

void to_json(Json& j, const CutRow& row) {
    j = Json{{"s", entries(row.s)}, {"t", entries(row.t)}};
}

void from_json(const Json& j, CutRow& row) {
    row = {};
    for (const auto& [o, d] : j.at("s").get<std::vector<std::pair<Int, Int>>>()) row.s[o] = d;
    for (const auto& [o, d] : j.at("t").get<std::vector<std::pair<Int, Int>>>()) row.t[o] = d;
}

void to_json(Json& j, const MultiCut& mc) {
    j = Json{{"mu", mc.mu}, {"nu", mc.nu}, {"rows", mc.rows}};
}

void from_json(const Json& j, MultiCut& mc) {
    j.at("mu").get_to(mc.mu);
    j.at("nu").get_to(mc.nu);
    j.at("rows").get_to(mc.rows);
}

void to_json(Json& j, const BoundReport& r) {
    j = Json{{"mu", r.mu},
             {"nu", r.nu},
             {"M", r.big_m},
             {"p", r.p},
             {"degenerate", r.degenerate},
             {"window_bound", r.window_bound},
             {"binomial_bound", r.binomial_bound},
             {"k_paper", r.k_paper},
             {"k_effective", r.k_effective},
             {"asymptotic_estimate", r.asymptotic_estimate ? Json(*r.asymptotic_estimate) : Json(nullptr)},
             {"preperiod_bound_exact", r.preperiod_bound_exact},
             {"preperiod_bound_paper", r.preperiod_bound_paper},
             {"preperiod_bound_combined", r.preperiod_bound_combined},
             {"combined_valid", r.combined_valid}};
}

void to_json(Json& j, const DigraphSummary& s) {
    Json hist = Json::object();
    for (auto [size, count] : s.component_sizes) hist[std::to_string(size)] = count;
    j = Json{{"rows", s.rows},
             {"vertices", s.vertices},
             {"edges", s.edges},
             {"component_size_histogram", hist},
             {"cycled_closed_count", s.cycled_closed_count}};
}

ProblemInstance instance_from_json(const Json& j) {
    auto inst = convert<ProblemInstance>(j, "instance");
    validate_instance(inst);
    return inst;
}

PeriodCertificate certificate_from_json(const Json& j) { return convert<PeriodCertificate>(j, "certificate"); }

CutPath path_from_json(const Json& j) { return convert<CutPath>(j, "path"); }

}  // namespace nimseq
