#include "znsum/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace znsum {

std::string Witness::set(const std::string& name) const {
    for (const auto& [k, v] : sets)
        if (k == name) return v;
    throw std::out_of_range("witness has no set named " + name);
}

void canonicalize(std::vector<Witness>& ws) {
    std::sort(ws.begin(), ws.end(), [](const Witness& a, const Witness& b) {
        if (a.claim_id != b.claim_id) return a.claim_id < b.claim_id;
        if (a.n != b.n) return a.n < b.n;
        return a.sets < b.sets;
    });
}

json to_json(const Witness& w) {
    json sets = json::object();
    for (const auto& [k, v] : w.sets) sets[k] = v;
    return json{{"n", w.n},     {"claim", w.claim_id}, {"sets", sets},
                {"lhs", w.lhs}, {"rhs", w.rhs},        {"relation", w.relation}};
}

namespace {
json report_body(const AuditReport& r) {
    json violations = json::array();
    for (const auto& w : r.violations) violations.push_back(to_json(w));
    json findings = json::array();
    for (const auto& w : r.findings) findings.push_back(to_json(w));
    json params = r.params;
    params["mode"] = r.mode;
    json out{{"check", r.check_id},
             {"n", r.n},
             {"params", params},
             {"instances_tested", r.instances_tested},
             {"violations", violations},
             {"findings", findings}};
    out["seed"] = r.seed ? json(*r.seed) : json(nullptr);
    return out;
}
}  // namespace

json to_json(const AuditReport& r) {
    json out = report_body(r);
    out["elapsed_ms"] = r.elapsed_ms;
    return out;
}

json to_json_stable(const AuditReport& r) { return report_body(r); }

std::string csv_header() {
    return "check,n,mode,instances_tested,violations,findings,seed,elapsed_ms";
}

std::string csv_row(const AuditReport& r) {
    std::string seed = r.seed ? std::to_string(*r.seed) : "";
    return r.check_id + "," + std::to_string(r.n) + "," + r.mode + "," +
           std::to_string(r.instances_tested) + "," +
           std::to_string(r.violations.size()) + "," +
           std::to_string(r.findings.size()) + "," + seed + "," +
           std::to_string(r.elapsed_ms);
}

}  // namespace znsum
