#include "bei/report.hpp"

#include <sstream>

using nlohmann::json;

namespace bei {

ReportFormat parse_report_format(const std::string& name) {
    if (name == "text") return ReportFormat::Text;
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    throw std::invalid_argument("unknown report format: " + name);
}

json betti_entries_json(const BettiTable& t) {
    json arr = json::array();
    for (const auto& [ij, b] : t.entries)
        arr.push_back({{"i", ij.first}, {"j", ij.second}, {"beta", b}});
    return arr;
}

json record_to_json(const CensusRecord& r) {
    json verdicts = json::array();
    for (const auto& v : r.verdicts) {
        json jv;
        jv["check"] = v.check;
        jv["verdict"] = verdict_name(v.verdict);
        if (!v.witness.is_null()) jv["witness"] = v.witness;
        verdicts.push_back(jv);
    }
    json j;
    j["key"] = r.key;
    j["n"] = r.n;
    if (r.reg >= 0) j["reg"] = r.reg;
    else j["reg"] = nullptr;
    j["c"] = r.c;
    j["l"] = r.l;
    j["is_path"] = r.is_path;
    j["verdicts"] = verdicts;
    return j;
}

std::string emit_report(const std::vector<CensusRecord>& records, ReportFormat format) {
    switch (format) {
        case ReportFormat::Json: {
            json arr = json::array();
            for (const auto& r : records) arr.push_back(record_to_json(r));
            return arr.dump(2) + "\n";
        }
        case ReportFormat::Csv: {
            std::ostringstream os;
            os << "key,n,reg,c,l,is_path,check,verdict\n";
            for (const auto& r : records) {
                auto prefix = [&]() -> std::ostringstream& {
                    os << r.key << "," << r.n << ",";
                    if (r.reg >= 0) os << r.reg;
                    os << "," << r.c << "," << r.l << "," << (r.is_path ? 1 : 0) << ",";
                    return os;
                };
                if (r.verdicts.empty()) {
                    prefix() << ",\n";
                    continue;
                }
                for (const auto& v : r.verdicts)
                    prefix() << v.check << "," << verdict_name(v.verdict) << "\n";
            }
            return os.str();
        }
        case ReportFormat::Text: {
            std::ostringstream os;
            long fails = 0, passes = 0, reports = 0;
            for (const auto& r : records) {
                os << "graph " << r.key << "  n=" << r.n;
                if (r.reg >= 0) os << "  reg(J)=" << r.reg;
                os << "  c=" << r.c << "  l=" << r.l << (r.is_path ? "  path" : "") << "\n";
                if (!r.graph6.empty()) os << "  graph6: " << r.graph6 << "\n";
                for (const auto& v : r.verdicts) {
                    os << "  [" << verdict_name(v.verdict) << "] " << v.check;
                    if (v.verdict != Verdict::Pass && !v.witness.is_null())
                        os << "  " << v.witness.dump();
                    os << "\n";
                    if (v.verdict == Verdict::Fail) ++fails;
                    else if (v.verdict == Verdict::Pass) ++passes;
                    else ++reports;
                }
                if (r.has_betti) os << r.betti.to_text();
            }
            os << "summary: " << records.size() << " graphs, " << passes << " pass, " << fails
               << " fail, " << reports << " report\n";
            return os.str();
        }
    }
    return "";
}

json cutset_family_to_json(const CutSetFamily& fam) {
    json arr = json::array();
    for (const auto& s : fam.sets) arr.push_back(s);
    return json{{"sets", arr}};
}

json prime_component_to_json(const PrimeComponent& pc) {
    json comps = json::array();
    for (const auto& c : pc.components) comps.push_back(c);
    json gens = json::array();
    for (const auto& g : pc.ideal.generators()) gens.push_back(g.to_string(pc.ideal.ring()));
    return json{{"T", pc.t}, {"components", comps}, {"generators", gens}};
}

json ideal_to_json(const Ideal& I) {
    json gens = json::array();
    for (const auto& g : I.generators()) gens.push_back(g.to_string(I.ring()));
    return json{
        {"ring", {{"n", I.ring().n}, {"char", I.ring().characteristic}, {"aux", I.ring().aux}}},
        {"generators", gens}};
}

} // namespace bei
