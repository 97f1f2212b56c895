#include "mhs/report.hpp"

#include <json.hpp>

#include <sstream>

namespace mhslab {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string params_pretty(const std::map<std::string, long>& params) {
    std::string out;
    for (const auto& [k, v] : params) {
        if (!out.empty()) out += ' ';
        out += k + "=" + std::to_string(v);
    }
    return out;
}

ordered_json params_json(const std::map<std::string, long>& params) {
    ordered_json j = ordered_json::object();
    for (const auto& [k, v] : params) j[k] = v;
    return j;
}

}  // namespace

std::string format_report(const VerificationReport& r, OutputFormat f, bool with_timing) {
    const double elapsed = with_timing ? r.elapsed_ms : 0.0;
    switch (f) {
        case OutputFormat::json: {
            ordered_json j;
            j["identity"] = identity_name(r.identity);
            j["params"] = params_json(r.params);
            j["lhs"] = to_string(r.lhs);
            j["rhs"] = to_string(r.rhs);
            j["equal"] = r.equal;
            j["elapsed_ms"] = elapsed;
            return j.dump();
        }
        case OutputFormat::tsv: {
            std::ostringstream os;
            os << identity_name(r.identity) << '\t' << params_pretty(r.params) << '\t'
               << to_string(r.lhs) << '\t' << to_string(r.rhs) << '\t'
               << (r.equal ? "true" : "false") << '\t' << elapsed;
            return os.str();
        }
        case OutputFormat::pretty: {
            std::ostringstream os;
            os << (r.equal ? "ok   " : "FAIL ") << identity_name(r.identity) << ' '
               << params_pretty(r.params) << "  lhs = " << to_string(r.lhs)
               << "  rhs = " << to_string(r.rhs);
            return os.str();
        }
    }
    return {};
}

std::string format_report(const CongruenceReport& r, OutputFormat f) {
    switch (f) {
        case OutputFormat::json: {
            ordered_json j;
            j["check"] = r.check;
            j["p"] = r.p;
            j["params"] = params_json(r.params);
            j["delta_valuation"] = r.delta_valuation.str();
            j["required"] = r.required;
            j["pass"] = r.pass;
            j["lhs"] = to_string(r.lhs);
            j["rhs"] = to_string(r.rhs);
            if (!r.note.empty()) j["note"] = r.note;
            if (r.lhs_valuation) j["lhs_valuation"] = r.lhs_valuation->str();
            return j.dump();
        }
        case OutputFormat::tsv: {
            std::ostringstream os;
            os << r.check << '\t' << r.p << '\t' << params_pretty(r.params) << '\t'
               << r.delta_valuation.str() << '\t' << r.required << '\t'
               << (r.pass ? "true" : "false") << '\t' << to_string(r.lhs) << '\t'
               << to_string(r.rhs);
            return os.str();
        }
        case OutputFormat::pretty: {
            std::ostringstream os;
            os << (r.pass ? "ok   " : "FAIL ") << r.check << " p=" << r.p << ' '
               << params_pretty(r.params) << "  v_p(delta) = " << r.delta_valuation.str()
               << " (need >= " << r.required << ")";
            if (!r.note.empty()) os << "  [" << r.note << "]";
            if (r.lhs_valuation) os << "  v_p(lhs) = " << r.lhs_valuation->str();
            return os.str();
        }
    }
    return {};
}

std::string format_summary(const SweepSummary& s, OutputFormat f) {
    switch (f) {
        case OutputFormat::json: {
            ordered_json j;
            j["all_passed"] = s.all_passed;
            j["evaluated"] = s.evaluated;
            j["skipped"] = s.skipped;
            j["counterexamples"] = s.counterexamples;
            return j.dump();
        }
        case OutputFormat::tsv: {
            std::ostringstream os;
            os << "summary\tall_passed=" << (s.all_passed ? "true" : "false")
               << "\tevaluated=" << s.evaluated << "\tskipped=" << s.skipped
               << "\tcounterexamples=" << s.counterexamples.size();
            return os.str();
        }
        case OutputFormat::pretty: {
            std::ostringstream os;
            os << (s.all_passed ? "all passed" : "FAILURES") << ": evaluated " << s.evaluated
               << ", skipped " << s.skipped << ", counterexamples " << s.counterexamples.size();
            return os.str();
        }
    }
    return {};
}

std::string tsv_header_verification() {
    return "identity\tparams\tlhs\trhs\tequal\telapsed_ms";
}

std::string tsv_header_congruence() {
    return "check\tp\tparams\tdelta_valuation\trequired\tpass\tlhs\trhs";
}

}  // namespace mhslab
