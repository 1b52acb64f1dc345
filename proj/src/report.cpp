#include <sstream>

#include "dlmkit/verify.hpp"
#include "json.hpp"

namespace dlm {

namespace {

using nlohmann::json;

json suites_json(const std::vector<SuiteResult>& suites) {
    json arr = json::array();
    for (const auto& s : suites) {
        arr.push_back({{"name", s.name},
                       {"status", s.pass ? "pass" : "fail"},
                       {"counterexamples", s.counterexamples}});
    }
    return arr;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

void suites_text(std::ostringstream& out, const std::vector<SuiteResult>& suites) {
    for (const auto& s : suites) {
        out << "  [" << (s.pass ? "pass" : "FAIL") << "] " << s.name;
        if (!s.pass) {
            out << " (";
            for (std::size_t i = 0; i < s.counterexamples.size(); ++i) {
                if (i) out << ' ';
                out << s.counterexamples[i];
            }
            out << ")";
        }
        out << '\n';
    }
}

} // namespace

std::string to_json(const ClassificationReport& r) {
    json j = {{"n", r.n},
              {"count", r.count},
              {"class_size", static_cast<long long>(r.class_members.size())},
              {"verdict", r.match ? "match" : "mismatch"},
              {"missing", r.missing},
              {"unexpected", r.unexpected},
              {"class_members", r.class_members},
              {"expected", r.expected},
              {"suites", suites_json(r.suites)}};
    return j.dump(2);
}

std::string to_json(const CospectralReport& r) {
    json groups = json::array();
    for (const auto& g : r.groups) {
        groups.push_back({{"key", g.key}, {"members", g.members}});
    }
    json j = {{"n", r.n},
              {"count", r.count},
              {"class_size", r.classified_count},
              {"verdict", r.all_classified_singletons ? "match" : "mismatch"},
              {"missing", json::array()},
              {"unexpected", json::array()},
              {"groups", groups},
              {"suites", suites_json(r.suites)}};
    return j.dump(2);
}

std::string to_json(const PropertyReport& r) {
    json j = {{"n", r.n},
              {"count", r.count},
              {"class_size", 0},
              {"verdict", r.passed() ? "match" : "mismatch"},
              {"missing", json::array()},
              {"unexpected", json::array()},
              {"suites", suites_json(r.suites)}};
    return j.dump(2);
}

std::string to_csv(const ClassificationReport& r) {
    std::ostringstream out;
    out << "graph6,largest_eigenvalue,multiplicity,diameter,p5_free,complement_components\n";
    for (const auto& rec : r.records) {
        out << csv_escape(rec.g6) << ',' << csv_escape(rec.largest_descriptor) << ','
            << rec.multiplicity << ',' << rec.diameter << ',' << (rec.p5_free ? 1 : 0) << ','
            << rec.complement_components << '\n';
    }
    return out.str();
}

std::string to_csv(const CospectralReport& r) {
    std::ostringstream out;
    out << "group_key,graph6\n";
    for (const auto& g : r.groups) {
        for (const auto& m : g.members) out << csv_escape(g.key) << ',' << csv_escape(m) << '\n';
    }
    return out.str();
}

std::string to_csv(const PropertyReport& r) {
    std::ostringstream out;
    out << "suite,status,counterexamples\n";
    for (const auto& s : r.suites) {
        std::string joined;
        for (std::size_t i = 0; i < s.counterexamples.size(); ++i) {
            if (i) joined += ' ';
            joined += s.counterexamples[i];
        }
        out << csv_escape(s.name) << ',' << (s.pass ? "pass" : "fail") << ','
            << csv_escape(joined) << '\n';
    }
    return out.str();
}

std::string to_text(const ClassificationReport& r) {
    std::ostringstream out;
    out << "classification n=" << r.n << ": " << r.count << " connected graphs, class size "
        << r.class_members.size() << ", verdict " << (r.match ? "match" : "MISMATCH") << '\n';
    if (!r.missing.empty()) {
        out << "  missing:";
        for (const auto& m : r.missing) out << ' ' << m;
        out << '\n';
    }
    if (!r.unexpected.empty()) {
        out << "  unexpected:";
        for (const auto& u : r.unexpected) out << ' ' << u;
        out << '\n';
    }
    suites_text(out, r.suites);
    return out.str();
}

std::string to_text(const CospectralReport& r) {
    std::ostringstream out;
    out << "cospectral n=" << r.n << ": " << r.count << " graphs, " << r.groups.size()
        << " nontrivial groups, classified members "
        << (r.all_classified_singletons ? "all determined by spectrum" : "NOT all determined")
        << '\n';
    suites_text(out, r.suites);
    return out.str();
}

std::string to_text(const PropertyReport& r) {
    std::ostringstream out;
    out << "properties n=" << r.n << " over " << r.count << " graphs: "
        << (r.passed() ? "pass" : "FAIL") << '\n';
    suites_text(out, r.suites);
    return out.str();
}

} // namespace dlm
