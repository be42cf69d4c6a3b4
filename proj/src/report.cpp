#include "weightcat/report.hpp"

#include <sstream>

namespace weightcat {

namespace {

Json q_json(const Q& q) { return to_string(q); }

Tri tri_from(const std::string& s) {
    if (s == "true") return Tri::YES;
    if (s == "false") return Tri::NO;
    if (s == "unknown") return Tri::UNKNOWN;
    throw std::invalid_argument("bad tri-state value '" + s + "'");
}

VerdictKind kind_from(const std::string& s) {
    for (auto k : {VerdictKind::TRIVIAL, VerdictKind::EXCLUDED, VerdictKind::NONTRIVIAL, VerdictKind::HIGHEST_WEIGHT,
                   VerdictKind::CUSPIDAL})
        if (to_string(k) == s) return k;
    throw std::invalid_argument("bad verdict kind '" + s + "'");
}

Json evidence_json(const ConditionEvidence& e) {
    return Json{{"verdict", to_string(e.verdict)}, {"checks", e.checks}, {"failures", e.failures}, {"notes", e.notes}};
}

// 1-based, as on the command line
std::string join(const std::vector<int>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i] + 1);
    return out;
}

}  // namespace

Json envelope(const std::string& command, Json body) {
    return Json{{"schema", kSchema}, {"command", command}, {"result", std::move(body)}};
}

Json to_json(const Verdict& v) {
    Json j{{"kind", to_string(v.kind)},
           {"degree1", to_string(v.degree1)},
           {"semisimple", to_string(v.semisimple)},
           {"reason", v.reason},
           {"family", nullptr}};
    if (v.family) {
        const auto& f = *v.family;
        j["family"] = Json{{"name", f.str()},
                           {"module", f.kind == DegOneKind::N ? "N" : "M"},
                           {"type", f.type.str()},
                           {"lead", f.lead},
                           {"free", f.free},
                           {"zeros", f.zeros}};
    }
    return j;
}

Verdict verdict_from_json(const Json& j) {
    Verdict v;
    v.kind = kind_from(j.at("kind").get<std::string>());
    v.degree1 = tri_from(j.at("degree1").get<std::string>());
    v.semisimple = tri_from(j.at("semisimple").get<std::string>());
    v.reason = j.at("reason").get<std::string>();
    if (!j.at("family").is_null()) {
        const Json& f = j.at("family");
        FamilyDescriptor d;
        d.kind = f.at("module").get<std::string>() == "N" ? DegOneKind::N : DegOneKind::M;
        d.type = CartanType::parse(f.at("type").get<std::string>());
        d.lead = f.at("lead").get<int>();
        d.free = f.at("free").get<int>();
        d.zeros = f.at("zeros").get<int>();
        v.family = d;
    }
    return v;
}

Json to_json(const MembershipReport& m) {
    Json hw = Json::array();
    for (auto& k : m.hw_vectors) hw.push_back(k);
    return Json{{"pass", m.pass()},
                {"cuspidality", evidence_json(m.cuspidality)},
                {"restriction", evidence_json(m.restriction)},
                {"finiteness", evidence_json(m.finiteness)},
                {"hw_vectors", hw}};
}

Json to_json(const ConstraintSystem& s) {
    Json labels = Json::array();
    for (auto& k : s.labels) labels.push_back(k);
    return Json{{"mode", s.mode},
                {"window", s.window},
                {"unknowns", s.labels.size()},
                {"labels", labels},
                {"rows", s.rows.size()},
                {"identity_rows", s.identity_rows},
                {"boundary_rows", s.boundary_rows},
                {"dimension", s.dimension},
                {"notes", s.notes}};
}

Json to_json(const QuotientDimension& q) {
    return Json{{"unknowns", q.unknowns},
                {"cocycles", q.cocycles},
                {"coboundaries", q.coboundaries},
                {"dimension", q.quotient()}};
}

Json to_json(const LemmaReport& r) {
    Json params = Json::object(), constants = Json::object(), predictions = Json::object(), checks = Json::array();
    for (auto& [k, v] : r.params) params[k] = q_json(v);
    for (auto& [k, v] : r.constants) constants[k] = q_json(v);
    for (auto& [k, v] : r.predictions) predictions[k] = q_json(v);
    for (auto& c : r.checks)
        checks.push_back(Json{{"name", c.name}, {"computed", c.computed}, {"expected", c.expected}, {"ok", c.ok}});
    std::vector<int> theta1;
    for (int t : r.theta) theta1.push_back(t + 1);
    return Json{{"id", r.id},
                {"algebra", r.algebra},
                {"theta", theta1},
                {"params", params},
                {"constants", constants},
                {"predictions", predictions},
                {"checks", checks},
                {"notes", r.notes},
                {"depth", r.depth},
                {"window", r.window},
                {"match", r.match}};
}

LemmaReport lemma_from_json(const Json& j) {
    LemmaReport r;
    r.id = j.at("id").get<std::string>();
    r.algebra = j.at("algebra").get<std::string>();
    for (int t : j.at("theta").get<std::vector<int>>()) r.theta.push_back(t - 1);
    for (auto& [k, v] : j.at("params").items()) r.params[k] = parse_q(v.get<std::string>());
    for (auto& [k, v] : j.at("constants").items()) r.constants[k] = parse_q(v.get<std::string>());
    for (auto& [k, v] : j.at("predictions").items()) r.predictions[k] = parse_q(v.get<std::string>());
    for (auto& c : j.at("checks"))
        r.checks.push_back({c.at("name").get<std::string>(), c.at("computed").get<std::string>(),
                            c.at("expected").get<std::string>(), c.at("ok").get<bool>()});
    r.notes = j.at("notes").get<std::vector<std::string>>();
    r.depth = j.at("depth").get<int>();
    r.window = j.at("window").get<int>();
    r.match = j.at("match").get<bool>();
    return r;
}

std::string render_text(const Verdict& v) {
    std::ostringstream os;
    os << to_string(v.kind);
    if (v.family) os << " " << v.family->str();
    os << "\n  degree 1:   " << to_string(v.degree1) << "\n  semisimple: " << to_string(v.semisimple)
       << "\n  reason:     " << v.reason << "\n";
    return os.str();
}

std::string render_text(const MembershipReport& m) {
    std::ostringstream os;
    auto line = [&](const char* name, const ConditionEvidence& e) {
        os << "  " << name << ": " << to_string(e.verdict) << " (" << e.checks << " checks)\n";
        for (auto& f : e.failures) os << "    failure: " << f << "\n";
        for (auto& n : e.notes) os << "    note: " << n << "\n";
    };
    os << "membership: " << (m.pass() ? "pass" : "fail") << "\n";
    line("cuspidality", m.cuspidality);
    line("restriction", m.restriction);
    line("finiteness ", m.finiteness);
    os << "  hw vectors: " << m.hw_vectors.size() << "\n";
    return os.str();
}

std::string render_text(const ConstraintSystem& s) {
    std::ostringstream os;
    os << "ext constraint system (" << s.mode << ", window " << s.window << ")\n"
       << "  unknowns " << s.labels.size() << ", rows " << s.rows.size() << " (identity " << s.identity_rows
       << ", boundary " << s.boundary_rows << ")\n"
       << "  solution space dimension " << s.dimension << "\n";
    for (auto& n : s.notes) os << "  note: " << n << "\n";
    return os.str();
}

std::string render_text(const LemmaReport& r) {
    std::ostringstream os;
    os << r.id << " on " << r.algebra << ", theta {" << join(r.theta) << "}, depth " << r.depth << ", window "
       << r.window << ": " << (r.match ? "match" : "MISMATCH") << "\n";
    for (auto& [k, v] : r.params) os << "  param " << k << " = " << to_string(v) << "\n";
    for (auto& [k, v] : r.predictions) {
        auto it = r.constants.find(k);
        std::string got = it == r.constants.end() ? "missing" : to_string(it->second);
        bool ok = it != r.constants.end() && it->second == v;
        os << "  " << (ok ? "ok  " : "FAIL") << " " << k << " = " << got << " (closed form " << to_string(v) << ")\n";
    }
    for (auto& c : r.checks)
        os << "  " << (c.ok ? "ok  " : "FAIL") << " " << c.name << ": " << c.computed << " (expected " << c.expected
           << ")\n";
    for (auto& n : r.notes) os << "  note: " << n << "\n";
    return os.str();
}

}  // namespace weightcat
