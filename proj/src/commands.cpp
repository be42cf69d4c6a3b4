#include "weightcat/commands.hpp"

#include "weightcat/degone.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace weightcat {

namespace {

CartanType parse_type(const std::string& s) {
    try {
        return CartanType::parse(s);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

std::vector<int> theta0(const std::vector<int>& theta, int rank) {
    std::set<int> seen;
    std::vector<int> out;
    for (int t : theta) {
        if (t < 1 || t > rank)
            throw ConfigError("theta index " + std::to_string(t) + " is outside 1.." + std::to_string(rank));
        if (!seen.insert(t).second) throw ConfigError("theta index " + std::to_string(t) + " is repeated");
        out.push_back(t - 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> theta1(const std::vector<int>& theta) {
    std::vector<int> out;
    for (int t : theta) out.push_back(t + 1);
    return out;
}

std::string join1(const std::vector<int>& theta) {
    std::string s;
    for (int t : theta) s += (s.empty() ? "" : ",") + std::to_string(t + 1);
    return s;
}

DegOneSpec parse_module(const std::string& module, const std::string& csv) {
    if (csv.empty()) throw ConfigError("module parameters are required");
    try {
        return parse_spec(module, csv);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

void check_window(int B, int D) {
    if (B < 0) throw ConfigError("window radius must be nonnegative");
    if (D < 1) throw ConfigError("depth must be positive");
}

}  // namespace

CommandResult run_classify(const std::string& type, const std::vector<int>& theta) {
    CartanType t = parse_type(type);
    auto th = theta0(theta, t.rank);
    Verdict v = classify(t, th);
    CommandResult r;
    r.body = to_json(v);
    r.body["type"] = t.str();
    r.body["theta"] = theta1(th);
    r.text = t.str() + " theta {" + join1(th) + "}: " + render_text(v);
    return r;
}

CommandResult run_verify(const std::string& module, const std::string& a, std::optional<std::vector<int>> theta,
                         int B, int D) {
    if (module != "N" && module != "M") throw ConfigError("verify needs module N or M");
    check_window(B, D);
    DegOneSpec spec = parse_module(module, a);
    auto M = build(spec);
    const LieAlgebra& g = M->algebra();
    std::vector<int> th = theta ? theta0(*theta, g.rank()) : theta_of(spec);
    Json suites;
    std::ostringstream text;
    text << spec_name(spec) << " on " << g.type().str() << ", theta {" << join1(th) << "}, window " << B
         << ", depth " << D << "\n";
    bool all = true;

    std::vector<int> gens;
    for (int b = 0; b < g.dim(); ++b) gens.push_back(b);
    FidelityReport fid = bracket_fidelity(*M, B, gens);
    suites["fidelity"] = Json{{"pass", fid.ok()}, {"checks", fid.checks}, {"skipped", fid.skipped},
                              {"violations", fid.violations}};
    text << "  fidelity:   " << (fid.ok() ? "pass" : "FAIL") << " (" << fid.checks << " checks)\n";
    all = all && fid.ok();

    auto hw = enumerate_hw(*M, th, B);
    std::set<Lattice> got(hw.begin(), hw.end());
    bool hw_ok = true;
    Json hw_json{{"found", got.size()}};
    if (theta) {
        hw_json["predicted"] = nullptr;
        text << "  hw vectors: " << got.size() << " found (no closed form for a custom theta)\n";
    } else {
        std::set<Lattice> want = predicted_hw(spec, B);
        hw_ok = got == want;
        hw_json["predicted"] = want.size();
        text << "  hw vectors: " << (hw_ok ? "pass" : "FAIL") << " (" << got.size() << " found, " << want.size()
             << " predicted)\n";
    }
    hw_json["pass"] = hw_ok;
    suites["hw"] = hw_json;
    all = all && hw_ok;

    int deg = degree_on_window(*M, B);
    suites["degree"] = Json{{"pass", deg == 1}, {"degree", deg}};
    text << "  degree:     " << (deg == 1 ? "pass" : "FAIL") << " (" << deg << ")\n";
    all = all && deg == 1;

    MembershipReport mem;
    try {
        mem = check_membership(M, ThetaSpec::full(g.type(), th), B, D);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    suites["membership"] = to_json(mem);
    text << render_text(mem);
    all = all && mem.pass();

    CommandResult r;
    r.body = Json{{"module", spec_name(spec)}, {"type", g.type().str()}, {"theta", theta1(th)},
                  {"window", B},           {"depth", D},               {"suites", suites},
                  {"pass", all}};
    text << (all ? "all pass" : "FAILURES") << "\n";
    r.text = text.str();
    r.pass = all;
    return r;
}

CommandResult run_ext(const std::string& module, const std::string& a, const std::string& b, int B) {
    check_window(B, 1);
    CommandResult r;
    if (module == "sl2") {
        DegOneSpec sa = parse_module("N", a);
        DegOneSpec sb = b.empty() ? sa : parse_module("N", b);
        if (sa.type.rank != 1 || sb.type.rank != 1) throw ConfigError("sl2 modules take two parameters a1,a2");
        QuotientDimension q = cocycle_quotient(build(sa), build(sb), B);
        int expected = sa.a == sb.a ? 1 : 0;
        r.body = to_json(q);
        r.body["pair"] = {spec_name(sb), spec_name(sa)};
        r.body["window"] = B;
        r.body["expected"] = expected;
        std::ostringstream text;
        text << "sl2 cocycles modulo coboundaries, " << spec_name(sa) << " by " << spec_name(sb) << ", window " << B
             << ": dimension " << q.quotient() << " (" << q.cocycles << " cocycles, " << q.coboundaries
             << " coboundaries; expected " << expected << ")\n";
        r.text = text.str();
        r.pass = q.quotient() == expected;
        return r;
    }
    if (module != "N" && module != "M") throw ConfigError("ext needs module N, M or sl2");
    DegOneSpec sa = parse_module(module, a);
    DegOneSpec sb = b.empty() ? sa : parse_module(module, b);
    ConstraintSystem sys;
    try {
        sys = module == "N" ? ext_solve_typeA(sa, sb, B) : ext_solve_typeC(sa, sb, B);
    } catch (const CertificationImpossible&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    r.body = to_json(sys);
    r.body["pair"] = {spec_name(sa), spec_name(sb)};
    r.text = render_text(sys);
    r.pass = sys.dimension == 0;
    return r;
}

CommandResult run_lab(const std::string& id, const std::string& a, const std::string& c, const std::string& type,
                      const std::vector<int>& theta, int B, int D, unsigned seed) {
    check_window(B, D);
    const auto& ids = lemma_ids();
    std::vector<LabRequest> reqs;
    if (id == "all") {
        for (auto& i : ids) reqs.push_back(random_request(i, seed));
    } else if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
        throw ConfigError("unknown lemma id '" + id + "'");
    } else if (a.empty()) {
        reqs.push_back(random_request(id, seed));
    } else {
        LabRequest req;
        req.id = id;
        req.type = type;
        try {
            req.a = parse_qvec(a);
            if (!c.empty()) req.c = parse_qvec(c);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        if (!theta.empty()) {
            if (type.empty()) throw ConfigError("theta needs an explicit type");
            req.theta = theta0(theta, parse_type(type).rank);
        }
        reqs.push_back(req);
    }
    CommandResult r;
    r.body = Json::object();
    for (auto& req : reqs) {
        req.options.depth = D;
        req.options.window = B;
        LemmaReport rep;
        try {
            rep = run_lemma(req);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        r.body[rep.id] = to_json(rep);
        r.text += render_text(rep);
        r.pass = r.pass && rep.match;
    }
    return r;
}

}  // namespace weightcat
