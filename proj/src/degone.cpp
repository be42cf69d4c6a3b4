#include "weightcat/degone.hpp"

#include <map>
#include <queue>
#include <stdexcept>

namespace weightcat {

namespace {

bool is_minus_one(const Q& q) { return q == -1; }

}  // namespace

DegOneSpec spec_N(const QVec& a) {
    int N = static_cast<int>(a.size());
    if (N < 2) throw std::invalid_argument("N(a) needs at least 2 parameters");
    DegOneSpec s;
    s.kind = DegOneKind::N;
    s.type = CartanType{Family::A, N - 1};
    s.a = a;
    int i = 0;
    while (i < N && is_minus_one(a[i])) ++i;
    s.lead = i;
    while (i < N && !is_integer(a[i])) ++i;
    s.mid_end = i;
    while (i < N && a[i] == 0) ++i;
    if (i != N) throw std::invalid_argument("N(a): expected (-1,...,-1, non-integers, 0,...,0), got " + to_string(a));
    if (s.mid_end - s.lead < 2)
        throw std::invalid_argument("N(a): the non-integer middle block needs at least 2 entries, got " + to_string(a));
    return s;
}

DegOneSpec spec_M(const QVec& a) {
    int n = static_cast<int>(a.size());
    if (n < 2) throw std::invalid_argument("M(a) needs at least 2 parameters");
    DegOneSpec s;
    s.kind = DegOneKind::M;
    s.type = CartanType{Family::C, n};
    s.a = a;
    int i = 0;
    while (i < n - 1 && is_minus_one(a[i])) ++i;
    s.lead = i;
    for (int j = i; j < n; ++j)
        if (is_integer(a[j])) {
            bool tail = j == n - 1 && j == i && (a[j] == -1 || a[j] == -2);
            if (!tail)
                throw std::invalid_argument("M(a): expected (-1,...,-1, non-integers), got " + to_string(a));
            s.integral_tail = true;
        }
    s.mid_end = n;
    return s;
}

DegOneSpec parse_spec(const std::string& module, const std::string& csv) {
    QVec a = parse_qvec(csv);
    if (module == "N") return spec_N(a);
    if (module == "M") return spec_M(a);
    throw std::invalid_argument("unknown module kind '" + module + "' (expected N or M)");
}

std::string spec_name(const DegOneSpec& s) {
    std::string out = s.kind == DegOneKind::N ? "N(" : "M(";
    for (size_t i = 0; i < s.a.size(); ++i) out += (i ? "," : "") + to_string(s.a[i]);
    return out + ")";
}

ModuleHandle build_N(const DegOneSpec& s) {
    if (s.kind != DegOneKind::N) throw std::invalid_argument("build_N needs a type A spec");
    auto g = std::make_shared<const LieAlgebra>(s.type);
    int N = static_cast<int>(s.a.size());
    return std::make_shared<RealizedModule>(g, WeylParams(s.a), std::vector<Block>{{0, N - 1, BlockKind::SUM_ZERO}},
                                            std::nullopt, spec_name(s));
}

ModuleHandle build_M(const DegOneSpec& s) {
    if (s.kind != DegOneKind::M) throw std::invalid_argument("build_M needs a type C spec");
    auto g = std::make_shared<const LieAlgebra>(s.type);
    int n = static_cast<int>(s.a.size());
    return std::make_shared<RealizedModule>(g, WeylParams(s.a), std::vector<Block>{{0, n - 1, BlockKind::SUM_EVEN}},
                                            std::nullopt, spec_name(s));
}

ModuleHandle build(const DegOneSpec& s) { return s.kind == DegOneKind::N ? build_N(s) : build_M(s); }

ModuleHandle build_W(const std::string& type, const QVec& a) {
    auto g = LieAlgebra::make(type);
    int N = static_cast<int>(a.size());
    return std::make_shared<RealizedModule>(g, WeylParams(a), std::vector<Block>{{0, N - 1, BlockKind::FREE}},
                                            std::nullopt, "W" + to_string(a));
}

std::vector<int> circled_of(const DegOneSpec& s) {
    std::vector<int> out;
    if (s.kind == DegOneKind::N) {
        // root e_i (0-based i) joins coordinates i and i+1
        for (int i = s.lead; i + 1 < s.mid_end; ++i) out.push_back(i);
    } else if (!s.integral_tail) {
        for (int i = s.lead; i < s.type.rank; ++i) out.push_back(i);
    }
    return out;
}

std::vector<int> theta_of(const DegOneSpec& s) { return complement(s.type.rank, circled_of(s)); }

QVec weight_of(const DegOneSpec& s, const Lattice& k) { return build(s)->weight(k); }

std::vector<Lattice> enumerate_hw(const ModuleOracle& m, const std::vector<int>& theta, int B) {
    const LieAlgebra& g = m.algebra();
    std::vector<int> raising;
    for (auto& r : g.roots().positive_in(theta)) raising.push_back(g.index_of(r));
    std::vector<Lattice> out;
    for (auto& k : m.window(B)) {
        bool hw = true;
        for (int b : raising)
            if (!m.act(b, k).empty()) hw = false;
        if (hw) out.push_back(k);
    }
    return out;
}

std::set<Lattice> predicted_hw(const DegOneSpec& s, int B) {
    auto m = build(s);
    int lo = s.lead, hi = s.kind == DegOneKind::N ? s.mid_end : s.type.rank;
    if (s.kind == DegOneKind::M && s.integral_tail) {
        // theta = Phi: only the highest weight line of the Weil module
        std::set<Lattice> out;
        for (auto& k : m->window(B)) {
            bool top = true;
            for (int i = 0; i < static_cast<int>(k.size()); ++i) top = top && k[i] == 0;
            if (top) out.insert(k);
        }
        return out;
    }
    std::set<Lattice> out;
    for (auto& k : m->window(B)) {
        bool ok = true;
        long sum = 0;
        for (int i = 0; i < static_cast<int>(k.size()); ++i) {
            if ((i < lo || i >= hi) && k[i] != 0) ok = false;
            if (i >= lo && i < hi) sum += k[i];
        }
        if (s.kind == DegOneKind::N && sum != 0) ok = false;
        if (s.kind == DegOneKind::M && sum % 2 != 0) ok = false;
        if (ok) out.insert(k);
    }
    return out;
}

int degree_on_window(const ModuleOracle& m, int B) {
    std::map<QVec, int, QVecLess> groups;
    int best = 0;
    for (auto& k : m.window(B)) best = std::max(best, ++groups[m.weight(k)]);
    return best;
}

OrbitReport levi_orbit(const ModuleOracle& m, const Lattice& k, const std::vector<int>& levi, int B) {
    const LieAlgebra& g = m.algebra();
    std::vector<int> roots;
    for (auto& r : g.roots().positive_in(levi)) {
        roots.push_back(g.index_of(r));
        roots.push_back(g.opposite(g.index_of(r)));
    }
    OrbitReport rep;
    std::queue<Lattice> todo;
    rep.orbit.insert(k);
    todo.push(k);
    while (!todo.empty()) {
        Lattice cur = todo.front();
        todo.pop();
        for (int b : roots) {
            Vec v = m.act(b, cur);
            if (v.empty()) {
                rep.cuspidal = false;
                rep.failures.push_back(g.name(b) + " kills x" + to_string(cur));
                continue;
            }
            for (auto& [t, c] : v) {
                if (!in_box(t, B)) {
                    rep.window_limited = true;
                    continue;
                }
                if (rep.orbit.insert(t).second) todo.push(t);
            }
            Vec back = m.act(g.opposite(b), v);
            if (back.size() != 1 || back.begin()->first != cur) {
                rep.returns = false;
                rep.failures.push_back("return path of " + g.name(b) + " at x" + to_string(cur));
            }
        }
    }
    return rep;
}

}  // namespace weightcat
