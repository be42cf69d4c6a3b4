#include "weightcat/categorio.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace weightcat {

std::string to_string(Tri t) {
    switch (t) {
        case Tri::NO: return "false";
        case Tri::YES: return "true";
        case Tri::UNKNOWN: return "unknown";
    }
    return "unknown";
}

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::TRIVIAL: return "TRIVIAL";
        case VerdictKind::EXCLUDED: return "EXCLUDED";
        case VerdictKind::NONTRIVIAL: return "NONTRIVIAL";
        case VerdictKind::HIGHEST_WEIGHT: return "HIGHEST_WEIGHT";
        case VerdictKind::CUSPIDAL: return "CUSPIDAL";
    }
    return "TRIVIAL";
}

ThetaSpec ThetaSpec::full(CartanType t, std::vector<int> theta) {
    ThetaSpec s;
    s.type = t;
    s.theta = std::move(theta);
    for (int i = 0; i < t.rank; ++i) s.S.push_back(i);
    std::sort(s.theta.begin(), s.theta.end());
    s.validate();
    return s;
}

namespace {

void check_indices(const std::vector<int>& idx, int rank, const char* what) {
    std::set<int> seen;
    for (int i : idx) {
        if (i < 0 || i >= rank)
            throw std::invalid_argument(std::string(what) + ": simple root index " + std::to_string(i + 1) +
                                        " out of range");
        if (!seen.insert(i).second)
            throw std::invalid_argument(std::string(what) + ": repeated simple root " + std::to_string(i + 1));
    }
}

}  // namespace

void ThetaSpec::validate() const {
    CartanType::validate(type.family, type.rank);
    check_indices(theta, type.rank, "theta");
    check_indices(S, type.rank, "S");
    std::set<int> s(S.begin(), S.end());
    for (int i : theta)
        if (!s.count(i)) throw std::invalid_argument("theta is not contained in S");
}

std::vector<int> ThetaSpec::cuspidal_part() const {
    std::set<int> t(theta.begin(), theta.end());
    std::vector<int> out;
    for (int i : S)
        if (!t.count(i)) out.push_back(i);
    std::sort(out.begin(), out.end());
    return out;
}

std::string FamilyDescriptor::str() const {
    std::ostringstream os;
    os << (kind == DegOneKind::N ? "N(" : "M(");
    bool first = true;
    auto put = [&](const std::string& s) {
        if (!first) os << ",";
        os << s;
        first = false;
    };
    for (int i = 0; i < lead; ++i) put("-1");
    for (int i = 0; i < free; ++i) put("a" + std::to_string(i + 1));
    for (int i = 0; i < zeros; ++i) put("0");
    os << ")";
    return os.str();
}

DegOneSpec FamilyDescriptor::instantiate(const QVec& params) const {
    if (static_cast<int>(params.size()) != free)
        throw std::invalid_argument(str() + " takes " + std::to_string(free) + " parameters");
    QVec a(lead, Q(-1));
    a.insert(a.end(), params.begin(), params.end());
    a.insert(a.end(), zeros, Q(0));
    return kind == DegOneKind::N ? spec_N(a) : spec_M(a);
}

namespace {

std::vector<std::vector<int>> components(const RootSystem& rs, const std::vector<int>& nodes) {
    std::vector<std::vector<int>> out;
    std::set<int> left(nodes.begin(), nodes.end());
    while (!left.empty()) {
        std::vector<int> comp{*left.begin()};
        left.erase(left.begin());
        for (size_t h = 0; h < comp.size(); ++h)
            for (auto it = left.begin(); it != left.end();) {
                if (rs.cartan_entry(comp[h], *it) != 0) {
                    comp.push_back(*it);
                    it = left.erase(it);
                } else {
                    ++it;
                }
            }
        std::sort(comp.begin(), comp.end());
        out.push_back(comp);
    }
    return out;
}

// A connected set of nodes whose Dynkin subdiagram is a simply laced path.
bool is_type_A(const RootSystem& rs, const std::vector<int>& comp) {
    for (int i : comp) {
        int deg = 0;
        for (int j : comp) {
            if (i == j) continue;
            int c = rs.cartan_entry(i, j);
            if (c < -1) return false;
            if (c != 0) ++deg;
        }
        if (deg > 2) return false;
    }
    return true;
}

bool consecutive(const std::vector<int>& s) {
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i] != s[i - 1] + 1) return false;
    return true;
}

std::string nodes_str(const std::vector<int>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) out += (i ? ",e" : "e") + std::to_string(s[i] + 1);
    return out + "}";
}

// Rows excluded from the classification.
std::optional<std::string> excluded_row(const CartanType& t, const std::vector<int>& S) {
    int n = t.rank;
    if (S.size() != 1) return std::nullopt;
    int i = S[0];
    switch (t.family) {
        case Family::B:
            if (i == 0) return "B_n with Levi {e1}: left open";
            break;
        case Family::D:
            if (i == 0 || i == n - 2 || i == n - 1) return "D_n with Levi on an end node: left open";
            break;
        case Family::E:
            if (n == 6 && (i == 0 || i == 5)) return "E6 with Levi {e1} or {e6}: left open";
            if (n == 7 && i == 6) return "E7 with Levi {e7}: left open";
            break;
        default: break;
    }
    return std::nullopt;
}

// Rows ruled out by the large-root reduction.
std::optional<std::string> reduction_row(const RootSystem& rs, const std::vector<int>& S) {
    const CartanType& t = rs.type();
    int n = t.rank;
    bool single = S.size() == 1;
    bool block = consecutive(S);
    switch (t.family) {
        case Family::B:
            if (single && n > 3 && S[0] != 0) return "reduction: B_n, n>3, Levi on a single node other than e1";
            if (block && S.size() >= 3 && S.back() < n - 1)
                return "reduction: B_n, Levi on a chain of at least three nodes avoiding e_n";
            break;
        case Family::C:
            if (single && S[0] < n - 1) return "reduction: C_n, Levi on a single short node";
            if (block && S.size() >= 3 && S.back() < n - 1)
                return "reduction: C_n, Levi on a chain of at least three short nodes";
            break;
        case Family::F:
            if (single) return "reduction: F4, Levi on a single node";
            if (S == std::vector<int>{0, 1} || S == std::vector<int>{2, 3})
                return "reduction: F4, Levi {e1,e2} or {e3,e4}";
            break;
        case Family::D:
            if (single && S[0] != 0 && S[0] < n - 2) return "reduction: D_n, Levi on a single inner node";
            if (S.size() >= 2 && components(rs, S).size() == 1 && is_type_A(rs, S))
                return "reduction: D_n, Levi of type A_k with k>1";
            break;
        case Family::E:
            if (components(rs, S).size() == 1 && is_type_A(rs, S)) return "reduction: E, Levi of type A_k";
            break;
        case Family::G:
            if (single) return "reduction: G2, Levi on a single node";
            break;
        default: break;
    }
    return std::nullopt;
}

}  // namespace

Verdict classify(CartanType t, const std::vector<int>& theta_in) {
    CartanType::validate(t.family, t.rank);
    check_indices(theta_in, t.rank, "theta");
    std::vector<int> theta = theta_in;
    std::sort(theta.begin(), theta.end());
    Verdict v;
    int n = t.rank;
    if (static_cast<int>(theta.size()) == n) {
        v.kind = VerdictKind::HIGHEST_WEIGHT;
        v.semisimple = Tri::YES;
        v.reason = "theta is the whole basis: highest weight modules, semisimple by definition";
        return v;
    }
    if (theta.empty()) {
        v.kind = VerdictKind::CUSPIDAL;
        if (t.family == Family::A) {
            v.semisimple = Tri::NO;
            v.reason = "theta empty: cuspidal category of sl_n, which has non-split self-extensions";
        } else if (t.family == Family::C || (t.family == Family::B && n == 2)) {
            v.semisimple = Tri::YES;
            v.reason = "theta empty: cuspidal category of sp_2n, semisimple";
        } else {
            v.semisimple = Tri::YES;
            v.reason = "theta empty: no nonzero cuspidal modules outside types A and C";
        }
        return v;
    }

    // Low-rank coincidences: B2 = C2 (long and short nodes swap), D3 = A3 (the
    // node e1 of D3 is the middle node of A3).
    std::string relabel;
    if (t.family == Family::B && n == 2) {
        for (int& i : theta) i = 1 - i;
        t = CartanType{Family::C, 2};
        relabel = " (B2 read as C2)";
    } else if (t.family == Family::D && n == 3) {
        static const int to_a3[3] = {1, 0, 2};
        for (int& i : theta) i = to_a3[i];
        t = CartanType{Family::A, 3};
        relabel = " (D3 read as A3)";
    }
    std::sort(theta.begin(), theta.end());
    RootSystem rs(t);
    std::vector<int> S = complement(n, theta);

    if (auto row = excluded_row(t, S)) {
        v.kind = VerdictKind::EXCLUDED;
        v.reason = *row + relabel;
        return v;
    }
    if (auto row = reduction_row(rs, S)) {
        v.kind = VerdictKind::TRIVIAL;
        v.degree1 = Tri::UNKNOWN;
        v.semisimple = Tri::YES;
        v.reason = *row + relabel;
        return v;
    }
    auto comps = components(rs, S);
    if (comps.size() > 1) {
        v.kind = VerdictKind::TRIVIAL;
        v.semisimple = Tri::YES;
        v.reason = "Levi " + nodes_str(S) + " has non-simple semisimple part" + relabel;
        return v;
    }
    if (t.family == Family::A) {
        FamilyDescriptor f;
        f.kind = DegOneKind::N;
        f.type = t;
        f.lead = S.front();
        f.free = static_cast<int>(S.size()) + 1;
        f.zeros = n - 1 - S.back();
        v.kind = VerdictKind::NONTRIVIAL;
        v.family = f;
        bool extreme = S.size() == 1 && (S[0] == 0 || S[0] == n - 1);
        if (extreme && n > 2) {
            v.degree1 = Tri::NO;
            v.semisimple = Tri::UNKNOWN;
            v.reason = "A_n, n>2, Levi on an end node: simple objects of higher degree exist" + relabel;
        } else if (extreme) {
            v.degree1 = Tri::YES;
            v.semisimple = Tri::YES;
            v.reason = "A2 with Levi on an end node: degree one, self-extensions vanish" + relabel;
        } else {
            v.degree1 = Tri::YES;
            v.semisimple = Tri::YES;
            v.reason = "A_n with connected Levi " + nodes_str(S) + relabel;
        }
        return v;
    }
    if (t.family == Family::C && consecutive(S) && S.back() == n - 1) {
        FamilyDescriptor f;
        f.kind = DegOneKind::M;
        f.type = t;
        f.lead = S.front();
        f.free = n - S.front();
        v.kind = VerdictKind::NONTRIVIAL;
        v.family = f;
        v.degree1 = Tri::YES;
        v.semisimple = Tri::YES;
        v.reason = (S.size() == 1 ? std::string("C_n with Levi on the long node")
                                  : "C_n with Levi of type C_" + std::to_string(S.size())) +
                   relabel;
        return v;
    }
    v.kind = VerdictKind::TRIVIAL;
    v.semisimple = Tri::YES;
    if (t.family == Family::C)
        v.reason = "C_n with Levi " + nodes_str(S) + " neither the long node nor a trailing C_k" + relabel;
    else
        v.reason = "type " + t.str() + " carries no nontrivial category for a proper theta" + relabel;
    return v;
}

bool MembershipReport::pass() const {
    return cuspidality.verdict == Tri::YES && restriction.verdict == Tri::YES && finiteness.verdict == Tri::YES;
}

namespace {

using Groups = std::map<QVec, std::vector<Lattice>, QVecLess>;

Groups weight_groups(const ModuleOracle& M, int B) {
    Groups g;
    for (auto& k : M.window(B)) g[M.weight(k)].push_back(k);
    return g;
}

bool injective_on(const ModuleOracle& M, int b, const std::vector<Lattice>& group) {
    if (group.size() == 1) return !M.act(b, group[0]).empty();
    std::map<Lattice, int> rows;
    std::vector<Vec> images;
    for (auto& k : group) {
        images.push_back(M.act(b, k));
        for (auto& [t, c] : images.back()) rows.emplace(t, static_cast<int>(rows.size()));
    }
    Matrix m;
    for (auto& img : images) {
        QVec col(rows.size());
        for (auto& [t, c] : img) col[rows.at(t)] = c;
        m.push_back(col);
    }
    return rank(m, static_cast<int>(rows.size())) == static_cast<int>(group.size());
}

// Number of applications of b until x(k) vanishes, or -1 past the cap.
int nilpotency_steps(const ModuleOracle& M, int b, const Lattice& k, int cap) {
    Vec v{{k, Q(1)}};
    for (int s = 1; s <= cap; ++s) {
        v = M.act(b, v);
        if (v.empty()) return s;
    }
    return -1;
}

std::vector<int> root_indices(const LieAlgebra& g, const std::vector<int>& nodes, bool with_negatives) {
    std::vector<int> out;
    for (auto& r : g.roots().positive_in(nodes)) {
        out.push_back(g.index_of(r));
        if (with_negatives) out.push_back(g.opposite(g.index_of(r)));
    }
    return out;
}

void note_failure(ConditionEvidence& e, const std::string& s) {
    if (e.failures.size() < 8) e.failures.push_back(s);
}

// Simple-root coordinates of a weight given by its values on H_{e_i}.
QVec root_coords(const LieAlgebra& g, const QVec& w) {
    int n = g.rank();
    std::vector<SparseRow> rows;
    for (int j = 0; j < n; ++j) {
        QVec row(n);
        for (int i = 0; i < n; ++i) row[i] = g.roots().cartan_entry(i, j);
        rows.push_back(to_sparse(row));
    }
    auto sol = solve(rows, w, n);
    if (!sol) throw std::logic_error("Cartan matrix is singular");
    return *sol;
}

QVec shifted(const LieAlgebra& g, const QVec& w, const Root& alpha, int sign) {
    QVec out = w;
    for (int i = 0; i < g.rank(); ++i) out[i] += sign * g.root_value(alpha, i);
    return out;
}

// Single basis vector of a degree-one image, if any.
std::optional<Lattice> single_term(const Vec& v) {
    if (v.size() != 1) return std::nullopt;
    return v.begin()->first;
}

void check_cuspidality(const ModuleOracle& M, const ThetaSpec& spec, const Groups& groups,
                       ConditionEvidence& e) {
    const LieAlgebra& g = M.algebra();
    auto roots = root_indices(g, spec.cuspidal_part(), true);
    if (roots.empty()) e.notes.push_back("S \\ theta is empty: no cuspidality constraint");
    for (int b : roots) {
        if (!M.acts(b)) {
            note_failure(e, g.name(b) + " does not act");
            continue;
        }
        for (auto& [w, group] : groups) {
            ++e.checks;
            if (!injective_on(M, b, group)) note_failure(e, g.name(b) + " not injective at x" + to_string(group[0]));
        }
    }
    e.verdict = e.failures.empty() ? Tri::YES : Tri::NO;
}

void check_finiteness(const ModuleOracle& M, const ThetaSpec& spec, int B, int cap, ConditionEvidence& e) {
    const LieAlgebra& g = M.algebra();
    auto ld = levi_decomposition(g.roots(), spec.S);
    if (ld.nplus.empty()) e.notes.push_back("S = Phi: no finiteness constraint");
    auto window = M.window(B);
    for (auto& r : ld.nplus) {
        int b = g.index_of(r);
        for (auto& k : window) {
            ++e.checks;
            if (nilpotency_steps(M, b, k, cap) < 0)
                note_failure(e, g.name(b) + " does not vanish on x" + to_string(k) + " within " +
                                    std::to_string(cap) + " steps");
        }
    }
    e.verdict = e.failures.empty() ? Tri::YES : Tri::NO;
}

struct HwSearch {
    const ModuleOracle& M;
    std::vector<int> theta;
    int cap;

    bool is_hw(const Lattice& k) const {
        const LieAlgebra& g = M.algebra();
        for (int i : theta)
            if (!M.act(g.simple_pos(i), k).empty()) return false;
        return true;
    }

    // Some theta-simple lowering maps x(up) to a nonzero multiple of x(k).
    std::vector<Lattice> parents(const Lattice& k) const {
        const LieAlgebra& g = M.algebra();
        std::vector<Lattice> out;
        QVec w = M.weight(k);
        for (int i : theta) {
            auto up = M.find(shifted(g, w, g.roots().simple(i), +1));
            if (!up || !M.contains(*up)) continue;
            Vec low = M.act(g.simple_neg(i), *up);
            auto it = low.find(k);
            if (it != low.end() && it->second != 0) out.push_back(*up);
        }
        return out;
    }

    // hw vector generating x(k) under U(l_theta^-); nullopt when none is
    // found, with limited set when the cap stopped the search.
    std::optional<Lattice> generator(const Lattice& k, bool& limited) const {
        std::map<Lattice, int> dist{{k, 0}};
        std::queue<Lattice> todo;
        todo.push(k);
        while (!todo.empty()) {
            Lattice cur = todo.front();
            todo.pop();
            if (is_hw(cur)) return cur;
            int d = dist[cur];
            if (d >= cap) {
                limited = true;
                continue;
            }
            for (auto& up : parents(cur))
                if (dist.emplace(up, d + 1).second) todo.push(up);
        }
        return std::nullopt;
    }

    // Whether x(to) lies in U(l_theta^-) x(from), searching only below `from`
    // along theta-simple lowerings bounded by the coordinate difference.
    bool reaches(const Lattice& from, const QVec& diff) const {
        const LieAlgebra& g = M.algebra();
        std::set<Lattice> seen{from};
        std::vector<std::pair<Lattice, QVec>> stack{{from, diff}};
        while (!stack.empty()) {
            auto [cur, rest] = stack.back();
            stack.pop_back();
            bool done = std::all_of(rest.begin(), rest.end(), [](const Q& q) { return q == 0; });
            if (done) return true;
            for (int i : theta) {
                if (rest[i] <= 0) continue;
                auto next = single_term(M.act(g.simple_neg(i), cur));
                if (!next || !seen.insert(*next).second) continue;
                QVec r = rest;
                r[i] -= 1;
                stack.push_back({*next, r});
            }
        }
        return false;
    }
};

void check_restriction(const ModuleOracle& M, const ThetaSpec& spec, int B, int cap, const Groups& groups,
                       ConditionEvidence& e, std::vector<Lattice>& hw_out) {
    const LieAlgebra& g = M.algebra();
    for (auto& [w, group] : groups)
        if (group.size() > 1) {
            e.verdict = Tri::UNKNOWN;
            e.notes.push_back("weight multiplicity above one at x" + to_string(group[0]) +
                              ": hw-generation test needs degree one");
            return;
        }
    if (spec.theta.empty()) e.notes.push_back("theta is empty: every vector is a highest weight vector");
    // a raising path can move every coordinate across the whole window
    HwSearch hs{M, spec.theta, std::max(cap, g.rank() * (2 * B + 1) + 2)};
    std::set<Lattice> hw;
    for (auto& k : enumerate_hw(M, spec.theta, B)) hw.insert(k);
    bool limited = false;
    for (auto& [w, group] : groups) {
        ++e.checks;
        auto gen = hs.generator(group[0], limited);
        if (gen)
            hw.insert(*gen);
        else if (!limited)
            note_failure(e, "x" + to_string(group[0]) + " is not generated by a highest weight vector");
    }
    // Within a degree-one module, a second hw vector below h inside U(l^-) x(h)
    // shares its central character and makes the submodule non-simple.
    std::vector<std::pair<Lattice, QVec>> coords;
    for (auto& h : hw) coords.push_back({h, root_coords(g, M.weight(h))});
    std::set<int> th(spec.theta.begin(), spec.theta.end());
    for (auto& [h, ch] : coords)
        for (auto& [h2, ch2] : coords) {
            if (h == h2) continue;
            QVec diff(g.rank());
            bool below = true;
            for (int i = 0; i < g.rank() && below; ++i) {
                diff[i] = ch[i] - ch2[i];
                if (!is_integer(diff[i]) || diff[i] < 0 || (diff[i] != 0 && !th.count(i))) below = false;
            }
            if (!below) continue;
            ++e.checks;
            if (hs.reaches(h, diff))
                note_failure(e, "x" + to_string(h2) + " is a second highest weight vector below x" + to_string(h));
        }
    hw_out.assign(hw.begin(), hw.end());
    if (!e.failures.empty())
        e.verdict = Tri::NO;
    else if (limited) {
        e.verdict = Tri::UNKNOWN;
        e.notes.push_back("window too small: some hw-path search hit the depth cap");
    } else {
        e.verdict = Tri::YES;
    }
}

}  // namespace

MembershipReport check_membership(const ModuleHandle& M, const ThetaSpec& spec, int B, int D) {
    spec.validate();
    if (!(M->algebra().type() == spec.type))
        throw std::invalid_argument("module type " + M->algebra().type().str() + " does not match " + spec.type.str());
    MembershipReport rep;
    int cap = std::max(D, 2 * B + 2);
    Groups groups = weight_groups(*M, B);
    if (groups.empty()) {
        for (auto* e : {&rep.cuspidality, &rep.restriction, &rep.finiteness}) {
            e->verdict = Tri::UNKNOWN;
            e->notes.push_back("window too small: no basis vectors");
        }
        return rep;
    }
    check_cuspidality(*M, spec, groups, rep.cuspidality);
    check_restriction(*M, spec, B, cap, groups, rep.restriction, rep.hw_vectors);
    check_finiteness(*M, spec, B, cap, rep.finiteness);
    return rep;
}

RootPartition cuspidal_nilpotent_partition(const ModuleOracle& M, int B) {
    const LieAlgebra& g = M.algebra();
    RootPartition out;
    Groups groups = weight_groups(M, B);
    auto window = M.window(B);
    int cap = 2 * B + 2;
    for (int b = 0; b < 2 * g.npos(); ++b) {
        const Root& r = g.root(b);
        if (window.empty() || !M.acts(b)) {
            out.undecided.insert(r);
            continue;
        }
        bool inj = true, nil = true;
        for (auto& [w, group] : groups)
            if (!injective_on(M, b, group)) {
                inj = false;
                break;
            }
        for (auto& k : window)
            if (nilpotency_steps(M, b, k, cap) < 0) {
                nil = false;
                break;
            }
        if (inj && !nil)
            out.injective.insert(r);
        else if (nil && !inj)
            out.nilpotent.insert(r);
        else
            out.undecided.insert(r);
    }
    return out;
}

bool infinite_dim_criterion(const ThetaSpec& spec) {
    spec.validate();
    RootSystem rs(spec.type);
    auto a = rs.positive_in(spec.cuspidal_part());
    auto b = rs.positive_in(spec.theta);
    for (auto& x : a)
        for (auto& y : b)
            for (int s : {1, -1}) {
                Root sum(x.size());
                for (size_t i = 0; i < x.size(); ++i) sum[i] = x[i] + s * y[i];
                if (rs.is_root(sum)) return true;
            }
    return false;
}

}  // namespace weightcat
