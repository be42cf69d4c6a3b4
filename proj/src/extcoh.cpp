#include "weightcat/extcoh.hpp"

#include "weightcat/induce.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace weightcat {

std::optional<Vec> Cocycle::apply(const LieElement& x, const Lattice& k) const {
    Vec out;
    for (auto& [b, coef] : x) {
        auto v = rule(b, k);
        if (!v) return std::nullopt;
        add_to(out, *v, coef);
    }
    return out;
}

std::optional<Vec> Cocycle::apply(int b, const Vec& v) const {
    Vec out;
    for (auto& [k, coef] : v) {
        auto w = rule(b, k);
        if (!w) return std::nullopt;
        add_to(out, *w, coef);
    }
    return out;
}

namespace {

bool both_act(const Cocycle& c, int b) { return c.from->acts(b) && c.to->acts(b); }

std::string vec_str(const Vec& v) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : v) {
        os << (first ? "" : " + ") << to_string(c) << "*x" << to_string(k);
        first = false;
    }
    return os.str();
}

}  // namespace

CocycleCheck check_cocycle(const Cocycle& c, int B) {
    const LieAlgebra& g = c.from->algebra();
    CocycleCheck rep;
    auto window = c.from->window(B);
    for (int x = 0; x < g.dim(); ++x) {
        if (!both_act(c, x)) continue;
        for (int y = x + 1; y < g.dim(); ++y) {
            if (!both_act(c, y)) continue;
            for (auto& k : window) {
                auto lhs = c.apply(g.bracket(x, y), k);
                auto cx = c.apply(x, k);
                auto cy = c.apply(y, k);
                auto t1 = c.apply(x, c.from->act(y, k));
                auto t4 = c.apply(y, c.from->act(x, k));
                if (!lhs || !cx || !cy || !t1 || !t4) {
                    ++rep.skipped;
                    continue;
                }
                ++rep.checks;
                Vec diff = *lhs;
                add_to(diff, *t1, -1);
                add_to(diff, c.to->act(y, *cx), 1);
                add_to(diff, c.to->act(x, *cy), -1);
                add_to(diff, *t4, 1);
                if (!diff.empty() && !rep.witness) {
                    rep.witness = "c([" + g.name(x) + "," + g.name(y) + "]) x" + to_string(k) + " differs by " +
                                  vec_str(diff);
                }
            }
        }
    }
    return rep;
}

Cocycle zero_cocycle(ModuleHandle M, ModuleHandle N) {
    return Cocycle{std::move(M), std::move(N), [](int, const Lattice&) { return std::optional<Vec>(Vec{}); },
                   "zero"};
}

Cocycle table_cocycle(ModuleHandle M, ModuleHandle N, std::map<std::pair<int, Lattice>, Vec> table, int B) {
    auto g = M->algebra_ptr();
    auto rule = [g, t = std::move(table), B](int b, const Lattice& k) -> std::optional<Vec> {
        if (g->is_cartan(b)) return Vec{};
        if (!in_box(k, B)) return std::nullopt;
        auto it = t.find({b, k});
        return it == t.end() ? Vec{} : it->second;
    };
    return Cocycle{std::move(M), std::move(N), rule, "window table"};
}

std::optional<Vec> inverse_lowering(const ModuleOracle& M, int neg, const Lattice& k) {
    const LieAlgebra& g = M.algebra();
    QVec w = M.weight(k);
    const Root& r = g.root(neg);
    for (int i = 0; i < g.rank(); ++i) w[i] -= g.root_value(r, i);
    auto up = M.find(w);
    if (!up || !M.contains(*up)) return std::nullopt;
    Vec low = M.act(neg, *up);
    auto it = low.find(k);
    if (low.size() != 1 || it == low.end()) return std::nullopt;
    return Vec{{*up, 1 / it->second}};
}

Cocycle make_sl2_cocycle(const Q& b, const ModuleHandle& M) {
    const LieAlgebra& g = M->algebra();
    if (g.rank() != 1) throw std::invalid_argument("make_sl2_cocycle needs an sl2 module, got " + g.type().str());
    int pos = g.simple_pos(0), neg = g.simple_neg(0);
    for (auto& k : M->window(3))
        if (M->act(neg, k).empty())
            throw std::domain_error("X^- kills x" + to_string(k) + ": module is not cuspidal");
    ModuleHandle keep = M;
    auto rule = [keep, b, pos, neg](int x, const Lattice& k) -> std::optional<Vec> {
        if (x != pos || b == 0) return Vec{};
        auto inv = inverse_lowering(*keep, neg, k);
        if (!inv) throw std::domain_error("X^- is not invertible at x" + to_string(k));
        Vec out;
        add_to(out, *inv, b);
        return out;
    };
    return Cocycle{M, M, rule, "sl2 cocycle b=" + to_string(b)};
}

Cocycle make_coboundary(ModuleHandle M, ModuleHandle N, DegreeZeroMap phi) {
    ModuleHandle m = M, n = N;
    auto rule = [m, n, phi](int b, const Lattice& k) -> std::optional<Vec> {
        if (!m->acts(b) || !n->acts(b)) return Vec{};
        Vec out = n->act(b, phi(k));
        for (auto& [k2, c] : m->act(b, k)) add_to(out, phi(k2), -c);
        return out;
    };
    return Cocycle{std::move(M), std::move(N), rule, "coboundary"};
}

DegreeZeroMap random_degree_zero(const ModuleHandle& M, const ModuleHandle& N, unsigned seed) {
    return [M, N, seed](const Lattice& k) -> Vec {
        auto y = N->find(M->weight(k));
        if (!y || !N->contains(*y)) return {};
        std::seed_seq seq{seed, static_cast<unsigned>(k.size())};
        std::vector<unsigned> mix(1);
        seq.generate(mix.begin(), mix.end());
        unsigned h = mix[0];
        for (int v : k) h = h * 1000003u ^ static_cast<unsigned>(v + 7919);
        std::mt19937 rng(h);
        std::uniform_int_distribution<int> num(1, 9), den(1, 4), sign(0, 1);
        Q r = frac(num(rng) * (sign(rng) ? 1 : -1), den(rng));
        return Vec{{*y, r}};
    };
}

ExtensionModule::ExtensionModule(Cocycle c) : ModuleOracle(c.from->algebra_ptr()), c_(std::move(c)) {}

Lattice ExtensionModule::tag(int t, const Lattice& k) {
    Lattice out{t};
    out.insert(out.end(), k.begin(), k.end());
    return out;
}

namespace {

Lattice untag(const Lattice& k) { return Lattice(k.begin() + 1, k.end()); }

Vec tagged(int t, const Vec& v) {
    Vec out;
    for (auto& [k, c] : v) out[ExtensionModule::tag(t, k)] = c;
    return out;
}

}  // namespace

bool ExtensionModule::acts(int b) const { return c_.from->acts(b) && c_.to->acts(b); }

bool ExtensionModule::contains(const Lattice& k) const {
    if (k.empty() || (k[0] != 0 && k[0] != 1)) return false;
    return k[0] == 0 ? c_.to->contains(untag(k)) : c_.from->contains(untag(k));
}

Vec ExtensionModule::act(int b, const Lattice& k) const {
    Lattice r = untag(k);
    if (k[0] == 0) return tagged(0, c_.to->act(b, r));
    Vec out = tagged(1, c_.from->act(b, r));
    auto cv = c_.apply(b, r);
    if (!cv) throw std::out_of_range("cocycle undefined at x" + to_string(r));
    add_to(out, tagged(0, *cv));
    return out;
}

QVec ExtensionModule::weight(const Lattice& k) const {
    return k[0] == 0 ? c_.to->weight(untag(k)) : c_.from->weight(untag(k));
}

std::optional<Lattice> ExtensionModule::find(const QVec& w) const {
    auto n = c_.to->find(w);
    auto m = c_.from->find(w);
    if (n && m) return std::nullopt;
    if (n) return tag(0, *n);
    if (m) return tag(1, *m);
    return std::nullopt;
}

std::vector<Lattice> ExtensionModule::window(int B) const {
    std::vector<Lattice> out;
    for (auto& k : c_.to->window(B)) out.push_back(tag(0, k));
    for (auto& k : c_.from->window(B)) out.push_back(tag(1, k));
    return out;
}

std::string ExtensionModule::describe() const {
    return "0 -> " + c_.to->describe() + " -> V -> " + c_.from->describe() + " -> 0 [" + c_.label + "]";
}

ModuleHandle build_extension(const Cocycle& c, int B) {
    auto chk = check_cocycle(c, B);
    if (!chk.ok()) throw CocycleError("cocycle identity fails: " + *chk.witness);
    return std::make_shared<ExtensionModule>(c);
}

bool extension_maps_ok(const ExtensionModule& V, int B) {
    const auto& c = V.cocycle();
    const LieAlgebra& g = V.algebra();
    for (int b = 0; b < g.dim(); ++b) {
        if (!V.acts(b)) continue;
        for (auto& k : c.to->window(B))
            if (V.act(b, ExtensionModule::tag(0, k)) != tagged(0, c.to->act(b, k))) return false;
        for (auto& k : c.from->window(B)) {
            Vec proj;
            for (auto& [t, q] : V.act(b, ExtensionModule::tag(1, k)))
                if (t[0] == 1) proj[untag(t)] = q;
            if (proj != c.from->act(b, k)) return false;
        }
    }
    return true;
}

namespace {

using Form = std::map<int, Q>;
using LinVec = std::map<Lattice, Form>;

SparseRow to_row(const Form& f) {
    SparseRow r;
    for (auto& [i, q] : f)
        if (q != 0) r.push_back({i, q});
    return r;
}

void add_form(Form& acc, const Form& f, const Q& s) {
    for (auto& [i, q] : f) {
        acc[i] += s * q;
        if (acc[i] == 0) acc.erase(i);
    }
}

std::optional<Lattice> partner(const ModuleOracle& M, const ModuleOracle& N, const Lattice& k) {
    auto y = N.find(M.weight(k));
    if (!y || !N.contains(*y)) return std::nullopt;
    return y;
}

std::optional<Lattice> shifted_partner(const ModuleOracle& M, const ModuleOracle& N, const Lattice& k,
                                       const Root& r) {
    const LieAlgebra& g = M.algebra();
    QVec w = M.weight(k);
    for (int i = 0; i < g.rank(); ++i) w[i] += g.root_value(r, i);
    auto y = N.find(w);
    if (!y || !N.contains(*y)) return std::nullopt;
    return y;
}

}  // namespace

std::optional<CoboundaryWitness> is_coboundary(const Cocycle& c, int B) {
    const ModuleOracle& M = *c.from;
    const ModuleOracle& N = *c.to;
    const LieAlgebra& g = M.algebra();
    std::map<Lattice, int> var;
    std::map<Lattice, Lattice> target;
    auto var_of = [&](const Lattice& k) -> int {
        auto it = var.find(k);
        if (it != var.end()) return it->second;
        auto y = partner(M, N, k);
        if (!y) return -1;
        int id = static_cast<int>(var.size());
        var[k] = id;
        target[k] = *y;
        return id;
    };
    std::vector<LinVec> eqs;
    std::vector<Vec> rhs;
    for (int b = 0; b < g.dim(); ++b) {
        if (!M.acts(b) || !N.acts(b)) continue;
        for (auto& k : M.window(B)) {
            auto cv = c.apply(b, k);
            if (!cv) continue;
            LinVec e;
            int v = var_of(k);
            if (v >= 0)
                for (auto& [t, q] : N.act(b, target[k])) e[t][v] += q;
            for (auto& [k2, q] : M.act(b, k)) {
                int v2 = var_of(k2);
                if (v2 >= 0) add_form(e[target[k2]], Form{{v2, Q(1)}}, -q);
            }
            eqs.push_back(std::move(e));
            rhs.push_back(*cv);
        }
    }
    std::vector<SparseRow> rows;
    QVec r;
    for (size_t i = 0; i < eqs.size(); ++i) {
        std::set<Lattice> keys;
        for (auto& [t, f] : eqs[i]) keys.insert(t);
        for (auto& [t, q] : rhs[i]) keys.insert(t);
        for (auto& t : keys) {
            auto it = eqs[i].find(t);
            rows.push_back(it == eqs[i].end() ? SparseRow{} : to_row(it->second));
            auto jt = rhs[i].find(t);
            r.push_back(jt == rhs[i].end() ? Q(0) : jt->second);
        }
    }
    auto sol = solve(rows, r, static_cast<int>(var.size()));
    if (!sol) return std::nullopt;
    CoboundaryWitness w;
    for (auto& [k, id] : var)
        if ((*sol)[id] != 0) w.phi[k] = Vec{{target[k], (*sol)[id]}};
    return w;
}

QuotientDimension cocycle_quotient(const ModuleHandle& Mh, const ModuleHandle& Nh, int B) {
    const ModuleOracle& M = *Mh;
    const ModuleOracle& N = *Nh;
    const LieAlgebra& g = M.algebra();
    QuotientDimension q;
    std::map<std::pair<int, Lattice>, int> idx;
    std::vector<Lattice> targets;
    std::vector<int> rootvecs;
    for (int b = 0; b < 2 * g.npos(); ++b)
        if (M.acts(b) && N.acts(b)) rootvecs.push_back(b);
    auto window = M.window(B);
    std::set<Lattice> inwin(window.begin(), window.end());
    for (int b : rootvecs)
        for (auto& k : window)
            if (auto t = shifted_partner(M, N, k, g.root(b))) {
                idx[{b, k}] = static_cast<int>(targets.size());
                q.unknown_keys.push_back({b, k});
                targets.push_back(*t);
            }
    q.unknowns = static_cast<int>(targets.size());

    // c(b) applied to v, accumulated into e with scale s; false if v leaves the window.
    auto add_c = [&](LinVec& e, int b, const Vec& v, const Q& s) {
        if (g.is_cartan(b)) return true;
        for (auto& [k, c] : v) {
            if (!inwin.count(k)) return false;
            auto it = idx.find({b, k});
            if (it != idx.end()) add_form(e[targets[it->second]], Form{{it->second, Q(1)}}, s * c);
        }
        return true;
    };
    auto add_nc = [&](LinVec& e, int y, int b, const Lattice& k, const Q& s) {
        auto it = idx.find({b, k});
        if (it == idx.end()) return;
        for (auto& [t, c] : N.act(y, targets[it->second])) add_form(e[t], Form{{it->second, Q(1)}}, s * c);
    };
    std::vector<SparseRow> rows;
    for (size_t i = 0; i < rootvecs.size(); ++i)
        for (size_t j = i + 1; j < rootvecs.size(); ++j) {
            int x = rootvecs[i], y = rootvecs[j];
            for (auto& k : window) {
                LinVec e;
                bool ok = true;
                for (auto& [z, c] : g.bracket(x, y)) ok = ok && add_c(e, z, Vec{{k, Q(1)}}, c);
                ok = ok && add_c(e, x, M.act(y, k), -1);
                ok = ok && add_c(e, y, M.act(x, k), 1);
                if (!ok) continue;
                add_nc(e, y, x, k, 1);
                add_nc(e, x, y, k, -1);
                for (auto& [t, f] : e)
                    if (!f.empty()) rows.push_back(to_row(f));
            }
        }
    q.cocycle_basis = nullspace(rows, q.unknowns);
    q.cocycles = static_cast<int>(q.cocycle_basis.size());

    std::map<Lattice, Form> cob;  // p(k) -> image over unknowns
    for (auto& [key, id] : idx) {
        auto [b, k] = key;
        if (auto y = partner(M, N, k)) {
            Vec img = N.act(b, *y);
            auto it = img.find(targets[id]);
            if (it != img.end()) add_form(cob[k], Form{{id, Q(1)}}, it->second);
        }
        for (auto& [k2, c] : M.act(b, k)) {
            auto y2 = partner(M, N, k2);
            if (y2 && *y2 == targets[id]) add_form(cob[k2], Form{{id, Q(1)}}, -c);
        }
    }
    Echelon ech(q.unknowns);
    for (auto& [k, f] : cob) ech.add(to_row(f));
    q.coboundaries = ech.rank();
    return q;
}

Cocycle cocycle_from_coordinates(const ModuleHandle& M, const ModuleHandle& N, const QuotientDimension& q,
                                 const QVec& coords, int B) {
    QVec u(q.unknowns);
    for (size_t i = 0; i < coords.size() && i < q.cocycle_basis.size(); ++i)
        for (int j = 0; j < q.unknowns; ++j) u[j] += coords[i] * q.cocycle_basis[i][j];
    std::map<std::pair<int, Lattice>, Vec> table;
    const LieAlgebra& g = M->algebra();
    for (int j = 0; j < q.unknowns; ++j) {
        if (u[j] == 0) continue;
        auto [b, k] = q.unknown_keys[j];
        auto t = shifted_partner(*M, *N, k, g.root(b));
        table[{b, k}] = Vec{{*t, u[j]}};
    }
    return table_cocycle(M, N, std::move(table), B);
}

bool support_disjoint(const ModuleOracle& Ma, const ModuleOracle& Mb, int B) {
    std::set<QVec, QVecLess> wa;
    for (auto& k : Ma.window(B)) wa.insert(Ma.weight(k));
    for (auto& k : Mb.window(B))
        if (wa.count(Mb.weight(k))) return false;
    return true;
}

namespace {

std::set<int> touched_vars(const WeylPoly& w) {
    std::set<int> out;
    for (auto& [mono, c] : w.terms)
        for (int i = 0; i < static_cast<int>(mono.size()); ++i)
            if (mono[i] != 0) out.insert(i % w.nvars);
    return out;
}

// b(label) system for c(h) = c(l_theta) = 0, c(X^-) = 0, c(X^+) = b (X^-)^{-1}.
ConstraintSystem self_system(const ModuleHandle& Mh, int s, const std::vector<int>& theta, int B) {
    const ModuleOracle& M = *Mh;
    const LieAlgebra& g = M.algebra();
    const RootSystem& rs = g.roots();
    int pos = g.simple_pos(s), neg = g.simple_neg(s);
    std::set<int> drop = touched_vars(g.realize(pos));
    for (int v : touched_vars(g.realize(neg))) drop.insert(v);
    auto label = [&](const Lattice& k) {
        Lattice l;
        for (int i = 0; i < static_cast<int>(k.size()); ++i)
            if (!drop.count(i)) l.push_back(k[i]);
        return l;
    };
    ConstraintSystem sys;
    sys.mode = "self";
    sys.window = B;
    std::map<Lattice, int> lab;
    auto lab_of = [&](const Lattice& k) {
        auto l = label(k);
        auto it = lab.find(l);
        if (it != lab.end()) return it->second;
        int id = static_cast<int>(lab.size());
        lab[l] = id;
        return id;
    };
    auto applyC = [&](const Vec& v) -> std::optional<LinVec> {
        LinVec out;
        for (auto& [k, c] : v) {
            if (!in_box(k, B)) return std::nullopt;
            auto inv = inverse_lowering(M, neg, k);
            if (!inv) throw std::domain_error("X^- is not invertible at x" + to_string(k));
            int id = lab_of(k);
            for (auto& [t, f] : *inv) add_form(out[t], Form{{id, Q(1)}}, c * f);
        }
        return out;
    };
    auto applyX = [&](int b, const LinVec& v) -> std::optional<LinVec> {
        LinVec out;
        for (auto& [k, f] : v) {
            if (!in_box(k, B)) return std::nullopt;
            for (auto& [t, c] : M.act(b, k)) add_form(out[t], f, c);
        }
        return out;
    };
    auto actv = [&](int b, const Vec& v) -> std::optional<Vec> {
        for (auto& [k, c] : v)
            if (!in_box(k, B)) return std::nullopt;
        return M.act(b, v);
    };

    std::vector<std::pair<int, int>> betas;  // (X_beta, X_-beta) with alpha + beta a root
    std::vector<Q> kappas;
    Root alpha = rs.simple(s);
    for (auto& beta : rs.positive_in(theta)) {
        Root sum(alpha.size());
        for (size_t i = 0; i < alpha.size(); ++i) sum[i] = alpha[i] + beta[i];
        if (!rs.is_root(sum)) continue;
        int bp = g.index_of(beta), bn = g.opposite(bp);
        LieElement dbl = g.bracket(g.bracket(basis_element(pos), basis_element(bp)), basis_element(bn));
        if (dbl.size() != 1 || dbl[0].first != pos) continue;
        betas.push_back({bp, bn});
        kappas.push_back(dbl[0].second);
    }
    if (betas.empty()) throw std::invalid_argument("no root beta in <theta> with alpha + beta a root");

    std::vector<std::pair<SparseRow, int>> raw;  // row, kind (0 identity, 1 boundary)
    for (auto& k : M.window(B)) {
        Vec v{{k, Q(1)}};
        for (size_t j = 0; j < betas.size(); ++j) {
            auto [bp, bn] = betas[j];
            if (M.act(bp, k).empty()) {
                Form f{{lab_of(k), Q(1)}};
                raw.push_back({to_row(f), 1});
            }
            // kappa C v = C Xb X-b v - Xb C X-b v - X-b C Xb v + X-b Xb C v
            auto xnv = actv(bn, v);
            auto xpv = actv(bp, v);
            if (!xnv || !xpv) continue;
            auto xpxnv = actv(bp, *xnv);
            if (!xpxnv) continue;
            auto t1 = applyC(*xpxnv);
            auto cxn = applyC(*xnv);
            auto cxp = applyC(*xpv);
            auto cv = applyC(v);
            if (!t1 || !cxn || !cxp || !cv) continue;
            auto t2 = applyX(bp, *cxn);
            auto t3 = applyX(bn, *cxp);
            auto xpcv = applyX(bp, *cv);
            if (!t2 || !t3 || !xpcv) continue;
            auto t4 = applyX(bn, *xpcv);
            if (!t4) continue;
            LinVec e;
            for (auto& [t, f] : *cv) add_form(e[t], f, kappas[j]);
            for (auto& [t, f] : *t1) add_form(e[t], f, -1);
            for (auto& [t, f] : *t2) add_form(e[t], f, 1);
            for (auto& [t, f] : *t3) add_form(e[t], f, 1);
            for (auto& [t, f] : *t4) add_form(e[t], f, -1);
            for (auto& [t, f] : e)
                if (!f.empty()) raw.push_back({to_row(f), 0});
        }
    }
    for (auto& [r, kind] : raw) {
        if (r.empty()) continue;
        sys.rows.push_back(r);
        (kind == 0 ? sys.identity_rows : sys.boundary_rows)++;
    }
    if (sys.identity_rows == 0)
        throw CertificationImpossible("window B=" + std::to_string(B) + " holds no complete cocycle identity");
    if (sys.boundary_rows == 0)
        throw CertificationImpossible("window B=" + std::to_string(B) + " holds no boundary row");
    // Unknowns are the labels some row mentions.
    std::set<int> used;
    for (auto& r : sys.rows)
        for (auto& [i, q] : r) used.insert(i);
    std::map<int, int> remap;
    for (auto& [l, id] : lab)
        if (used.count(id)) {
            remap[id] = static_cast<int>(sys.labels.size());
            sys.labels.push_back(l);
        }
    for (auto& r : sys.rows)
        for (auto& [i, q] : r) i = remap.at(i);
    for (auto& r : sys.rows) std::sort(r.begin(), r.end(), [](auto& x, auto& y) { return x.first < y.first; });
    sys.basis = nullspace(sys.rows, static_cast<int>(sys.labels.size()));
    sys.dimension = static_cast<int>(sys.basis.size());
    return sys;
}

// Lattice point of N_a sharing a weight with some l_theta-hw vector of N_b,
// confirmed isomorphic by comparing U(g)_0 actions.
std::optional<bool> isomorphic_by_hw(const ModuleOracle& Ma, const ModuleOracle& Mb,
                                     const std::vector<int>& theta, int B) {
    for (auto& k : enumerate_hw(Mb, theta, B)) {
        auto j = Ma.find(Mb.weight(k));
        if (!j || !Ma.contains(*j)) continue;
        auto cmp = u0_compare(scalar_action(Mb, k), scalar_action(Ma, *j), Mb.algebra(), 2);
        return cmp.equal;
    }
    return std::nullopt;
}

}  // namespace

ConstraintSystem ext_solve_typeA(const DegOneSpec& a, const DegOneSpec& b, int B) {
    if (a.kind != DegOneKind::N || b.kind != DegOneKind::N)
        throw std::invalid_argument("ext_solve_typeA needs two N(...) families");
    if (!(a.type == b.type) || a.lead != b.lead || a.mid_end != b.mid_end)
        throw std::invalid_argument("the two families live in different categories");
    if (a.mid_end - a.lead != 2)
        throw std::invalid_argument("the b(k) system covers the single-node Levi N(-1..,a1,a2,0..) only");
    if (B < 1) throw CertificationImpossible("window B=" + std::to_string(B) + " holds no boundary row");
    auto Ma = build(a), Mb = build(b);
    auto theta = theta_of(b);
    auto iso = isomorphic_by_hw(*Ma, *Mb, theta, B);
    if (!iso) {
        ConstraintSystem sys;
        sys.mode = "weight-mismatch";
        sys.window = B;
        sys.notes.push_back("no l_theta-highest weight vector of " + spec_name(b) + " shares a weight with " +
                            spec_name(a) + " on the window: c(X_alpha) vanishes on hw vectors");
        return sys;
    }
    if (!*iso) throw std::logic_error("a highest weight is shared by non-isomorphic modules");
    auto sys = self_system(Mb, b.lead, theta, B);
    sys.notes.push_back(spec_name(a) + " and " + spec_name(b) + " are isomorphic: self-extension system");
    return sys;
}

ConstraintSystem ext_solve_typeC(const DegOneSpec& a, const DegOneSpec& b, int B) {
    if (a.kind != DegOneKind::M || b.kind != DegOneKind::M)
        throw std::invalid_argument("ext_solve_typeC needs two M(...) families");
    if (!(a.type == b.type) || a.lead != b.lead)
        throw std::invalid_argument("the two families live in different categories");
    int n = a.type.rank;
    if (a.lead != n - 1 || a.integral_tail || b.integral_tail)
        throw std::invalid_argument("the b(k) system covers M(-1,...,-1,a) with a non-integral only");
    if (B < 1) throw CertificationImpossible("window B=" + std::to_string(B) + " holds no boundary row");
    auto Ma = build(a), Mb = build(b);
    if (support_disjoint(*Ma, *Mb, B)) {
        ConstraintSystem sys;
        sys.mode = "support-disjoint";
        sys.window = B;
        sys.notes.push_back("supports of " + spec_name(a) + " and " + spec_name(b) +
                            " are disjoint on the window (window-relative)");
        return sys;
    }
    auto theta = theta_of(b);
    auto iso = isomorphic_by_hw(*Ma, *Mb, theta, B);
    if (iso && !*iso) throw std::logic_error("a highest weight is shared by non-isomorphic modules");
    auto sys = self_system(Mb, n - 1, theta, B);
    sys.notes.push_back(spec_name(a) + " and " + spec_name(b) + " share a weight: self-extension system");
    return sys;
}

}  // namespace weightcat
