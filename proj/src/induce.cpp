#include "weightcat/induce.hpp"

#include "weightcat/poly.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace weightcat {

void add_to(InducedVector& acc, const InducedVector& v, const Q& f) {
    if (sgn(f) == 0) return;
    for (auto& [k, c] : v) {
        Q& x = acc[k];
        x += c * f;
        if (sgn(x) == 0) acc.erase(k);
    }
}

std::string to_string(const InducedVector& v, const LieAlgebra& g) {
    if (v.empty()) return "0";
    std::string out;
    for (auto& [key, c] : v) {
        if (!out.empty()) out += " + ";
        out += "(" + c.get_str() + ")";
        for (int b : key.mono) out += g.name(b);
        out += "x" + to_string(key.k);
    }
    return out;
}

VermaModule::VermaModule(ModuleHandle C, std::vector<int> levi, int depth)
    : C_(std::move(C)), levi_(std::move(levi)), depth_(depth) {
    if (depth_ < 1) throw std::invalid_argument("depth must be at least 1");
    std::sort(levi_.begin(), levi_.end());
    const LieAlgebra& g = algebra();
    theta_ = complement(g.rank(), levi_);
    for (int b = 0; b < g.dim(); ++b) {
        if (in_levi(b) && !C_->acts(b))
            throw std::invalid_argument("inducing module does not carry the Levi action of " + g.name(b));
        if (in_nminus(b)) nminus_.push_back(b);
        if (in_nplus(b)) nplus_.push_back(b);
    }
}

bool VermaModule::in_levi(int b) const {
    const LieAlgebra& g = algebra();
    return g.is_cartan(b) || RootSystem::supported_in(g.root(b), levi_);
}

bool VermaModule::in_nplus(int b) const { return algebra().is_positive(b) && !in_levi(b); }
bool VermaModule::in_nminus(int b) const { return algebra().is_negative(b) && !in_levi(b); }

bool VermaModule::in_theta_minus(int b) const {
    return algebra().is_negative(b) && RootSystem::supported_in(algebra().root(b), theta_);
}

IVec VermaModule::tcoords(int b) const {
    const Root& r = algebra().root(b);
    IVec t;
    for (int i : theta_) t.push_back(std::abs(r[i]));
    return t;
}

InducedVector VermaModule::one(const Lattice& k) const {
    if (!C_->contains(k)) throw std::domain_error("1 (x) x(k) with k outside the inducing module: " + to_string(k));
    return {{Key{{}, k}, Q(1)}};
}

InducedVector VermaModule::act_key(int b, const Key& key) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find({b, key});
        if (it != memo_.end()) return it->second;
    }
    const LieAlgebra& g = algebra();
    InducedVector out;
    if (key.mono.empty()) {
        if (in_levi(b)) {
            for (auto& [k, c] : C_->act(b, key.k)) out[Key{{}, k}] = c;
        } else if (in_nminus(b)) {
            if (depth_ < 1) throw TruncationError("depth overflow");
            out[Key{{b}, key.k}] = 1;
        }
    } else if (in_nminus(b) && b <= key.mono.front()) {
        if (static_cast<int>(key.mono.size()) + 1 > depth_)
            throw TruncationError("PBW depth " + std::to_string(key.mono.size() + 1) + " exceeds truncation depth " +
                                  std::to_string(depth_));
        Key nk = key;
        nk.mono.insert(nk.mono.begin(), b);
        out[nk] = 1;
    } else {
        int m1 = key.mono.front();
        Key rest{Monomial(key.mono.begin() + 1, key.mono.end()), key.k};
        InducedVector br = act_key(b, rest);
        for (auto& [kk, c] : br) add_to(out, act_key(m1, kk), c);
        for (auto& [e, c] : g.bracket(b, m1)) add_to(out, act_key(e, rest), c);
    }
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(std::make_pair(b, key), out);
    return out;
}

InducedVector VermaModule::act(int b, const InducedVector& v) const {
    InducedVector out;
    for (auto& [key, c] : v) add_to(out, act_key(b, key), c);
    return out;
}

InducedVector VermaModule::act(const LieElement& x, const InducedVector& v) const {
    InducedVector out;
    for (auto& [b, c] : x) add_to(out, act(b, v), c);
    return out;
}

InducedVector VermaModule::word(const std::vector<int>& w, const Lattice& k) const {
    InducedVector v = one(k);
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = act(*it, v);
    return v;
}

QVec VermaModule::weight(const Key& key) const {
    const LieAlgebra& g = algebra();
    QVec w = C_->weight(key.k);
    for (int b : key.mono)
        for (int j = 0; j < g.rank(); ++j) w[j] += g.root_value(g.root(b), j);
    return w;
}

IVec VermaModule::theta_part(const Key& key) const {
    IVec t(theta_.size(), 0);
    for (int b : key.mono) {
        IVec c = tcoords(b);
        for (size_t i = 0; i < t.size(); ++i) t[i] += c[i];
    }
    return t;
}

namespace {

void multisets(const std::vector<int>& cand, const std::function<IVec(int)>& coords, size_t i, IVec rem,
               Monomial& cur, std::vector<Monomial>& out) {
    if (std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; })) {
        out.push_back(cur);
        return;
    }
    if (i == cand.size()) return;
    multisets(cand, coords, i + 1, rem, cur, out);
    IVec c = coords(cand[i]);
    bool fits = true;
    for (size_t j = 0; j < rem.size(); ++j) {
        rem[j] -= c[j];
        if (rem[j] < 0) fits = false;
    }
    if (fits) {
        cur.push_back(cand[i]);
        multisets(cand, coords, i, rem, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Monomial> VermaModule::nminus_monomials(const IVec& tpart) const {
    std::vector<Monomial> out;
    Monomial cur;
    multisets(nminus_, [this](int b) { return tcoords(b); }, 0, tpart, cur, out);
    return out;
}

std::vector<Monomial> VermaModule::nplus_monomials(const IVec& tpart) const {
    std::vector<Monomial> out;
    Monomial cur;
    multisets(nplus_, [this](int b) { return tcoords(b); }, 0, tpart, cur, out);
    return out;
}

const VermaModule::WeightSpace& VermaModule::space_of(const Key& key) const {
    return space(weight(key), theta_part(key));
}

const VermaModule::WeightSpace& VermaModule::space(const QVec& mu, const IVec& tpart) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = spaces_.find(mu);
        if (it != spaces_.end()) return *it->second;
    }
    const LieAlgebra& g = algebra();
    auto ws = std::make_unique<WeightSpace>();
    ws->weight = mu;
    for (auto& u : nminus_monomials(tpart)) {
        if (static_cast<int>(u.size()) > depth_)
            throw TruncationError("truncation-insufficient: weight needs PBW depth " + std::to_string(u.size()) +
                                  " > " + std::to_string(depth_));
        QVec target = mu;
        for (int b : u)
            for (int j = 0; j < g.rank(); ++j) target[j] -= g.root_value(g.root(b), j);
        if (auto k = C_->find(target)) ws->basis.push_back(Key{u, *k});
    }
    std::sort(ws->basis.begin(), ws->basis.end());
    for (size_t i = 0; i < ws->basis.size(); ++i) ws->index[ws->basis[i]] = static_cast<int>(i);
    int n = static_cast<int>(ws->basis.size());

    std::vector<SparseRow> rows;
    std::vector<InducedVector> start;
    for (auto& key : ws->basis) start.push_back({{key, Q(1)}});
    std::vector<int> word;
    std::function<void(const std::vector<InducedVector>&, IVec, size_t)> dfs =
        [&](const std::vector<InducedVector>& cur, IVec rem, size_t max_pos) {
            if (std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; })) {
                SparseRow row;
                for (int j = 0; j < n; ++j) {
                    Q s = 0;
                    for (auto& [key, c] : cur[j]) {
                        if (!key.mono.empty()) throw std::logic_error("functional did not reach depth 0");
                        s += c;
                    }
                    if (sgn(s) != 0) row.push_back({j, s});
                }
                ws->plus_words.emplace_back(word.rbegin(), word.rend());
                rows.push_back(row);
                return;
            }
            for (size_t p = 0; p <= max_pos && p < nplus_.size(); ++p) {
                int b = nplus_[p];
                IVec c = tcoords(b);
                IVec r2 = rem;
                bool fits = true;
                for (size_t j = 0; j < r2.size(); ++j) {
                    r2[j] -= c[j];
                    if (r2[j] < 0) fits = false;
                }
                if (!fits) continue;
                std::vector<InducedVector> next;
                next.reserve(cur.size());
                for (auto& v : cur) next.push_back(act(b, v));
                word.push_back(b);
                dfs(next, r2, p);
                word.pop_back();
            }
        };
    dfs(start, tpart, nplus_.empty() ? 0 : nplus_.size() - 1);
    ws->functional = rref(rows, n);
    std::vector<int> tcols;
    for (int j = 0; j < n; ++j) {
        bool pure = std::all_of(ws->basis[j].mono.begin(), ws->basis[j].mono.end(),
                                [this](int b) { return in_theta_minus(b); });
        if (pure) tcols.push_back(j);
    }
    std::vector<SparseRow> trows;
    for (auto& row : rows) {
        SparseRow r;
        for (auto& [j, c] : row)
            if (std::binary_search(tcols.begin(), tcols.end(), j)) r.push_back({j, c});
        trows.push_back(r);
    }
    ws->theta_rank = rref(trows, n).rank();
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = spaces_[mu];
    if (!slot) slot = std::move(ws);
    return *slot;
}

Matrix VermaModule::functional_matrix(const QVec& mu, const IVec& tpart) const {
    const WeightSpace& ws = space(mu, tpart);
    (void)ws;
    // recompute raw rows (the cached Rref keeps only the row space)
    Matrix out;
    int n = static_cast<int>(ws.basis.size());
    for (auto& w : ws.plus_words) {
        QVec row(n, 0);
        for (int j = 0; j < n; ++j) {
            InducedVector v{{ws.basis[j], Q(1)}};
            for (auto it = w.rbegin(); it != w.rend(); ++it) v = act(*it, v);
            for (auto& [key, c] : v) row[j] += c;
        }
        out.push_back(row);
    }
    return out;
}

InducedVector VermaModule::project_L(const InducedVector& v) const {
    std::map<QVec, std::vector<std::pair<Key, Q>>, QVecLess> groups;
    for (auto& [key, c] : v) groups[weight(key)].push_back({key, c});
    InducedVector out;
    for (auto& [mu, terms] : groups) {
        const WeightSpace& ws = space_of(terms.front().first);
        QVec x(ws.basis.size(), 0);
        for (auto& [key, c] : terms) {
            auto it = ws.index.find(key);
            if (it == ws.index.end()) throw std::logic_error("key missing from weight space basis");
            x[it->second] = c;
        }
        QVec r = ws.functional.apply(x);
        for (size_t i = 0; i < r.size(); ++i)
            if (sgn(r[i]) != 0) out[ws.basis[ws.functional.pivots[i]]] = r[i];
    }
    return out;
}

std::optional<Q> proportionality(const InducedVector& v, const InducedVector& w) {
    if (w.empty()) throw std::invalid_argument("proportionality against the zero vector");
    const auto& [k0, c0] = *w.begin();
    auto it = v.find(k0);
    Q lambda = it == v.end() ? Q(0) : it->second / c0;
    InducedVector d = v;
    add_to(d, w, -lambda);
    if (!d.empty()) return std::nullopt;
    return lambda;
}

std::optional<QVec> express(const VermaModule& V, const InducedVector& v, const std::vector<InducedVector>& ws) {
    InducedVector pv = V.project_L(v);
    std::vector<InducedVector> pw;
    std::map<Key, int> idx;
    for (auto& w : ws) pw.push_back(V.project_L(w));
    for (auto& [k, c] : pv) idx.emplace(k, static_cast<int>(idx.size()));
    for (auto& w : pw)
        for (auto& [k, c] : w) idx.emplace(k, static_cast<int>(idx.size()));
    int m = static_cast<int>(ws.size());
    std::vector<SparseRow> rows(idx.size());
    QVec rhs(idx.size(), 0);
    for (int i = 0; i < m; ++i)
        for (auto& [k, c] : pw[i]) rows[idx[k]].push_back({i, c});
    for (auto& [k, c] : pv) rhs[idx[k]] = c;
    auto sol = solve(rows, rhs, m);
    if (!sol || !nullspace(rows, m).empty()) return std::nullopt;
    return sol;
}

std::vector<LieElement> levi_center(const LieAlgebra& g, const std::vector<int>& levi) {
    std::vector<SparseRow> rows;
    for (int s : levi) {
        SparseRow r;
        for (int i = 0; i < g.rank(); ++i) {
            int v = g.root_value(g.roots().simple(s), i);
            if (v) r.push_back({i, Q(v)});
        }
        rows.push_back(r);
    }
    std::vector<LieElement> out;
    for (auto& z : nullspace(rows, g.rank())) {
        LieElement e;
        for (int i = 0; i < g.rank(); ++i)
            if (sgn(z[i]) != 0) e.push_back({g.cartan(i), z[i]});
        out.push_back(e);
    }
    return out;
}

CentralCharacter central_scalars(const ModuleOracle& C, const std::vector<int>& levi,
                                 const std::vector<Lattice>& samples) {
    if (samples.empty()) throw std::invalid_argument("central_scalars: empty sample set");
    const LieAlgebra& g = C.algebra();
    CentralCharacter cc;
    cc.basis = levi_center(g, levi);
    for (auto& z : cc.basis) {
        std::optional<Q> val;
        for (auto& k : samples) {
            Vec v = C.act(z, k);
            Q s = 0;
            for (auto& [t, c] : v) {
                if (t != k) throw std::domain_error("central element is not diagonal on " + C.describe());
                s = c;
            }
            if (val && *val != s) throw std::domain_error("non-scalar action of a central element on " + C.describe());
            val = s;
        }
        cc.values.push_back(*val);
        std::string name;
        for (auto& [b, c] : z) name += (name.empty() ? "" : "+") + ("(" + c.get_str() + ")" + g.name(b));
        cc.names.push_back(name);
    }
    return cc;
}

std::vector<std::vector<int>> zero_weight_words(const LieAlgebra& g, int depth) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    int n = g.rank();
    int maxh = 0;
    for (auto& r : g.roots().positive()) maxh = std::max(maxh, height(r));
    std::function<void(int, IVec)> rec = [&](int start, IVec sum) {
        if (!cur.empty() && std::all_of(sum.begin(), sum.end(), [](int x) { return x == 0; })) out.push_back(cur);
        if (static_cast<int>(cur.size()) == depth) return;
        for (int b = start; b < g.dim(); ++b) {
            IVec s2 = sum;
            for (int i = 0; i < n; ++i) s2[i] += g.root(b)[i];
            // remaining factors must be able to cancel the partial sum
            int left = depth - static_cast<int>(cur.size()) - 1;
            int h = 0;
            for (int x : s2) h += std::abs(x);
            if (h > left * maxh) continue;
            cur.push_back(b);
            rec(b, s2);
            cur.pop_back();
        }
    };
    rec(0, IVec(n, 0));
    return out;
}

ScalarAction scalar_action(const ModuleOracle& M, const Lattice& k) {
    const ModuleOracle* m = &M;
    return [m, k](const std::vector<int>& w) {
        Vec v{{k, Q(1)}};
        for (auto it = w.rbegin(); it != w.rend(); ++it) v = m->act(*it, v);
        if (v.empty()) return Q(0);
        if (v.size() != 1 || v.begin()->first != k) throw std::domain_error("non-scalar U(g)_0 action");
        return v.begin()->second;
    };
}

ScalarAction scalar_action(const VermaModule& V, const Lattice& k) {
    const VermaModule* vp = &V;
    InducedVector base = V.project_L(V.one(k));
    return [vp, k, base](const std::vector<int>& w) {
        InducedVector v = vp->project_L(vp->word(w, k));
        auto lam = proportionality(v, base);
        if (!lam) throw std::domain_error("non-scalar U(g)_0 action on the induced module");
        return *lam;
    };
}

U0Comparison u0_compare(const ScalarAction& a, const ScalarAction& b, const LieAlgebra& g, int depth) {
    U0Comparison r;
    for (auto& w : zero_weight_words(g, depth)) {
        ++r.words;
        Q x = a(w), y = b(w);
        if (x != y) {
            r.equal = false;
            std::string name;
            for (int e : w) name += g.name(e);
            r.first_difference = name + ": " + to_string(x) + " vs " + to_string(y);
            return r;
        }
    }
    return r;
}

std::vector<TestWeight> test_weights(const LieAlgebra& g, const std::vector<int>& levi, const std::vector<Lattice>& ks,
                                     int max_theta_height, const std::vector<int>& theta_support) {
    std::vector<int> theta = complement(g.rank(), levi);
    std::vector<int> nminus;
    for (int b = 0; b < g.dim(); ++b)
        if (g.is_negative(b) && !RootSystem::supported_in(g.root(b), levi)) nminus.push_back(b);
    auto theta_height = [&](int b) {
        int h = 0;
        for (int i : theta) h += std::abs(g.root(b)[i]);
        return h;
    };
    std::vector<TestWeight> out;
    std::set<IVec> seen_parts;
    std::vector<int> cur;
    std::function<void(size_t, int)> rec = [&](size_t i, int h) {
        if (!cur.empty()) {
            IVec part(g.rank(), 0);
            for (int b : cur)
                for (int j = 0; j < g.rank(); ++j) part[j] += g.root(b)[j];
            bool ok = true;
            if (!theta_support.empty())
                for (int j : theta)
                    if (part[j] != 0 && std::find(theta_support.begin(), theta_support.end(), j) == theta_support.end())
                        ok = false;
            if (ok && seen_parts.insert(part).second)
                for (auto& k : ks) out.push_back({Monomial(cur.begin(), cur.end()), k});
        }
        for (size_t p = i; p < nminus.size(); ++p) {
            int hb = theta_height(nminus[p]);
            if (h + hb > max_theta_height) continue;
            cur.push_back(nminus[p]);
            rec(p, h + hb);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

int defect_at(const VermaModule& V, const TestWeight& tw) {
    Key key{tw.mono, tw.k};
    return V.space(V.weight(key), V.theta_part(key)).defect();
}

namespace {

Q det_minor(const Matrix& F, const std::vector<int>& rows, const std::vector<int>& cols) {
    Matrix m(rows.size(), QVec(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) m[i][j] = F[rows[i]][cols[j]];
    return determinant(m);
}

Matrix transpose(const Matrix& F, int ncols) {
    Matrix t(ncols, QVec(F.size()));
    for (size_t i = 0; i < F.size(); ++i)
        for (int j = 0; j < ncols; ++j) t[j][i] = F[i][j];
    return t;
}

}  // namespace

ParamSetResult parameter_set(const ModuleFamily& fam, const std::vector<int>& levi, int depth,
                             const std::vector<TestWeight>& weights) {
    ParamSetResult res;
    const Q generic(7, 13), generic2(-11, 17);
    std::optional<std::set<Q>> cand;
    for (auto& tw : weights) {
        VermaModule V(fam(generic), levi, depth);
        Key key{tw.mono, tw.k};
        QVec mu = V.weight(key);
        IVec tp = V.theta_part(key);
        const auto& ws = V.space(mu, tp);
        VermaModule V2(fam(generic2), levi, depth);
        const auto& ws2 = V2.space(V2.weight(key), tp);
        if (ws.defect() == 0 && ws2.defect() == 0) continue;
        const auto& wsg = ws.defect() >= ws2.defect() ? ws : ws2;
        const VermaModule& Vg = ws.defect() >= ws2.defect() ? V : V2;
        ++res.constraining_weights;
        int n = static_cast<int>(wsg.basis.size());
        Matrix F = Vg.functional_matrix(wsg.weight, tp);
        Rref cr = rref(F, n);
        std::vector<int> cols = cr.pivots;
        Matrix Fc(F.size(), QVec(cols.size()));
        for (size_t i = 0; i < F.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) Fc[i][j] = F[i][cols[j]];
        std::vector<int> rows = rref(transpose(Fc, static_cast<int>(cols.size())), static_cast<int>(F.size())).pivots;
        int h = 0;
        for (int x : tp) h += x;
        int bound = static_cast<int>(cols.size()) * 2 * h;
        QVec xs, ys;
        for (int i = 0; static_cast<int>(xs.size()) < bound + 2 && i < 4 * (bound + 2) + 8; ++i) {
            Q t = frac(2 * i + 1, 3) - Q(5, 2);
            VermaModule Vt(fam(t), levi, depth);
            Key kt{tw.mono, tw.k};
            const auto& wst = Vt.space(Vt.weight(kt), tp);
            if (wst.basis != wsg.basis) continue;
            Matrix Ft = Vt.functional_matrix(wst.weight, tp);
            xs.push_back(t);
            ys.push_back(det_minor(Ft, rows, cols));
        }
        if (static_cast<int>(xs.size()) < bound + 2) throw std::runtime_error("parameter_set: not enough sample points");
        Poly p = interpolate(QVec(xs.begin(), xs.end() - 1), QVec(ys.begin(), ys.end() - 1));
        if (p(xs.back()) != ys.back()) throw std::logic_error("parameter_set: minor exceeds its degree bound");
        if (p.is_zero()) throw std::logic_error("parameter_set: generic minor vanished identically");
        RootSearch rs = rational_roots(p);
        res.complete = res.complete && rs.complete;
        std::set<Q> here(rs.roots.begin(), rs.roots.end());
        if (!cand) {
            cand = here;
        } else {
            std::set<Q> both;
            for (auto& x : *cand)
                if (here.count(x)) both.insert(x);
            cand = both;
        }
    }
    if (!cand) {
        res.notes.push_back("no test weight constrains the parameter");
        return res;
    }
    for (auto& t : *cand) {
        VermaModule V(fam(t), levi, depth);
        bool ok = true;
        for (auto& tw : weights)
            if (defect_at(V, tw) != 0) {
                ok = false;
                break;
            }
        if (ok) res.values.push_back(t);
    }
    return res;
}

ModuleHandle levi_module(std::shared_ptr<const LieAlgebra> g, const std::vector<int>& levi, const QVec& a) {
    std::vector<int> s = levi;
    std::sort(s.begin(), s.end());
    std::vector<Block> blocks;
    int n = g->rank();
    bool typeC = g->type().family == Family::C;
    for (size_t i = 0; i < s.size();) {
        size_t j = i;
        while (j + 1 < s.size() && s[j + 1] == s[j] + 1) ++j;
        if (typeC && s[j] == n - 1)
            blocks.push_back({s[i], n - 1, BlockKind::SUM_EVEN});
        else
            blocks.push_back({s[i], s[j] + 1, BlockKind::SUM_ZERO});
        i = j + 1;
    }
    std::string label = "C[" + g->type().str() + ";" + to_string(a) + "]";
    return std::make_shared<RealizedModule>(g, WeylParams(a), blocks, s, label);
}

QVec sample_levi_params(const LieAlgebra& g, const std::vector<int>& levi, unsigned seed) {
    (void)levi;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(2, 9);
    QVec a;
    while (static_cast<int>(a.size()) < g.nvars()) {
        Q q = frac(num(rng), den(rng));
        if (!is_integer(q)) a.push_back(q);
    }
    return a;
}

ProbeReport probe_restriction_failure(const ModuleHandle& C, const std::vector<int>& levi, int depth) {
    const LieAlgebra& g = C->algebra();
    const RootSystem& rs = g.roots();
    std::vector<int> theta = complement(g.rank(), levi);
    ProbeReport rep;
    auto in_S = [&](const Root& r) { return RootSystem::supported_in(r, levi); };
    int best = 1 << 30;
    for (auto& alpha : rs.positive_in(levi))
        for (auto& gamma : rs.positive()) {
            Root nu(g.rank());
            bool ok = true;
            int h = 0;
            for (int i = 0; i < g.rank(); ++i) {
                nu[i] = gamma[i] - alpha[i];
                if (nu[i] < 0) ok = false;
                h += nu[i];
            }
            if (!ok || h == 0 || !RootSystem::supported_in(nu, theta) || h > depth || h >= best) continue;
            int mg = g.opposite(g.index_of(gamma));
            for (auto& y : rs.positive()) {
                if (in_S(y)) continue;
                Root diff(g.rank());
                for (int i = 0; i < g.rank(); ++i) diff[i] = y[i] - gamma[i];
                if (!rs.is_root(diff) || !in_S(diff)) continue;
                int yb = g.index_of(y);
                if (g.bracket(yb, mg).empty()) continue;
                bool kills = true;
                for (auto& beta : rs.positive_in(theta)) {
                    bool below = true;
                    for (int i = 0; i < g.rank(); ++i) below = below && beta[i] <= nu[i];
                    if (below && !g.bracket(yb, g.opposite(g.index_of(beta))).empty()) kills = false;
                }
                if (!kills) continue;
                rep.witness_found = true;
                rep.alpha = alpha;
                rep.gamma = gamma;
                rep.y = y;
                rep.theta_height = h;
                best = h;
                break;
            }
        }
    if (!rep.witness_found) {
        rep.detail = "no witness up to theta-height " + std::to_string(depth);
        return rep;
    }
    VermaModule V(C, levi, depth);
    auto ks = C->window(0);
    if (ks.empty()) ks = C->window(1);
    const Lattice& k = ks.front();
    int mg = g.opposite(g.index_of(rep.gamma));
    int yb = g.index_of(rep.y);
    InducedVector v = V.word({mg}, k);
    bool image_nonzero = !V.zero_in_L(V.act(yb, v));
    const auto& ws = V.space_of(v.begin()->first);
    bool kills_theta = true;
    for (auto& key : ws.basis) {
        bool pure = std::all_of(key.mono.begin(), key.mono.end(), [&](int b) { return V.in_theta_minus(b); });
        if (pure && !V.zero_in_L(V.act(yb, InducedVector{{key, Q(1)}}))) kills_theta = false;
    }
    rep.engine_confirmed = image_nonzero && kills_theta && ws.defect() > 0;
    rep.restriction_impossible = rep.engine_confirmed;
    rep.detail = "Y=" + g.name(yb) + " on p(" + g.name(mg) + "x" + to_string(k) + ")";
    return rep;
}

}  // namespace weightcat
