#include "weightcat/module.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

namespace weightcat {

void add_to(Vec& acc, const Vec& v, const Q& f) {
    if (sgn(f) == 0) return;
    for (auto& [k, c] : v) {
        Q& x = acc[k];
        x += c * f;
        if (sgn(x) == 0) acc.erase(k);
    }
}

bool in_box(const Lattice& k, int B) {
    return std::all_of(k.begin(), k.end(), [B](int x) { return x <= B && x >= -B; });
}

Vec ModuleOracle::act(const LieElement& x, const Lattice& k) const {
    Vec out;
    for (auto& [b, c] : x) add_to(out, act(b, k), c);
    return out;
}

Vec ModuleOracle::act(const LieElement& x, const Vec& v) const {
    Vec out;
    for (auto& [k, c] : v) add_to(out, act(x, k), c);
    return out;
}

Vec ModuleOracle::act(int b, const Vec& v) const {
    Vec out;
    for (auto& [k, c] : v) add_to(out, act(b, k), c);
    return out;
}

RealizedModule::RealizedModule(std::shared_ptr<const LieAlgebra> g, WeylParams a, std::vector<Block> blocks,
                               std::optional<std::vector<int>> levi, std::string label)
    : ModuleOracle(std::move(g)), a_(std::move(a)), blocks_(std::move(blocks)), levi_(std::move(levi)),
      label_(std::move(label)) {
    const LieAlgebra& alg = algebra();
    int N = alg.nvars(), n = alg.rank();
    if (a_.size() != N) throw std::invalid_argument("parameter length " + std::to_string(a_.size()) +
                                                    " does not match " + std::to_string(N) + " Weyl variables");
    frozen_.assign(N, true);
    for (auto& bl : blocks_) {
        if (bl.first < 0 || bl.last >= N || bl.first > bl.last) throw std::invalid_argument("bad block");
        for (int i = bl.first; i <= bl.last; ++i) {
            if (!frozen_[i]) throw std::invalid_argument("overlapping blocks");
            frozen_[i] = false;
        }
    }
    lin_.assign(n, QVec(N, 0));
    w0_.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        for (auto& [m, c] : alg.realize(alg.cartan(i)).terms) {
            int deg = 0, var = -1;
            for (int j = 0; j < N; ++j) {
                deg += m[j] + m[N + j];
                if (m[j]) var = j;
            }
            if (deg == 0) {
                w0_[i] += c;
            } else {
                // q_j p_j acts as a_j + k_j
                lin_[i][var] += c;
                w0_[i] += c * a_.a[var];
            }
        }
    }
}

bool RealizedModule::acts(int b) const {
    const LieAlgebra& g = algebra();
    if (g.is_cartan(b)) return true;
    if (!levi_) return true;
    return RootSystem::supported_in(g.root(b), *levi_);
}

bool RealizedModule::contains(const Lattice& k) const {
    if (static_cast<int>(k.size()) != a_.size()) return false;
    for (int i = 0; i < a_.size(); ++i)
        if (frozen_[i] && k[i] != 0) return false;
    for (auto& bl : blocks_) {
        long s = 0;
        for (int i = bl.first; i <= bl.last; ++i) s += k[i];
        if (bl.kind == BlockKind::SUM_ZERO && s != 0) return false;
        if (bl.kind == BlockKind::SUM_EVEN && s % 2 != 0) return false;
    }
    return k_member(a_, k);
}

Vec RealizedModule::act(int b, const Lattice& k) const {
    if (!acts(b)) throw std::invalid_argument("element " + algebra().name(b) + " does not act on " + label_);
    if (!contains(k)) throw std::domain_error("basis index outside module: " + to_string(k));
    auto out = weyl_apply(algebra().realize(b), a_, k);
    for (auto& [t, c] : out)
        if (!contains(t)) throw std::logic_error("action leaves the module at " + to_string(k));
    return out;
}

QVec RealizedModule::weight(const Lattice& k) const {
    QVec w = w0_;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = 0; j < k.size(); ++j)
            if (k[j]) w[i] += lin_[i][j] * k[j];
    return w;
}

std::optional<Lattice> RealizedModule::find(const QVec& w) const {
    int N = a_.size(), n = static_cast<int>(w0_.size());
    if (static_cast<int>(w.size()) != n) throw std::invalid_argument("weight length mismatch");
    std::vector<SparseRow> rows;
    QVec rhs;
    for (int i = 0; i < n; ++i) {
        rows.push_back(to_sparse(lin_[i]));
        rhs.push_back(w[i] - w0_[i]);
    }
    for (int j = 0; j < N; ++j)
        if (frozen_[j]) {
            rows.push_back({{j, Q(1)}});
            rhs.push_back(0);
        }
    for (auto& bl : blocks_)
        if (bl.kind == BlockKind::SUM_ZERO) {
            SparseRow r;
            for (int i = bl.first; i <= bl.last; ++i) r.push_back({i, Q(1)});
            rows.push_back(r);
            rhs.push_back(0);
        }
    auto sol = solve(rows, rhs, N);
    if (!sol) return std::nullopt;
    if (!nullspace(rows, N).empty()) throw std::logic_error("weight map is not injective on " + label_);
    Lattice k(N);
    for (int j = 0; j < N; ++j) {
        if (!is_integer((*sol)[j])) return std::nullopt;
        k[j] = static_cast<int>(to_long((*sol)[j]));
    }
    if (!contains(k)) return std::nullopt;
    return k;
}

std::vector<Lattice> RealizedModule::window(int B) const {
    int N = a_.size();
    std::vector<int> live;
    for (int i = 0; i < N; ++i)
        if (!frozen_[i]) live.push_back(i);
    std::vector<Lattice> out;
    for (auto& sub : box(static_cast<int>(live.size()), B)) {
        Lattice k(N, 0);
        for (size_t t = 0; t < live.size(); ++t) k[live[t]] = sub[t];
        if (contains(k)) out.push_back(k);
    }
    return out;
}

Sl2LeviModule::Sl2LeviModule(std::shared_ptr<const LieAlgebra> g, int s, Q a1, Q a2, QVec h0)
    : ModuleOracle(std::move(g)), s_(s), a1_(std::move(a1)), a2_(std::move(a2)), h0_(std::move(h0)) {
    if (is_integer(a1_) || is_integer(a2_)) throw std::invalid_argument("sl2 parameters must be non-integers");
    if (static_cast<int>(h0_.size()) != algebra().rank()) throw std::invalid_argument("h0 length mismatch");
    if (h0_[s_] != a1_ - a2_) throw std::invalid_argument("h0 inconsistent with a1 - a2");
}

bool Sl2LeviModule::acts(int b) const {
    const LieAlgebra& g = algebra();
    return g.is_cartan(b) || b == g.simple_pos(s_) || b == g.simple_neg(s_);
}

Vec Sl2LeviModule::act(int b, const Lattice& k) const {
    const LieAlgebra& g = algebra();
    if (!contains(k)) throw std::domain_error("bad sl2 index");
    int t = k[0];
    Vec out;
    auto put = [&](int kk, const Q& c) {
        if (sgn(c) != 0) out[Lattice{kk}] = c;
    };
    if (b == g.simple_pos(s_))
        put(t + 1, a2_ - t);
    else if (b == g.simple_neg(s_))
        put(t - 1, a1_ + t);
    else if (g.is_cartan(b))
        put(t, weight(k)[b - g.cartan(0)]);
    else
        throw std::invalid_argument("element " + g.name(b) + " does not act on " + describe());
    return out;
}

QVec Sl2LeviModule::weight(const Lattice& k) const {
    QVec w = h0_;
    Root e = algebra().roots().simple(s_);
    for (int j = 0; j < algebra().rank(); ++j) w[j] += k[0] * algebra().root_value(e, j);
    return w;
}

std::optional<Lattice> Sl2LeviModule::find(const QVec& w) const {
    Q t = (w[s_] - h0_[s_]) / 2;
    if (!is_integer(t)) return std::nullopt;
    Lattice k{static_cast<int>(to_long(t))};
    if (weight(k) != w) return std::nullopt;
    return k;
}

std::vector<Lattice> Sl2LeviModule::window(int B) const {
    std::vector<Lattice> out;
    for (int t = -B; t <= B; ++t) out.push_back({t});
    return out;
}

std::string Sl2LeviModule::describe() const {
    return "N(" + to_string(a1_) + "," + to_string(a2_) + ")@e" + std::to_string(s_ + 1) + " h0=" + to_string(h0_);
}

CharacterModule::CharacterModule(std::shared_ptr<const LieAlgebra> g, QVec lambda)
    : ModuleOracle(std::move(g)), lambda_(std::move(lambda)) {
    if (static_cast<int>(lambda_.size()) != algebra().rank()) throw std::invalid_argument("weight length mismatch");
}

Vec CharacterModule::act(int b, const Lattice& k) const {
    if (!acts(b)) throw std::invalid_argument("only h acts on a character");
    Vec out;
    Q c = lambda_[b - algebra().cartan(0)];
    if (sgn(c) != 0) out[k] = c;
    return out;
}

std::optional<Lattice> CharacterModule::find(const QVec& w) const {
    if (w == lambda_) return Lattice{};
    return std::nullopt;
}

std::string CharacterModule::describe() const { return "C" + to_string(lambda_); }

std::vector<int> simple_generators(const LieAlgebra& g) {
    std::vector<int> out;
    for (int i = 0; i < g.rank(); ++i) {
        out.push_back(g.simple_pos(i));
        out.push_back(g.simple_neg(i));
        out.push_back(g.cartan(i));
    }
    return out;
}

namespace {

// act(b, t) for every acting basis element b, computed once per lattice point
class ActionCache {
public:
    explicit ActionCache(const ModuleOracle& m) : m_(m) {
        for (int b = 0; b < m.algebra().dim(); ++b) acting_.push_back(m.acts(b));
    }

    const Vec& act(int b, const Lattice& k) {
        auto [it, fresh] = rows_.try_emplace(k);
        if (fresh) {
            it->second.resize(acting_.size());
            for (size_t c = 0; c < acting_.size(); ++c)
                if (acting_[c]) it->second[c] = m_.act(static_cast<int>(c), k);
        }
        if (!acting_[b]) throw std::invalid_argument("element " + m_.algebra().name(b) + " does not act");
        return it->second[b];
    }

    Vec act(const LieElement& x, const Lattice& k) {
        Vec out;
        for (auto& [b, c] : x) add_to(out, act(b, k), c);
        return out;
    }

    Vec act(int b, const Vec& v) {
        Vec out;
        for (auto& [k, c] : v) add_to(out, act(b, k), c);
        return out;
    }

private:
    const ModuleOracle& m_;
    std::vector<bool> acting_;
    std::map<Lattice, std::vector<Vec>> rows_;
};

void fidelity_chunk(const ModuleOracle& m, int B, const std::vector<int>& gens, const std::vector<Lattice>& pts,
                    size_t lo, size_t hi, FidelityReport& rep) {
    const LieAlgebra& g = m.algebra();
    ActionCache cache(m);
    for (size_t p = lo; p < hi; ++p) {
        const Lattice& k = pts[p];
        for (int x : gens)
            for (int y : gens) {
                const Vec& yv = cache.act(y, k);
                const Vec& xv = cache.act(x, k);
                bool inside = true;
                for (auto& [t, c] : yv) inside = inside && in_box(t, B);
                for (auto& [t, c] : xv) inside = inside && in_box(t, B);
                if (!inside) {
                    ++rep.skipped;
                    continue;
                }
                ++rep.checks;
                Vec lhs = cache.act(g.bracket(x, y), k);
                Vec rhs = cache.act(x, yv);
                add_to(rhs, cache.act(y, xv), -1);
                if (lhs != rhs && rep.violations.size() < 20)
                    rep.violations.push_back("[" + g.name(x) + "," + g.name(y) + "] at " + to_string(k));
            }
    }
}

}  // namespace

FidelityReport bracket_fidelity(const ModuleOracle& m, int B, const std::vector<int>& generators) {
    std::vector<int> gens;
    for (int b : generators)
        if (m.acts(b)) gens.push_back(b);
    auto pts = m.window(B);
    size_t nthreads = std::clamp<size_t>(std::thread::hardware_concurrency(), 1, 16);
    nthreads = std::min(nthreads, std::max<size_t>(1, pts.size() / 64));
    std::vector<FidelityReport> parts(nthreads);
    std::vector<std::thread> pool;
    for (size_t t = 0; t < nthreads; ++t) {
        size_t lo = pts.size() * t / nthreads, hi = pts.size() * (t + 1) / nthreads;
        pool.emplace_back(fidelity_chunk, std::cref(m), B, std::cref(gens), std::cref(pts), lo, hi,
                          std::ref(parts[t]));
    }
    for (auto& th : pool) th.join();
    FidelityReport rep;
    for (auto& part : parts) {
        rep.checks += part.checks;
        rep.skipped += part.skipped;
        for (auto& v : part.violations)
            if (rep.violations.size() < 20) rep.violations.push_back(v);
    }
    return rep;
}

}  // namespace weightcat
