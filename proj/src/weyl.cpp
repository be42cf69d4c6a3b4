#include "weightcat/weyl.hpp"

#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

namespace weightcat {

WeylPoly WeylPoly::q(int n, int i) {
    WeylPoly w{n, {}};
    WeylMono m(2 * n, 0);
    m[i] = 1;
    w.terms[m] = 1;
    return w;
}

WeylPoly WeylPoly::p(int n, int i) {
    WeylPoly w{n, {}};
    WeylMono m(2 * n, 0);
    m[n + i] = 1;
    w.terms[m] = 1;
    return w;
}

WeylPoly WeylPoly::constant(int n, const Q& c) {
    WeylPoly w{n, {}};
    if (sgn(c) != 0) w.terms[WeylMono(2 * n, 0)] = c;
    return w;
}

WeylPoly WeylPoly::operator+(const WeylPoly& o) const {
    WeylPoly r = *this;
    for (auto& [m, c] : o.terms) {
        Q& x = r.terms[m];
        x += c;
        if (sgn(x) == 0) r.terms.erase(m);
    }
    return r;
}

WeylPoly WeylPoly::operator-(const WeylPoly& o) const { return *this + o * Q(-1); }

WeylPoly WeylPoly::operator*(const Q& s) const {
    WeylPoly r{nvars, {}};
    if (sgn(s) == 0) return r;
    for (auto& [m, c] : terms) r.terms[m] = c * s;
    return r;
}

namespace {

mpz_class binom(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class fact(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace

WeylPoly WeylPoly::operator*(const WeylPoly& o) const {
    int n = nvars;
    WeylPoly r{n, {}};
    for (auto& [m1, c1] : terms)
        for (auto& [m2, c2] : o.terms) {
            // q^a p^b q^c p^d: move p^b past q^c one variable at a time
            std::function<void(int, WeylMono&, Q)> rec = [&](int i, WeylMono& acc, Q coeff) {
                if (i == n) {
                    Q& x = r.terms[acc];
                    x += coeff;
                    if (sgn(x) == 0) r.terms.erase(acc);
                    return;
                }
                int a = m1[i], b = m1[n + i], c = m2[i], d = m2[n + i];
                for (int j = 0; j <= std::min(b, c); ++j) {
                    acc[i] = a + c - j;
                    acc[n + i] = b - j + d;
                    Q f(fact(j) * binom(b, j) * binom(c, j));
                    rec(i + 1, acc, coeff * f);
                }
            };
            WeylMono acc(2 * n, 0);
            rec(0, acc, c1 * c2);
        }
    return r;
}

std::string WeylPoly::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (auto& [m, c] : terms) {
        if (!out.empty()) out += " + ";
        out += "(" + c.get_str() + ")";
        for (int i = 0; i < nvars; ++i)
            if (m[i]) out += "*q" + std::to_string(i + 1) + (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
        for (int i = 0; i < nvars; ++i)
            if (m[nvars + i])
                out += "*p" + std::to_string(i + 1) + (m[nvars + i] > 1 ? "^" + std::to_string(m[nvars + i]) : "");
    }
    return out;
}

WeylPoly commutator(const WeylPoly& a, const WeylPoly& b) { return a * b - b * a; }

ParamClass WeylParams::cls(int i) const {
    if (!is_integer(a[i])) return ParamClass::NON_INT;
    return sgn(a[i]) < 0 ? ParamClass::NEG_INT : ParamClass::NONNEG_INT;
}

bool k_member(const WeylParams& a, const Lattice& k) {
    if (static_cast<int>(k.size()) != a.size()) throw std::invalid_argument("k_member: length mismatch");
    for (int i = 0; i < a.size(); ++i) {
        if (a.cls(i) == ParamClass::NON_INT) continue;
        bool neg_sum = sgn(a.a[i] + k[i]) < 0;
        bool neg_a = sgn(a.a[i]) < 0;
        if (neg_sum != neg_a) return false;
    }
    return true;
}

ActionTerm weyl_act(WeylGen g, int i, const WeylParams& a, const Lattice& k) {
    if (!k_member(a, k)) throw std::domain_error("weyl_act: k outside K " + to_string(k));
    ActionTerm t{0, k};
    bool neg = a.cls(i) == ParamClass::NEG_INT;
    if (g == WeylGen::q) {
        t.target[i] += 1;
        t.coeff = neg ? Q(a.a[i] + k[i] + 1) : Q(1);
    } else {
        t.target[i] -= 1;
        t.coeff = neg ? Q(1) : Q(a.a[i] + k[i]);
    }
    if (sgn(t.coeff) != 0 && !k_member(a, t.target))
        throw std::logic_error("K audit: nonzero coefficient leaves K at " + to_string(k));
    return t;
}

std::map<Lattice, Q> weyl_apply(const WeylPoly& w, const WeylParams& a, const Lattice& k) {
    int n = w.nvars;
    std::map<Lattice, Q> out;
    for (auto& [m, c] : w.terms) {
        Q coeff = c;
        Lattice cur = k;
        bool dead = false;
        for (int i = 0; i < n && !dead; ++i)
            for (int r = 0; r < m[n + i] && !dead; ++r) {
                auto t = weyl_act(WeylGen::p, i, a, cur);
                if (sgn(t.coeff) == 0) dead = true;
                coeff *= t.coeff;
                cur = t.target;
            }
        for (int i = 0; i < n && !dead; ++i)
            for (int r = 0; r < m[i] && !dead; ++r) {
                auto t = weyl_act(WeylGen::q, i, a, cur);
                if (sgn(t.coeff) == 0) dead = true;
                coeff *= t.coeff;
                cur = t.target;
            }
        if (dead) continue;
        Q& x = out[cur];
        x += coeff;
        if (sgn(x) == 0) out.erase(cur);
    }
    return out;
}

std::vector<Lattice> box(int n, int radius) {
    std::vector<Lattice> out;
    Lattice k(n, -radius);
    if (n == 0) return {Lattice{}};
    while (true) {
        out.push_back(k);
        int i = n - 1;
        while (i >= 0 && k[i] == radius) k[i--] = -radius;
        if (i < 0) break;
        ++k[i];
    }
    return out;
}

namespace {

// Value of a composite word applied to x(k), as a map target -> coeff.
std::map<Lattice, Q> apply_word(const std::vector<std::pair<WeylGen, int>>& word, const WeylParams& a,
                                const Lattice& k) {
    std::map<Lattice, Q> cur{{k, Q(1)}};
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        std::map<Lattice, Q> next;
        for (auto& [kk, c] : cur) {
            auto t = weyl_act(it->first, it->second, a, kk);
            if (sgn(t.coeff) == 0) continue;
            next[t.target] += c * t.coeff;
        }
        cur.clear();
        for (auto& [kk, c] : next)
            if (sgn(c) != 0) cur[kk] = c;
    }
    return cur;
}

std::map<Lattice, Q> diff(std::map<Lattice, Q> x, const std::map<Lattice, Q>& y) {
    for (auto& [k, c] : y) {
        Q& v = x[k];
        v -= c;
        if (sgn(v) == 0) x.erase(k);
    }
    return x;
}

}  // namespace

WeylRelationReport check_weyl_relations(const WeylParams& a, int radius) {
    WeylRelationReport rep;
    int n = a.size();
    for (auto& k : box(n, radius)) {
        if (!k_member(a, k)) continue;
        ++rep.points_checked;
        for (int i = 0; i < n; ++i)
            if (a.cls(i) == ParamClass::NEG_INT && sgn(a.a[i] + k[i] + 1) == 0) ++rep.boundary_points;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto check = [&](WeylGen g1, WeylGen g2, const char* name, bool delta) {
                    auto lhs = diff(apply_word({{g1, i}, {g2, j}}, a, k), apply_word({{g2, j}, {g1, i}}, a, k));
                    std::map<Lattice, Q> rhs;
                    if (delta) rhs[k] = 1;
                    if (lhs != rhs)
                        rep.violations.push_back({std::string(name) + "_" + std::to_string(i + 1) + std::to_string(j + 1), k});
                };
                check(WeylGen::q, WeylGen::q, "[q,q]", false);
                check(WeylGen::p, WeylGen::p, "[p,p]", false);
                check(WeylGen::p, WeylGen::q, "[p,q]", i == j);
            }
    }
    return rep;
}

bool transitivity_probe(const WeylParams& a, int radius) {
    int n = a.size();
    std::vector<Lattice> nodes;
    for (auto& k : box(n, radius))
        if (k_member(a, k)) nodes.push_back(k);
    if (nodes.empty()) return false;
    std::set<Lattice> inwin(nodes.begin(), nodes.end());
    auto reach = [&](bool forward) {
        std::set<Lattice> seen{nodes.front()};
        std::queue<Lattice> qu;
        qu.push(nodes.front());
        while (!qu.empty()) {
            Lattice k = qu.front();
            qu.pop();
            for (auto& other : nodes) {
                if (seen.count(other)) continue;
                // edge k -> other (forward) or other -> k (backward)
                const Lattice& src = forward ? k : other;
                const Lattice& dst = forward ? other : k;
                bool edge = false;
                for (int i = 0; i < n && !edge; ++i)
                    for (WeylGen g : {WeylGen::q, WeylGen::p}) {
                        auto t = weyl_act(g, i, a, src);
                        if (sgn(t.coeff) != 0 && t.target == dst) edge = true;
                    }
                if (edge) {
                    seen.insert(other);
                    qu.push(other);
                }
            }
        }
        return seen.size() == nodes.size();
    };
    return reach(true) && reach(false);
}

}  // namespace weightcat
