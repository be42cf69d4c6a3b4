#include "weightcat/rootsys.hpp"

#include "weightcat/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace weightcat {

void CartanType::validate(Family f, int r) {
    bool ok = false;
    switch (f) {
        case Family::A: ok = r >= 1; break;
        case Family::B: ok = r >= 2; break;
        case Family::C: ok = r >= 2; break;
        case Family::D: ok = r >= 3; break;
        case Family::E: ok = r >= 6 && r <= 8; break;
        case Family::F: ok = r == 4; break;
        case Family::G: ok = r == 2; break;
    }
    if (!ok) throw std::invalid_argument("invalid rank " + std::to_string(r) + " for family");
}

CartanType CartanType::parse(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad Cartan type: '" + s + "'");
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    static const std::string letters = "ABCDEFG";
    auto pos = letters.find(c);
    if (pos == std::string::npos) throw std::invalid_argument("bad Cartan family: '" + s + "'");
    std::string digits = s.substr(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 3)
        throw std::invalid_argument("bad Cartan rank: '" + s + "'");
    CartanType t{static_cast<Family>(pos), std::stoi(digits)};
    validate(t.family, t.rank);
    return t;
}

std::string CartanType::str() const { return std::string(1, "ABCDEFG"[static_cast<int>(family)]) + std::to_string(rank); }

int height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

namespace {

std::vector<std::vector<long>> gram_matrix(const CartanType& t) {
    int n = t.rank;
    std::vector<std::vector<long>> g(n, std::vector<long>(n, 0));
    auto link = [&](int i, int j, long v) { g[i][j] = g[j][i] = v; };
    switch (t.family) {
        case Family::A:
            for (int i = 0; i < n; ++i) g[i][i] = 2;
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case Family::B:
            for (int i = 0; i < n; ++i) g[i][i] = i + 1 < n ? 4 : 2;
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
            break;
        case Family::C:
            for (int i = 0; i < n; ++i) g[i][i] = i + 1 < n ? 2 : 4;
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
            link(n - 2, n - 1, -2);
            break;
        case Family::D:
            for (int i = 0; i < n; ++i) g[i][i] = 2;
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
            link(n - 3, n - 1, -1);
            break;
        case Family::E:
            for (int i = 0; i < n; ++i) g[i][i] = 2;
            link(0, 2, -1);
            link(1, 3, -1);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case Family::F:
            g[0][0] = g[1][1] = 4;
            g[2][2] = g[3][3] = 2;
            link(0, 1, -2);
            link(1, 2, -2);
            link(2, 3, -1);
            break;
        case Family::G:
            g[0][0] = 2;
            g[1][1] = 6;
            link(0, 1, -3);
            break;
    }
    return g;
}

}  // namespace

RootSystem::RootSystem(CartanType t) : type_(t) {
    CartanType::validate(t.family, t.rank);
    gram_ = gram_matrix(t);
    int n = t.rank;
    std::set<Root> pos;
    std::vector<Root> layer;
    for (int i = 0; i < n; ++i) layer.push_back(simple(i));
    pos.insert(layer.begin(), layer.end());
    while (!layer.empty()) {
        std::set<Root> next;
        for (auto& b : layer)
            for (int i = 0; i < n; ++i) {
                Root e = simple(i);
                // p = largest with b - p e_i a root (or zero at b = e_i)
                int p = 0;
                Root cur = b;
                while (true) {
                    cur[i] -= 1;
                    if (!pos.count(cur)) break;
                    ++p;
                }
                int q = p - pairing(b, e);
                if (q > 0) {
                    Root up = b;
                    up[i] += 1;
                    if (!pos.count(up)) next.insert(up);
                }
            }
        layer.assign(next.begin(), next.end());
        pos.insert(next.begin(), next.end());
    }
    positive_.assign(pos.begin(), pos.end());
    std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
        int ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a > b;
    });
    for (auto& r : positive_) {
        all_.insert(r);
        Root m = r;
        for (auto& x : m) x = -x;
        all_.insert(m);
    }
}

std::vector<Root> RootSystem::roots() const {
    std::vector<Root> out = positive_;
    for (auto& r : positive_) {
        Root m = r;
        for (auto& x : m) x = -x;
        out.push_back(m);
    }
    return out;
}

Root RootSystem::simple(int i) const {
    Root r(rank(), 0);
    r.at(i) = 1;
    return r;
}

long RootSystem::inner(const Root& a, const Root& b) const {
    long s = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) s += a[i] * gram_[i][j] * b[j];
    return s;
}

int RootSystem::pairing(const Root& b, const Root& a) const {
    long aa = inner(a, a);
    if (aa == 0) throw std::invalid_argument("pairing with zero vector");
    long num = 2 * inner(b, a);
    if (num % aa != 0) throw std::logic_error("non-integral pairing");
    return static_cast<int>(num / aa);
}

bool RootSystem::is_root(const Root& r) const { return all_.count(r) > 0; }

bool RootSystem::is_positive_root(const Root& r) const { return is_root(r) && height(r) > 0; }

bool RootSystem::is_long(const Root& r) const {
    long m = 0;
    for (int i = 0; i < rank(); ++i) m = std::max(m, gram_[i][i]);
    return inner(r, r) == m;
}

bool RootSystem::supported_in(const Root& r, const std::vector<int>& idx) {
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (r[i] != 0 && std::find(idx.begin(), idx.end(), i) == idx.end()) return false;
    return true;
}

std::vector<Root> RootSystem::positive_in(const std::vector<int>& idx) const {
    std::vector<Root> out;
    for (auto& r : positive_)
        if (supported_in(r, idx)) out.push_back(r);
    return out;
}

std::vector<IVec> RootSubset::lattice() const {
    std::vector<IVec> rows(members.begin(), members.end());
    return hermite_normal_form(rows);
}

RootSubset generated_subset(const RootSystem& rs, const std::vector<int>& idx) {
    RootSubset s{&rs, {}};
    for (auto& r : rs.roots())
        if (RootSystem::supported_in(r, idx)) s.members.insert(r);
    return s;
}

RootSubset positive_subset(const RootSystem& rs) {
    RootSubset s{&rs, {}};
    s.members.insert(rs.positive().begin(), rs.positive().end());
    return s;
}

namespace {

Root neg(const Root& r) {
    Root m = r;
    for (auto& x : m) x = -x;
    return m;
}

Root add(const Root& a, const Root& b) {
    Root c = a;
    for (size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

}  // namespace

SubsetFlags classify_subset(const RootSubset& s) {
    const RootSystem& rs = *s.parent;
    SubsetFlags f;
    f.symmetric = true;
    for (auto& r : s.members) {
        if (!rs.is_root(r)) throw std::invalid_argument("classify_subset: not a root " + to_string(r));
        if (!s.members.count(neg(r))) f.symmetric = false;
        if (s.members.count(neg(r)))
            f.levi_part.insert(r);
        else
            f.unipotent_part.insert(r);
    }
    f.closed = true;
    for (auto& a : s.members)
        for (auto& b : s.members) {
            Root c = add(a, b);
            if (rs.is_root(c) && !s.members.count(c)) f.closed = false;
        }
    bool covers = true;
    for (auto& r : rs.roots())
        if (!s.members.count(r) && !s.members.count(neg(r))) covers = false;
    f.parabolic = f.closed && covers;
    f.levi = f.closed && f.symmetric;
    return f;
}

bool lattice_disjoint(const RootSubset& s, const RootSubset& t) {
    // Full-rank sublattices of their spans meet in 0 iff the rational spans do.
    auto a = s.lattice(), b = t.lattice();
    std::vector<IVec> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return hermite_normal_form(both).size() == a.size() + b.size();
}

LeviDecomposition levi_decomposition(const RootSystem& rs, const std::vector<int>& theta) {
    for (int i : theta)
        if (i < 0 || i >= rs.rank()) throw std::invalid_argument("theta index out of range");
    LeviDecomposition d;
    d.theta = theta;
    std::sort(d.theta.begin(), d.theta.end());
    d.theta.erase(std::unique(d.theta.begin(), d.theta.end()), d.theta.end());
    for (auto& r : rs.positive()) {
        if (RootSystem::supported_in(r, d.theta))
            d.levi_roots.push_back(r);
        else
            d.nplus.push_back(r);
    }
    size_t np = d.levi_roots.size();
    for (size_t i = 0; i < np; ++i) d.levi_roots.push_back(neg(d.levi_roots[i]));
    for (auto& r : d.nplus) d.nminus.push_back(neg(r));
    return d;
}

std::vector<int> complement(int rank, const std::vector<int>& idx) {
    std::vector<int> out;
    for (int i = 0; i < rank; ++i)
        if (std::find(idx.begin(), idx.end(), i) == idx.end()) out.push_back(i);
    return out;
}

}  // namespace weightcat
