#include "weightcat/lie.hpp"

#include <stdexcept>

namespace weightcat {

namespace {

IVec eps_weight(const WeylMono& m, int n) {
    IVec w(n);
    for (int i = 0; i < n; ++i) w[i] = m[i] - m[n + i];
    return w;
}

Root negate(const Root& r) {
    Root m = r;
    for (auto& x : m) x = -x;
    return m;
}

}  // namespace

LieElement basis_element(int b, const Q& c) {
    if (sgn(c) == 0) return {};
    return {{b, c}};
}

LieElement lin_comb(const LieElement& x, const Q& f, const LieElement& y) { return axpy(x, f, y); }

LieAlgebra::LieAlgebra(CartanType t) : rs_(t) {
    if (t.family != Family::A && t.family != Family::C)
        throw std::invalid_argument("realization-unavailable for type " + t.str());
    int n = t.rank;
    nvars_ = t.family == Family::A ? n + 1 : n;
    int N = nvars_;
    for (auto& r : rs_.positive()) basis_roots_.push_back(r);
    for (auto& r : rs_.positive()) basis_roots_.push_back(negate(r));
    for (int i = 0; i < n; ++i) basis_roots_.push_back(Root(n, 0));
    for (int b = 0; b < 2 * npos(); ++b) index_[basis_roots_[b]] = b;

    real_.assign(dim(), WeylPoly{N, {}});
    auto q = [&](int i) { return WeylPoly::q(N, i); };
    auto p = [&](int i) { return WeylPoly::p(N, i); };
    for (int i = 0; i < n; ++i) {
        bool long_end = t.family == Family::C && i == n - 1;
        if (long_end) {
            real_[simple_pos(i)] = q(i) * q(i) * Q(1, 2);
            real_[simple_neg(i)] = p(i) * p(i) * Q(-1, 2);
            real_[cartan(i)] = q(i) * p(i) + WeylPoly::constant(N, Q(1, 2));
        } else {
            real_[simple_pos(i)] = q(i) * p(i + 1);
            real_[simple_neg(i)] = q(i + 1) * p(i);
            real_[cartan(i)] = q(i) * p(i) - q(i + 1) * p(i + 1);
        }
    }
    // Non-simple root vectors: peel off the first simple root that leaves a root.
    for (int b = 0; b < npos(); ++b) {
        const Root& a = basis_roots_[b];
        if (height(a) == 1) continue;
        for (int i = 0; i < n; ++i) {
            Root rest = a;
            rest[i] -= 1;
            if (!rs_.is_positive_root(rest)) continue;
            int r = 0;
            Root down = rest;
            while (true) {
                down[i] -= 1;
                if (!rs_.is_root(down)) break;
                ++r;
            }
            Q f(1, r + 1);
            real_[b] = commutator(real_[simple_pos(i)], real_[index_of(rest)]) * f;
            real_[opposite(b)] = commutator(real_[opposite(index_of(rest))], real_[simple_neg(i)]) * f;
            break;
        }
    }
    for (int b = 0; b < 2 * npos(); ++b) {
        if (real_[b].is_zero()) throw std::logic_error("zero root vector in realization");
        by_eps_[eps_weight(real_[b].terms.begin()->first, N)] = b;
    }
    // Cartan decomposition system: columns H_1..H_n, rows = monomials q_j p_j and 1.
    for (int j = 0; j < N; ++j) {
        WeylMono m(2 * N, 0);
        m[j] = m[N + j] = 1;
        cartan_monos_.push_back(m);
    }
    cartan_monos_.push_back(WeylMono(2 * N, 0));
    cartan_sys_.assign(cartan_monos_.size(), QVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (size_t r = 0; r < cartan_monos_.size(); ++r) {
            auto it = real_[cartan(i)].terms.find(cartan_monos_[r]);
            if (it != real_[cartan(i)].terms.end()) cartan_sys_[r][i] = it->second;
        }
    table_.assign(dim() * dim(), {});
    for (int x = 0; x < dim(); ++x)
        for (int y = 0; y < dim(); ++y) table_[x * dim() + y] = decompose(commutator(real_[x], real_[y]));
}

std::shared_ptr<const LieAlgebra> LieAlgebra::make(const std::string& type) {
    return std::make_shared<const LieAlgebra>(CartanType::parse(type));
}

int LieAlgebra::index_of(const Root& r) const {
    auto it = index_.find(r);
    return it == index_.end() ? -1 : it->second;
}

int LieAlgebra::simple_neg(int i) const { return index_of(negate(rs_.simple(i))); }

int LieAlgebra::opposite(int b) const {
    if (is_cartan(b)) throw std::invalid_argument("opposite of Cartan element");
    return b < npos() ? b + npos() : b - npos();
}

std::string LieAlgebra::name(int b) const {
    if (is_cartan(b)) return "H" + std::to_string(b - 2 * npos() + 1);
    return "X" + to_string(basis_roots_[b]);
}

WeylPoly LieAlgebra::realize(const LieElement& x) const {
    WeylPoly w{nvars_, {}};
    for (auto& [b, c] : x) w = w + real_.at(b) * c;
    return w;
}

LieElement LieAlgebra::decompose(const WeylPoly& w) const {
    int N = nvars_;
    std::map<IVec, WeylPoly> parts;
    for (auto& [m, c] : w.terms) {
        auto& part = parts.try_emplace(eps_weight(m, N), WeylPoly{N, {}}).first->second;
        part.terms[m] = c;
    }
    std::map<int, Q> out;
    for (auto& [eps, part] : parts) {
        bool zero = true;
        for (int x : eps) zero = zero && x == 0;
        if (zero) {
            QVec rhs(cartan_monos_.size(), 0);
            for (auto& [m, c] : part.terms) {
                size_t r = 0;
                while (r < cartan_monos_.size() && cartan_monos_[r] != m) ++r;
                if (r == cartan_monos_.size()) throw std::domain_error("decompose: not in the Cartan span");
                rhs[r] = c;
            }
            std::vector<SparseRow> rows;
            for (auto& row : cartan_sys_) rows.push_back(to_sparse(row));
            auto sol = solve(rows, rhs, rank());
            if (!sol) throw std::domain_error("decompose: not in the Cartan span");
            for (int i = 0; i < rank(); ++i)
                if (sgn((*sol)[i]) != 0) out[cartan(i)] = (*sol)[i];
            continue;
        }
        auto it = by_eps_.find(eps);
        if (it == by_eps_.end()) throw std::domain_error("decompose: weight is not a root");
        const WeylPoly& x = real_[it->second];
        const auto& [m0, c0] = *x.terms.begin();
        auto f = part.terms.count(m0) ? part.terms.at(m0) / c0 : Q(0);
        if (!(part - x * f).is_zero()) throw std::domain_error("decompose: not proportional to a root vector");
        if (sgn(f) != 0) out[it->second] = f;
    }
    return LieElement(out.begin(), out.end());
}

LieElement LieAlgebra::bracket(const LieElement& x, const LieElement& y) const {
    LieElement out;
    for (auto& [a, ca] : x)
        for (auto& [b, cb] : y) out = axpy(out, ca * cb, bracket(a, b));
    return out;
}

LieElement LieAlgebra::coroot(const Root& alpha) const {
    int b = index_of(alpha);
    if (b < 0) throw std::invalid_argument("coroot: not a root");
    return bracket(b, opposite(b));
}

}  // namespace weightcat
