#include "weightcat/poly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace weightcat {

int Poly::degree() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        if (sgn(c[i]) != 0) return i;
    return -1;
}

Q Poly::operator()(const Q& x) const {
    Q s = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) s = s * x + c[i];
    return s;
}

std::string Poly::str(const std::string& var) const {
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (sgn(c[i]) == 0) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c[i].get_str() + ")";
        if (i >= 1) out += "*" + var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

Poly interpolate(const QVec& xs, const QVec& ys) {
    size_t n = xs.size();
    if (n != ys.size() || n == 0) throw std::invalid_argument("interpolate: bad sizes");
    // Newton divided differences, then expand.
    QVec d = ys;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            d[i] = (d[i] - d[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    Poly p{QVec(n)};
    QVec basis{1};
    for (size_t j = 0; j < n; ++j) {
        for (size_t k = 0; k < basis.size(); ++k) p.c[k] += d[j] * basis[k];
        QVec next(basis.size() + 1);
        for (size_t k = 0; k < basis.size(); ++k) {
            next[k + 1] += basis[k];
            next[k] -= xs[j] * basis[k];
        }
        basis = next;
    }
    return p;
}

namespace {

// Positive divisors of |v|; false if trial division left an unfactored composite.
bool divisors(mpz_class v, std::vector<mpz_class>& out) {
    v = abs(v);
    std::vector<std::pair<mpz_class, int>> fac;
    for (unsigned long p = 2; p < 2000000 && mpz_class(p) * p <= v; ++p) {
        int e = 0;
        while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
            v /= p;
            ++e;
        }
        if (e) fac.emplace_back(mpz_class(p), e);
    }
    bool ok = true;
    if (v > 1) {
        if (mpz_probab_prime_p(v.get_mpz_t(), 30) == 0 && v >= mpz_class(2000000) * 2000000) ok = false;
        fac.emplace_back(v, 1);
    }
    out = {mpz_class(1)};
    for (auto& [p, e] : fac) {
        size_t m = out.size();
        mpz_class pw = 1;
        for (int k = 1; k <= e; ++k) {
            pw *= p;
            for (size_t i = 0; i < m; ++i) out.push_back(out[i] * pw);
        }
    }
    return ok;
}

}  // namespace

RootSearch rational_roots(const Poly& p0) {
    RootSearch res{{}, true};
    int deg = p0.degree();
    if (deg < 0) throw std::invalid_argument("rational_roots: zero polynomial");
    // integer primitive coefficients
    mpz_class lcm = 1;
    for (int i = 0; i <= deg; ++i) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p0.c[i].get_den_mpz_t());
    std::vector<mpz_class> a(deg + 1);
    for (int i = 0; i <= deg; ++i) {
        Q t = p0.c[i] * lcm;
        a[i] = t.get_num();
    }
    int low = 0;
    while (a[low] == 0) ++low;
    std::set<Q> found;
    if (low > 0) found.insert(Q(0));
    std::vector<mpz_class> b(a.begin() + low, a.end());
    Poly q;
    for (auto& x : b) q.c.push_back(Q(x));
    int d = q.degree();
    if (d == 1) {
        found.insert(Q(-q.c[0] / q.c[1]));
    } else if (d == 2) {
        Q disc = q.c[1] * q.c[1] - 4 * q.c[2] * q.c[0];
        if (sgn(disc) >= 0) {
            mpz_class num = disc.get_num(), den = disc.get_den();
            if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
                Q s(sqrt(num), sqrt(den));
                found.insert(Q((-q.c[1] + s) / (2 * q.c[2])));
                found.insert(Q((-q.c[1] - s) / (2 * q.c[2])));
            }
        }
    } else if (d > 2) {
        std::vector<mpz_class> ps, qs;
        bool ok1 = divisors(b.front(), ps);
        bool ok2 = divisors(b.back(), qs);
        res.complete = ok1 && ok2;
        for (auto& pp : ps)
            for (auto& qq : qs)
                for (int s : {1, -1}) {
                    Q r(pp * s, qq);
                    r.canonicalize();
                    if (sgn(q(r)) == 0) found.insert(r);
                }
    }
    res.roots.assign(found.begin(), found.end());
    return res;
}

}  // namespace weightcat
