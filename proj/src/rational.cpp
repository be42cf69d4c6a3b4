#include "weightcat/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace weightcat {

Q parse_q(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (c != ' ' && c != '\t') s += c;
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    auto ok = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        size_t i = 0;
        if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!ok(s, true)) throw std::invalid_argument("bad rational: " + raw);
        return Q(mpz_class(s[0] == '+' ? s.substr(1) : s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!ok(num, true) || !ok(den, false)) throw std::invalid_argument("bad rational: " + raw);
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + raw);
    Q q(mpz_class(num[0] == '+' ? num.substr(1) : num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Q& q) { return q.get_str(); }

std::string to_string(const QVec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].get_str();
    }
    return out + ")";
}

std::string to_string(const IVec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

QVec parse_qvec(const std::string& csv) {
    QVec out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_q(item));
    return out;
}

long to_long(const Q& q) {
    if (!is_integer(q)) throw std::domain_error("not an integer: " + q.get_str());
    if (!q.get_num().fits_slong_p()) throw std::overflow_error("integer too large");
    return q.get_num().get_si();
}

bool QVecLess::operator()(const QVec& a, const QVec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c) return c < 0;
    }
    return false;
}

Q frac(long n, long d) {
    Q q(n, d);
    q.canonicalize();
    return q;
}

}  // namespace weightcat
