#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace weightcat {

using Q = mpq_class;
using QVec = std::vector<Q>;
using IVec = std::vector<int>;

Q parse_q(const std::string& s);
std::string to_string(const Q& q);
std::string to_string(const QVec& v);
std::string to_string(const IVec& v);
QVec parse_qvec(const std::string& csv);

inline bool is_integer(const Q& q) { return q.get_den() == 1; }
long to_long(const Q& q);
// n/d in lowest terms
Q frac(long n, long d);

struct QVecLess {
    bool operator()(const QVec& a, const QVec& b) const;
};

}  // namespace weightcat
