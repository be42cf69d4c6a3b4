#pragma once

#include "weightcat/module.hpp"

#include <set>
#include <string>
#include <vector>

namespace weightcat {

enum class DegOneKind { N, M };

// N(-1^j, a_{j+1..m}, 0^l) for A_{N-1}, or M(-1^l, a_{l+1..n}) for C_n.
struct DegOneSpec {
    DegOneKind kind = DegOneKind::N;
    CartanType type;
    QVec a;
    int lead = 0;     // number of leading -1 entries in the block partition
    int mid_end = 0;  // type A: middle block is [lead, mid_end) (0-based)
    bool integral_tail = false;  // type C, m=1 with a_n in {-1,-2}
};

DegOneSpec spec_N(const QVec& a);
DegOneSpec spec_M(const QVec& a);
DegOneSpec parse_spec(const std::string& module, const std::string& csv);

ModuleHandle build_N(const DegOneSpec& s);
ModuleHandle build_M(const DegOneSpec& s);
ModuleHandle build(const DegOneSpec& s);
// The whole W(a) as a g-module through the realization.
ModuleHandle build_W(const std::string& type, const QVec& a);

std::string spec_name(const DegOneSpec& s);
std::vector<int> circled_of(const DegOneSpec& s);
std::vector<int> theta_of(const DegOneSpec& s);
QVec weight_of(const DegOneSpec& s, const Lattice& k);

std::vector<Lattice> enumerate_hw(const ModuleOracle& m, const std::vector<int>& theta, int B);
// The theorem's predicted hw set: support in the middle block, block sum 0 or even.
std::set<Lattice> predicted_hw(const DegOneSpec& s, int B);
int degree_on_window(const ModuleOracle& m, int B);

struct OrbitReport {
    std::set<Lattice> orbit;
    bool cuspidal = true;      // every levi root vector nonzero on orbit members
    bool returns = true;       // Y X x(k) is a nonzero multiple of x(k)
    bool window_limited = false;
    std::vector<std::string> failures;
};

OrbitReport levi_orbit(const ModuleOracle& m, const Lattice& k, const std::vector<int>& levi, int B);

}  // namespace weightcat
