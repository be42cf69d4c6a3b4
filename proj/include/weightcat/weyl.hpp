#pragma once

#include "weightcat/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace weightcat {

// Normally ordered monomial q^e p^f, stored as (e_1..e_N, f_1..f_N).
using WeylMono = IVec;

// Element of the Weyl algebra W_N in normal order (all q's left of all p's).
struct WeylPoly {
    int nvars = 0;
    std::map<WeylMono, Q> terms;

    static WeylPoly q(int nvars, int i);
    static WeylPoly p(int nvars, int i);
    static WeylPoly constant(int nvars, const Q& c);

    WeylPoly operator+(const WeylPoly& o) const;
    WeylPoly operator-(const WeylPoly& o) const;
    WeylPoly operator*(const WeylPoly& o) const;
    WeylPoly operator*(const Q& s) const;
    bool is_zero() const { return terms.empty(); }
    std::string str() const;
};

WeylPoly commutator(const WeylPoly& a, const WeylPoly& b);

enum class ParamClass { NEG_INT, NONNEG_INT, NON_INT };

struct WeylParams {
    QVec a;
    explicit WeylParams(QVec v) : a(std::move(v)) {}
    int size() const { return static_cast<int>(a.size()); }
    ParamClass cls(int i) const;
};

using Lattice = IVec;

struct ActionTerm {
    Q coeff;
    Lattice target;
};

enum class WeylGen { q, p };

bool k_member(const WeylParams& a, const Lattice& k);
// Throws std::domain_error if k is outside K, std::logic_error if the K audit fails.
ActionTerm weyl_act(WeylGen g, int i, const WeylParams& a, const Lattice& k);
// Applies a normally ordered polynomial to x(k); returns nonzero terms keyed by target.
std::map<Lattice, Q> weyl_apply(const WeylPoly& w, const WeylParams& a, const Lattice& k);

struct RelationViolation {
    std::string relation;
    Lattice k;
};

struct WeylRelationReport {
    int points_checked = 0;
    int boundary_points = 0;  // k with a NEG_INT coordinate at k_i = -a_i-1
    std::vector<RelationViolation> violations;
};

std::vector<Lattice> box(int n, int radius);
WeylRelationReport check_weyl_relations(const WeylParams& a, int radius);
bool transitivity_probe(const WeylParams& a, int radius);

}  // namespace weightcat
