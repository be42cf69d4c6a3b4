#pragma once

#include "weightcat/degone.hpp"
#include "weightcat/module.hpp"
#include "weightcat/rootsys.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace weightcat {

enum class Tri { NO, YES, UNKNOWN };
std::string to_string(Tri t);

// theta <= S <= Phi, as 0-based simple indices.
struct ThetaSpec {
    CartanType type;
    std::vector<int> theta;
    std::vector<int> S;

    static ThetaSpec full(CartanType t, std::vector<int> theta);
    // Throws std::invalid_argument on out-of-range, repeated or non-nested indices.
    void validate() const;
    std::vector<int> cuspidal_part() const;  // S \ theta
};

enum class VerdictKind { TRIVIAL, EXCLUDED, NONTRIVIAL, HIGHEST_WEIGHT, CUSPIDAL };
std::string to_string(VerdictKind k);

// N(-1^lead, a_1..a_free, 0^zeros) or M(-1^lead, a_1..a_free).
struct FamilyDescriptor {
    DegOneKind kind = DegOneKind::N;
    CartanType type;
    int lead = 0;
    int free = 0;
    int zeros = 0;

    std::string str() const;
    // Parameters must be non-integers; builds the matching degree-one spec.
    DegOneSpec instantiate(const QVec& params) const;
};

struct Verdict {
    VerdictKind kind = VerdictKind::TRIVIAL;
    std::optional<FamilyDescriptor> family;
    Tri degree1 = Tri::UNKNOWN;
    Tri semisimple = Tri::UNKNOWN;
    std::string reason;
};

// Classification of O_{Phi,theta}(g) for every Cartan type.
Verdict classify(CartanType t, const std::vector<int>& theta);

struct ConditionEvidence {
    Tri verdict = Tri::UNKNOWN;
    long checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};

struct MembershipReport {
    ConditionEvidence cuspidality;
    ConditionEvidence restriction;
    ConditionEvidence finiteness;
    std::vector<Lattice> hw_vectors;
    bool pass() const;
};

// The three membership conditions on the box |k_i| <= B; D bounds the
// nilpotency and hw-path searches (at least the window diameter is used).
MembershipReport check_membership(const ModuleHandle& M, const ThetaSpec& spec, int B, int D = 0);

struct RootPartition {
    std::set<Root> injective;
    std::set<Root> nilpotent;
    std::set<Root> undecided;
};

RootPartition cuspidal_nilpotent_partition(const ModuleOracle& M, int B);

// Some root of <S \ theta> plus some root of <theta> is a root.
bool infinite_dim_criterion(const ThetaSpec& spec);

}  // namespace weightcat
