#pragma once

#include "weightcat/rational.hpp"

#include <set>
#include <string>
#include <vector>

namespace weightcat {

enum class Family { A, B, C, D, E, F, G };

struct CartanType {
    Family family = Family::A;
    int rank = 1;

    // Parses "A3", "c2", "E8"; throws std::invalid_argument on bad input.
    static CartanType parse(const std::string& s);
    static void validate(Family f, int rank);
    std::string str() const;
    bool operator==(const CartanType& o) const { return family == o.family && rank == o.rank; }
};

using Root = IVec;

int height(const Root& r);

class RootSystem {
public:
    explicit RootSystem(CartanType t);

    const CartanType& type() const { return type_; }
    int rank() const { return type_.rank; }
    // Positive roots ordered by height, then lexicographically.
    const std::vector<Root>& positive() const { return positive_; }
    // Positive roots followed by their negatives in the same order.
    std::vector<Root> roots() const;
    int size() const { return 2 * static_cast<int>(positive_.size()); }
    Root simple(int i) const;

    long inner(const Root& a, const Root& b) const;
    // <b, a^vee> = 2(b,a)/(a,a)
    int pairing(const Root& b, const Root& a) const;
    int cartan_entry(int i, int j) const { return pairing(simple(i), simple(j)); }
    bool is_root(const Root& r) const;
    bool is_positive_root(const Root& r) const;
    bool is_long(const Root& r) const;
    const std::vector<std::vector<long>>& gram() const { return gram_; }

    // Positive roots whose support lies in the given simple indices (0-based).
    std::vector<Root> positive_in(const std::vector<int>& simple_idx) const;
    static bool supported_in(const Root& r, const std::vector<int>& simple_idx);

private:
    CartanType type_;
    std::vector<std::vector<long>> gram_;
    std::vector<Root> positive_;
    std::set<Root> all_;
};

struct RootSubset {
    const RootSystem* parent = nullptr;
    std::set<Root> members;

    // Hermite basis of the integer span of the members.
    std::vector<IVec> lattice() const;
    bool contains(const Root& r) const { return members.count(r) > 0; }
};

// The symmetric closed subset <idx> generated by simple roots (0-based indices).
RootSubset generated_subset(const RootSystem& rs, const std::vector<int>& simple_idx);
RootSubset positive_subset(const RootSystem& rs);

struct SubsetFlags {
    bool symmetric = false;
    bool closed = false;
    bool parabolic = false;
    bool levi = false;
    std::set<Root> levi_part;
    std::set<Root> unipotent_part;
};

SubsetFlags classify_subset(const RootSubset& s);
bool lattice_disjoint(const RootSubset& s, const RootSubset& t);

struct LeviDecomposition {
    std::vector<int> theta;           // 0-based simple indices
    std::vector<Root> levi_roots;     // <theta>, positive then negative
    std::vector<Root> nplus;          // R+ \ <theta>+
    std::vector<Root> nminus;         // -nplus
};

LeviDecomposition levi_decomposition(const RootSystem& rs, const std::vector<int>& theta);

std::vector<int> complement(int rank, const std::vector<int>& idx);

}  // namespace weightcat
