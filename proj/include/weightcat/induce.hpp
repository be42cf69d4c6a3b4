#pragma once

#include "weightcat/linalg.hpp"
#include "weightcat/module.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weightcat {

// Sorted basis indices of negative roots outside the Levi (PBW order).
using Monomial = std::vector<int>;

struct Key {
    Monomial mono;
    Lattice k;
    bool operator<(const Key& o) const { return mono != o.mono ? mono < o.mono : k < o.k; }
    bool operator==(const Key& o) const { return mono == o.mono && k == o.k; }
};

using InducedVector = std::map<Key, Q>;

struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_to(InducedVector& acc, const InducedVector& v, const Q& f = 1);
std::string to_string(const InducedVector& v, const LieAlgebra& g);

// U(g) (x)_{U(p)} C for the standard parabolic with Levi l_S, truncated at
// PBW depth D. C must be an l_S-module.
class VermaModule {
public:
    VermaModule(ModuleHandle C, std::vector<int> levi, int depth);

    const LieAlgebra& algebra() const { return C_->algebra(); }
    const ModuleOracle& inducing() const { return *C_; }
    const std::vector<int>& levi() const { return levi_; }
    const std::vector<int>& theta() const { return theta_; }
    int depth() const { return depth_; }

    bool in_levi(int b) const;
    bool in_nplus(int b) const;
    bool in_nminus(int b) const;
    bool in_theta_minus(int b) const;  // negative root supported on theta

    InducedVector one(const Lattice& k) const;
    InducedVector act(int b, const InducedVector& v) const;
    InducedVector act(const LieElement& x, const InducedVector& v) const;
    // X_{w_1} ... X_{w_r} (1 (x) x(k)), applied right to left, any order
    InducedVector word(const std::vector<int>& w, const Lattice& k) const;

    QVec weight(const Key& key) const;
    IVec theta_part(const Key& key) const;  // negative of the theta coordinates of the n- content

    struct WeightSpace {
        QVec weight;
        std::vector<Key> basis;
        std::map<Key, int> index;
        std::vector<std::vector<int>> plus_words;  // rows of the functional matrix
        Rref functional;
        int theta_rank = 0;
        int dim_L() const { return functional.rank(); }
        int defect() const { return functional.rank() - theta_rank; }
    };

    const WeightSpace& space_of(const Key& key) const;
    const WeightSpace& space(const QVec& weight, const IVec& tpart) const;
    Matrix functional_matrix(const QVec& weight, const IVec& tpart) const;

    // Canonical representative of v modulo the maximal submodule, weight by weight.
    InducedVector project_L(const InducedVector& v) const;
    bool zero_in_L(const InducedVector& v) const { return project_L(v).empty(); }

    // Multisets of n- roots (basis indices, sorted) with given theta part.
    std::vector<Monomial> nminus_monomials(const IVec& tpart) const;
    std::vector<Monomial> nplus_monomials(const IVec& tpart) const;

private:
    InducedVector act_key(int b, const Key& key) const;
    IVec tcoords(int b) const;

    ModuleHandle C_;
    std::vector<int> levi_, theta_;
    int depth_;
    std::vector<int> nminus_, nplus_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, Key>, InducedVector> memo_;
    mutable std::map<QVec, std::unique_ptr<WeightSpace>, QVecLess> spaces_;
};

std::optional<Q> proportionality(const InducedVector& v, const InducedVector& w);

// Coefficients x with v = sum x_i w_i in the simple quotient, if unique.
std::optional<QVec> express(const VermaModule& V, const InducedVector& v, const std::vector<InducedVector>& ws);

struct CentralCharacter {
    std::vector<LieElement> basis;  // central Cartan elements of l_S
    QVec values;
    std::vector<std::string> names;
};

// Basis of the center of l_S inside h (solutions of alpha(H) = 0 for alpha in S).
std::vector<LieElement> levi_center(const LieAlgebra& g, const std::vector<int>& levi);
CentralCharacter central_scalars(const ModuleOracle& C, const std::vector<int>& levi,
                                 const std::vector<Lattice>& samples);

// Scalar by which a U(g)_0 word acts on a degree-1 vector; throws if not scalar.
using ScalarAction = std::function<Q(const std::vector<int>&)>;
std::vector<std::vector<int>> zero_weight_words(const LieAlgebra& g, int depth);
struct U0Comparison {
    bool equal = true;
    long words = 0;
    std::string first_difference;
};
U0Comparison u0_compare(const ScalarAction& a, const ScalarAction& b, const LieAlgebra& g, int depth);
ScalarAction scalar_action(const ModuleOracle& M, const Lattice& k);
ScalarAction scalar_action(const VermaModule& V, const Lattice& k);

// Parameter sets of L(C(t)) satisfying the restriction condition at test weights.
using ModuleFamily = std::function<ModuleHandle(const Q&)>;

struct TestWeight {
    Monomial mono;  // n- multiset defining the weight offset
    Lattice k;      // index of the C vector
};

struct ParamSetResult {
    QVec values;     // parameters t with zero defect at every test weight
    bool complete = true;  // rational root search exhaustive
    int constraining_weights = 0;
    std::vector<std::string> notes;
};

std::vector<TestWeight> test_weights(const LieAlgebra& g, const std::vector<int>& levi,
                                     const std::vector<Lattice>& ks, int max_theta_height,
                                     const std::vector<int>& theta_support = {});
int defect_at(const VermaModule& V, const TestWeight& tw);
ParamSetResult parameter_set(const ModuleFamily& fam, const std::vector<int>& levi, int depth,
                             const std::vector<TestWeight>& weights);

struct ProbeReport {
    bool restriction_impossible = false;
    bool witness_found = false;
    Root alpha, gamma, y;
    int theta_height = 0;
    bool engine_confirmed = false;
    std::string detail;
};

ProbeReport probe_restriction_failure(const ModuleHandle& C, const std::vector<int>& levi, int depth);
// Generic l_S-module realized inside W(a): blocks for each component of S.
ModuleHandle levi_module(std::shared_ptr<const LieAlgebra> g, const std::vector<int>& levi, const QVec& a);
QVec sample_levi_params(const LieAlgebra& g, const std::vector<int>& levi, unsigned seed);

}  // namespace weightcat
