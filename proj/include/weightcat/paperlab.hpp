#pragma once

#include "weightcat/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace weightcat {

struct LemmaCheck {
    std::string name;
    std::string computed;
    std::string expected;
    bool ok = false;
};

struct LemmaReport {
    std::string id;
    std::string algebra;
    std::vector<int> theta;  // 0-based simple indices in theta
    std::map<std::string, Q> params;
    std::map<std::string, Q> constants;    // extracted from the truncated induced module
    std::map<std::string, Q> predictions;  // closed forms, keyed like constants
    std::vector<LemmaCheck> checks;        // set-valued and structural comparisons
    std::vector<std::string> notes;
    int depth = 0;
    int window = 0;
    bool match = false;

    // match = every prediction equals its constant and every check holds
    void finalize();
};

struct LabOptions {
    int depth = 4;
    int window = 3;
    bool soundness = true;  // recompute at depth + 1 and compare
};

struct LabInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A2, complement {e1}: c in {0,-1-A}, eta(k) = (c+a1+k)/(a2-k+1) on both branches.
LemmaReport verify_lemA12(const Q& a1, const Q& a2, const LabOptions& opt = {});
// A_n, complement {e_l} with 1 < l < n (1-based), candidate N(-1^{l-1},a1,a2,0^{n-l}).
LemmaReport verify_A1N(int n, int l, const Q& a1, const Q& a2, const LabOptions& opt = {});
// A_n, complement = block of consecutive simple indices (0-based, size > 1), a of size |block|+1.
LemmaReport verify_AkAn(int n, const std::vector<int>& block, const QVec& a, const LabOptions& opt = {});
// C2, complement {e2}; requires a1 + a2 in {-1/2, -3/2}.
LemmaReport verify_AC1(const Q& a1, const Q& a2, const LabOptions& opt = {});
// C_n, complement = trailing block of size l > 1 with n > l, a of size l.
LemmaReport verify_CC(int n, const QVec& a, const LabOptions& opt = {});
// A3, theta = {e2,e3}; c must be 0 or -1-a1-a2.
LemmaReport appendix_a3(const Q& a1, const Q& a2, const Q& c, const LabOptions& opt = {});

const std::vector<std::string>& lemma_ids();

struct LabRequest {
    std::string id;
    std::string type;          // algebra for A1N, AkAn, CC
    std::vector<int> theta;    // 0-based, in theta; complement gives the Levi
    QVec a;
    std::vector<Q> c;          // appendix branch
    LabOptions options;
};

LemmaReport run_lemma(const LabRequest& req);
// A valid request for the lemma with parameters drawn from the seed.
LabRequest random_request(const std::string& id, unsigned seed);

}  // namespace weightcat
