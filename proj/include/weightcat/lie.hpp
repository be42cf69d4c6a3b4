#pragma once

#include "weightcat/linalg.hpp"
#include "weightcat/rootsys.hpp"
#include "weightcat/weyl.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace weightcat {

// Formal Q-combination of basis symbols: positive root vectors, negative root
// vectors (same order), then H_{e_1..e_n}.
using LieElement = SparseRow;

class LieAlgebra {
public:
    // Realized for types A and C only; throws std::invalid_argument otherwise.
    explicit LieAlgebra(CartanType t);
    static std::shared_ptr<const LieAlgebra> make(const std::string& type);

    const RootSystem& roots() const { return rs_; }
    const CartanType& type() const { return rs_.type(); }
    int rank() const { return rs_.rank(); }
    int npos() const { return static_cast<int>(rs_.positive().size()); }
    int dim() const { return 2 * npos() + rank(); }
    int nvars() const { return nvars_; }

    int index_of(const Root& r) const;  // -1 if not a root
    int cartan(int i) const { return 2 * npos() + i; }
    int simple_pos(int i) const { return index_of(rs_.simple(i)); }
    int simple_neg(int i) const;
    bool is_cartan(int b) const { return b >= 2 * npos(); }
    bool is_positive(int b) const { return b < npos(); }
    bool is_negative(int b) const { return b >= npos() && b < 2 * npos(); }
    const Root& root(int b) const { return basis_roots_.at(b); }
    int opposite(int b) const;
    std::string name(int b) const;

    const WeylPoly& realize(int b) const { return real_.at(b); }
    WeylPoly realize(const LieElement& x) const;
    LieElement decompose(const WeylPoly& w) const;

    const LieElement& bracket(int x, int y) const { return table_[x * dim() + y]; }
    LieElement bracket(const LieElement& x, const LieElement& y) const;
    // alpha(H_{e_i})
    int root_value(const Root& alpha, int i) const { return rs_.pairing(alpha, rs_.simple(i)); }
    LieElement coroot(const Root& alpha) const;

private:
    RootSystem rs_;
    int nvars_ = 0;
    std::vector<Root> basis_roots_;
    std::map<Root, int> index_;
    std::vector<WeylPoly> real_;
    std::map<IVec, int> by_eps_;
    std::vector<LieElement> table_;
    Matrix cartan_sys_;
    std::vector<WeylMono> cartan_monos_;
};

LieElement basis_element(int b, const Q& c = 1);
LieElement lin_comb(const LieElement& x, const Q& f, const LieElement& y);

}  // namespace weightcat
