#pragma once

#include "weightcat/degone.hpp"
#include "weightcat/linalg.hpp"
#include "weightcat/module.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weightcat {

// c(X_b) x(k) for x(k) in the quotient M, valued in the submodule N;
// nullopt where the map is not defined (outside its window).
using CocycleRule = std::function<std::optional<Vec>(int b, const Lattice& k)>;

struct Cocycle {
    ModuleHandle from;  // M
    ModuleHandle to;    // N
    CocycleRule rule;
    std::string label;

    std::optional<Vec> apply(int b, const Lattice& k) const { return rule(b, k); }
    std::optional<Vec> apply(const LieElement& x, const Lattice& k) const;
    std::optional<Vec> apply(int b, const Vec& v) const;
};

struct CocycleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CocycleCheck {
    long checks = 0;
    long skipped = 0;
    std::optional<std::string> witness;  // first violating triple
    bool ok() const { return !witness; }
};

// c([X,Y]) = [c(X),Y] + [X,c(Y)] on all basis pairs and window vectors.
CocycleCheck check_cocycle(const Cocycle& c, int B);

Cocycle zero_cocycle(ModuleHandle M, ModuleHandle N);
// Weight-graded map given on window vectors; zero on h.
Cocycle table_cocycle(ModuleHandle M, ModuleHandle N, std::map<std::pair<int, Lattice>, Vec> table, int B);

// (X^-)^{-1} x(k) inside a degree-one module: the vector y with X^- y = x(k).
std::optional<Vec> inverse_lowering(const ModuleOracle& M, int neg, const Lattice& k);

// c(H) = c(X^-) = 0, c(X^+) = b (X^-)^{-1} on an A1 module.
Cocycle make_sl2_cocycle(const Q& b, const ModuleHandle& M);

using DegreeZeroMap = std::function<Vec(const Lattice&)>;
// c(X) = [X, phi] = X phi - phi X.
Cocycle make_coboundary(ModuleHandle M, ModuleHandle N, DegreeZeroMap phi);
// phi(x(k)) = r(k) y(k) with y(k) the N-vector of the same weight and r(k)
// drawn from the seed (small nonzero rationals).
DegreeZeroMap random_degree_zero(const ModuleHandle& M, const ModuleHandle& N, unsigned seed);

// V = N (+) M with X.(n,m) = (X n + c(X) m, X m). Basis index: tag 0 for N,
// tag 1 for M, followed by the underlying lattice point.
class ExtensionModule : public ModuleOracle {
public:
    explicit ExtensionModule(Cocycle c);

    bool acts(int b) const override;
    bool contains(const Lattice& k) const override;
    Vec act(int b, const Lattice& k) const override;
    QVec weight(const Lattice& k) const override;
    std::optional<Lattice> find(const QVec& weight) const override;
    std::vector<Lattice> window(int B) const override;
    std::string describe() const override;

    const Cocycle& cocycle() const { return c_; }
    static Lattice tag(int t, const Lattice& k);

private:
    Cocycle c_;
};

// Verifies the cocycle identity on window B first; throws CocycleError with the witness.
ModuleHandle build_extension(const Cocycle& c, int B);
// The inclusion of N and the projection to M intertwine the actions on window B.
bool extension_maps_ok(const ExtensionModule& V, int B);

struct CoboundaryWitness {
    std::map<Lattice, Vec> phi;  // phi(x(k)) for the M-vectors the system touched
};

std::optional<CoboundaryWitness> is_coboundary(const Cocycle& c, int B);

struct QuotientDimension {
    int unknowns = 0;
    int cocycles = 0;
    int coboundaries = 0;
    int quotient() const { return cocycles - coboundaries; }
    Matrix cocycle_basis;  // over the unknowns below
    std::vector<std::pair<int, Lattice>> unknown_keys;
};

// Window cocycles with c(h) = 0 modulo window coboundaries.
QuotientDimension cocycle_quotient(const ModuleHandle& M, const ModuleHandle& N, int B);
Cocycle cocycle_from_coordinates(const ModuleHandle& M, const ModuleHandle& N, const QuotientDimension& q,
                                 const QVec& coords, int B);

struct ConstraintSystem {
    std::string mode;  // "self", "weight-mismatch" or "support-disjoint"
    int window = 0;
    std::vector<Lattice> labels;  // unknowns b(label)
    std::vector<SparseRow> rows;
    int identity_rows = 0;
    int boundary_rows = 0;
    int dimension = 0;
    Matrix basis;
    std::vector<std::string> notes;
};

struct CertificationImpossible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool support_disjoint(const ModuleOracle& Ma, const ModuleOracle& Mb, int B);

// Ext^1(N_b, N_a) constraint systems for the single-node Levi families.
ConstraintSystem ext_solve_typeA(const DegOneSpec& a, const DegOneSpec& b, int B);
ConstraintSystem ext_solve_typeC(const DegOneSpec& a, const DegOneSpec& b, int B);

}  // namespace weightcat
