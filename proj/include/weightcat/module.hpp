#pragma once

#include "weightcat/lie.hpp"
#include "weightcat/weyl.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace weightcat {

using Vec = std::map<Lattice, Q>;

// Lazily evaluated action oracle on a lattice-indexed basis x(k).
class ModuleOracle {
public:
    explicit ModuleOracle(std::shared_ptr<const LieAlgebra> g) : g_(std::move(g)) {}
    virtual ~ModuleOracle() = default;

    const LieAlgebra& algebra() const { return *g_; }
    const std::shared_ptr<const LieAlgebra>& algebra_ptr() const { return g_; }

    virtual bool acts(int b) const = 0;
    virtual bool contains(const Lattice& k) const = 0;
    virtual Vec act(int b, const Lattice& k) const = 0;
    // Values of H_{e_1..e_n} on x(k).
    virtual QVec weight(const Lattice& k) const = 0;
    virtual std::optional<Lattice> find(const QVec& weight) const = 0;
    // Basis indices in the box |k_i| <= B.
    virtual std::vector<Lattice> window(int B) const = 0;
    virtual std::string describe() const = 0;

    Vec act(const LieElement& x, const Lattice& k) const;
    Vec act(const LieElement& x, const Vec& v) const;
    Vec act(int b, const Vec& v) const;

private:
    std::shared_ptr<const LieAlgebra> g_;
};

using ModuleHandle = std::shared_ptr<const ModuleOracle>;

void add_to(Vec& acc, const Vec& v, const Q& f = 1);
bool in_box(const Lattice& k, int B);

enum class BlockKind { FREE, SUM_ZERO, SUM_EVEN };

struct Block {
    int first;  // coordinate range, inclusive, 0-based
    int last;
    BlockKind kind;
};

// Subquotient of W(a) along the realization of g inside W_N. Coordinates
// outside every block are frozen at k_i = 0. If levi is set, only h and the
// root vectors supported on those simple roots act.
class RealizedModule : public ModuleOracle {
public:
    RealizedModule(std::shared_ptr<const LieAlgebra> g, WeylParams a, std::vector<Block> blocks,
                   std::optional<std::vector<int>> levi, std::string label);

    bool acts(int b) const override;
    bool contains(const Lattice& k) const override;
    Vec act(int b, const Lattice& k) const override;
    QVec weight(const Lattice& k) const override;
    std::optional<Lattice> find(const QVec& weight) const override;
    std::vector<Lattice> window(int B) const override;
    std::string describe() const override { return label_; }

    const WeylParams& params() const { return a_; }
    const std::vector<Block>& blocks() const { return blocks_; }

private:
    WeylParams a_;
    std::vector<Block> blocks_;
    std::optional<std::vector<int>> levi_;
    std::string label_;
    std::vector<bool> frozen_;
    Matrix lin_;  // weight(k) = w0 + lin_ k
    QVec w0_;
};

// Cuspidal sl2-module N(a1,a2) for the simple root e_s, extended to h:
// H_j x(k) = (h0_j + k e_s(H_j)) x(k), X_{e_s} x(k) = (a2-k) x(k+1),
// X_{-e_s} x(k) = (a1+k) x(k-1).
class Sl2LeviModule : public ModuleOracle {
public:
    Sl2LeviModule(std::shared_ptr<const LieAlgebra> g, int s, Q a1, Q a2, QVec h0);

    bool acts(int b) const override;
    bool contains(const Lattice& k) const override { return k.size() == 1; }
    Vec act(int b, const Lattice& k) const override;
    QVec weight(const Lattice& k) const override;
    std::optional<Lattice> find(const QVec& weight) const override;
    std::vector<Lattice> window(int B) const override;
    std::string describe() const override;

private:
    int s_;
    Q a1_, a2_;
    QVec h0_;
};

// One-dimensional h-module of weight lambda.
class CharacterModule : public ModuleOracle {
public:
    CharacterModule(std::shared_ptr<const LieAlgebra> g, QVec lambda);

    bool acts(int b) const override { return algebra().is_cartan(b); }
    bool contains(const Lattice& k) const override { return k.empty(); }
    Vec act(int b, const Lattice& k) const override;
    QVec weight(const Lattice&) const override { return lambda_; }
    std::optional<Lattice> find(const QVec& weight) const override;
    std::vector<Lattice> window(int) const override { return {Lattice{}}; }
    std::string describe() const override;

private:
    QVec lambda_;
};

struct FidelityReport {
    long checks = 0;
    long skipped = 0;  // an intermediate vector left the window
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// [X,Y]v = X(Yv) - Y(Xv) for all acting generator pairs and window vectors.
FidelityReport bracket_fidelity(const ModuleOracle& m, int B, const std::vector<int>& generators);
std::vector<int> simple_generators(const LieAlgebra& g);

}  // namespace weightcat
