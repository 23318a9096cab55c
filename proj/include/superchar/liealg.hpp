#pragma once

#include <map>
#include <memory>
#include <vector>

#include "superchar/bigint.hpp"
#include "superchar/linalg.hpp"
#include "superchar/klcore.hpp"
#include "superchar/weight.hpp"

namespace superchar {

// Coordinates on the standard basis of the Cartan of gl(p|q), listed in the
// order that defines the Borel (E_ab with a < b is raising).
using WeightVec = std::vector<int>;
using Monomial = std::vector<int>;

struct GlSuper {
    std::vector<int> parity;  // 0 even, 1 odd, per index
    int n() const { return static_cast<int>(parity.size()); }
    int gen_parity(int a, int b) const { return (parity[a] + parity[b]) % 2; }
    static GlSuper even(int n) { return GlSuper{std::vector<int>(static_cast<std::size_t>(n), 0)}; }
};

// Structure constants: [E_ab, E_cd] as a list of (coefficient, (p, q)).
std::vector<std::pair<int, std::pair<int, int>>> bracket(const GlSuper& g, int a, int b, int c, int d);

// Monomials in the given generators with total weight target; odd generators
// appear at most once.
std::vector<Monomial> monomials_of_weight(const GlSuper& g, const std::vector<std::pair<int, int>>& gens,
                                          const WeightVec& target);

int height(const WeightVec& delta);

class VermaModule {
public:
    using Vec = std::map<Monomial, BigInt>;

    VermaModule(GlSuper g, WeightVec lambda);

    const GlSuper& algebra() const { return g_; }
    const WeightVec& highest() const { return lambda_; }
    const std::vector<std::pair<int, int>>& lowering() const { return lower_; }
    const std::vector<std::pair<int, int>>& raising() const { return raise_; }
    std::vector<Monomial> basis(const WeightVec& weight) const;
    Vec act(int a, int b, const Monomial& u);
    Vec act(int a, int b, const Vec& x);
    // Rows: raising monomials of the opposite weight; columns: basis(weight).
    // Entry is the highest-weight coefficient of r applied to the basis vector.
    RatMatrix shapovalov(const WeightVec& weight, std::vector<Monomial>* rows = nullptr,
                         std::vector<Monomial>* cols = nullptr);
    // Highest-weight coefficient of r.x.
    BigInt top_coefficient(const Monomial& r, const Vec& x);

private:
    int low_index(int a, int b) const;
    GlSuper g_;
    WeightVec lambda_;
    std::vector<std::pair<int, int>> lower_, raise_;
    std::map<std::pair<std::pair<int, int>, Monomial>, Vec> memo_;
};

// The simple quotient of a Verma module, built weight space by weight space.
class IrreducibleModule {
public:
    IrreducibleModule(GlSuper g, WeightVec lambda);
    const WeightVec& highest() const { return verma_.highest(); }
    const GlSuper& algebra() const { return verma_.algebra(); }
    int dim(const WeightVec& w);
    // E_ab on basis vector k of weight w, in coordinates of weight w + e_a - e_b.
    std::vector<Rational> act(int a, int b, const WeightVec& w, int k);

private:
    struct Space {
        std::vector<Monomial> rows, lifts;
        RatMatrix inverse;  // maps top coefficients on rows to coordinates
    };
    const Space& space(const WeightVec& w);
    VermaModule verma_;
    std::map<WeightVec, Space> spaces_;
};

using WeightChar = std::map<WeightVec, BigInt>;

// Weights top - (sum of simple roots) with at most depth simple roots, by height.
std::vector<WeightVec> window_weights(const WeightVec& top, int depth);
WeightChar verma_character(const GlSuper& g, const WeightVec& lambda, const std::vector<WeightVec>& window);
WeightChar irreducible_character(const GlSuper& g, const WeightVec& lambda,
                                 const std::vector<WeightVec>& window);
// Even algebra only; blocks partition the indices into Levi factors.
WeightChar parabolic_verma_character(int n, const WeightVec& lambda, const std::vector<int>& blocks,
                                     const std::vector<WeightVec>& window);

WeightVec classical_coords(const DominantWeight& d, int N);
// Inverse of classical_coords; false when the positive part is not a partition.
bool dominant_from_coords(const WeightVec& c, int m, const std::vector<int>& Y, int N, DominantWeight& out);

// Brute-force data on the even algebra gl(m+N) with the Levi of la, on weights
// at most depth simple roots below la: coefficients of ch L(la) on parabolic
// Verma characters, and composition multiplicities of the parabolic Verma.
std::map<WeightVec, BigInt> oracle_a_coefficients(const DominantWeight& la, int N, int depth);
std::map<WeightVec, BigInt> oracle_multiplicities(const DominantWeight& la, int N, int depth);
// Same on raw coordinates of gl(n), n = lam.size(); lam need only be Levi dominant.
std::map<WeightVec, BigInt> oracle_multiplicities(const WeightVec& lam, const std::vector<int>& blocks, int depth);

}  // namespace superchar
