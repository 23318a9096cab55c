#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "superchar/liealg.hpp"

namespace superchar {

// Lowering root vectors E_ab (a > b) spanning a nilpotent subalgebra of gl(p|q).
struct NilSpec {
    GlSuper g;
    std::vector<std::pair<int, int>> gens;
    int parity(int i) const { return g.gen_parity(gens[i].first, gens[i].second); }
    WeightVec weight(int i) const;
    int index_of(int a, int b) const;
};

// Lowering root vectors outside the Levi whose blocks partition the indices.
NilSpec nilradical_minus(const GlSuper& g, const std::vector<int>& blocks);

// A weight module given by its weight-space dimensions and the action of
// root vectors E_ab on basis vectors.
struct ModuleSpec {
    std::function<int(const WeightVec&)> dim;
    std::function<std::vector<Rational>(int a, int b, const WeightVec& w, int k)> act;
    WeightVec top;  // every weight lies below it
};

ModuleSpec trivial_module(int n);
ModuleSpec module_of(std::shared_ptr<IrreducibleModule> l);
ModuleSpec module_of(std::shared_ptr<VermaModule> v);

// Normal-ordered monomial of the exterior superalgebra: generator indices in
// weakly increasing order, even ones at most once.
using ExtWord = std::vector<int>;

struct ChainTerm {
    ExtWord word;
    int vec = 0;  // basis index in the weight space of V
    auto operator<=>(const ChainTerm&) const = default;
};
using ChainElement = std::map<ChainTerm, Rational>;

class ChainComplex {
public:
    ChainComplex(NilSpec u, ModuleSpec v);

    const NilSpec& nil() const { return u_; }
    // Chain spaces larger than this throw std::length_error.
    void set_block_cap(std::size_t cap) { cap_ = cap; }
    // Sign and normal form of a product of generators; sign 0 when it vanishes.
    int normalize(std::vector<int>& word) const;
    WeightVec word_weight(const ExtWord& w) const;
    std::vector<ChainTerm> basis(int k, const WeightVec& omega);
    // Boundary of word (in the given, possibly unsorted, order) tensor basis
    // vector vec of V; the result lies in degree len - 1 of the same block.
    ChainElement boundary(const std::vector<int>& word, int vec, const WeightVec& omega);
    RatMatrix boundary_matrix(int k, const WeightVec& omega);
    int homology_dim(int k, const WeightVec& omega);
    // Largest degree with a nonzero chain space at omega.
    int top_degree(const WeightVec& omega);
    // sum (-1)^k dim C_k == sum (-1)^k dim H_k on the block of omega.
    bool euler_poincare(const WeightVec& omega);

private:
    NilSpec u_;
    ModuleSpec v_;
    std::size_t cap_ = 20000;
    std::map<std::pair<int, WeightVec>, std::vector<ChainTerm>> bases_;
    std::map<std::pair<int, WeightVec>, int> ranks_;
    int rank_of(int k, const WeightVec& omega);
};

// Multiplicity of the Levi module with highest weight mu in a finite
// dimensional module over the even Levi with the given weight dimensions.
BigInt levi_multiplicity(const std::function<BigInt(const WeightVec&)>& dims, const WeightVec& mu,
                         const std::vector<int>& blocks);
bool levi_dominant(const WeightVec& w, const std::vector<int>& blocks);

struct HomologyEntry {
    int degree = 0;
    WeightVec levi_hw;
    BigInt mult;
};

// Levi highest weights of H_k(u_-; V) for k <= max_degree among the
// Levi-dominant weights of the window; zero multiplicities are dropped.
std::vector<HomologyEntry> homology_groups(ChainComplex& cx, const std::vector<int>& blocks,
                                           const std::vector<WeightVec>& window, int max_degree);

// Kostant: H_k(u_-; L(la)) for finite dimensional L(la) over gl(n) is the sum of
// Levi modules with highest weights w.la, w ranging over length-k elements
// making w.la Levi dominant. Returns (degree, weight) -> 1.
std::map<std::pair<int, WeightVec>, int> kostant_prediction(const WeightVec& la, const std::vector<int>& blocks);

struct VoganResult {
    BigInt from_kl;
    BigInt from_homology;
    bool ok() const { return from_kl == from_homology; }
};

// Coefficient of q^n in l_{mu la}(-q^{-1}) against the multiplicity of the Levi
// module L(mu) in H_n(u_-; L(la)) over gl(m+N).
VoganResult vogan_check(const DominantWeight& la, const DominantWeight& mu, int n, int N);

// Interpolating algebra prefix: indices -m..-1 then 1/2, 1, 3/2, ... with
// k_pos positive indices of each kind; Levi = Y-blocks plus the positive block.
struct InterpolatingPrefix {
    GlSuper g;
    std::vector<int> labels;  // doubled index at each position
    std::vector<int> blocks;
    WeightVec top;            // la^theta
    int position_of(int r2) const;
};
InterpolatingPrefix interpolating_prefix(const DominantWeight& la, int k_pos);

struct BoundaryMatch {
    bool ok = true;
    int weights_compared = 0;
    std::vector<std::string> mismatches;
};

// Homology of the interpolating algebra prefix (indices -m..-1 then 1/2, 1,
// 3/2, ... up to k_pos positive indices of each kind) with coefficients in the
// simple module of highest weight la^theta, projected onto weights without
// half-index support, against the classical homology of L(la) at rank k_pos.
BoundaryMatch super_boundary_matching(const DominantWeight& la, int depth, int k_pos, int max_degree);

}  // namespace superchar
