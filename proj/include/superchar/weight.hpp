#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "superchar/partition.hpp"

namespace superchar {

// g = integer indices, gbar = half-integer indices, gtilde = both.
enum class Algebra { g, gbar, gtilde };

std::string algebra_name(Algebra a);
Algebra parse_algebra(const std::string& s);

// Indices are stored doubled: r -> 2r. Negative block is -2m..-2.
inline bool is_half(int r2) { return r2 > 0 && (r2 % 2) != 0; }
inline bool is_pos_int(int r2) { return r2 > 0 && (r2 % 2) == 0; }
inline bool is_neg(int r2) { return r2 < 0; }
std::string index_str(int r2);

class Weight {
public:
    Weight() = default;
    explicit Weight(const std::map<int, int>& coords);
    static Weight eps(int r2, int c = 1);

    int operator[](int r2) const;
    void add(int r2, int c);
    const std::map<int, int>& coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight scaled(int k) const;
    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);

    auto operator<=>(const Weight&) const = default;
    bool operator==(const Weight&) const = default;

    std::string str() const;

private:
    std::map<int, int> coords_;
};

struct DominantWeight {
    int m = 1;
    std::vector<int> Y;    // subset of [-m,-2], undoubled
    std::vector<int> neg;  // lambda_{-m}, ..., lambda_{-1}
    Partition pos;

    DominantWeight() = default;
    DominantWeight(int m_, std::vector<int> Y_, std::vector<int> neg_, Partition pos_);
    void validate() const;
    int neg_at(int i) const { return neg[static_cast<std::size_t>(i + m)]; }
    bool in_Y(int j) const;

    auto operator<=>(const DominantWeight&) const = default;
    bool operator==(const DominantWeight&) const = default;
    std::string str() const;
};

Weight negative_part(const DominantWeight& d);
Weight to_standard(const DominantWeight& d);
Weight to_natural(const DominantWeight& d);
Weight to_theta(const DominantWeight& d);
Weight anchor_of(const DominantWeight& d, Algebra a);

int parity(const Weight& w);

struct LatticeFlags {
    bool gamma = false;
    bool gamma_bar = false;
    bool gamma_tilde = true;
    bool operator==(const LatticeFlags&) const = default;
};
LatticeFlags lattice_of(const Weight& w);
bool in_variant(const Weight& w, Algebra a);

// Ordered index list: -m..-1 then the positive indices of the variant with
// at most n_even integers and n_odd halves.
std::vector<int> index_order(Algebra a, int m, int n_even, int n_odd);
// Successor of r2 in the variant's ordering.
int next_index(Algebra a, int r2);

// Simple roots are labelled by the doubled index of their first entry.
Weight simple_root(Algebra a, int label);
bool is_odd_root(Algebra a, int label);
int coroot_pairing(const Weight& w, int label, Algebra a, int m);

using RootVector = std::map<int, int>;  // label -> coefficient
RootVector root_decompose(const Weight& w, Algebra a, int m);
Weight reconstruct(const RootVector& rv, Algebra a);
// Sum of simple-root coefficients of (anchor - w).
int depth(const Weight& anchor, const Weight& w, Algebra a, int m);

// Gradings shared by all three variants: number of units that left the
// negative block, and the coefficient sum over alpha_{-m}..alpha_{-2}.
int units_moved(const Weight& delta);
int neg_internal_depth(const Weight& delta, int m);

// Classical g at truncated rank N: positions -m..-1, 1..N.
std::vector<int> classical_positions(int m, int N);
std::vector<int> rho_shifted(const Weight& w, int m, int N);
std::vector<int> rho_shifted(const DominantWeight& d, int N);
Weight from_rho_shifted(const std::vector<int>& a, int m, int N);
bool fits_rank(const DominantWeight& d, int N);
bool linked(const DominantWeight& mu, const DominantWeight& la, int N);
bool dot_leq(const DominantWeight& mu, const DominantWeight& la, int N);
// Same order relation decided by breadth-first search over lowering reflections.
bool dot_leq_by_search(const DominantWeight& mu, const DominantWeight& la, int N);
bool word_bruhat_leq(const std::vector<int>& lower, const std::vector<int>& upper);

}  // namespace superchar
