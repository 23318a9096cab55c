#pragma once

#include <map>
#include <vector>

#include "superchar/bigint.hpp"
#include "superchar/symfun.hpp"
#include "superchar/weight.hpp"

namespace superchar {

struct Window {
    int n_even = 0;  // x_1 .. x_{n_even}
    int n_odd = 0;   // x_{1/2} .. x_{n_odd - 1/2}
    int depth = 0;
    bool operator==(const Window&) const = default;
};

// One summand x^neg * s_half(x_{1/2}, ...) * s_ints(x_1, ...).
struct CharKey {
    std::vector<int> neg;  // exponents of x_{-m} .. x_{-1}
    Partition half;
    Partition ints;
    auto operator<=>(const CharKey&) const = default;
    bool operator==(const CharKey&) const = default;
};

class CharSeries {
public:
    Algebra algebra = Algebra::g;
    DominantWeight label;  // lambda; the anchor is its variant parametrization
    Weight anchor;
    Window window;
    // Finite rank gl(m|n): every half variable carries this extra exponent
    // (set by determinant twists).
    int half_shift = 0;
    std::map<CharKey, BigInt> table;

    int m() const { return label.m; }
    void add(const CharSeries& o, const BigInt& scale = 1);
    // Weight multiplicities with full depth at most window.depth.
    std::map<Weight, BigInt> terms() const;
    bool same_table(const CharSeries& o) const { return table == o.table; }
};

struct LeviCharacter {
    Poly neg;             // variables x_{-m} .. x_{-1}
    SchurPair positive;   // (half shape, integer shape)
};

LeviCharacter ch_levi(const DominantWeight& d, Algebra alg);
CharSeries ch_parabolic_verma(const DominantWeight& d, Algebra alg, const Window& win);
// rank = 0 picks max(1, l(lambda_+), |lambda_+| + depth).
CharSeries ch_irreducible(const DominantWeight& d, Algebra alg, const Window& win, int rank = 0);
// Tilting character sum of u_{mu lambda}(1) ch K(mu).
CharSeries ch_tilting(const DominantWeight& d, Algebra alg, const Window& win, int rank = 0);
int default_rank(const DominantWeight& d, int depth);

CharSeries truncate_T(const CharSeries& c);
CharSeries truncate_Tbar(const CharSeries& c);
// Returns false (and leaves out empty) when the functor kills the module.
bool tr_n(const CharSeries& c, int n, CharSeries& out);
CharSeries det_twist(const CharSeries& c, int k);
// gamma on gl(m|n): coordinates at -2m..-2 and half indices 1..2n-1.
CharSeries ch_finite_irreducible(const Weight& gamma, int m, int n, int depth);
BigInt weight_multiplicity(const DominantWeight& d, Algebra alg, const Weight& gamma);

// Super duality on the Verma basis: apply omega (g -> gbar) or omega-tilde
// (g -> gtilde) to the positive factor of every summand.
CharSeries omega_bar_image(const CharSeries& c);
CharSeries omega_tilde_image(const CharSeries& c);

}  // namespace superchar
