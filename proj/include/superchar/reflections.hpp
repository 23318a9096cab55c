#pragma once

#include <string>
#include <vector>

#include "superchar/weight.hpp"

namespace superchar {

// The root eps_a - eps_b; exactly one of a, b is half-integral.
struct OddRoot {
    int a = 0;
    int b = 0;
    OddRoot() = default;
    OddRoot(int a_, int b_);
    Weight weight() const { return Weight::eps(a) - Weight::eps(b); }
    std::string str() const;
    bool operator==(const OddRoot&) const = default;
};

// Pairing with +E_aa + E_bb; only its vanishing matters for odd_reflect.
int odd_pairing(const Weight& w, const OddRoot& alpha);
Weight odd_reflect(const Weight& w, const OddRoot& alpha);

std::vector<OddRoot> sequence_c(int n);
std::vector<OddRoot> sequence_s(int n);
// First k(k+1)/2 roots of sequence_c, generated block by block.
std::vector<OddRoot> sequence_c_prefix(int k);

struct BorelChain {
    std::vector<int> order;  // basis labels v_r, doubled
    std::vector<std::pair<int, int>> simple_roots() const;
};

enum class ChainKind { c, s };
// Reordered basis covering indices up to `extent` (doubled).
BorelChain borel_after(int n, ChainKind kind, int m, int extent);
std::vector<std::pair<int, int>> simple_roots_after(int n, ChainKind kind, int m, int extent);

Weight replay_chain(const Weight& w0, const std::vector<OddRoot>& seq);

struct TraceStep {
    int step;
    OddRoot root;
    int pairing;
    Weight after;
};
std::vector<TraceStep> replay_trace(const Weight& w0, const std::vector<OddRoot>& seq);

Weight closed_form(const DominantWeight& d, int k);

}  // namespace superchar
