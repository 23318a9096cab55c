#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "superchar/laurent.hpp"
#include "superchar/weight.hpp"

namespace superchar {

// Kazhdan-Lusztig polynomials P_{x,w} of S_n restricted to elements that are
// longest in their cosets w*W_J, W_J a Young subgroup permuting positions
// inside consecutive blocks. Elements are stored as their shortest coset
// representatives (one-line words increasing inside each block).
class ParabolicKL {
public:
    using Poly = std::vector<std::int64_t>;

    explicit ParabolicKL(std::vector<int> block_sizes);

    int n() const { return n_; }
    const std::vector<int>& blocks() const { return blocks_; }
    int size() const { return static_cast<int>(words_.size()); }
    int id_of(const std::vector<int>& min_word) const;
    const std::vector<int>& word(int id) const { return words_[static_cast<std::size_t>(id)]; }
    int length(int id) const { return lengths_[static_cast<std::size_t>(id)]; }
    // P for the longest representatives of the cosets of x and w.
    Poly P(int x, int w);
    std::int64_t mu(int x, int w);

    // Word of a longest element turned into the shortest one of its coset.
    std::vector<int> min_rep(const std::vector<int>& word) const;

private:
    struct Column {
        std::vector<Poly> p;
        std::vector<std::pair<int, std::int64_t>> mus;
    };
    const Column& column(int w);
    int left(int i, int id, int& kind) const;

    int n_ = 0;
    std::vector<int> blocks_;
    std::vector<int> block_of_;
    std::vector<std::vector<int>> words_;
    std::vector<int> lengths_;
    std::map<std::vector<int>, int> index_;
    std::vector<std::unique_ptr<Column>> cols_;
    std::recursive_mutex mu_;
};

std::shared_ptr<ParabolicKL> kl_engine(const std::vector<int>& block_sizes);

std::vector<int> levi_blocks(int m, const std::vector<int>& Y, int N);
// Standardize a value vector; ties get larger labels further left.
std::vector<int> max_word(const std::vector<int>& values);
int inversions(const std::vector<int>& word);

struct LinkageClass {
    DominantWeight base;
    int N = 0;
    std::vector<DominantWeight> members;  // decreasing length, ties by weight
    int index_of(const DominantWeight& mu) const;
    std::string signature() const;
};

LinkageClass linkage_class(const DominantWeight& la, int N);
// Dual canonical coefficient; zero if mu is not linked to la.
LaurentPoly kl_ell(const DominantWeight& mu, const DominantWeight& la, int N);
BigInt a_coefficient(const DominantWeight& mu, const DominantWeight& la, int N);
// Same, on rho-shifted value vectors; blocks partition the positions.
LaurentPoly kl_ell_shifted(const std::vector<int>& a_mu, const std::vector<int>& a_la,
                           const std::vector<int>& blocks);
// Arrangements of the values of a that strictly decrease inside each block.
std::vector<std::vector<int>> levi_dominant_arrangements(const std::vector<int>& a,
                                                         const std::vector<int>& blocks);

struct KLTable {
    LinkageClass cls;
    // L[i][j] = l_{members[i], members[j]}; same layout for U.
    std::vector<std::vector<LaurentPoly>> L;
    std::vector<std::vector<LaurentPoly>> U;
    // Labels used when the table is read on the super side.
    std::vector<Weight> labels;
};

KLTable kl_dual_canonical(const LinkageClass& cls);
// Fills U: bar-invariant for the involution fixing every dual canonical
// vector, unitriangular, off-diagonal entries in qZ[q].
KLTable kl_canonical(const LinkageClass& cls);
KLTable kl_canonical(const KLTable& with_L);
std::map<DominantWeight, BigInt> a_coefficients(const LinkageClass& cls);
KLTable super_kl_alias(const KLTable& t);

// Independent check of the table against the contract: unitriangularity,
// degree conditions and bar-invariance of U. Returns an empty string on success.
std::string check_kl_table(const KLTable& t);

}  // namespace superchar
