#include "doctest.h"
#include "superchar/weight.hpp"

using namespace superchar;

namespace {

Weight W(std::initializer_list<std::pair<const int, int>> l) { return Weight(std::map<int, int>(l)); }

DominantWeight ex23() { return DominantWeight(3, {}, {-5, 2, -3}, Partition{7, 6, 3, 3, 1}); }

}  // namespace

TEST_CASE("example parametrizations") {
    auto d = ex23();
    CHECK(to_standard(d) == W({{-6, -5}, {-4, 2}, {-2, -3}, {2, 7}, {4, 6}, {6, 3}, {8, 3}, {10, 1}}));
    CHECK(to_natural(d) == W({{-6, -5}, {-4, 2}, {-2, -3}, {1, 5}, {3, 4}, {5, 4}, {7, 2}, {9, 2}, {11, 2}, {13, 1}}));
    CHECK(to_theta(d) == W({{-6, -5}, {-4, 2}, {-2, -3}, {1, 5}, {2, 6}, {3, 3}, {4, 4}, {5, 2}}));
}

TEST_CASE("small parametrizations") {
    CHECK(to_standard(DominantWeight(1, {}, {0}, {})).is_zero());
    CHECK(to_standard(DominantWeight(2, {-2}, {3, 3}, Partition{1})) == W({{-4, 3}, {-2, 3}, {2, 1}}));
    CHECK(to_natural(DominantWeight(1, {}, {0}, Partition{2, 1})) == W({{1, 2}, {3, 1}}));
    CHECK(to_theta(DominantWeight(1, {}, {0}, Partition{2, 1})) == W({{1, 2}, {2, 1}}));
    CHECK_THROWS(DominantWeight(2, {-2}, {1, 3}, {}));
    CHECK_THROWS(DominantWeight(2, {-1}, {1, 3}, {}));
}

TEST_CASE("parity and lattices") {
    CHECK(parity(W({{1, 1}, {2, 1}})) == 1);
    CHECK(parity(Weight()) == 0);
    CHECK(parity(W({{1, 1}, {3, 1}})) == 0);
    CHECK(lattice_of(W({{-2, 1}, {4, 1}})) == LatticeFlags{true, false, true});
    CHECK(lattice_of(W({{-2, 1}, {3, 1}})) == LatticeFlags{false, true, true});
    CHECK(lattice_of(W({{2, 1}, {1, 1}})) == LatticeFlags{false, false, true});
}

TEST_CASE("coroot pairings") {
    Weight w = W({{1, 2}, {2, 1}});
    CHECK(coroot_pairing(w, -2, Algebra::gtilde, 1) == 2);
    CHECK(coroot_pairing(w, 1, Algebra::gtilde, 1) == -3);
    CHECK(coroot_pairing(w, 2, Algebra::gtilde, 1) == 1);
    CHECK(coroot_pairing(Weight(), 3, Algebra::gtilde, 1) == 0);
    CHECK_THROWS(coroot_pairing(w, 1, Algebra::g, 1));
    CHECK_THROWS(coroot_pairing(w, -6, Algebra::g, 2));
}

TEST_CASE("root decomposition") {
    auto rv = root_decompose(W({{2, 1}, {-2, -1}}), Algebra::g, 1);
    CHECK(rv == RootVector{{-2, -1}});
    CHECK(root_decompose(Weight(), Algebra::g, 1).empty());
    CHECK(root_decompose(W({{4, 1}, {-2, -1}}), Algebra::g, 1) == RootVector{{-2, -1}, {2, -1}});
    CHECK_THROWS(root_decompose(W({{4, 1}}), Algebra::g, 1));
    CHECK_THROWS(root_decompose(W({{3, 1}, {-2, -1}}), Algebra::g, 1));
}

TEST_CASE("root decomposition round trip") {
    for (Algebra a : {Algebra::g, Algebra::gbar, Algebra::gtilde}) {
        auto order = index_order(a, 2, 3, 3);
        // every difference of two basis vectors, plus sums of two such
        for (int x : order)
            for (int y : order)
                for (int z : order) {
                    Weight w = Weight::eps(x) - Weight::eps(y) + Weight::eps(z) - Weight::eps(order[0]);
                    CHECK(reconstruct(root_decompose(w, a, 2), a) == w);
                }
    }
}

TEST_CASE("parametrizations share the negative block and parity") {
    for (int m = 1; m <= 3; ++m)
        for (const auto& p : partitions_up_to(12)) {
            std::vector<int> neg;
            for (int i = 0; i < m; ++i) neg.push_back(i % 2 ? -i : 2 * i);
            DominantWeight d(m, {}, neg, p);
            for (int i = -m; i <= -1; ++i) {
                CHECK(to_standard(d)[2 * i] == to_natural(d)[2 * i]);
                CHECK(to_standard(d)[2 * i] == to_theta(d)[2 * i]);
            }
            CHECK(parity(to_natural(d)) == p.size() % 2);
            Weight th = to_theta(d);
            Partition pt = transpose(p);
            for (int i = 1; i <= 14; ++i) {
                CHECK(th[2 * i - 1] == angle(pt(i) - (i - 1)));
                CHECK(th[2 * i] == angle(p(i) - i));
            }
        }
}

TEST_CASE("dot order on gl(2)") {
    DominantWeight la(1, {}, {1}, {});
    // rho-shifted (3,1) for (1|0); the reflection gives (1,3), i.e. (-1|2)
    DominantWeight mu(1, {}, {-1}, Partition{2});
    CHECK(dot_leq(la, la, 1));
    CHECK(dot_leq(mu, la, 1));
    CHECK_FALSE(dot_leq(la, mu, 1));
    DominantWeight other(1, {}, {5}, {});
    CHECK_FALSE(dot_leq(other, la, 1));
    CHECK_THROWS(dot_leq(DominantWeight(1, {}, {0}, Partition{1, 1}), la, 1));
}

TEST_CASE("dot order criterion matches reflection search") {
    // all weights of gl(4) (m=2, N=2) with small entries
    std::vector<DominantWeight> ws;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (const auto& p : partitions_up_to(3))
                if (p.length() <= 2) ws.emplace_back(2, std::vector<int>{}, std::vector<int>{a, b}, p);
    int linked_pairs = 0;
    for (const auto& x : ws)
        for (const auto& y : ws) {
            if (!linked(x, y, 2)) continue;
            ++linked_pairs;
            CHECK(dot_leq(x, y, 2) == dot_leq_by_search(x, y, 2));
        }
    CHECK(linked_pairs > ws.size());
}
