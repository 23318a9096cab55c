#include "superchar/reflections.hpp"

#include <algorithm>
#include <stdexcept>

namespace superchar {

OddRoot::OddRoot(int a_, int b_) : a(a_), b(b_) {
    if (is_half(a) == is_half(b)) throw std::invalid_argument("odd root needs one half-integral endpoint");
}

std::string OddRoot::str() const { return "e" + index_str(a) + "-e" + index_str(b); }

int odd_pairing(const Weight& w, const OddRoot& alpha) { return w[alpha.a] + w[alpha.b]; }

Weight odd_reflect(const Weight& w, const OddRoot& alpha) {
    if (odd_pairing(w, alpha) == 0) return w;
    return w - alpha.weight();
}

std::vector<OddRoot> sequence_c(int n) { return sequence_c_prefix(n); }

std::vector<OddRoot> sequence_c_prefix(int k) {
    std::vector<OddRoot> out;
    for (int blk = 1; blk <= k; ++blk)
        for (int h = blk; h >= 1; --h) out.emplace_back(2 * h - 1, 2 * blk);
    return out;
}

std::vector<OddRoot> sequence_s(int n) {
    std::vector<OddRoot> out;
    for (int blk = 1; blk <= n; ++blk)
        for (int i = blk; i >= 1; --i) out.emplace_back(2 * i, 2 * blk + 1);
    return out;
}

std::vector<std::pair<int, int>> BorelChain::simple_roots() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) out.emplace_back(order[i], order[i + 1]);
    return out;
}

BorelChain borel_after(int n, ChainKind kind, int m, int extent) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    BorelChain bc;
    for (int i = -m; i <= -1; ++i) bc.order.push_back(2 * i);
    std::vector<int> ints, halves;
    for (int i = 1; i <= n; ++i) ints.push_back(2 * i);
    for (int i = 1; i <= n + 1; ++i) halves.push_back(2 * i - 1);
    auto& first = kind == ChainKind::c ? ints : halves;
    auto& second = kind == ChainKind::c ? halves : ints;
    bc.order.insert(bc.order.end(), first.begin(), first.end());
    bc.order.insert(bc.order.end(), second.begin(), second.end());
    for (int r = 2 * n + 2; r <= extent; ++r) bc.order.push_back(r);
    return bc;
}

std::vector<std::pair<int, int>> simple_roots_after(int n, ChainKind kind, int m, int extent) {
    return borel_after(n, kind, m, extent).simple_roots();
}

Weight replay_chain(const Weight& w0, const std::vector<OddRoot>& seq) {
    Weight w = w0;
    for (const auto& r : seq) w = odd_reflect(w, r);
    return w;
}

std::vector<TraceStep> replay_trace(const Weight& w0, const std::vector<OddRoot>& seq) {
    std::vector<TraceStep> out;
    Weight w = w0;
    int step = 0;
    for (const auto& r : seq) {
        int p = odd_pairing(w, r);
        w = odd_reflect(w, r);
        out.push_back({++step, r, p, w});
    }
    return out;
}

Weight closed_form(const DominantWeight& d, int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    Weight w = negative_part(d);
    const Partition& p = d.pos;
    Partition pt = transpose(p);
    int reach = static_cast<int>(std::max(p.length(), pt.length())) + k + 1;
    for (int i = 1; i <= k; ++i) {
        w.add(2 * i, p(i));
        w.add(2 * i - 1, angle(pt(i) - k));
    }
    for (int j = k + 1; j <= reach; ++j) {
        w.add(2 * j - 1, angle(pt(j) - j + 1));
        w.add(2 * j, angle(p(j) - j));
    }
    return w;
}

}  // namespace superchar
