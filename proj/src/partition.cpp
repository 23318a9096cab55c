#include "superchar/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace superchar {

int angle(int m) { return m > 0 ? m : 0; }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition with negative part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition not weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

std::string Partition::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

Partition transpose(const Partition& p) {
    std::vector<int> t(p.empty() ? 0 : p.parts()[0], 0);
    for (int row : p.parts())
        for (int j = 0; j < row; ++j) ++t[j];
    return Partition(std::move(t));
}

bool contains(const Partition& eta, const Partition& mu) {
    if (mu.length() > eta.length()) return false;
    for (std::size_t i = 1; i <= mu.length(); ++i)
        if (mu(i) > eta(i)) return false;
    return true;
}

std::size_t length(const Partition& p) { return p.length(); }

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto ps = partitions_of(k);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

std::vector<Partition> subpartitions(const Partition& eta) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int cap) {
        if (i == eta.length()) {
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= std::min(cap, eta.parts()[i]); ++v) {
            cur.push_back(v);
            rec(i + 1, v);
            cur.pop_back();
        }
    };
    rec(0, eta.empty() ? 0 : eta.parts()[0]);
    return out;
}

ThetaSequence::ThetaSequence(std::map<int, int> entries) {
    for (auto [k, v] : entries) {
        if (k < 1) throw std::invalid_argument("theta index must be positive");
        if (v < 0) throw std::invalid_argument("theta entries are nonnegative");
        if (v != 0) entries_[k] = v;
    }
}

int ThetaSequence::at_doubled(int r2) const {
    auto it = entries_.find(r2);
    return it == entries_.end() ? 0 : it->second;
}

std::vector<int> ThetaSequence::dense() const {
    if (entries_.empty()) return {};
    std::vector<int> out(entries_.rbegin()->first, 0);
    for (auto [k, v] : entries_) out[k - 1] = v;
    return out;
}

ThetaSequence theta(const Partition& p) {
    Partition pt = transpose(p);
    std::map<int, int> e;
    std::size_t n = std::max(p.length(), pt.length());
    for (std::size_t i = 1; i <= n; ++i) {
        int half = angle(pt(i) - static_cast<int>(i - 1));
        int integ = angle(p(i) - static_cast<int>(i));
        if (half) e[2 * static_cast<int>(i) - 1] = half;
        if (integ) e[2 * static_cast<int>(i)] = integ;
    }
    return ThetaSequence(std::move(e));
}

}  // namespace superchar
