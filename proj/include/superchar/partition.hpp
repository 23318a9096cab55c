#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace superchar {

int angle(int m);

// Weakly decreasing positive parts; trailing zeros are dropped on construction.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    // 1-based row access, zero beyond the length.
    int operator()(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
    std::size_t length() const { return parts_.size(); }
    int size() const;
    bool empty() const { return parts_.empty(); }

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

    std::string str() const;

private:
    std::vector<int> parts_;
};

Partition transpose(const Partition& p);
bool contains(const Partition& eta, const Partition& mu);
std::size_t length(const Partition& p);

// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
// All partitions of size <= n.
std::vector<Partition> partitions_up_to(int n);
// All partitions contained in eta.
std::vector<Partition> subpartitions(const Partition& eta);

// Nonzero entries of theta, keyed by doubled index (1 -> 1/2, 2 -> 1, ...).
class ThetaSequence {
public:
    ThetaSequence() = default;
    explicit ThetaSequence(std::map<int, int> entries);

    int at_doubled(int r2) const;
    const std::map<int, int>& entries() const { return entries_; }
    // Dense prefix (1/2, 1, 3/2, ...) up to the last nonzero entry.
    std::vector<int> dense() const;

    bool operator==(const ThetaSequence&) const = default;

private:
    std::map<int, int> entries_;
};

ThetaSequence theta(const Partition& p);

}  // namespace superchar
