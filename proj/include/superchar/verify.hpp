#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "superchar/symfun.hpp"

namespace superchar {

struct CriterionResult {
    int id = 0;
    std::string key;
    std::string title;
    bool passed = false;
    long checks = 0;
    std::string detail;  // first failure, empty on success
};

// Keys of the ten acceptance criteria, in order.
const std::vector<std::string>& criterion_keys();
// Criterion ids selected by a suite name: a criterion key, a module name, or "all".
std::vector<int> suite_criteria(const std::string& suite);
CriterionResult run_criterion(int id, std::uint64_t seed);

// Semistandard fillings of eta by `first` (rows weak, columns strict) then
// `second` (rows strict, columns weak), summed as monomials.
Poly supertableau_polynomial(const Partition& eta, const Alphabet& first, const Alphabet& second);

}  // namespace superchar
