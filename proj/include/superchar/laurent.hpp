#pragma once

#include <map>
#include <string>

#include "superchar/bigint.hpp"

namespace superchar {

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const BigInt& c) { add(0, c); }
    static LaurentPoly monomial(int e, const BigInt& c = 1);

    void add(int e, const BigInt& c);
    const std::map<int, BigInt>& terms() const { return terms_; }
    BigInt coeff(int e) const;
    bool is_zero() const { return terms_.empty(); }
    int min_degree() const;
    int max_degree() const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    bool operator==(const LaurentPoly&) const = default;

    BigInt at_one() const;
    // q -> q^{-1}
    LaurentPoly bar() const;
    // t -> -q^{-1}: a term c*t^k becomes c*(-1)^k*q^{-k}
    LaurentPoly at_neg_inverse() const;

    std::string str() const;

private:
    std::map<int, BigInt> terms_;
};

}  // namespace superchar
