#include "superchar/laurent.hpp"

namespace superchar {

LaurentPoly LaurentPoly::monomial(int e, const BigInt& c) {
    LaurentPoly p;
    p.add(e, c);
    return p;
}

void LaurentPoly::add(int e, const BigInt& c) {
    if (c == 0) return;
    BigInt& v = terms_[e];
    v += c;
    if (v == 0) terms_.erase(e);
}

BigInt LaurentPoly::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add(e1 + e2, c1 * c2);
    return r;
}

BigInt LaurentPoly::at_one() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add(-e, c);
    return r;
}

LaurentPoly LaurentPoly::at_neg_inverse() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add(-e, (e % 2 == 0) ? c : BigInt(-c));
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (a != 1 || e == 0) out += a.str();
        if (e != 0) out += (a != 1 ? "*" : std::string()) + "q^" + std::to_string(e);
    }
    return out;
}

}  // namespace superchar
