#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superchar/bigint.hpp"
#include "superchar/partition.hpp"

namespace superchar {

struct Alphabet {
    enum class Kind { even, odd, laurent };
    std::string name;
    std::vector<int> labels;  // doubled indices
    Kind kind = Kind::even;

    static Alphabet range(std::string name, int first, int count, int step, Kind kind);
    std::size_t size() const { return labels.size(); }
};

// Monomial form: exponent vectors over an ordered variable list.
struct Poly {
    std::vector<int> vars;
    std::map<std::vector<int>, BigInt> terms;

    Poly() = default;
    explicit Poly(std::vector<int> v) : vars(std::move(v)) {}
    static Poly one(std::vector<int> vars);

    void add_term(const std::vector<int>& e, const BigInt& c);
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator*(const Poly& o) const;  // same variable list
    Poly scaled(const BigInt& c) const;
    bool operator==(const Poly& o) const { return vars == o.vars && terms == o.terms; }
    bool is_zero() const { return terms.empty(); }
    // Restrict to a sub-list of variables, dropping terms that use the others.
    Poly specialize_to(const std::vector<int>& keep) const;
    std::string str() const;
};

// Product of polynomials in disjoint alphabets; variables are concatenated.
Poly tensor(const Poly& a, const Poly& b);

using SchurVec = std::map<Partition, BigInt>;
using SchurPair = std::map<std::pair<Partition, Partition>, BigInt>;

void add_to(SchurVec& acc, const SchurVec& x, const BigInt& scale = 1);
void add_to(SchurPair& acc, const SchurPair& x, const BigInt& scale = 1);
SchurVec truncate_length(const SchurVec& f, std::size_t maxlen);

Poly schur(const Partition& p, const Alphabet& a);
Poly schur_laurent(const std::vector<int>& w, const Alphabet& a);
Poly skew_schur(const Partition& eta, const Partition& mu, const Alphabet& a);
// sum over mu in eta of s_mu(first) * s_{(eta/mu)'}(second)
Poly hook_schur(const Partition& eta, const Alphabet& first, const Alphabet& second);
SchurPair hook_schur_pair(const Partition& eta);

BigInt kostka(const Partition& shape, const std::vector<int>& content);
BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);
SchurVec skew_expand(const Partition& eta, const Partition& mu);
SchurVec schur_product(const Partition& a, const Partition& b);

SchurVec h_n(int n);
SchurVec e_n(int n);
SchurVec pieri_h(const SchurVec& f, int n, std::size_t maxlen);
SchurVec pieri_e(const SchurVec& f, int n, std::size_t maxlen);
SchurVec multiply(const SchurVec& a, const SchurVec& b);
SchurPair multiply(const SchurPair& a, const SchurPair& b);

SchurVec omega(const SchurVec& f);
// s_lambda -> sum_mu s_mu(first slot) * s_{(lambda/mu)'}(second slot)
SchurPair omega_tilde(const SchurVec& f);

Poly expand(const SchurVec& f, const Alphabet& a);
Poly expand(const SchurPair& f, const Alphabet& first, const Alphabet& second);
SchurVec to_schur_basis(const Poly& p);

}  // namespace superchar
