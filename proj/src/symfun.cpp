#include "superchar/symfun.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace superchar {

Alphabet Alphabet::range(std::string name, int first, int count, int step, Kind kind) {
    Alphabet a;
    a.name = std::move(name);
    a.kind = kind;
    for (int i = 0; i < count; ++i) a.labels.push_back(first + i * step);
    return a;
}

Poly Poly::one(std::vector<int> vars) {
    Poly p(std::move(vars));
    p.add_term(std::vector<int>(p.vars.size(), 0), 1);
    return p;
}

void Poly::add_term(const std::vector<int>& e, const BigInt& c) {
    if (c == 0) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
    if (vars != o.vars) throw std::invalid_argument("adding polynomials over different alphabets");
    for (const auto& [e, c] : o.terms) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (vars != o.vars) throw std::invalid_argument("subtracting polynomials over different alphabets");
    for (const auto& [e, c] : o.terms) add_term(e, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    if (vars != o.vars) throw std::invalid_argument("multiplying polynomials over different alphabets");
    Poly r(vars);
    for (const auto& [e1, c1] : terms)
        for (const auto& [e2, c2] : o.terms) {
            std::vector<int> e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

Poly Poly::scaled(const BigInt& c) const {
    Poly r(vars);
    for (const auto& [e, x] : terms) r.add_term(e, x * c);
    return r;
}

Poly Poly::specialize_to(const std::vector<int>& keep) const {
    std::vector<int> idx;
    for (int v : keep) {
        auto it = std::find(vars.begin(), vars.end(), v);
        if (it == vars.end()) throw std::invalid_argument("unknown variable in specialization");
        idx.push_back(static_cast<int>(it - vars.begin()));
    }
    Poly r(keep);
    for (const auto& [e, c] : terms) {
        int kept = 0, total = 0;
        std::vector<int> ne;
        for (int i : idx) ne.push_back(e[i]);
        for (int x : ne) kept += x != 0;
        for (int x : e) total += x != 0;
        if (kept == total) r.add_term(ne, c);
    }
    return r;
}

std::string Poly::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms) {
        if (!out.empty()) out += " + ";
        out += c.str();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) out += "*x" + std::to_string(vars[i]) + "^" + std::to_string(e[i]);
    }
    return out;
}

Poly tensor(const Poly& a, const Poly& b) {
    std::vector<int> vars = a.vars;
    vars.insert(vars.end(), b.vars.begin(), b.vars.end());
    Poly r(vars);
    for (const auto& [e1, c1] : a.terms)
        for (const auto& [e2, c2] : b.terms) {
            std::vector<int> e = e1;
            e.insert(e.end(), e2.begin(), e2.end());
            r.add_term(e, c1 * c2);
        }
    return r;
}

void add_to(SchurVec& acc, const SchurVec& x, const BigInt& scale) {
    for (const auto& [k, c] : x) {
        BigInt& v = acc[k];
        v += c * scale;
        if (v == 0) acc.erase(k);
    }
}

void add_to(SchurPair& acc, const SchurPair& x, const BigInt& scale) {
    for (const auto& [k, c] : x) {
        BigInt& v = acc[k];
        v += c * scale;
        if (v == 0) acc.erase(k);
    }
}

SchurVec truncate_length(const SchurVec& f, std::size_t maxlen) {
    SchurVec out;
    for (const auto& [k, c] : f)
        if (k.length() <= maxlen) out.emplace(k, c);
    return out;
}

namespace {

// Cells of eta/mu in row-major order, 1-based (row, col).
std::vector<std::pair<int, int>> skew_cells(const Partition& eta, const Partition& mu) {
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 1; r <= eta.length(); ++r)
        for (int c = mu(r) + 1; c <= eta(r); ++c) cells.emplace_back(static_cast<int>(r), c);
    return cells;
}

Poly ssyt_poly(const Partition& eta, const Partition& mu, const Alphabet& a) {
    if (!contains(eta, mu)) throw std::invalid_argument("skew shape requires mu inside eta");
    const int n = static_cast<int>(a.size());
    Poly out(a.labels);
    auto cells = skew_cells(eta, mu);
    std::map<std::pair<int, int>, int> val;
    std::vector<int> expo(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cells.size()) {
            out.add_term(expo, 1);
            return;
        }
        auto [r, c] = cells[i];
        int lo = 0;
        auto left = val.find({r, c - 1});
        if (left != val.end()) lo = std::max(lo, left->second);
        auto up = val.find({r - 1, c});
        if (up != val.end()) lo = std::max(lo, up->second + 1);
        for (int v = lo; v < n; ++v) {
            val[{r, c}] = v;
            ++expo[v];
            rec(i + 1);
            --expo[v];
        }
        val.erase({r, c});
    };
    rec(0);
    return out;
}

}  // namespace

Poly schur(const Partition& p, const Alphabet& a) { return ssyt_poly(p, Partition{}, a); }

Poly skew_schur(const Partition& eta, const Partition& mu, const Alphabet& a) { return ssyt_poly(eta, mu, a); }

Poly schur_laurent(const std::vector<int>& w, const Alphabet& a) {
    if (w.size() != a.size()) throw std::invalid_argument("weight length must equal alphabet size");
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) throw std::invalid_argument("laurent weight not weakly decreasing");
    if (w.empty()) return Poly::one({});
    int k = w.back();
    std::vector<int> shifted;
    for (int x : w) shifted.push_back(x - k);
    Poly base = schur(Partition(shifted), a);
    Poly out(a.labels);
    for (const auto& [e, c] : base.terms) {
        auto ne = e;
        for (int& x : ne) x += k;
        out.add_term(ne, c);
    }
    return out;
}

Poly hook_schur(const Partition& eta, const Alphabet& first, const Alphabet& second) {
    std::vector<int> vars = first.labels;
    vars.insert(vars.end(), second.labels.begin(), second.labels.end());
    Poly out(vars);
    Partition et = transpose(eta);
    for (const auto& mu : subpartitions(eta)) out += tensor(schur(mu, first), skew_schur(et, transpose(mu), second));
    return out;
}

BigInt kostka(const Partition& shape, const std::vector<int>& content) {
    Alphabet a = Alphabet::range("k", 1, static_cast<int>(content.size()), 1, Alphabet::Kind::even);
    Poly s = schur(shape, a);
    auto it = s.terms.find(content);
    return it == s.terms.end() ? BigInt(0) : it->second;
}

SchurVec skew_expand(const Partition& eta, const Partition& mu) {
    if (!contains(eta, mu)) throw std::invalid_argument("skew shape requires mu inside eta");
    // Littlewood-Richardson fillings, read right to left and top to bottom.
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 1; r <= eta.length(); ++r)
        for (int c = eta(r); c >= mu(r) + 1; --c) cells.emplace_back(static_cast<int>(r), c);
    SchurVec out;
    std::map<std::pair<int, int>, int> val;
    std::vector<int> count(cells.size() + 2, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int maxused) {
        if (i == cells.size()) {
            std::vector<int> nu;
            for (int v = 1; v <= maxused; ++v) nu.push_back(count[v]);
            out[Partition(nu)] += 1;
            return;
        }
        auto [r, c] = cells[i];
        int hi = maxused + 1;
        auto right = val.find({r, c + 1});
        if (right != val.end()) hi = std::min(hi, right->second);
        int lo = 1;
        auto up = val.find({r - 1, c});
        if (up != val.end()) lo = up->second + 1;
        for (int v = lo; v <= hi; ++v) {
            if (v >= 2 && count[v] + 1 > count[v - 1]) continue;
            val[{r, c}] = v;
            ++count[v];
            rec(i + 1, std::max(maxused, v));
            --count[v];
        }
        val.erase({r, c});
    };
    rec(0, 0);
    return out;
}

BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (!contains(lambda, mu) || lambda.size() != mu.size() + nu.size()) return 0;
    auto s = skew_expand(lambda, mu);
    auto it = s.find(nu);
    return it == s.end() ? BigInt(0) : it->second;
}

SchurVec h_n(int n) { return n < 0 ? SchurVec{} : SchurVec{{n == 0 ? Partition{} : Partition{n}, 1}}; }

SchurVec e_n(int n) {
    if (n < 0) return {};
    return SchurVec{{Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), 1}};
}

SchurVec pieri_h(const SchurVec& f, int n, std::size_t maxlen) {
    SchurVec out;
    for (const auto& [mu, c] : f) {
        std::size_t rows = std::min(mu.length() + 1, maxlen);
        std::vector<int> lam(rows, 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
            if (i == rows) {
                if (rest == 0) {
                    BigInt& v = out[Partition(lam)];
                    v += c;
                }
                return;
            }
            int lo = mu(i + 1);
            int hi = i == 0 ? lo + rest : std::min(mu(i), lo + rest);
            for (int x = lo; x <= hi; ++x) {
                lam[i] = x;
                rec(i + 1, rest - (x - lo));
            }
        };
        if (mu.length() > maxlen) continue;
        rec(0, n);
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

SchurVec pieri_e(const SchurVec& f, int n, std::size_t maxlen) {
    SchurVec out;
    for (const auto& [mu, c] : f) {
        if (mu.length() > maxlen) continue;
        std::size_t rows = std::min(mu.length() + static_cast<std::size_t>(n), maxlen);
        std::vector<int> lam(rows, 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
            if (i == rows) {
                if (rest == 0) out[Partition(lam)] += c;
                return;
            }
            for (int d = 0; d <= 1 && d <= rest; ++d) {
                int x = mu(i + 1) + d;
                if (i > 0 && x > lam[i - 1]) continue;
                lam[i] = x;
                rec(i + 1, rest - d);
            }
        };
        rec(0, n);
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

SchurVec schur_product(const Partition& a, const Partition& b) {
    SchurVec out;
    for (const auto& lam : partitions_of(a.size() + b.size())) {
        if (!contains(lam, a)) continue;
        BigInt c = lr_coefficient(lam, a, b);
        if (c != 0) out[lam] = c;
    }
    return out;
}

SchurVec multiply(const SchurVec& a, const SchurVec& b) {
    SchurVec out;
    for (const auto& [p, c] : a)
        for (const auto& [q, d] : b) add_to(out, schur_product(p, q), c * d);
    return out;
}

SchurPair multiply(const SchurPair& a, const SchurPair& b) {
    SchurPair out;
    for (const auto& [p, c] : a)
        for (const auto& [q, d] : b) {
            auto left = schur_product(p.first, q.first);
            auto right = schur_product(p.second, q.second);
            for (const auto& [l, x] : left)
                for (const auto& [r, y] : right) {
                    BigInt& v = out[{l, r}];
                    v += c * d * x * y;
                    if (v == 0) out.erase({l, r});
                }
        }
    return out;
}

SchurVec omega(const SchurVec& f) {
    SchurVec out;
    for (const auto& [p, c] : f) out[transpose(p)] += c;
    return out;
}

SchurPair omega_tilde(const SchurVec& f) {
    SchurPair out;
    for (const auto& [lam, c] : f)
        for (const auto& mu : subpartitions(lam))
            for (const auto& [nu, k] : skew_expand(lam, mu)) {
                BigInt& v = out[{mu, transpose(nu)}];
                v += c * k;
                if (v == 0) out.erase({mu, transpose(nu)});
            }
    return out;
}

SchurPair hook_schur_pair(const Partition& eta) { return omega_tilde(SchurVec{{eta, 1}}); }

Poly expand(const SchurVec& f, const Alphabet& a) {
    Poly out(a.labels);
    for (const auto& [p, c] : f) out += schur(p, a).scaled(c);
    return out;
}

Poly expand(const SchurPair& f, const Alphabet& first, const Alphabet& second) {
    std::vector<int> vars = first.labels;
    vars.insert(vars.end(), second.labels.begin(), second.labels.end());
    Poly out(vars);
    for (const auto& [k, c] : f) out += tensor(schur(k.first, first), schur(k.second, second)).scaled(c);
    return out;
}

SchurVec to_schur_basis(const Poly& p) {
    Alphabet a;
    a.labels = p.vars;
    Poly rest = p;
    SchurVec out;
    while (!rest.is_zero()) {
        auto top = std::prev(rest.terms.end());
        const auto& e = top->first;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0) throw std::invalid_argument("negative exponent in symmetric polynomial");
            if (i + 1 < e.size() && e[i] < e[i + 1]) throw std::invalid_argument("polynomial is not symmetric");
        }
        Partition lam(e);
        BigInt c = top->second;
        out[lam] += c;
        rest -= schur(lam, a).scaled(c);
    }
    return out;
}

}  // namespace superchar
