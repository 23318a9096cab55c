#include "superchar/liealg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace superchar {

std::vector<std::pair<int, std::pair<int, int>>> bracket(const GlSuper& g, int a, int b, int c, int d) {
    std::vector<std::pair<int, std::pair<int, int>>> out;
    if (b == c) out.push_back({1, {a, d}});
    if (d == a) {
        int sign = (g.gen_parity(a, b) && g.gen_parity(c, d)) ? 1 : -1;
        out.push_back({sign, {c, b}});
    }
    // Merge E_aa - E_aa style cancellations.
    if (out.size() == 2 && out[0].second == out[1].second) {
        int s = out[0].first + out[1].first;
        out.clear();
        if (s) out.push_back({s, {a, d}});
    }
    return out;
}

int height(const WeightVec& delta) {
    int h = 0, partial = 0;
    for (std::size_t k = 0; k + 1 < delta.size(); ++k) {
        partial += delta[k];
        h += partial;
    }
    return h;
}

std::vector<Monomial> monomials_of_weight(const GlSuper& g, const std::vector<std::pair<int, int>>& gens,
                                          const WeightVec& target) {
    std::vector<Monomial> out;
    if (std::accumulate(target.begin(), target.end(), 0) != 0) return out;
    // Heights are positive for raising generators; flip lowering targets.
    bool lowering = !gens.empty() && gens[0].first > gens[0].second;
    WeightVec t = target;
    if (lowering)
        for (int& x : t) x = -x;
    int total = height(t);
    if (total < 0) return out;
    std::vector<int> hs;
    for (auto [a, b] : gens) hs.push_back(std::abs(a - b));
    Monomial cur(gens.size(), 0);
    WeightVec rem = t;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int h) {
        if (i == gens.size()) {
            if (h == 0 && std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; })) out.push_back(cur);
            return;
        }
        auto [a, b] = gens[i];
        int lo = std::min(a, b), hi = std::max(a, b);
        int cap = h / hs[i];
        if (g.gen_parity(a, b)) cap = std::min(cap, 1);
        for (int e = 0; e <= cap; ++e) {
            cur[i] = e;
            rem[lo] -= e;
            rem[hi] += e;
            rec(i + 1, h - e * hs[i]);
            rem[lo] += e;
            rem[hi] -= e;
        }
        cur[i] = 0;
    };
    rec(0, total);
    return out;
}

VermaModule::VermaModule(GlSuper g, WeightVec lambda) : g_(std::move(g)), lambda_(std::move(lambda)) {
    const int n = g_.n();
    if (static_cast<int>(lambda_.size()) != n) throw std::invalid_argument("weight length mismatch");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a > b) lower_.push_back({a, b});
            if (a < b) raise_.push_back({a, b});
        }
}

int VermaModule::low_index(int a, int b) const {
    for (std::size_t i = 0; i < lower_.size(); ++i)
        if (lower_[i] == std::pair{a, b}) return static_cast<int>(i);
    return -1;
}

std::vector<Monomial> VermaModule::basis(const WeightVec& weight) const {
    WeightVec d(weight.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = weight[i] - lambda_[i];
    return monomials_of_weight(g_, lower_, d);
}

VermaModule::Vec VermaModule::act(int a, int b, const Monomial& u) {
    auto key = std::make_pair(std::make_pair(a, b), u);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Vec out;
    auto add = [&](const Monomial& m, const BigInt& c) {
        if (c == 0) return;
        BigInt& v = out[m];
        v += c;
        if (v == 0) out.erase(m);
    };
    std::size_t f = 0;
    while (f < u.size() && u[f] == 0) ++f;
    int ix = a > b ? low_index(a, b) : -1;
    if (f == u.size()) {
        if (a > b) {
            Monomial m = u;
            m[static_cast<std::size_t>(ix)] = 1;
            add(m, 1);
        } else if (a == b) {
            add(u, lambda_[static_cast<std::size_t>(a)]);
        }
    } else if (ix >= 0 && static_cast<std::size_t>(ix) < f) {
        Monomial m = u;
        m[static_cast<std::size_t>(ix)] = 1;
        add(m, 1);
    } else if (ix >= 0 && static_cast<std::size_t>(ix) == f) {
        if (!g_.gen_parity(a, b)) {
            Monomial m = u;
            ++m[f];
            add(m, 1);
        }
    } else {
        auto [c, d] = lower_[f];
        Monomial rest = u;
        --rest[f];
        int sign = (g_.gen_parity(a, b) && g_.gen_parity(c, d)) ? -1 : 1;
        Vec inner = act(a, b, rest);
        for (const auto& [m, coef] : inner)
            for (const auto& [m2, c2] : act(c, d, m)) add(m2, sign * coef * c2);
        for (const auto& [coef, pq] : bracket(g_, a, b, c, d))
            for (const auto& [m2, c2] : act(pq.first, pq.second, rest)) add(m2, coef * c2);
    }
    memo_[key] = out;
    return out;
}

VermaModule::Vec VermaModule::act(int a, int b, const Vec& x) {
    Vec out;
    for (const auto& [m, c] : x)
        for (const auto& [m2, c2] : act(a, b, m)) {
            BigInt& v = out[m2];
            v += c * c2;
            if (v == 0) out.erase(m2);
        }
    return out;
}

BigInt VermaModule::top_coefficient(const Monomial& r, const Vec& x) {
    Vec cur = x;
    for (std::size_t i = r.size(); i-- > 0;)
        for (int e = 0; e < r[i]; ++e) {
            cur = act(raise_[i].first, raise_[i].second, cur);
            if (cur.empty()) return 0;
        }
    auto it = cur.find(Monomial(lower_.size(), 0));
    return it == cur.end() ? BigInt(0) : it->second;
}

RatMatrix VermaModule::shapovalov(const WeightVec& weight, std::vector<Monomial>* rows,
                                  std::vector<Monomial>* cols) {
    auto b = basis(weight);
    WeightVec up(weight.size());
    for (std::size_t i = 0; i < up.size(); ++i) up[i] = lambda_[i] - weight[i];
    auto r = monomials_of_weight(g_, raise_, up);
    RatMatrix s(r.size(), std::vector<Rational>(b.size()));
    for (std::size_t j = 0; j < b.size(); ++j) {
        Vec x{{b[j], BigInt(1)}};
        for (std::size_t i = 0; i < r.size(); ++i) s[i][j] = Rational(top_coefficient(r[i], x));
    }
    if (rows) *rows = r;
    if (cols) *cols = b;
    return s;
}

IrreducibleModule::IrreducibleModule(GlSuper g, WeightVec lambda) : verma_(std::move(g), std::move(lambda)) {}

const IrreducibleModule::Space& IrreducibleModule::space(const WeightVec& w) {
    if (auto it = spaces_.find(w); it != spaces_.end()) return it->second;
    std::vector<Monomial> rows, cols;
    RatMatrix s = verma_.shapovalov(w, &rows, &cols);
    Space sp;
    std::vector<int> ri, ci;
    independent_rows_cols(s, ri, ci);
    const std::size_t k = ri.size();
    RatMatrix sq(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i) {
        sp.rows.push_back(rows[static_cast<std::size_t>(ri[i])]);
        sp.lifts.push_back(cols[static_cast<std::size_t>(ci[i])]);
        for (std::size_t j = 0; j < k; ++j)
            sq[i][j] = s[static_cast<std::size_t>(ri[i])][static_cast<std::size_t>(ci[j])];
    }
    sp.inverse.assign(k, std::vector<Rational>(k));
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<Rational> e(k, Rational(0));
        e[j] = 1;
        auto col = solve(sq, e);
        for (std::size_t i = 0; i < k; ++i) sp.inverse[i][j] = col[i];
    }
    return spaces_.emplace(w, std::move(sp)).first->second;
}

int IrreducibleModule::dim(const WeightVec& w) { return static_cast<int>(space(w).rows.size()); }

std::vector<Rational> IrreducibleModule::act(int a, int b, const WeightVec& w, int k) {
    const Space& src = space(w);
    WeightVec t = w;
    t[static_cast<std::size_t>(a)] += 1;
    t[static_cast<std::size_t>(b)] -= 1;
    const Space& dst = space(t);
    VermaModule::Vec x = verma_.act(a, b, src.lifts[static_cast<std::size_t>(k)]);
    std::vector<Rational> top(dst.rows.size());
    for (std::size_t i = 0; i < dst.rows.size(); ++i) top[i] = Rational(verma_.top_coefficient(dst.rows[i], x));
    std::vector<Rational> out(dst.rows.size(), Rational(0));
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j) out[i] += dst.inverse[i][j] * top[j];
    return out;
}

std::vector<WeightVec> window_weights(const WeightVec& top, int depth) {
    const int n = static_cast<int>(top.size());
    std::vector<std::pair<int, WeightVec>> out;
    std::vector<int> c(static_cast<std::size_t>(std::max(0, n - 1)), 0);
    std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == n - 1) {
            WeightVec w = top;
            for (int i = 0; i < n - 1; ++i) {
                w[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i)];
                w[static_cast<std::size_t>(i + 1)] += c[static_cast<std::size_t>(i)];
            }
            out.push_back({depth - left, w});
            return;
        }
        for (int e = 0; e <= left; ++e) {
            c[static_cast<std::size_t>(k)] = e;
            rec(k + 1, left - e);
        }
    };
    rec(0, depth);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second > y.second;
    });
    std::vector<WeightVec> ws;
    for (auto& p : out) ws.push_back(p.second);
    return ws;
}

WeightChar verma_character(const GlSuper& g, const WeightVec& lambda, const std::vector<WeightVec>& window) {
    VermaModule v(g, lambda);
    WeightChar out;
    for (const auto& w : window) {
        auto n = v.basis(w).size();
        if (n) out[w] = static_cast<long>(n);
    }
    return out;
}

WeightChar irreducible_character(const GlSuper& g, const WeightVec& lambda,
                                 const std::vector<WeightVec>& window) {
    IrreducibleModule l(g, lambda);
    WeightChar out;
    for (const auto& w : window) {
        WeightVec d(w.size());
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = lambda[i] - w[i];
        if (height(d) < 0) continue;
        int k = l.dim(w);
        if (k) out[w] = k;
    }
    return out;
}

WeightChar parabolic_verma_character(int n, const WeightVec& lambda, const std::vector<int>& blocks,
                                     const std::vector<WeightVec>& window) {
    GlSuper g = GlSuper::even(n);
    std::vector<std::pair<int, int>> lower;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < a; ++b) lower.push_back({a, b});
    std::map<WeightVec, long> kostant;
    auto count = [&](const WeightVec& d) {
        auto it = kostant.find(d);
        if (it != kostant.end()) return it->second;
        long c = static_cast<long>(monomials_of_weight(g, lower, d).size());
        kostant[d] = c;
        return c;
    };
    WeightVec shifted(lambda.size());
    for (int k = 0; k < n; ++k) shifted[static_cast<std::size_t>(k)] = lambda[static_cast<std::size_t>(k)] + n - k;
    // Enumerate permutations within each block with their signs.
    WeightChar out;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t b, int start, int sign) {
        if (b == blocks.size()) {
            WeightVec nu(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k)
                nu[static_cast<std::size_t>(k)] = shifted[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] - (n - k);
            for (const auto& w : window) {
                WeightVec d(w.size());
                for (std::size_t i = 0; i < d.size(); ++i) d[i] = w[i] - nu[i];
                long c = count(d);
                if (c) out[w] += sign * c;
            }
            return;
        }
        auto first = perm.begin() + start, last = first + blocks[b];
        std::vector<int> orig(first, last);
        std::sort(first, last);
        do {
            int inv = 0;
            for (auto i = first; i != last; ++i)
                for (auto j = i + 1; j != last; ++j)
                    if (*i > *j) ++inv;
            rec(b + 1, start + blocks[b], inv % 2 ? -sign : sign);
        } while (std::next_permutation(first, last));
        std::copy(orig.begin(), orig.end(), first);
    };
    rec(0, 0, 1);
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

WeightVec classical_coords(const DominantWeight& d, int N) {
    WeightVec c;
    for (int i = -d.m; i <= -1; ++i) c.push_back(d.neg_at(i));
    for (int i = 1; i <= N; ++i) c.push_back(d.pos(static_cast<std::size_t>(i)));
    return c;
}

bool dominant_from_coords(const WeightVec& c, int m, const std::vector<int>& Y, int N, DominantWeight& out) {
    std::vector<int> neg(c.begin(), c.begin() + m), pos(c.begin() + m, c.begin() + m + N);
    for (std::size_t i = 0; i < pos.size(); ++i) {
        if (pos[i] < 0) return false;
        if (i && pos[i] > pos[i - 1]) return false;
    }
    try {
        out = DominantWeight(m, Y, neg, Partition(pos));
    } catch (const std::invalid_argument&) {
        return false;
    }
    return true;
}

namespace {

std::map<WeightVec, BigInt> peel(WeightChar rem, const std::vector<WeightVec>& window,
                                 const std::function<WeightChar(const WeightVec&)>& piece) {
    std::map<WeightVec, BigInt> out;
    for (const auto& w : window) {
        auto it = rem.find(w);
        if (it == rem.end() || it->second == 0) continue;
        BigInt c = it->second;
        out[w] = c;
        for (const auto& [x, v] : piece(w)) rem[x] -= c * v;
    }
    return out;
}

}  // namespace

std::map<WeightVec, BigInt> oracle_a_coefficients(const DominantWeight& la, int N, int depth) {
    const int n = la.m + N;
    auto lam = classical_coords(la, N);
    auto window = window_weights(lam, depth);
    auto blocks = levi_blocks(la.m, la.Y, N);
    return peel(irreducible_character(GlSuper::even(n), lam, window), window,
                [&](const WeightVec& w) { return parabolic_verma_character(n, w, blocks, window); });
}

std::map<WeightVec, BigInt> oracle_multiplicities(const DominantWeight& la, int N, int depth) {
    const int n = la.m + N;
    auto lam = classical_coords(la, N);
    auto window = window_weights(lam, depth);
    auto blocks = levi_blocks(la.m, la.Y, N);
    return peel(parabolic_verma_character(n, lam, blocks, window), window,
                [&](const WeightVec& w) { return irreducible_character(GlSuper::even(n), w, window); });
}

std::map<WeightVec, BigInt> oracle_multiplicities(const WeightVec& lam, const std::vector<int>& blocks, int depth) {
    const int n = static_cast<int>(lam.size());
    auto window = window_weights(lam, depth);
    return peel(parabolic_verma_character(n, lam, blocks, window), window,
                [&](const WeightVec& w) { return irreducible_character(GlSuper::even(n), w, window); });
}

}  // namespace superchar
