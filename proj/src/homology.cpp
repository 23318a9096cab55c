#include "superchar/homology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "superchar/klcore.hpp"

namespace superchar {

WeightVec NilSpec::weight(int i) const {
    WeightVec w(static_cast<std::size_t>(g.n()), 0);
    w[static_cast<std::size_t>(gens[i].first)] += 1;
    w[static_cast<std::size_t>(gens[i].second)] -= 1;
    return w;
}

int NilSpec::index_of(int a, int b) const {
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i] == std::pair{a, b}) return static_cast<int>(i);
    return -1;
}

NilSpec nilradical_minus(const GlSuper& g, const std::vector<int>& blocks) {
    std::vector<int> block_of;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int k = 0; k < blocks[b]; ++k) block_of.push_back(static_cast<int>(b));
    if (static_cast<int>(block_of.size()) != g.n()) throw std::invalid_argument("blocks do not cover the indices");
    NilSpec u{g, {}};
    for (int a = 0; a < g.n(); ++a)
        for (int b = 0; b < a; ++b)
            if (block_of[static_cast<std::size_t>(a)] != block_of[static_cast<std::size_t>(b)]) u.gens.push_back({a, b});
    return u;
}

ModuleSpec trivial_module(int n) {
    ModuleSpec v;
    v.top = WeightVec(static_cast<std::size_t>(n), 0);
    v.dim = [](const WeightVec& w) { return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; }) ? 1 : 0; };
    v.act = [](int a, int b, const WeightVec&, int) {
        return a == b ? std::vector<Rational>{Rational(0)} : std::vector<Rational>{};
    };
    return v;
}

ModuleSpec module_of(std::shared_ptr<IrreducibleModule> l) {
    ModuleSpec v;
    v.top = l->highest();
    v.dim = [l](const WeightVec& w) { return l->dim(w); };
    v.act = [l](int a, int b, const WeightVec& w, int k) { return l->act(a, b, w, k); };
    return v;
}

ModuleSpec module_of(std::shared_ptr<VermaModule> m) {
    ModuleSpec v;
    v.top = m->highest();
    v.dim = [m](const WeightVec& w) { return static_cast<int>(m->basis(w).size()); };
    v.act = [m](int a, int b, const WeightVec& w, int k) {
        WeightVec t = w;
        t[static_cast<std::size_t>(a)] += 1;
        t[static_cast<std::size_t>(b)] -= 1;
        auto tb = m->basis(t);
        auto x = m->act(a, b, m->basis(w)[static_cast<std::size_t>(k)]);
        std::vector<Rational> out(tb.size(), Rational(0));
        for (const auto& [mono, c] : x) {
            auto it = std::find(tb.begin(), tb.end(), mono);
            if (it == tb.end()) throw std::logic_error("action left the weight space");
            out[static_cast<std::size_t>(it - tb.begin())] = Rational(c);
        }
        return out;
    };
    return v;
}

ChainComplex::ChainComplex(NilSpec u, ModuleSpec v) : u_(std::move(u)), v_(std::move(v)) {}

int ChainComplex::normalize(std::vector<int>& w) const {
    int sign = 1;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j + 1 < w.size() - i; ++j)
            if (w[j] > w[j + 1]) {
                // yz = -(-1)^{|y||z|} zy
                if (!(u_.parity(w[j]) && u_.parity(w[j + 1]))) sign = -sign;
                std::swap(w[j], w[j + 1]);
            }
    for (std::size_t j = 0; j + 1 < w.size(); ++j)
        if (w[j] == w[j + 1] && !u_.parity(w[j])) return 0;
    return sign;
}

WeightVec ChainComplex::word_weight(const ExtWord& w) const {
    WeightVec s(static_cast<std::size_t>(u_.g.n()), 0);
    for (int i : w) {
        s[static_cast<std::size_t>(u_.gens[i].first)] += 1;
        s[static_cast<std::size_t>(u_.gens[i].second)] -= 1;
    }
    return s;
}

std::vector<ChainTerm> ChainComplex::basis(int k, const WeightVec& omega) {
    auto key = std::make_pair(k, omega);
    if (auto it = bases_.find(key); it != bases_.end()) return it->second;
    std::vector<ChainTerm> out;
    WeightVec diff(omega.size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = v_.top[i] - omega[i];
    const int budget = height(diff);
    if (budget >= 0 && k >= 0) {
        const int G = static_cast<int>(u_.gens.size());
        std::vector<int> h(static_cast<std::size_t>(G));
        for (int i = 0; i < G; ++i) h[static_cast<std::size_t>(i)] = u_.gens[i].first - u_.gens[i].second;
        ExtWord cur;
        std::function<void(int, int)> rec = [&](int from, int left) {
            if (static_cast<int>(cur.size()) == k) {
                WeightVec nu = omega;
                WeightVec ww = word_weight(cur);
                for (std::size_t i = 0; i < nu.size(); ++i) nu[i] -= ww[i];
                int d = v_.dim(nu);
                for (int j = 0; j < d; ++j) out.push_back(ChainTerm{cur, j});
                if (out.size() > cap_) throw std::length_error("chain block exceeds the configured cap");
                return;
            }
            for (int g = from; g < G; ++g) {
                if (h[static_cast<std::size_t>(g)] > left) continue;
                if (!cur.empty() && cur.back() == g && !u_.parity(g)) continue;
                cur.push_back(g);
                rec(g, left - h[static_cast<std::size_t>(g)]);
                cur.pop_back();
            }
        };
        rec(0, budget);
    }
    bases_[key] = out;
    return out;
}

ChainElement ChainComplex::boundary(const std::vector<int>& word, int vec, const WeightVec& omega) {
    ChainElement out;
    auto add = [&](std::vector<int> w, int v, const Rational& c) {
        if (c == 0) return;
        int s = normalize(w);
        if (s == 0) return;
        Rational& x = out[ChainTerm{w, v}];
        x += s * c;
        if (x == 0) out.erase(ChainTerm{w, v});
    };
    const int n = static_cast<int>(word.size());
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = u_.parity(word[static_cast<std::size_t>(i)]);
    auto before = [&](int s) {  // sum of parities strictly before position s (1-based)
        int t = 0;
        for (int i = 1; i < s; ++i) t += p[static_cast<std::size_t>(i - 1)];
        return t;
    };
    auto after = [&](int s) {
        int t = 0;
        for (int i = s + 1; i <= n; ++i) t += p[static_cast<std::size_t>(i - 1)];
        return t;
    };
    for (int s = 1; s <= n; ++s)
        for (int t = s + 1; t <= n; ++t) {
            int ps = p[static_cast<std::size_t>(s - 1)], pt = p[static_cast<std::size_t>(t - 1)];
            int e = s + t + ps * before(s) + pt * before(t) + ps * pt;
            auto [a, b] = u_.gens[word[static_cast<std::size_t>(s - 1)]];
            auto [c, d] = u_.gens[word[static_cast<std::size_t>(t - 1)]];
            for (auto [coef, pq] : bracket(u_.g, a, b, c, d)) {
                int idx = u_.index_of(pq.first, pq.second);
                if (idx < 0) throw std::logic_error("bracket left the nilpotent subalgebra");
                std::vector<int> w{idx};
                for (int i = 1; i <= n; ++i)
                    if (i != s && i != t) w.push_back(word[static_cast<std::size_t>(i - 1)]);
                add(w, vec, Rational(e % 2 ? -coef : coef));
            }
        }
    WeightVec nu = omega;
    WeightVec ww = word_weight(word);
    for (std::size_t i = 0; i < nu.size(); ++i) nu[i] -= ww[i];
    for (int s = 1; s <= n; ++s) {
        int e = s + p[static_cast<std::size_t>(s - 1)] * after(s);
        auto [a, b] = u_.gens[word[static_cast<std::size_t>(s - 1)]];
        auto img = v_.act(a, b, nu, vec);
        std::vector<int> w;
        for (int i = 1; i <= n; ++i)
            if (i != s) w.push_back(word[static_cast<std::size_t>(i - 1)]);
        for (std::size_t j = 0; j < img.size(); ++j) add(w, static_cast<int>(j), e % 2 ? Rational(-img[j]) : img[j]);
    }
    return out;
}

RatMatrix ChainComplex::boundary_matrix(int k, const WeightVec& omega) {
    auto cols = basis(k, omega);
    auto rows = basis(k - 1, omega);
    std::map<ChainTerm, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
    RatMatrix m(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [t, c] : boundary(cols[j].word, cols[j].vec, omega)) {
            auto it = row_index.find(t);
            if (it == row_index.end()) throw std::logic_error("boundary term outside the chain basis");
            m[it->second][j] = c;
        }
    return m;
}

int ChainComplex::rank_of(int k, const WeightVec& omega) {
    if (k <= 0) return 0;
    auto key = std::make_pair(k, omega);
    if (auto it = ranks_.find(key); it != ranks_.end()) return it->second;
    auto m = boundary_matrix(k, omega);
    int r = (m.empty() || m[0].empty()) ? 0 : rank(m);
    ranks_[key] = r;
    return r;
}

int ChainComplex::homology_dim(int k, const WeightVec& omega) {
    return static_cast<int>(basis(k, omega).size()) - rank_of(k, omega) - rank_of(k + 1, omega);
}

int ChainComplex::top_degree(const WeightVec& omega) {
    WeightVec diff(omega.size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = v_.top[i] - omega[i];
    int top = -1;
    for (int k = 0; k <= std::max(0, height(diff)); ++k)
        if (!basis(k, omega).empty()) top = k;
    return top;
}

bool ChainComplex::euler_poincare(const WeightVec& omega) {
    int chains = 0, homology = 0;
    for (int k = 0; k <= top_degree(omega); ++k) {
        int sign = k % 2 ? -1 : 1;
        chains += sign * static_cast<int>(basis(k, omega).size());
        homology += sign * homology_dim(k, omega);
    }
    return chains == homology;
}

std::vector<HomologyEntry> homology_groups(ChainComplex& cx, const std::vector<int>& blocks,
                                           const std::vector<WeightVec>& window, int max_degree) {
    std::vector<HomologyEntry> out;
    for (int k = 0; k <= max_degree; ++k)
        for (const auto& w : window) {
            if (!levi_dominant(w, blocks)) continue;
            BigInt m = levi_multiplicity([&](const WeightVec& x) { return BigInt(cx.homology_dim(k, x)); }, w, blocks);
            if (m != 0) out.push_back(HomologyEntry{k, w, m});
        }
    return out;
}

bool levi_dominant(const WeightVec& w, const std::vector<int>& blocks) {
    int start = 0;
    for (int b : blocks) {
        for (int k = start; k + 1 < start + b; ++k)
            if (w[static_cast<std::size_t>(k)] < w[static_cast<std::size_t>(k + 1)]) return false;
        start += b;
    }
    return true;
}

BigInt levi_multiplicity(const std::function<BigInt(const WeightVec&)>& dims, const WeightVec& mu,
                         const std::vector<int>& blocks) {
    const int n = static_cast<int>(mu.size());
    std::vector<int> rho(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) rho[static_cast<std::size_t>(k)] = n - k;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    BigInt total = 0;
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t b, int start, int sign) {
        if (b == blocks.size()) {
            WeightVec w = mu;
            for (int k = 0; k < n; ++k)
                w[static_cast<std::size_t>(k)] += rho[static_cast<std::size_t>(k)] -
                                                  rho[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
            total += sign * dims(w);
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
    return total;
}

std::map<std::pair<int, WeightVec>, int> kostant_prediction(const WeightVec& la, const std::vector<int>& blocks) {
    const int n = static_cast<int>(la.size());
    std::vector<int> a(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) a[static_cast<std::size_t>(k)] = la[static_cast<std::size_t>(k)] + n - k;
    std::vector<int> b = a;
    std::sort(b.begin(), b.end());
    std::map<std::pair<int, WeightVec>, int> out;
    do {
        WeightVec w(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(k)] - (n - k);
        if (!levi_dominant(w, blocks)) continue;
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (b[static_cast<std::size_t>(i)] < b[static_cast<std::size_t>(j)]) ++inv;
        out[{inv, w}] = 1;
    } while (std::next_permutation(b.begin(), b.end()));
    return out;
}

VoganResult vogan_check(const DominantWeight& la, const DominantWeight& mu, int n, int N) {
    VoganResult r;
    r.from_kl = kl_ell(mu, la, N).at_neg_inverse().coeff(n);
    const int rank = la.m + N;
    auto blocks = levi_blocks(la.m, la.Y, N);
    GlSuper g = GlSuper::even(rank);
    auto l = std::make_shared<IrreducibleModule>(g, classical_coords(la, N));
    ChainComplex cx(nilradical_minus(g, blocks), module_of(l));
    r.from_homology = levi_multiplicity([&](const WeightVec& w) { return BigInt(cx.homology_dim(n, w)); },
                                        classical_coords(mu, N), blocks);
    return r;
}

int InterpolatingPrefix::position_of(int r2) const {
    auto it = std::find(labels.begin(), labels.end(), r2);
    return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

InterpolatingPrefix interpolating_prefix(const DominantWeight& la, int k_pos) {
    InterpolatingPrefix p;
    for (int i = -la.m; i <= -1; ++i) {
        p.labels.push_back(2 * i);
        p.g.parity.push_back(0);
    }
    for (int j = 1; j <= k_pos; ++j) {
        p.labels.push_back(2 * j - 1);
        p.g.parity.push_back(1);
        p.labels.push_back(2 * j);
        p.g.parity.push_back(0);
    }
    p.top.assign(p.labels.size(), 0);
    const Weight theta_weight = to_theta(la);
    for (auto [k, v] : theta_weight.coords()) {
        int at = p.position_of(k);
        if (at < 0) throw std::invalid_argument("prefix too short for the weight");
        p.top[static_cast<std::size_t>(at)] = v;
    }
    p.blocks = levi_blocks(la.m, la.Y, 0);
    p.blocks.push_back(2 * k_pos);
    return p;
}

BoundaryMatch super_boundary_matching(const DominantWeight& la, int depth, int k_pos, int max_degree) {
    BoundaryMatch res;
    auto pre = interpolating_prefix(la, k_pos);
    auto lt = std::make_shared<IrreducibleModule>(pre.g, pre.top);
    ChainComplex super_cx(nilradical_minus(pre.g, pre.blocks), module_of(lt));

    GlSuper g = GlSuper::even(la.m + k_pos);
    auto lam = classical_coords(la, k_pos);
    auto l = std::make_shared<IrreducibleModule>(g, lam);
    ChainComplex cx(nilradical_minus(g, levi_blocks(la.m, la.Y, k_pos)), module_of(l));
    auto positions = classical_positions(la.m, k_pos);
    for (const auto& w : window_weights(lam, depth)) {
        WeightVec wt(pre.labels.size(), 0);
        for (std::size_t i = 0; i < w.size(); ++i) wt[static_cast<std::size_t>(pre.position_of(positions[i]))] = w[i];
        for (int k = 0; k <= max_degree; ++k) {
            int a = super_cx.homology_dim(k, wt), b = cx.homology_dim(k, w);
            ++res.weights_compared;
            if (a != b) {
                res.ok = false;
                std::string s = "degree " + std::to_string(k) + " weight (";
                for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
                res.mismatches.push_back(s + "): " + std::to_string(a) + " vs " + std::to_string(b));
            }
        }
    }
    return res;
}

}  // namespace superchar
