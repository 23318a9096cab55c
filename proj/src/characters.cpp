#include "superchar/characters.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "superchar/klcore.hpp"

namespace superchar {

namespace {

// Coefficient sum over alpha_{-m}..alpha_{-2} of ref - exps on the negative block.
int internal_depth(const std::vector<int>& ref, const std::vector<int>& exps) {
    int s = 0, partial = 0;
    for (std::size_t k = 0; k + 1 < ref.size(); ++k) {
        partial += ref[k] - exps[k];
        s += partial;
    }
    return s;
}

int units_left(const std::vector<int>& ref, const std::vector<int>& exps) {
    int s = 0;
    for (std::size_t k = 0; k < ref.size(); ++k) s += ref[k] - exps[k];
    return s;
}

SchurPair pair_pieri(const SchurPair& f, int n, Algebra alg, const Window& win) {
    SchurPair out;
    for (const auto& [key, c] : f) {
        const auto& [half, ints] = key;
        auto term = [&](int a, int b) {
            SchurVec he = a ? pieri_e(SchurVec{{half, 1}}, a, static_cast<std::size_t>(win.n_odd))
                            : SchurVec{{half, 1}};
            SchurVec hi = b ? pieri_h(SchurVec{{ints, 1}}, b, static_cast<std::size_t>(win.n_even))
                            : SchurVec{{ints, 1}};
            for (const auto& [p, c1] : he)
                for (const auto& [q, c2] : hi) {
                    BigInt& v = out[{p, q}];
                    v += c * c1 * c2;
                }
        };
        switch (alg) {
            case Algebra::g: term(0, n); break;
            case Algebra::gbar: term(n, 0); break;
            case Algebra::gtilde:
                for (int a = 0; a <= n; ++a) term(a, n - a);
                break;
        }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

bool fits(const Partition& p, int maxlen) { return static_cast<int>(p.length()) <= maxlen; }

// ch K(d) in the raw table of a series anchored at ref: summands whose two
// gradings relative to ref are both at most win.depth.
std::map<CharKey, BigInt> verma_table(const DominantWeight& d, const DominantWeight& ref, Algebra alg,
                                      const Window& win) {
    std::map<CharKey, BigInt> out;
    const int m = d.m;
    const int D = win.depth;
    const std::vector<int>& r = ref.neg;
    const int e0 = units_left(r, d.neg);
    if (internal_depth(r, d.neg) > D || e0 > D) return out;
    LeviCharacter levi = ch_levi(d, alg);
    // Lowering roots of the negative block outside the Levi.
    std::vector<int> block(static_cast<std::size_t>(m));
    for (int i = -m, b = 0; i <= -1; ++i) {
        if (i > -m && !d.in_Y(i - 1)) ++b;
        block[static_cast<std::size_t>(i + m)] = b;
    }
    std::map<std::vector<int>, BigInt> neg;
    for (const auto& [e, c] : levi.neg.terms)
        if (internal_depth(r, e) <= D) neg[e] += c;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (block[static_cast<std::size_t>(i)] == block[static_cast<std::size_t>(j)]) continue;
            std::map<std::vector<int>, BigInt> next;
            for (const auto& [e, c] : neg) {
                auto x = e;
                while (internal_depth(r, x) <= D) {
                    next[x] += c;
                    --x[static_cast<std::size_t>(i)];
                    ++x[static_cast<std::size_t>(j)];
                }
            }
            neg.swap(next);
        }
    SchurPair pos0;
    for (const auto& [key, c] : levi.positive)
        if ((alg == Algebra::g || fits(key.first, win.n_odd)) && (alg == Algebra::gbar || fits(key.second, win.n_even)))
            pos0[key] += c;
    std::map<std::vector<int>, SchurPair> cache;
    auto positive_for = [&](std::vector<int> ns) -> const SchurPair& {
        std::sort(ns.begin(), ns.end());
        ns.erase(std::remove(ns.begin(), ns.end(), 0), ns.end());
        auto it = cache.find(ns);
        if (it != cache.end()) return it->second;
        SchurPair p = pos0;
        for (int n : ns) p = pair_pieri(p, n, alg, win);
        return cache.emplace(ns, std::move(p)).first->second;
    };
    for (const auto& [e, c] : neg) {
        if (c == 0) continue;
        std::vector<int> ns(static_cast<std::size_t>(m), 0);
        std::vector<int> x = e;
        std::function<void(int, int)> rec = [&](int k, int used) {
            if (k == m) {
                for (const auto& [key, c2] : positive_for(ns)) {
                    BigInt& v = out[CharKey{x, key.first, key.second}];
                    v += c * c2;
                }
                return;
            }
            for (int n = 0; e0 + used + n <= D; ++n) {
                ns[static_cast<std::size_t>(k)] = n;
                x[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k)] - n;
                if (internal_depth(r, x) > D) break;
                rec(k + 1, used + n);
            }
            ns[static_cast<std::size_t>(k)] = 0;
            x[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k)];
        };
        rec(0, 0);
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

CharSeries empty_series(const DominantWeight& d, Algebra alg, const Window& win) {
    CharSeries s;
    s.algebra = alg;
    s.label = d;
    s.anchor = anchor_of(d, alg);
    s.window = win;
    return s;
}

std::vector<DominantWeight> window_members(const DominantWeight& d, const Window& win, int N) {
    std::vector<DominantWeight> out;
    auto lam = to_standard(d);
    for (const auto& mu : linkage_class(d, N).members) {
        if (mu != d && !dot_leq(mu, d, N)) continue;
        Weight delta = lam - to_standard(mu);
        if (units_moved(delta) > win.depth || neg_internal_depth(delta, d.m) > win.depth) continue;
        out.push_back(mu);
    }
    return out;
}

}  // namespace

void CharSeries::add(const CharSeries& o, const BigInt& scale) {
    for (const auto& [k, c] : o.table) {
        BigInt& v = table[k];
        v += scale * c;
        if (v == 0) table.erase(k);
    }
}

std::map<Weight, BigInt> CharSeries::terms() const {
    auto halves = Alphabet::range("half", 1, window.n_odd, 2, Alphabet::Kind::odd);
    auto ints = Alphabet::range("int", 2, window.n_even, 2, Alphabet::Kind::even);
    std::map<Partition, Poly> hcache, icache;
    auto get = [](std::map<Partition, Poly>& cache, const Partition& p, const Alphabet& a) -> const Poly& {
        auto it = cache.find(p);
        if (it == cache.end()) it = cache.emplace(p, schur(p, a)).first;
        return it->second;
    };
    const int m = label.m;
    std::map<Weight, BigInt> out;
    for (const auto& [key, c] : table) {
        Weight base;
        for (int i = 0; i < m; ++i) base.add(2 * (i - m), key.neg[static_cast<std::size_t>(i)]);
        Poly hp = algebra == Algebra::g ? Poly::one({}) : get(hcache, key.half, halves);
        Poly ip = algebra == Algebra::gbar ? Poly::one({}) : get(icache, key.ints, ints);
        for (const auto& [he, c1] : hp.terms)
            for (const auto& [ie, c2] : ip.terms) {
                Weight w = base;
                for (std::size_t k = 0; k < he.size(); ++k) w.add(hp.vars[k], he[k] + half_shift);
                for (std::size_t k = 0; k < ie.size(); ++k) w.add(ip.vars[k], ie[k]);
                if (depth(anchor, w, algebra, m) > window.depth) continue;
                BigInt& v = out[w];
                v += c * c1 * c2;
                if (v == 0) out.erase(w);
            }
    }
    return out;
}

LeviCharacter ch_levi(const DominantWeight& d, Algebra alg) {
    d.validate();
    LeviCharacter out;
    out.neg = Poly::one({});
    std::vector<int> vals, labels;
    auto flush = [&]() {
        if (vals.empty()) return;
        Alphabet a;
        a.labels = labels;
        a.kind = Alphabet::Kind::laurent;
        out.neg = tensor(out.neg, schur_laurent(vals, a));
        vals.clear();
        labels.clear();
    };
    for (int i = -d.m; i <= -1; ++i) {
        if (i > -d.m && !d.in_Y(i - 1)) flush();
        vals.push_back(d.neg_at(i));
        labels.push_back(2 * i);
    }
    flush();
    switch (alg) {
        case Algebra::g: out.positive[{Partition{}, d.pos}] = 1; break;
        case Algebra::gbar: out.positive[{transpose(d.pos), Partition{}}] = 1; break;
        case Algebra::gtilde: out.positive = hook_schur_pair(transpose(d.pos)); break;
    }
    return out;
}

CharSeries ch_parabolic_verma(const DominantWeight& d, Algebra alg, const Window& win) {
    if (win.n_even < 0 || win.n_odd < 0 || win.depth < 0) throw std::invalid_argument("window components must be nonnegative");
    CharSeries s = empty_series(d, alg, win);
    s.table = verma_table(d, d, alg, win);
    return s;
}

int default_rank(const DominantWeight& d, int depth) {
    return std::max({1, static_cast<int>(d.pos.length()), static_cast<int>(d.pos.size()) + depth});
}

CharSeries ch_irreducible(const DominantWeight& d, Algebra alg, const Window& win, int rank) {
    const int N = rank > 0 ? rank : default_rank(d, win.depth);
    CharSeries s = empty_series(d, alg, win);
    for (const auto& mu : window_members(d, win, N)) {
        BigInt a = a_coefficient(mu, d, N);
        if (a == 0) continue;
        for (const auto& [k, c] : verma_table(mu, d, alg, win)) {
            BigInt& v = s.table[k];
            v += a * c;
            if (v == 0) s.table.erase(k);
        }
    }
    return s;
}

CharSeries ch_tilting(const DominantWeight& d, Algebra alg, const Window& win, int rank) {
    const int N = rank > 0 ? rank : default_rank(d, win.depth);
    LinkageClass cls;
    cls.base = d;
    cls.N = N;
    cls.members = window_members(d, win, N);
    KLTable t = kl_canonical(cls);
    int col = cls.index_of(d);
    CharSeries s = empty_series(d, alg, win);
    for (std::size_t i = 0; i < cls.members.size(); ++i) {
        BigInt u = t.U[i][static_cast<std::size_t>(col)].at_one();
        if (u == 0) continue;
        for (const auto& [k, c] : verma_table(cls.members[i], d, alg, win)) {
            BigInt& v = s.table[k];
            v += u * c;
            if (v == 0) s.table.erase(k);
        }
    }
    return s;
}

CharSeries truncate_T(const CharSeries& c) {
    if (c.algebra != Algebra::gtilde) throw std::invalid_argument("truncate_T expects a gtilde series");
    CharSeries out = empty_series(c.label, Algebra::g, c.window);
    for (const auto& [k, v] : c.table)
        if (k.half.empty()) out.table[k] = v;
    return out;
}

CharSeries truncate_Tbar(const CharSeries& c) {
    if (c.algebra != Algebra::gtilde) throw std::invalid_argument("truncate_Tbar expects a gtilde series");
    CharSeries out = empty_series(c.label, Algebra::gbar, c.window);
    for (const auto& [k, v] : c.table)
        if (k.ints.empty()) out.table[k] = v;
    return out;
}

bool tr_n(const CharSeries& c, int n, CharSeries& out) {
    if (c.algebra != Algebra::gbar) throw std::invalid_argument("tr_n expects a gbar series");
    out = c;
    out.table.clear();
    if (c.anchor[2 * n + 1] != 0) return false;
    out.window.n_odd = std::min(c.window.n_odd, n);
    for (const auto& [k, v] : c.table)
        if (static_cast<int>(k.half.length()) <= n) out.table[k] = v;
    return true;
}

CharSeries det_twist(const CharSeries& c, int k) {
    if (c.algebra != Algebra::gbar) throw std::invalid_argument("det_twist expects a finite-rank gbar series");
    CharSeries out = c;
    out.table.clear();
    out.half_shift -= k;
    for (const auto& [key, v] : c.table) {
        CharKey t = key;
        for (int& x : t.neg) x += k;
        out.table[t] = v;
    }
    for (int i = -c.m(); i <= -1; ++i) out.anchor.add(2 * i, k);
    for (int j = 1; j <= c.window.n_odd; ++j) out.anchor.add(2 * j - 1, -k);
    return out;
}

CharSeries ch_finite_irreducible(const Weight& gamma, int m, int n, int depth) {
    std::vector<int> neg, halves;
    for (auto [k, v] : gamma.coords()) {
        bool ok = (k >= -2 * m && k <= -2 && k % 2 == 0) || (is_half(k) && k <= 2 * n - 1);
        if (!ok) throw std::invalid_argument("weight does not live on gl(m|n)");
    }
    for (int i = -m; i <= -1; ++i) neg.push_back(gamma[2 * i]);
    for (int j = 1; j <= n; ++j) halves.push_back(gamma[2 * j - 1]);
    for (std::size_t j = 0; j + 1 < halves.size(); ++j)
        if (halves[j] < halves[j + 1]) throw std::invalid_argument("half coordinates must be weakly decreasing");
    int t = halves.empty() ? 0 : std::max(0, -halves.back());
    for (int& x : neg) x -= t;
    for (int& x : halves) x += t;
    DominantWeight la(m, {}, neg, transpose(Partition(halves)));
    CharSeries full = ch_irreducible(la, Algebra::gbar, Window{0, n, depth});
    CharSeries cut;
    if (!tr_n(full, n, cut)) throw std::logic_error("truncation vanished on a gl(m|n) weight");
    cut.window.n_odd = n;
    return det_twist(cut, t);
}

BigInt weight_multiplicity(const DominantWeight& d, Algebra alg, const Weight& gamma) {
    Weight anchor = anchor_of(d, alg);
    int D = depth(anchor, gamma, alg, d.m);
    if (D < 0) throw std::invalid_argument("weight is not below the anchor");
    Window win{0, 0, D};
    for (auto [k, v] : gamma.coords()) {
        (void)v;
        if (is_pos_int(k)) win.n_even = std::max(win.n_even, k / 2);
        if (is_half(k)) win.n_odd = std::max(win.n_odd, (k + 1) / 2);
    }
    for (auto [k, v] : anchor.coords()) {
        (void)v;
        if (is_pos_int(k)) win.n_even = std::max(win.n_even, k / 2);
        if (is_half(k)) win.n_odd = std::max(win.n_odd, (k + 1) / 2);
    }
    auto t = ch_irreducible(d, alg, win).terms();
    auto it = t.find(gamma);
    return it == t.end() ? BigInt(0) : it->second;
}

CharSeries omega_bar_image(const CharSeries& c) {
    if (c.algebra != Algebra::g) throw std::invalid_argument("omega image expects a g series");
    CharSeries out = empty_series(c.label, Algebra::gbar, c.window);
    for (const auto& [k, v] : c.table) out.table[CharKey{k.neg, transpose(k.ints), Partition{}}] += v;
    return out;
}

CharSeries omega_tilde_image(const CharSeries& c) {
    if (c.algebra != Algebra::g) throw std::invalid_argument("omega image expects a g series");
    CharSeries out = empty_series(c.label, Algebra::gtilde, c.window);
    for (const auto& [k, v] : c.table)
        for (const auto& [pq, c2] : omega_tilde(SchurVec{{k.ints, 1}})) {
            BigInt& x = out.table[CharKey{k.neg, pq.second, pq.first}];
            x += v * c2;
            if (x == 0) out.table.erase(CharKey{k.neg, pq.second, pq.first});
        }
    return out;
}

}  // namespace superchar
