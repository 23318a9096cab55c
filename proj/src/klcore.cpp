#include "superchar/klcore.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace superchar {

namespace {

using Poly = ParabolicKL::Poly;

void add_shifted(Poly& acc, const Poly& p, int shift, std::int64_t c) {
    if (c == 0) return;
    if (acc.size() < p.size() + static_cast<std::size_t>(shift)) acc.resize(p.size() + shift, 0);
    for (std::size_t k = 0; k < p.size(); ++k) acc[k + shift] += c * p[k];
}

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::int64_t coeff_at(const Poly& p, int k) {
    return k >= 0 && k < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(k)] : 0;
}

}  // namespace

int inversions(const std::vector<int>& word) {
    int c = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (word[i] > word[j]) ++c;
    return c;
}

ParabolicKL::ParabolicKL(std::vector<int> block_sizes) : blocks_(std::move(block_sizes)) {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (blocks_[b] < 1) throw std::invalid_argument("block sizes must be positive");
        for (int k = 0; k < blocks_[b]; ++k) block_of_.push_back(static_cast<int>(b));
        n_ += blocks_[b];
    }
    // Choose the value set of each block in turn; values sit increasingly.
    std::vector<int> word(static_cast<std::size_t>(n_));
    std::vector<bool> used(static_cast<std::size_t>(n_), false);
    std::function<void(std::size_t, int, int, int)> fill = [&](std::size_t b, int start, int k,
                                                               int from) {
        if (b == blocks_.size()) {
            words_.push_back(word);
            return;
        }
        if (k == blocks_[b]) {
            fill(b + 1, start + blocks_[b], 0, 0);
            return;
        }
        for (int v = from; v < n_; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            word[static_cast<std::size_t>(start + k)] = v;
            fill(b, start, k + 1, v + 1);
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    fill(0, 0, 0, 0);
    std::stable_sort(words_.begin(), words_.end(), [](const auto& x, const auto& y) {
        return inversions(x) < inversions(y);
    });
    for (std::size_t i = 0; i < words_.size(); ++i) {
        index_[words_[i]] = static_cast<int>(i);
        lengths_.push_back(inversions(words_[i]));
    }
    cols_.resize(words_.size());
}

int ParabolicKL::id_of(const std::vector<int>& min_word) const {
    auto it = index_.find(min_word);
    return it == index_.end() ? -1 : it->second;
}

std::vector<int> ParabolicKL::min_rep(const std::vector<int>& w) const {
    if (static_cast<int>(w.size()) != n_) throw std::invalid_argument("word has wrong size");
    std::vector<int> out = w;
    int start = 0;
    for (int b : blocks_) {
        std::sort(out.begin() + start, out.begin() + start + b);
        start += b;
    }
    return out;
}

// kind: 0 descent (result shorter), 1 ascent inside X, 2 result leaves X.
int ParabolicKL::left(int i, int id, int& kind) const {
    const auto& w = words_[static_cast<std::size_t>(id)];
    int pi = -1, pj = -1;
    for (int k = 0; k < n_; ++k) {
        if (w[static_cast<std::size_t>(k)] == i) pi = k;
        if (w[static_cast<std::size_t>(k)] == i + 1) pj = k;
    }
    if (pj < pi) {
        kind = 0;
    } else if (block_of_[static_cast<std::size_t>(pi)] == block_of_[static_cast<std::size_t>(pj)]) {
        kind = 2;
        return -1;
    } else {
        kind = 1;
    }
    auto s = w;
    std::swap(s[static_cast<std::size_t>(pi)], s[static_cast<std::size_t>(pj)]);
    return index_.at(s);
}

const ParabolicKL::Column& ParabolicKL::column(int w) {
    std::lock_guard lock(mu_);
    auto& slot = cols_[static_cast<std::size_t>(w)];
    if (slot) return *slot;
    auto col = std::make_unique<Column>();
    const std::size_t sz = words_.size();
    col->p.assign(sz, Poly{});
    const int lw = length(w);
    if (lw == 0) {
        col->p[static_cast<std::size_t>(w)] = Poly{1};
    } else {
        int s = -1, v = -1, kind = 0;
        for (int i = 0; i + 1 < n_ && s < 0; ++i) {
            int t = left(i, w, kind);
            if (kind == 0) {
                s = i;
                v = t;
            }
        }
        if (s < 0) throw std::logic_error("no left descent on a nonidentity element");
        const Column& cv = column(v);
        std::vector<Poly> vp = cv.p;
        auto vmus = cv.mus;
        for (std::size_t r = 0; r < sz; ++r) {
            int rk = 0;
            int sr = left(s, static_cast<int>(r), rk);
            Poly q;
            if (rk == 0) {
                add_shifted(q, vp[r], 1, 1);
                add_shifted(q, vp[static_cast<std::size_t>(sr)], 0, 1);
            } else if (rk == 1) {
                add_shifted(q, vp[r], 0, 1);
                add_shifted(q, vp[static_cast<std::size_t>(sr)], 1, 1);
            } else {
                add_shifted(q, vp[r], 0, 1);
                add_shifted(q, vp[r], 1, 1);
            }
            col->p[r] = std::move(q);
        }
        for (auto [z, m] : vmus) {
            int zk = 0;
            left(s, z, zk);
            if (zk == 1) continue;
            int shift = (lw - length(z)) / 2;
            std::vector<Poly> zp = column(z).p;
            for (std::size_t r = 0; r < sz; ++r) add_shifted(col->p[r], zp[r], shift, -m);
        }
        for (auto& p : col->p) trim(p);
    }
    for (std::size_t r = 0; r < sz; ++r) {
        int d = lw - length(static_cast<int>(r));
        if (d > 0 && d % 2 == 1) {
            std::int64_t m = coeff_at(col->p[r], (d - 1) / 2);
            if (m != 0) col->mus.emplace_back(static_cast<int>(r), m);
        }
    }
    slot = std::move(col);
    return *slot;
}

Poly ParabolicKL::P(int x, int w) {
    std::lock_guard lock(mu_);
    return column(w).p[static_cast<std::size_t>(x)];
}

std::int64_t ParabolicKL::mu(int x, int w) {
    int d = length(w) - length(x);
    if (d <= 0 || d % 2 == 0) return 0;
    return coeff_at(P(x, w), (d - 1) / 2);
}

std::shared_ptr<ParabolicKL> kl_engine(const std::vector<int>& block_sizes) {
    static std::mutex m;
    static std::map<std::vector<int>, std::shared_ptr<ParabolicKL>> cache;
    std::lock_guard lock(m);
    auto& e = cache[block_sizes];
    if (!e) e = std::make_shared<ParabolicKL>(block_sizes);
    return e;
}

std::vector<int> levi_blocks(int m, const std::vector<int>& Y, int N) {
    std::vector<int> out;
    int cur = 1;
    for (int i = -m; i <= -2; ++i) {
        if (std::binary_search(Y.begin(), Y.end(), i)) {
            ++cur;
        } else {
            out.push_back(cur);
            cur = 1;
        }
    }
    out.push_back(cur);
    if (N > 0) out.push_back(N);
    return out;
}

std::vector<int> max_word(const std::vector<int>& values) {
    std::vector<int> idx(values.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
        if (values[static_cast<std::size_t>(x)] != values[static_cast<std::size_t>(y)])
            return values[static_cast<std::size_t>(x)] < values[static_cast<std::size_t>(y)];
        return x > y;
    });
    std::vector<int> w(values.size());
    for (std::size_t r = 0; r < idx.size(); ++r) w[static_cast<std::size_t>(idx[r])] = static_cast<int>(r);
    return w;
}

namespace {

// Every standardization of values, one per way of ordering tied entries.
std::vector<std::vector<int>> tie_words(const std::vector<int>& values) {
    std::vector<int> idx(values.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
        return values[static_cast<std::size_t>(x)] < values[static_cast<std::size_t>(y)];
    });
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t i = 0; i < idx.size();) {
        std::size_t j = i;
        while (j < idx.size() && values[static_cast<std::size_t>(idx[j])] == values[static_cast<std::size_t>(idx[i])]) ++j;
        groups.push_back({i, j});
        i = j;
    }
    std::vector<std::vector<int>> out;
    std::function<void(std::size_t)> rec = [&](std::size_t g) {
        if (g == groups.size()) {
            std::vector<int> w(values.size());
            for (std::size_t r = 0; r < idx.size(); ++r) w[static_cast<std::size_t>(idx[r])] = static_cast<int>(r);
            out.push_back(w);
            return;
        }
        auto first = idx.begin() + static_cast<long>(groups[g].first);
        auto last = idx.begin() + static_cast<long>(groups[g].second);
        std::vector<int> orig(first, last);
        std::sort(first, last);
        do rec(g + 1);
        while (std::next_permutation(first, last));
        std::copy(orig.begin(), orig.end(), first);
    };
    rec(0);
    return out;
}

}  // namespace

LaurentPoly kl_ell_shifted(const std::vector<int>& a_mu, const std::vector<int>& a_la,
                           const std::vector<int>& blocks) {
    auto s1 = a_mu, s2 = a_la;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return {};
    auto eng = kl_engine(blocks);
    // Repeated values: translate the regular column of the shortest word of
    // la onto the wall, summing over the tie coset of mu.
    auto la_words = tie_words(a_la);
    auto wl = *std::min_element(la_words.begin(), la_words.end(),
                                [](const auto& x, const auto& y) { return inversions(x) < inversions(y); });
    int w = eng->id_of(eng->min_rep(wl));
    auto mu_words = tie_words(a_mu);
    int shortest = inversions(mu_words.front());
    for (const auto& y : mu_words) shortest = std::min(shortest, inversions(y));
    LaurentPoly out;
    for (const auto& wm : mu_words) {
        int x = eng->id_of(eng->min_rep(wm));
        if (x < 0 || w < 0) throw std::logic_error("word is not a coset representative");
        int d = inversions(wl) - inversions(wm);
        if (d < 0) continue;
        int shift = inversions(wm) - shortest;
        auto p = eng->P(x, w);
        for (std::size_t k = 0; k < p.size(); ++k) {
            BigInt c = p[k];
            if (d % 2) c = -c;
            out.add(2 * static_cast<int>(k) - d - shift, c);
        }
    }
    return out;
}

LaurentPoly kl_ell(const DominantWeight& mu, const DominantWeight& la, int N) {
    if (mu.m != la.m || mu.Y != la.Y) throw std::invalid_argument("weights belong to different Levi types");
    if (!linked(mu, la, N)) return {};
    return kl_ell_shifted(rho_shifted(mu, N), rho_shifted(la, N), levi_blocks(la.m, la.Y, N));
}

BigInt a_coefficient(const DominantWeight& mu, const DominantWeight& la, int N) {
    return kl_ell(mu, la, N).at_one();
}

std::vector<std::vector<int>> levi_dominant_arrangements(const std::vector<int>& a,
                                                         const std::vector<int>& blocks) {
    std::map<int, int> avail;
    for (int v : a) ++avail[v];
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t b, int k, int below) {
        if (b == blocks.size()) {
            out.push_back(cur);
            return;
        }
        if (k == blocks[b]) {
            rec(b + 1, 0, std::numeric_limits<int>::max());
            return;
        }
        for (auto it = avail.rbegin(); it != avail.rend(); ++it) {
            if (it->second == 0 || it->first >= below) continue;
            int v = it->first;
            --it->second;
            cur.push_back(v);
            rec(b, k + 1, v);
            cur.pop_back();
            ++avail[v];
        }
    };
    rec(0, 0, std::numeric_limits<int>::max());
    return out;
}

int LinkageClass::index_of(const DominantWeight& mu) const {
    for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i] == mu) return static_cast<int>(i);
    return -1;
}

std::string LinkageClass::signature() const {
    auto a = rho_shifted(base, N);
    std::sort(a.begin(), a.end());
    std::ostringstream os;
    os << "m=" << base.m << ";Y=";
    for (std::size_t i = 0; i < base.Y.size(); ++i) os << (i ? "," : "") << base.Y[i];
    os << ";N=" << N << ";a=";
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    return os.str();
}

LinkageClass linkage_class(const DominantWeight& la, int N) {
    if (!fits_rank(la, N)) throw std::invalid_argument("rank overflow: weight does not fit rank");
    LinkageClass cls;
    cls.base = la;
    cls.N = N;
    auto blocks = levi_blocks(la.m, la.Y, N);
    const int m = la.m;
    std::vector<std::pair<int, DominantWeight>> found;
    for (const auto& arr : levi_dominant_arrangements(rho_shifted(la, N), blocks)) {
        Weight w = from_rho_shifted(arr, m, N);
        std::vector<int> neg, pos;
        for (int i = -m; i <= -1; ++i) neg.push_back(w[2 * i]);
        bool ok = true;
        for (int i = 1; i <= N; ++i) {
            if (w[2 * i] < 0) ok = false;
            pos.push_back(w[2 * i]);
        }
        if (!ok) continue;
        found.emplace_back(inversions(max_word(arr)), DominantWeight(m, la.Y, neg, Partition(pos)));
    }
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first > y.first;
        return to_standard(x.second) > to_standard(y.second);
    });
    for (auto& f : found) cls.members.push_back(f.second);
    return cls;
}

KLTable kl_dual_canonical(const LinkageClass& cls) {
    KLTable t;
    t.cls = cls;
    const std::size_t n = cls.members.size();
    t.L.assign(n, std::vector<LaurentPoly>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (i == j || dot_leq(cls.members[i], cls.members[j], cls.N))
                t.L[i][j] = kl_ell(cls.members[i], cls.members[j], cls.N);
    return t;
}

KLTable kl_canonical(const KLTable& with_L) {
    KLTable t = with_L;
    const std::size_t n = t.L.size();
    t.U.assign(n, std::vector<LaurentPoly>(n));
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<LaurentPoly> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = t.L[i][j];
        for (std::size_t v = j + 1; v < n; ++v) {
            const LaurentPoly& s = col[v];
            LaurentPoly x = LaurentPoly(-s.coeff(0));
            for (const auto& [e, c] : s.terms())
                if (e < 0) {
                    x.add(e, -c);
                    x.add(-e, -c);
                }
            if (x.is_zero()) continue;
            for (std::size_t i = v; i < n; ++i) col[i] += x * t.L[i][v];
        }
        for (std::size_t i = 0; i < n; ++i) t.U[i][j] = col[i];
    }
    return t;
}

KLTable kl_canonical(const LinkageClass& cls) { return kl_canonical(kl_dual_canonical(cls)); }

std::map<DominantWeight, BigInt> a_coefficients(const LinkageClass& cls) {
    std::map<DominantWeight, BigInt> out;
    for (const auto& mu : cls.members) {
        if (mu != cls.base && !dot_leq(mu, cls.base, cls.N)) continue;
        BigInt a = a_coefficient(mu, cls.base, cls.N);
        if (a != 0) out[mu] = a;
    }
    return out;
}

KLTable super_kl_alias(const KLTable& t) {
    KLTable out = t;
    out.labels.clear();
    for (const auto& mu : t.cls.members) out.labels.push_back(to_natural(mu));
    return out;
}

namespace {

using Mat = std::vector<std::vector<LaurentPoly>>;

// Inverse of a lower unitriangular matrix.
Mat unitriangular_inverse(const Mat& a) {
    const std::size_t n = a.size();
    Mat inv(n, std::vector<LaurentPoly>(n));
    for (std::size_t j = 0; j < n; ++j) {
        inv[j][j] = LaurentPoly(1);
        for (std::size_t i = j + 1; i < n; ++i) {
            LaurentPoly s;
            for (std::size_t k = j; k < i; ++k) s += a[i][k] * inv[k][j];
            inv[i][j] = LaurentPoly() - s;
        }
    }
    return inv;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    const std::size_t n = a.size();
    Mat c(n, std::vector<LaurentPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

}  // namespace

std::string check_kl_table(const KLTable& t) {
    const auto& mem = t.cls.members;
    const std::size_t n = mem.size();
    auto check = [&](const Mat& m, bool upper_q, const char* name) -> std::string {
        if (m.size() != n) return std::string(name) + " has wrong size";
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const auto& p = m[i][j];
                if (i == j) {
                    if (!(p == LaurentPoly(1))) return std::string(name) + " diagonal entry is not 1";
                    continue;
                }
                if (p.is_zero()) continue;
                if (i < j || !dot_leq(mem[i], mem[j], t.cls.N))
                    return std::string(name) + " entry outside dot order support";
                if (upper_q ? p.min_degree() < 1 : p.max_degree() > -1)
                    return std::string(name) + " entry has wrong degree range";
            }
        return {};
    };
    if (auto e = check(t.L, false, "L"); !e.empty()) return e;
    if (t.U.empty()) return {};
    if (auto e = check(t.U, true, "U"); !e.empty()) return e;
    Mat x = mat_mul(unitriangular_inverse(t.L), t.U);
    for (const auto& row : x)
        for (const auto& p : row)
            if (!(p == p.bar())) return "U is not bar-invariant";
    return {};
}

}  // namespace superchar
