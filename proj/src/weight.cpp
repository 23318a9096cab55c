#include "superchar/weight.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace superchar {

std::string algebra_name(Algebra a) {
    switch (a) {
        case Algebra::g: return "g";
        case Algebra::gbar: return "gbar";
        case Algebra::gtilde: return "gtilde";
    }
    return "?";
}

Algebra parse_algebra(const std::string& s) {
    if (s == "g") return Algebra::g;
    if (s == "gbar") return Algebra::gbar;
    if (s == "gtilde") return Algebra::gtilde;
    throw std::invalid_argument("unknown algebra '" + s + "'");
}

std::string index_str(int r2) {
    if (r2 % 2 == 0) return std::to_string(r2 / 2);
    return std::to_string(r2) + "/2";
}

Weight::Weight(const std::map<int, int>& coords) {
    for (auto [k, v] : coords)
        if (v != 0) coords_[k] = v;
}

Weight Weight::eps(int r2, int c) {
    Weight w;
    w.add(r2, c);
    return w;
}

int Weight::operator[](int r2) const {
    auto it = coords_.find(r2);
    return it == coords_.end() ? 0 : it->second;
}

void Weight::add(int r2, int c) {
    if (c == 0) return;
    int& v = coords_[r2];
    v += c;
    if (v == 0) coords_.erase(r2);
}

Weight& Weight::operator+=(const Weight& o) {
    for (auto [k, v] : o.coords_) add(k, v);
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    for (auto [k, v] : o.coords_) add(k, -v);
    return *this;
}

Weight Weight::operator+(const Weight& o) const {
    Weight r = *this;
    r += o;
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    Weight r = *this;
    r -= o;
    return r;
}

Weight Weight::operator-() const { return scaled(-1); }

Weight Weight::scaled(int k) const {
    Weight r;
    for (auto [key, v] : coords_) r.add(key, k * v);
    return r;
}

std::string Weight::str() const {
    if (coords_.empty()) return "0";
    std::string out;
    for (auto [k, v] : coords_) {
        if (!out.empty()) out += v < 0 ? "-" : "+";
        else if (v < 0) out += "-";
        int a = v < 0 ? -v : v;
        if (a != 1) out += std::to_string(a);
        out += "e" + index_str(k);
    }
    return out;
}

DominantWeight::DominantWeight(int m_, std::vector<int> Y_, std::vector<int> neg_, Partition pos_)
    : m(m_), Y(std::move(Y_)), neg(std::move(neg_)), pos(std::move(pos_)) {
    std::sort(Y.begin(), Y.end());
    Y.erase(std::unique(Y.begin(), Y.end()), Y.end());
    validate();
}

bool DominantWeight::in_Y(int j) const { return std::binary_search(Y.begin(), Y.end(), j); }

void DominantWeight::validate() const {
    if (m < 1) throw std::invalid_argument("m must be positive");
    if (static_cast<int>(neg.size()) != m) throw std::invalid_argument("neg must have m entries");
    for (int j : Y) {
        if (j < -m || j > -2) throw std::invalid_argument("Y must lie in [-m,-2]");
        if (neg_at(j) < neg_at(j + 1)) throw std::invalid_argument("weight is not Y-dominant");
    }
}

std::string DominantWeight::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < neg.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(neg[i]);
    }
    out += "|";
    for (std::size_t i = 0; i < pos.length(); ++i) {
        if (i) out += ",";
        out += std::to_string(pos.parts()[i]);
    }
    return out + ")";
}

Weight negative_part(const DominantWeight& d) {
    Weight w;
    for (int i = -d.m; i <= -1; ++i) w.add(2 * i, d.neg_at(i));
    return w;
}

Weight to_standard(const DominantWeight& d) {
    Weight w = negative_part(d);
    for (std::size_t i = 1; i <= d.pos.length(); ++i) w.add(2 * static_cast<int>(i), d.pos(i));
    return w;
}

Weight to_natural(const DominantWeight& d) {
    Weight w = negative_part(d);
    Partition t = transpose(d.pos);
    for (std::size_t i = 1; i <= t.length(); ++i) w.add(2 * static_cast<int>(i) - 1, t(i));
    return w;
}

Weight to_theta(const DominantWeight& d) {
    Weight w = negative_part(d);
    ThetaSequence t = theta(d.pos);
    for (auto [k, v] : t.entries()) w.add(k, v);
    return w;
}

Weight anchor_of(const DominantWeight& d, Algebra a) {
    switch (a) {
        case Algebra::g: return to_standard(d);
        case Algebra::gbar: return to_natural(d);
        case Algebra::gtilde: return to_theta(d);
    }
    return {};
}

int parity(const Weight& w) {
    int s = 0;
    for (auto [k, v] : w.coords())
        if (is_half(k)) s += v;
    return ((s % 2) + 2) % 2;
}

LatticeFlags lattice_of(const Weight& w) {
    LatticeFlags f;
    f.gamma = true;
    f.gamma_bar = true;
    for (auto [k, v] : w.coords()) {
        if (is_half(k)) f.gamma = false;
        if (is_pos_int(k)) f.gamma_bar = false;
    }
    return f;
}

bool in_variant(const Weight& w, Algebra a) {
    auto f = lattice_of(w);
    if (a == Algebra::g) return f.gamma;
    if (a == Algebra::gbar) return f.gamma_bar;
    return true;
}

int next_index(Algebra a, int r2) {
    if (r2 < -2) return r2 + 2;
    if (r2 == -2) return a == Algebra::g ? 2 : 1;
    if (r2 <= 0) throw std::invalid_argument("index 0 does not exist");
    if (a == Algebra::gtilde) return r2 + 1;
    if (a == Algebra::g && !is_pos_int(r2)) throw std::invalid_argument("half index in g");
    if (a == Algebra::gbar && !is_half(r2)) throw std::invalid_argument("integer index in gbar");
    return r2 + 2;
}

std::vector<int> index_order(Algebra a, int m, int n_even, int n_odd) {
    std::vector<int> out;
    for (int i = -m; i <= -1; ++i) out.push_back(2 * i);
    std::vector<int> pos;
    if (a != Algebra::gbar)
        for (int i = 1; i <= n_even; ++i) pos.push_back(2 * i);
    if (a != Algebra::g)
        for (int i = 1; i <= n_odd; ++i) pos.push_back(2 * i - 1);
    std::sort(pos.begin(), pos.end());
    out.insert(out.end(), pos.begin(), pos.end());
    return out;
}

static void check_label(Algebra a, int label, int m) {
    if (label < -2 * m || label == 0 || (label < 0 && label % 2 != 0))
        throw std::invalid_argument("unknown simple-root label " + std::to_string(label));
    if (label > 0) {
        if (a == Algebra::g && !is_pos_int(label))
            throw std::invalid_argument("unknown simple-root label " + std::to_string(label));
        if (a == Algebra::gbar && !is_half(label))
            throw std::invalid_argument("unknown simple-root label " + std::to_string(label));
    }
}

Weight simple_root(Algebra a, int label) {
    return Weight::eps(label) - Weight::eps(next_index(a, label));
}

bool is_odd_root(Algebra a, int label) {
    return is_half(label) != is_half(next_index(a, label));
}

int coroot_pairing(const Weight& w, int label, Algebra a, int m) {
    check_label(a, label, m);
    int b = next_index(a, label);
    int x = w[label], y = w[b];
    if (!is_odd_root(a, label)) return x - y;
    if (label == -2) return x + y;
    // gtilde pattern: halves carry the minus sign, integers the plus sign.
    return is_half(label) ? -(x + y) : x + y;
}

RootVector root_decompose(const Weight& w, Algebra a, int m) {
    if (!in_variant(w, a)) throw std::invalid_argument("weight outside the variant's lattice");
    int total = 0, maxk = 0;
    for (auto [k, v] : w.coords()) {
        if (k < 0 && k < -2 * m) throw std::invalid_argument("weight outside the index set");
        total += v;
        maxk = std::max(maxk, k);
    }
    if (total != 0) throw std::invalid_argument("weight not in root lattice");
    RootVector rv;
    int partial = 0;
    for (int r = -2 * m; r < maxk; r = next_index(a, r)) {
        partial += w[r];
        if (partial != 0) rv[r] = partial;
    }
    return rv;
}

Weight reconstruct(const RootVector& rv, Algebra a) {
    Weight w;
    for (auto [label, c] : rv) w += simple_root(a, label).scaled(c);
    return w;
}

int depth(const Weight& anchor, const Weight& w, Algebra a, int m) {
    int s = 0;
    for (auto [label, c] : root_decompose(anchor - w, a, m)) s += c;
    return s;
}

int units_moved(const Weight& delta) {
    int s = 0;
    for (auto [k, v] : delta.coords())
        if (k < 0) s += v;
    return s;
}

int neg_internal_depth(const Weight& delta, int m) {
    int s = 0, partial = 0;
    for (int i = -m; i <= -2; ++i) {
        partial += delta[2 * i];
        s += partial;
    }
    return s;
}

std::vector<int> classical_positions(int m, int N) {
    std::vector<int> out;
    for (int i = -m; i <= -1; ++i) out.push_back(2 * i);
    for (int i = 1; i <= N; ++i) out.push_back(2 * i);
    return out;
}

std::vector<int> rho_shifted(const Weight& w, int m, int N) {
    auto pos = classical_positions(m, N);
    int L = m + N;
    for (auto [k, v] : w.coords()) {
        (void)v;
        if (is_half(k) || k < -2 * m || k > 2 * N)
            throw std::invalid_argument("weight support does not fit truncated rank");
    }
    std::vector<int> a(pos.size());
    for (std::size_t k = 0; k < pos.size(); ++k) a[k] = w[pos[k]] + (L - static_cast<int>(k));
    return a;
}

std::vector<int> rho_shifted(const DominantWeight& d, int N) {
    if (!fits_rank(d, N)) throw std::invalid_argument("rank too small for weight support");
    return rho_shifted(to_standard(d), d.m, N);
}

Weight from_rho_shifted(const std::vector<int>& a, int m, int N) {
    auto pos = classical_positions(m, N);
    int L = m + N;
    Weight w;
    for (std::size_t k = 0; k < pos.size(); ++k) w.add(pos[k], a[k] - (L - static_cast<int>(k)));
    return w;
}

bool fits_rank(const DominantWeight& d, int N) { return static_cast<int>(d.pos.length()) <= N; }

bool linked(const DominantWeight& mu, const DominantWeight& la, int N) {
    if (mu.m != la.m) return false;
    auto a = rho_shifted(la, N), b = rho_shifted(mu, N);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

bool word_bruhat_leq(const std::vector<int>& lower, const std::vector<int>& upper) {
    if (lower.size() != upper.size()) return false;
    std::set<int> values(upper.begin(), upper.end());
    for (int c : values) {
        int cl = 0, cu = 0;
        for (std::size_t k = 0; k < lower.size(); ++k) {
            if (lower[k] >= c) ++cl;
            if (upper[k] >= c) ++cu;
            if (cl > cu) return false;
        }
    }
    return true;
}

bool dot_leq(const DominantWeight& mu, const DominantWeight& la, int N) {
    if (!linked(mu, la, N)) return false;
    return word_bruhat_leq(rho_shifted(mu, N), rho_shifted(la, N));
}

bool dot_leq_by_search(const DominantWeight& mu, const DominantWeight& la, int N) {
    if (!linked(mu, la, N)) return false;
    auto start = rho_shifted(la, N), goal = rho_shifted(mu, N);
    std::set<std::vector<int>> seen{start};
    std::deque<std::vector<int>> q{start};
    while (!q.empty()) {
        auto x = q.front();
        q.pop_front();
        if (x == goal) return true;
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = i + 1; j < x.size(); ++j)
                if (x[i] > x[j]) {
                    auto y = x;
                    std::swap(y[i], y[j]);
                    if (seen.insert(y).second) q.push_back(y);
                }
    }
    return false;
}

}  // namespace superchar
