#include "superchar/linalg.hpp"

#include <stdexcept>

namespace superchar {

namespace {

// Row-reduces in place; returns pivot columns in order.
std::vector<int> echelon(RatMatrix& a) {
    std::vector<int> piv;
    if (a.empty()) return piv;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
        }
        piv.push_back(static_cast<int>(c));
        ++r;
    }
    return piv;
}

}  // namespace

int rank(RatMatrix a) { return static_cast<int>(echelon(a).size()); }

void independent_rows_cols(const RatMatrix& a, std::vector<int>& rows, std::vector<int>& cols) {
    RatMatrix m = a;
    cols = echelon(m);
    RatMatrix t;
    if (!a.empty()) {
        t.assign(a[0].size(), std::vector<Rational>(a.size()));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    }
    rows = echelon(t);
}

std::vector<Rational> solve(RatMatrix a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw std::runtime_error("singular system");
        std::swap(a[p], a[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c] / a[c][c];
            for (std::size_t k = c; k <= n; ++k) a[i][k] -= f * a[c][k];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

}  // namespace superchar
