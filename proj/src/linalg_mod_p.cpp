#include "minact/linalg_mod_p.hpp"

#include <algorithm>
#include <queue>

#include "minact/modular.hpp"

namespace minact {

namespace {

SparseMatrixModP transpose(const SparseMatrixModP& m) {
    SparseMatrixModP t;
    t.p = m.p;
    t.n_rows = m.n_cols;
    t.n_cols = m.n_rows;
    t.rows.resize(static_cast<size_t>(t.n_rows));
    for (long long r = 0; r < m.n_rows; ++r)
        for (const auto& [c, v] : m.rows[static_cast<size_t>(r)])
            t.rows[static_cast<size_t>(c)].emplace_back(r, v);
    return t; // columns arrive in increasing row order, already sorted
}

long long rank_dense(const SparseMatrixModP& m) {
    const long long p = m.p;
    const size_t cols = static_cast<size_t>(m.n_cols);
    std::vector<std::vector<long long>> dense;
    dense.reserve(m.rows.size());
    for (const auto& row : m.rows) {
        std::vector<long long> d(cols, 0);
        for (const auto& [c, v] : row)
            d[static_cast<size_t>(c)] = v;
        dense.push_back(std::move(d));
    }
    long long rank = 0;
    size_t row_at = 0;
    for (size_t col = 0; col < cols && row_at < dense.size(); ++col) {
        size_t sel = row_at;
        while (sel < dense.size() && dense[sel][col] == 0)
            ++sel;
        if (sel == dense.size())
            continue;
        std::swap(dense[row_at], dense[sel]);
        const long long inv = inv_mod(dense[row_at][col], p);
        for (size_t j = col; j < cols; ++j)
            dense[row_at][j] = dense[row_at][j] * inv % p;
        for (size_t r2 = row_at + 1; r2 < dense.size(); ++r2) {
            const long long f = dense[r2][col];
            if (f == 0)
                continue;
            for (size_t j = col; j < cols; ++j)
                dense[r2][j] = ((dense[r2][j] - f * dense[row_at][j]) % p + p) % p;
        }
        ++row_at;
        ++rank;
    }
    return rank;
}

long long rank_sparse(const SparseMatrixModP& m) {
    const long long p = m.p;
    // pivot rows keyed by leading column; each stored normalized (lead = 1)
    std::vector<std::vector<std::pair<long long, long long>>> pivot(
        static_cast<size_t>(m.n_cols));
    std::vector<char> has_pivot(static_cast<size_t>(m.n_cols), 0);
    std::vector<long long> temp(static_cast<size_t>(m.n_cols), 0);
    long long rank = 0;

    for (const auto& row : m.rows) {
        if (row.empty())
            continue;
        std::priority_queue<long long, std::vector<long long>, std::greater<>> heads;
        for (const auto& [c, v] : row) {
            temp[static_cast<size_t>(c)] = v % p;
            heads.push(c);
        }
        std::vector<long long> touched;
        for (const auto& [c, v] : row)
            touched.push_back(c);
        long long lead = -1;
        while (!heads.empty()) {
            const long long c = heads.top();
            heads.pop();
            if (temp[static_cast<size_t>(c)] == 0)
                continue;
            if (!has_pivot[static_cast<size_t>(c)]) {
                lead = c;
                break;
            }
            const long long f = temp[static_cast<size_t>(c)];
            for (const auto& [pc, pv] : pivot[static_cast<size_t>(c)]) {
                long long& cell = temp[static_cast<size_t>(pc)];
                if (cell == 0 && pc != c) {
                    touched.push_back(pc);
                    heads.push(pc);
                }
                cell = ((cell - f * pv) % p + p) % p;
            }
        }
        if (lead >= 0) {
            const long long inv = inv_mod(temp[static_cast<size_t>(lead)], p);
            std::vector<std::pair<long long, long long>> reduced;
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            for (long long c : touched)
                if (temp[static_cast<size_t>(c)] != 0 && c >= lead)
                    reduced.emplace_back(c, temp[static_cast<size_t>(c)] * inv % p);
            pivot[static_cast<size_t>(lead)] = std::move(reduced);
            has_pivot[static_cast<size_t>(lead)] = 1;
            ++rank;
        }
        for (long long c : touched)
            temp[static_cast<size_t>(c)] = 0;
    }
    return rank;
}

} // namespace

long long rank_mod_p(const SparseMatrixModP& m) {
    if (m.n_rows == 0 || m.n_cols == 0)
        return 0;
    if (m.n_rows > m.n_cols)
        return rank_mod_p(transpose(m));
    if (m.n_cols < 2000)
        return rank_dense(m);
    return rank_sparse(m);
}

} // namespace minact
