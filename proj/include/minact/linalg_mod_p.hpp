#pragma once

#include <utility>
#include <vector>

namespace minact {

/// Sparse matrix over Z_p, row major; entries within a row sorted by column
/// with no duplicates and no zeros.
struct SparseMatrixModP {
    long long p = 2;
    long long n_rows = 0;
    long long n_cols = 0;
    std::vector<std::vector<std::pair<long long, long long>>> rows;
};

/// Exact rank. Orients the matrix so the smaller dimension becomes the row
/// count (rank is transpose-invariant), then runs dense elimination when the
/// column count stays below 2000 and sparse row elimination otherwise.
long long rank_mod_p(const SparseMatrixModP& m);

} // namespace minact
