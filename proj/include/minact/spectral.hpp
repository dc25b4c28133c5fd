#pragma once

#include <string>

#include "minact/cohomology.hpp"

namespace minact {

enum class Orientation { preserving, any };

/// E_2 data concentrated in rows 0 and n. Row 0 always carries the trivial
/// coefficient action; row n carries the possibly twisted one. The only
/// possibly nonzero differential has bidegree (n+1, -n).
struct TwoRowPage {
    long long n = 1;
    TwistedModuleSpec spec0;  // eps = +1
    TwistedModuleSpec spec_n; // eps as given

    int row0(long long i) const { return invariant_dim(i, spec0); }
    int rown(long long i) const { return invariant_dim(i, spec_n); }
};

TwoRowPage make_two_row_page(long long n, long long p, long long q, int eps);

/// True iff the differential d_{n+1} can be an isomorphism in all large
/// total degrees: over one full period above the top row, every nonzero
/// source matches a nonzero target and vice versa.
bool admissible(long long n, long long p, long long q, int eps);

/// eps=+1: (n+1) = 0 (mod 2q); eps=-1: (n+1) = q (mod 2q).
bool admissible_closed_form(long long n, long long q, int eps);

/// Least free-action dimension: preserving -> 2q-1; any -> 2q-1 for odd q,
/// q-1 for even q.
long long minimal_free_dim(long long q, Orientation orientation);

/// ASCII sketch of rows 0 and n up to column i_max, with the verdict.
std::string render_e2_page(const TwoRowPage& page, long long i_max);

} // namespace minact
