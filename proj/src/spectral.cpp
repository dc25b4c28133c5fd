#include "minact/spectral.hpp"

#include <sstream>

namespace minact {

TwoRowPage make_two_row_page(long long n, long long p, long long q, int eps) {
    if (n < 1)
        throw InvalidParams("make_two_row_page: n must be >= 1");
    TwoRowPage page;
    page.n = n;
    page.spec0 = twisted_module_spec(p, q, 1);
    page.spec_n = twisted_module_spec(p, q, eps);
    return page;
}

bool admissible(long long n, long long p, long long q, int eps) {
    const TwoRowPage page = make_two_row_page(n, p, q, eps);
    // sources of d_{n+1} over one full period strictly above total degree n
    for (long long i = n + 2; i < n + 2 + 2 * q; ++i)
        if (page.rown(i) != page.row0(i + n + 1))
            return false;
    // targets over one full period
    for (long long j = 2 * n + 3; j < 2 * n + 3 + 2 * q; ++j)
        if (page.row0(j) != page.rown(j - n - 1))
            return false;
    return true;
}

bool admissible_closed_form(long long n, long long q, int eps) {
    if (n < 1)
        throw InvalidParams("admissible_closed_form: n must be >= 1");
    if (eps == 1)
        return (n + 1) % (2 * q) == 0;
    if (eps == -1) {
        if (q % 2 != 0)
            throw InvalidParams("admissible_closed_form: eps = -1 requires even q");
        return (n + 1) % (2 * q) == q;
    }
    throw InvalidParams("admissible_closed_form: eps must be +1 or -1");
}

long long minimal_free_dim(long long q, Orientation orientation) {
    if (q < 2)
        throw InvalidParams("minimal_free_dim: q must be >= 2");
    if (orientation == Orientation::preserving)
        return 2 * q - 1;
    return q % 2 == 0 ? q - 1 : 2 * q - 1;
}

std::string render_e2_page(const TwoRowPage& page, long long i_max) {
    std::ostringstream os;
    os << "E_2 page, rows j=0 and j=" << page.n << " (p=" << page.spec_n.p
       << ", q=" << page.spec_n.q << ", eps=" << (page.spec_n.eps > 0 ? "+1" : "-1")
       << ")\n";
    auto strip = [&](long long j, auto&& dim_fn) {
        os << "j=" << j << (j < 10 ? "   |" : "  |");
        for (long long i = 0; i <= i_max; ++i)
            os << (dim_fn(i) ? " *" : " .");
        os << "\n";
    };
    strip(page.n, [&](long long i) { return page.rown(i); });
    strip(0, [&](long long i) { return page.row0(i); });
    os << "i:     ";
    for (long long i = 0; i <= i_max; ++i)
        os << (i % 10 == 0 ? std::to_string((i / 10) % 10) : " ") << " ";
    os << "\n";
    const bool ok = admissible(page.n, page.spec_n.p, page.spec_n.q, page.spec_n.eps);
    os << "d_" << page.n + 1 << " eventual isomorphism: "
       << (ok ? "admissible" : "inadmissible") << "\n";
    return os.str();
}

} // namespace minact
