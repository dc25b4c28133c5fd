#include "minact/character.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "minact/modular.hpp"

namespace minact {

namespace {

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;

long long next_dixon_prime(long long e, long long above) {
    // smallest prime l = 1 (mod e) with l > above
    long long k = above / e;
    for (;;) {
        ++k;
        const long long l = k * e + 1;
        if (l > above && is_prime(l))
            return l;
    }
}

Mat rref(Mat rows, long long l, std::vector<int>* pivots_out) {
    const size_t width = rows.empty() ? 0 : rows[0].size();
    std::vector<int> pivots;
    size_t rank = 0;
    for (size_t col = 0; col < width && rank < rows.size(); ++col) {
        size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0)
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[rank], rows[sel]);
        const long long inv = inv_mod(rows[rank][col], l);
        for (size_t j = col; j < width; ++j)
            rows[rank][j] = rows[rank][j] * inv % l;
        for (size_t r2 = 0; r2 < rows.size(); ++r2) {
            if (r2 == rank || rows[r2][col] == 0)
                continue;
            const long long f = rows[r2][col];
            for (size_t j = col; j < width; ++j)
                rows[r2][j] = ((rows[r2][j] - f * rows[rank][j]) % l + l) % l;
        }
        pivots.push_back(static_cast<int>(col));
        ++rank;
    }
    rows.resize(rank);
    if (pivots_out)
        *pivots_out = pivots;
    return rows;
}

long long det_mod(Mat a, long long l) {
    const size_t n = a.size();
    long long det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && a[sel][col] == 0)
            ++sel;
        if (sel == n)
            return 0;
        if (sel != col) {
            std::swap(a[sel], a[col]);
            det = l - det;
        }
        det = det % l * a[col][col] % l;
        const long long inv = inv_mod(a[col][col], l);
        for (size_t r2 = col + 1; r2 < n; ++r2) {
            if (a[r2][col] == 0)
                continue;
            const long long f = a[r2][col] * inv % l;
            for (size_t j = col; j < n; ++j)
                a[r2][j] = ((a[r2][j] - f * a[col][j]) % l + l) % l;
        }
    }
    return det % l;
}

// characteristic polynomial det(A - x I) by interpolation at x = 0..n
Vec char_poly(const Mat& a, long long l) {
    const size_t n = a.size();
    std::vector<long long> xs(n + 1), ys(n + 1);
    for (size_t i = 0; i <= n; ++i) {
        Mat shifted = a;
        for (size_t j = 0; j < n; ++j)
            shifted[j][j] = ((shifted[j][j] - static_cast<long long>(i)) % l + l) % l;
        xs[i] = static_cast<long long>(i);
        ys[i] = det_mod(std::move(shifted), l);
    }
    // Lagrange interpolation
    Vec poly(n + 1, 0);
    for (size_t i = 0; i <= n; ++i) {
        Vec num{1}; // product of (x - xs[j]) for j != i
        long long denom = 1;
        for (size_t j = 0; j <= n; ++j) {
            if (j == i)
                continue;
            Vec next(num.size() + 1, 0);
            for (size_t t = 0; t < num.size(); ++t) {
                next[t + 1] = (next[t + 1] + num[t]) % l;
                next[t] = (next[t] + num[t] % l * ((l - xs[j]) % l)) % l;
            }
            num = std::move(next);
            denom = denom * ((xs[i] - xs[j]) % l + l) % l;
        }
        const long long scale = ys[i] * inv_mod(denom, l) % l;
        for (size_t t = 0; t < num.size(); ++t)
            poly[t] = (poly[t] + num[t] * scale) % l;
    }
    return poly;
}

Vec poly_roots(const Vec& poly, long long l) {
    Vec roots;
    for (long long x = 0; x < l; ++x) {
        long long acc = 0;
        for (size_t t = poly.size(); t-- > 0;)
            acc = (acc * x + poly[t]) % l;
        if (acc == 0)
            roots.push_back(x);
    }
    return roots;
}

Mat nullspace(Mat a, long long l) {
    const size_t n = a.empty() ? 0 : a[0].size();
    std::vector<int> pivots;
    const Mat r = rref(std::move(a), l, &pivots);
    std::vector<char> is_pivot(n, 0);
    for (int p : pivots)
        is_pivot[static_cast<size_t>(p)] = 1;
    Mat basis;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col])
            continue;
        Vec v(n, 0);
        v[free_col] = 1;
        for (size_t row = 0; row < r.size(); ++row) {
            const size_t pc = static_cast<size_t>(pivots[row]);
            v[pc] = (l - r[row][free_col]) % l;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

struct ModularTable {
    long long l = 0;
    std::vector<long long> degrees;
    Mat values; // values[chi][class], mod l
};

ModularTable dixon_modular(const FiniteGroup& G, long long l) {
    const int r = G.class_count();
    const long long n = G.order();
    std::vector<int> rep_idx(static_cast<size_t>(r));
    for (int c = 0; c < r; ++c)
        rep_idx[static_cast<size_t>(c)] =
            G.element_index(G.classes()[static_cast<size_t>(c)].representative);

    // class multiplication coefficients a[i][j][k]
    std::vector<long long> a(static_cast<size_t>(r) * r * r, 0);
    auto at = [r](int i, int j, int k) -> size_t {
        return (static_cast<size_t>(i) * static_cast<size_t>(r) +
                static_cast<size_t>(j)) *
                   static_cast<size_t>(r) +
               static_cast<size_t>(k);
    };
    for (int k = 0; k < r; ++k) {
        const int z = rep_idx[static_cast<size_t>(k)];
        for (int x = 0; x < n; ++x) {
            const int i = G.class_of_element(x);
            const int y = G.product_index(G.inverse_index(x), z);
            const int j = G.class_of_element(y);
            ++a[at(i, j, k)];
        }
    }

    struct Subspace {
        Mat rows;
        std::vector<int> pivots;
    };
    Mat identity_rows(static_cast<size_t>(r), Vec(static_cast<size_t>(r), 0));
    std::vector<int> identity_pivots(static_cast<size_t>(r));
    for (int t = 0; t < r; ++t) {
        identity_rows[static_cast<size_t>(t)][static_cast<size_t>(t)] = 1;
        identity_pivots[static_cast<size_t>(t)] = t;
    }
    std::vector<Subspace> spaces{Subspace{std::move(identity_rows), identity_pivots}};

    for (int i = 1; i < r; ++i) {
        bool all_split = true;
        for (const auto& s : spaces)
            if (s.rows.size() > 1)
                all_split = false;
        if (all_split)
            break;
        Mat mi(static_cast<size_t>(r), Vec(static_cast<size_t>(r), 0));
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                mi[static_cast<size_t>(j)][static_cast<size_t>(k)] = a[at(i, j, k)] % l;

        std::vector<Subspace> next;
        for (auto& s : spaces) {
            const size_t d = s.rows.size();
            if (d == 1) {
                next.push_back(std::move(s));
                continue;
            }
            // restriction of mi to the subspace, in its rref basis
            Mat restr(d, Vec(d, 0));
            for (size_t t = 0; t < d; ++t) {
                Vec v(static_cast<size_t>(r), 0);
                for (int row = 0; row < r; ++row) {
                    long long acc = 0;
                    for (int col = 0; col < r; ++col)
                        acc = (acc + mi[static_cast<size_t>(row)][static_cast<size_t>(col)] *
                                         s.rows[t][static_cast<size_t>(col)]) %
                              l;
                    v[static_cast<size_t>(row)] = acc;
                }
                // coordinates relative to the rref basis
                Vec coords(d);
                for (size_t u = 0; u < d; ++u)
                    coords[u] = v[static_cast<size_t>(s.pivots[u])];
                Vec check(static_cast<size_t>(r), 0);
                for (size_t u = 0; u < d; ++u)
                    for (int col = 0; col < r; ++col)
                        check[static_cast<size_t>(col)] =
                            (check[static_cast<size_t>(col)] +
                             coords[u] * s.rows[u][static_cast<size_t>(col)]) %
                            l;
                if (check != v)
                    throw LiftingFailure("class matrix does not preserve subspace");
                for (size_t u = 0; u < d; ++u)
                    restr[u][t] = coords[u];
            }
            const Vec poly = char_poly(restr, l);
            const Vec roots = poly_roots(poly, l);
            size_t split_total = 0;
            for (long long root : roots) {
                Mat shifted = restr;
                for (size_t t = 0; t < d; ++t)
                    shifted[t][t] = ((shifted[t][t] - root) % l + l) % l;
                const Mat kernel = nullspace(std::move(shifted), l);
                if (kernel.empty())
                    throw LiftingFailure("eigenvalue without eigenvector");
                Mat ambient;
                for (const auto& kv : kernel) {
                    Vec v(static_cast<size_t>(r), 0);
                    for (size_t u = 0; u < d; ++u)
                        for (int col = 0; col < r; ++col)
                            v[static_cast<size_t>(col)] =
                                (v[static_cast<size_t>(col)] +
                                 kv[u] * s.rows[u][static_cast<size_t>(col)]) %
                                l;
                    ambient.push_back(std::move(v));
                }
                Subspace sub;
                sub.rows = rref(std::move(ambient), l, &sub.pivots);
                split_total += sub.rows.size();
                next.push_back(std::move(sub));
            }
            if (split_total != d)
                throw LiftingFailure("eigenspaces do not span the subspace");
        }
        spaces = std::move(next);
    }

    for (const auto& s : spaces)
        if (s.rows.size() != 1)
            throw LiftingFailure("class matrices failed to separate eigenvectors");

    ModularTable out;
    out.l = l;
    for (const auto& s : spaces) {
        const Vec& row = s.rows[0];
        if (row[0] == 0)
            throw LiftingFailure("eigenvector vanishes on the identity class");
        const long long norm = inv_mod(row[0], l);
        Vec omega(static_cast<size_t>(r));
        for (int k = 0; k < r; ++k)
            omega[static_cast<size_t>(k)] = row[static_cast<size_t>(k)] * norm % l;

        long long dot = 0;
        for (int k = 0; k < r; ++k) {
            const auto& cls = G.classes()[static_cast<size_t>(k)];
            const int kbar = G.power_class(k, cls.element_order - 1);
            dot = (dot + omega[static_cast<size_t>(k)] *
                             omega[static_cast<size_t>(kbar)] % l *
                             inv_mod(cls.size % l, l)) %
                  l;
        }
        if (dot == 0)
            throw LiftingFailure("degree formula degenerated");
        const long long d2 = n % l * inv_mod(dot, l) % l;
        const long long d = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(d2))));
        long long degree = -1;
        for (long long cand = std::max(0LL, d - 2); cand <= d + 2; ++cand)
            if (cand * cand == d2)
                degree = cand;
        if (degree <= 0)
            throw LiftingFailure("degree is not a small integer square root");

        Vec vals(static_cast<size_t>(r));
        for (int k = 0; k < r; ++k)
            vals[static_cast<size_t>(k)] =
                degree % l * omega[static_cast<size_t>(k)] % l *
                inv_mod(G.classes()[static_cast<size_t>(k)].size % l, l) % l;
        out.degrees.push_back(degree);
        out.values.push_back(std::move(vals));
    }
    return out;
}

bool character_less(const Character& a, const Character& b) {
    if (a.degree != b.degree)
        return a.degree < b.degree;
    for (size_t k = 0; k < a.values.size(); ++k) {
        if (a.values[k].coeffs() != b.values[k].coeffs())
            return a.values[k].coeffs() < b.values[k].coeffs();
    }
    return false;
}

CharacterTable lift_table(const FiniteGroup& G, const ModularTable& mt) {
    const int r = G.class_count();
    const long long l = mt.l;
    const long long e = G.exponent();
    const long long w = primitive_root(l).value;
    const long long ze = pow_mod(w, (l - 1) / e, l);

    CharacterTable table;
    table.group_order = G.order();
    table.group_exponent = e;
    table.group_hash = G.canonical_hash();
    for (int k = 0; k < r; ++k) {
        const auto& cls = G.classes()[static_cast<size_t>(k)];
        table.class_sizes.push_back(cls.size);
        table.class_orders.push_back(cls.element_order);
        std::vector<int> pc;
        for (long long t = 0; t < cls.element_order; ++t)
            pc.push_back(G.power_class(k, t));
        table.power_classes.push_back(std::move(pc));
    }

    for (size_t ci = 0; ci < mt.degrees.size(); ++ci) {
        Character chi;
        chi.degree = mt.degrees[ci];
        for (int k = 0; k < r; ++k) {
            const long long m = table.class_orders[static_cast<size_t>(k)];
            const long long zm = pow_mod(ze, e / m, l);
            const long long minv = inv_mod(m % l, l);
            std::vector<long long> mults(static_cast<size_t>(m));
            long long total = 0;
            for (long long j = 0; j < m; ++j) {
                long long acc = 0;
                for (long long t = 0; t < m; ++t) {
                    const int pk = table.power_classes[static_cast<size_t>(k)]
                                                      [static_cast<size_t>(t)];
                    const long long rot =
                        pow_mod(zm, (m - j * t % m) % m, l); // zm^(-jt)
                    acc = (acc + mt.values[ci][static_cast<size_t>(pk)] * rot) % l;
                }
                const long long mj = acc * minv % l;
                if (mj > chi.degree)
                    throw LiftingFailure("eigenvalue multiplicity exceeds degree");
                mults[static_cast<size_t>(j)] = mj;
                total += mj;
            }
            if (total != chi.degree)
                throw LiftingFailure("eigenvalue multiplicities do not sum to degree");
            chi.values.push_back(CyclotomicInteger::from_raw(m, mults));
            chi.eigen_mults.push_back(std::move(mults));
        }
        chi.kernel_mask = 0;
        for (int k = 0; k < r; ++k)
            if (chi.values[static_cast<size_t>(k)] ==
                CyclotomicInteger::integer(chi.degree))
                chi.kernel_mask |= (uint64_t{1} << k);
        table.irreducibles.push_back(std::move(chi));
    }

    std::sort(table.irreducibles.begin(), table.irreducibles.end(), character_less);

    long long degree_square_sum = 0;
    for (const auto& chi : table.irreducibles)
        degree_square_sum += chi.degree * chi.degree;
    if (degree_square_sum != table.group_order)
        throw LiftingFailure("degree squares do not sum to the group order");
    check_orthogonality(table);

    for (auto& chi : table.irreducibles)
        chi.fs_indicator = frobenius_schur(table, chi);
    return table;
}

} // namespace

int CharacterTable::power_class(int c, long long t) const {
    const auto& pc = power_classes[static_cast<size_t>(c)];
    const long long m = static_cast<long long>(pc.size());
    long long r = t % m;
    if (r < 0)
        r += m;
    return pc[static_cast<size_t>(r)];
}

int CharacterTable::inverse_class(int c) const {
    return power_class(c, class_orders[static_cast<size_t>(c)] - 1);
}

int CharacterTable::trivial_index() const {
    for (size_t i = 0; i < irreducibles.size(); ++i) {
        const auto& chi = irreducibles[i];
        if (chi.degree != 1)
            continue;
        bool all_one = true;
        for (const auto& v : chi.values)
            if (!(v == CyclotomicInteger::integer(1)))
                all_one = false;
        if (all_one)
            return static_cast<int>(i);
    }
    throw Error("trivial character missing from table");
}

long long CharacterTable::involution_count() const {
    long long total = 0;
    for (int k = 0; k < class_count(); ++k)
        if (power_class(k, 2) == 0)
            total += class_sizes[static_cast<size_t>(k)];
    return total;
}

CharacterTable compute_character_table(const FiniteGroup& G) {
    if (G.class_count() > 64)
        throw TooLarge("compute_character_table: more than 64 conjugacy classes");
    if (G.order() == 1) {
        CharacterTable table;
        table.group_order = 1;
        table.group_hash = G.canonical_hash();
        table.class_sizes = {1};
        table.class_orders = {1};
        table.power_classes = {{0}};
        Character triv;
        triv.degree = 1;
        triv.fs_indicator = 1;
        triv.values = {CyclotomicInteger::integer(1)};
        triv.eigen_mults = {{1}};
        triv.kernel_mask = 1;
        table.irreducibles = {triv};
        return table;
    }
    long long l = next_dixon_prime(G.exponent(), 2 * G.order());
    std::string last_error;
    for (int attempt = 0; attempt < 8; ++attempt) {
        try {
            return lift_table(G, dixon_modular(G, l));
        } catch (const LiftingFailure& err) {
            last_error = err.what();
            l = next_dixon_prime(G.exponent(), 2 * l);
        }
    }
    throw LiftingFailure("compute_character_table: persistent failure: " + last_error);
}

int frobenius_schur(const CharacterTable& table, const Character& chi) {
    CyclotomicInteger total = CyclotomicInteger::integer(0);
    for (int k = 0; k < table.class_count(); ++k) {
        const int sq = table.power_class(k, 2);
        total = total +
                chi.values[static_cast<size_t>(sq)].scaled(
                    table.class_sizes[static_cast<size_t>(k)]);
    }
    const long long sum = total.integer_value();
    if (sum % table.group_order != 0)
        throw Error("frobenius_schur: indicator sum not divisible by |G|");
    const long long nu = sum / table.group_order;
    if (nu < -1 || nu > 1)
        throw Error("frobenius_schur: indicator outside {-1,0,1}");
    return static_cast<int>(nu);
}

long long real_degree(const Character& chi) {
    return chi.fs_indicator == 1 ? chi.degree : 2 * chi.degree;
}

std::vector<int> determinant_values(const CharacterTable& table, const Character& chi) {
    std::vector<int> det(static_cast<size_t>(table.class_count()), 1);
    if (chi.fs_indicator != 1)
        return det; // realification of a complex/quaternionic pair
    for (int k = 0; k < table.class_count(); ++k) {
        const long long m = table.class_orders[static_cast<size_t>(k)];
        long long s = 0;
        for (long long j = 0; j < m; ++j)
            s += j * chi.eigen_mults[static_cast<size_t>(k)][static_cast<size_t>(j)];
        s %= m;
        if (s == 0)
            det[static_cast<size_t>(k)] = 1;
        else if (2 * s == m)
            det[static_cast<size_t>(k)] = -1;
        else
            throw Error("determinant_values: real character with non-real determinant");
    }
    return det;
}

int determinant_character_index(const CharacterTable& table, const Character& chi) {
    const std::vector<int> det = determinant_values(table, chi);
    bool trivial = true;
    for (int v : det)
        if (v != 1)
            trivial = false;
    if (trivial)
        return table.trivial_index();
    for (size_t i = 0; i < table.irreducibles.size(); ++i) {
        const auto& cand = table.irreducibles[i];
        if (cand.degree != 1)
            continue;
        bool same = true;
        for (int k = 0; k < table.class_count(); ++k)
            if (!(cand.values[static_cast<size_t>(k)] ==
                  CyclotomicInteger::integer(det[static_cast<size_t>(k)])))
                same = false;
        if (same)
            return static_cast<int>(i);
    }
    throw Error("determinant_character_index: determinant not found among linear characters");
}

namespace {

struct SearchData {
    uint64_t identity_only = 1;
    std::vector<int> cand;          // irreducible indices, nontrivial, by real_degree
    std::vector<long long> rd;      // real degrees
    std::vector<uint64_t> kernels;  // kernel masks
    std::vector<uint64_t> det_mask; // classes where the real determinant is -1
    std::vector<long long> kill_cost; // per class, cheapest candidate excluding it

    // admissible lower bound on the extra real dimension needed to reach a
    // trivial kernel: every class still in the kernel must be excluded by
    // some added constituent, and one constituent may exclude several
    long long completion_bound(uint64_t kernel) const {
        long long need = 0;
        uint64_t rest = kernel & ~identity_only;
        while (rest) {
            const int c = std::countr_zero(rest);
            rest &= rest - 1;
            need = std::max(need, kill_cost[static_cast<size_t>(c)]);
        }
        return need;
    }

    int delta_of_mask(const CharacterTable& table, uint64_t mask) const {
        for (size_t i = 0; i < table.irreducibles.size(); ++i) {
            const auto& chi = table.irreducibles[i];
            if (chi.degree != 1)
                continue;
            uint64_t m = 0;
            bool pm_only = true;
            for (int k = 0; k < table.class_count(); ++k) {
                if (chi.values[static_cast<size_t>(k)] ==
                    CyclotomicInteger::integer(-1))
                    m |= (uint64_t{1} << k);
                else if (!(chi.values[static_cast<size_t>(k)] ==
                           CyclotomicInteger::integer(1)))
                    pm_only = false;
            }
            if (pm_only && m == mask)
                return static_cast<int>(i);
        }
        throw Error("determinant product is not a linear character of the table");
    }
};

SearchData make_search_data(const CharacterTable& table) {
    SearchData data;
    const int triv = table.trivial_index();
    std::vector<int> order;
    for (size_t i = 0; i < table.irreducibles.size(); ++i)
        if (static_cast<int>(i) != triv)
            order.push_back(static_cast<int>(i));
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const long long ra = real_degree(table.irreducibles[static_cast<size_t>(a)]);
        const long long rb = real_degree(table.irreducibles[static_cast<size_t>(b)]);
        if (ra != rb)
            return ra < rb;
        return a < b;
    });
    for (int i : order) {
        const auto& chi = table.irreducibles[static_cast<size_t>(i)];
        data.cand.push_back(i);
        data.rd.push_back(real_degree(chi));
        data.kernels.push_back(chi.kernel_mask);
        uint64_t dm = 0;
        const std::vector<int> det = determinant_values(table, chi);
        for (int k = 0; k < table.class_count(); ++k)
            if (det[static_cast<size_t>(k)] == -1)
                dm |= (uint64_t{1} << k);
        data.det_mask.push_back(dm);
    }
    data.kill_cost.assign(static_cast<size_t>(table.class_count()), 0);
    for (int c = 1; c < table.class_count(); ++c) {
        long long cost = -1;
        for (size_t i = 0; i < data.cand.size(); ++i) {
            if ((data.kernels[i] >> c) & 1)
                continue;
            if (cost < 0 || data.rd[i] < cost)
                cost = data.rd[i];
        }
        if (cost < 0)
            throw Error("class survives in every kernel; table cannot be faithful");
        data.kill_cost[static_cast<size_t>(c)] = cost;
    }
    return data;
}

FaithfulSearchResult sorted_result(long long dim, std::vector<int> picks) {
    std::sort(picks.begin(), picks.end());
    FaithfulSearchResult out;
    out.dim = dim;
    for (size_t i = 0; i < picks.size();) {
        size_t j = i;
        while (j < picks.size() && picks[j] == picks[i])
            ++j;
        out.witness.emplace_back(picks[i], static_cast<int>(j - i));
        i = j;
    }
    return out;
}

} // namespace

FaithfulSearchResult min_faithful_real_dim(const CharacterTable& table,
                                           OrientationConstraint constraint) {
    if (table.group_order == 1)
        return FaithfulSearchResult{0, {}};
    const SearchData data = make_search_data(table);
    const size_t n = data.cand.size();

    long long best = -1;
    std::vector<int> best_picks;
    std::vector<int> stack;

    auto consider = [&](long long dim, const std::vector<int>& picks) {
        if (best < 0 || dim < best) {
            best = dim;
            best_picks = picks;
        }
    };

    auto dfs = [&](auto&& self, size_t pos, long long dim, uint64_t kernel,
                   uint64_t det) -> void {
        if (best >= 0 && dim + data.completion_bound(kernel) >= best)
            return;
        if (kernel == data.identity_only) {
            if (constraint == OrientationConstraint::any || det == 0) {
                consider(dim, stack);
            } else {
                // fix the determinant with the matching linear character
                const int delta = data.delta_of_mask(table, det);
                std::vector<int> picks = stack;
                picks.push_back(delta);
                consider(dim + 1, picks);
            }
            return;
        }
        if (pos == n)
            return;
        self(self, pos + 1, dim, kernel, det);
        const long long d1 = dim + data.rd[pos];
        if (best >= 0 && d1 >= best)
            return;
        stack.push_back(data.cand[pos]);
        self(self, pos + 1, d1, kernel & data.kernels[pos], det ^ data.det_mask[pos]);
        const long long d2 = d1 + data.rd[pos];
        if (!(best >= 0 && d2 >= best)) {
            stack.push_back(data.cand[pos]);
            // two copies: determinant contributions cancel
            self(self, pos + 1, d2, kernel & data.kernels[pos], det);
            stack.pop_back();
        }
        stack.pop_back();
    };

    uint64_t full = 0;
    for (int k = 0; k < table.class_count(); ++k)
        full |= (uint64_t{1} << k);
    dfs(dfs, 0, 0, full, 0);
    if (best < 0)
        throw Error("min_faithful_real_dim: no faithful multiset found");
    return sorted_result(best, std::move(best_picks));
}

FaithfulSearchResult min_faithful_real_dim_bruteforce(const CharacterTable& table,
                                                      OrientationConstraint constraint) {
    if (table.group_order == 1)
        return FaithfulSearchResult{0, {}};
    const long long bound = min_faithful_real_dim(table, constraint).dim;
    const SearchData data = make_search_data(table);
    const size_t n = data.cand.size();

    long long best = -1;
    std::vector<int> best_picks;
    std::vector<int> stack;

    auto dfs = [&](auto&& self, size_t pos, long long dim, uint64_t kernel,
                   uint64_t det) -> void {
        if (dim + data.completion_bound(kernel) > bound)
            return;
        if (kernel == data.identity_only &&
            (constraint == OrientationConstraint::any || det == 0)) {
            if (best < 0 || dim < best) {
                best = dim;
                best_picks = stack;
            }
            return;
        }
        if (pos == n)
            return;
        // any multiplicity that keeps the total within the bound
        self(self, pos + 1, dim, kernel, det);
        long long d = dim;
        uint64_t k = kernel, dt = det;
        int pushed = 0;
        while (d + data.rd[pos] <= bound) {
            d += data.rd[pos];
            k &= data.kernels[pos];
            dt ^= data.det_mask[pos];
            stack.push_back(data.cand[pos]);
            ++pushed;
            self(self, pos + 1, d, k, dt);
        }
        while (pushed-- > 0)
            stack.pop_back();
    };

    uint64_t full = 0;
    for (int k = 0; k < table.class_count(); ++k)
        full |= (uint64_t{1} << k);
    dfs(dfs, 0, 0, full, 0);
    if (best < 0)
        throw Error("min_faithful_real_dim_bruteforce: nothing within bound");
    return sorted_result(best, std::move(best_picks));
}

void check_orthogonality(const CharacterTable& table) {
    const int r = table.class_count();
    const auto& irr = table.irreducibles;
    for (size_t a = 0; a < irr.size(); ++a) {
        for (size_t b = a; b < irr.size(); ++b) {
            CyclotomicInteger total = CyclotomicInteger::integer(0);
            for (int k = 0; k < r; ++k) {
                const auto prod = irr[a].values[static_cast<size_t>(k)] *
                                  irr[b].values[static_cast<size_t>(k)].conjugate();
                total = total + prod.scaled(table.class_sizes[static_cast<size_t>(k)]);
            }
            const long long expected = (a == b) ? table.group_order : 0;
            if (!(total == CyclotomicInteger::integer(expected)))
                throw LiftingFailure("row orthogonality violated");
        }
    }
    for (int k = 0; k < r; ++k) {
        for (int m = k; m < r; ++m) {
            CyclotomicInteger total = CyclotomicInteger::integer(0);
            for (const auto& chi : irr)
                total = total + chi.values[static_cast<size_t>(k)] *
                                    chi.values[static_cast<size_t>(m)].conjugate();
            const long long expected =
                (k == m) ? table.group_order / table.class_sizes[static_cast<size_t>(k)]
                         : 0;
            if (!(total == CyclotomicInteger::integer(expected)))
                throw LiftingFailure("column orthogonality violated");
        }
    }
}

} // namespace minact
