#include "minact/cohomology.hpp"

#include <algorithm>
#include <map>

#include "minact/linalg_mod_p.hpp"

namespace minact {

TwistedModuleSpec twisted_module_spec(long long p, long long q, int eps) {
    if (eps != 1 && eps != -1)
        throw InvalidParams("twisted_module_spec: eps must be +1 or -1");
    if (eps == -1 && q % 2 != 0)
        throw InvalidParams("twisted_module_spec: eps = -1 requires even q");
    const MetacyclicParams mp = metacyclic_params(p, q);
    return TwistedModuleSpec{p, q, mp.k, eps};
}

Residue sigma_scalar(long long i, const TwistedModuleSpec& spec) {
    if (i < 0)
        throw InvalidParams("sigma_scalar: degree must be >= 0");
    const long long a = i / 2;
    Residue s = spec.k.pow(i % 2 == 0 ? a : a + 1);
    if (spec.eps == -1)
        s = s.neg();
    return s;
}

int invariant_dim(long long i, const TwistedModuleSpec& spec) {
    return sigma_scalar(i, spec).value == 1 ? 1 : 0;
}

int invariant_pattern_closed_form(long long i, long long q, int eps) {
    if (i < 0 || q < 2)
        throw InvalidParams("invariant_pattern_closed_form: need i >= 0, q >= 2");
    if (eps != 1 && eps != -1)
        throw InvalidParams("invariant_pattern_closed_form: eps must be +1 or -1");
    if (eps == -1 && q % 2 != 0)
        throw InvalidParams("invariant_pattern_closed_form: eps = -1 requires even q");
    const long long r = i % (2 * q);
    if (eps == 1)
        return (r == 0 || r == 2 * q - 1) ? 1 : 0;
    return (r == q || r == q - 1) ? 1 : 0;
}

ModuleRep trivial_module(long long p, int dim) {
    return ModuleRep{p, dim, {}}; // every generator acts as the identity
}

ModuleRep scalar_module(long long p, const std::vector<long long>& scalars) {
    ModuleRep m;
    m.p = p;
    m.dim = 1;
    for (long long s : scalars) {
        long long v = s % p;
        if (v < 0)
            v += p;
        m.generator_matrices.push_back({{v}});
    }
    return m;
}

ModuleRep permutation_module(long long p, const std::vector<Permutation>& gen_images) {
    ModuleRep m;
    m.p = p;
    m.dim = gen_images.empty() ? 0 : gen_images[0].degree();
    for (const auto& g : gen_images) {
        std::vector<std::vector<long long>> mat(
            static_cast<size_t>(m.dim), std::vector<long long>(static_cast<size_t>(m.dim), 0));
        for (int b = 0; b < m.dim; ++b)
            mat[static_cast<size_t>(g(b))][static_cast<size_t>(b)] = 1;
        m.generator_matrices.push_back(std::move(mat));
    }
    return m;
}

ModuleRep twisted_line(const TwistedModuleSpec& spec) {
    // generator order of metacyclic_group: {x, y}
    return scalar_module(spec.p, {1, spec.eps == 1 ? 1 : spec.p - 1});
}

namespace {

using Mat = std::vector<std::vector<long long>>;

Mat identity_matrix(int dim) {
    Mat m(static_cast<size_t>(dim), std::vector<long long>(static_cast<size_t>(dim), 0));
    for (int i = 0; i < dim; ++i)
        m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b, long long p) {
    const size_t n = a.size();
    Mat out(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0)
                continue;
            for (size_t j = 0; j < n; ++j)
                out[i][j] = (out[i][j] + a[i][k] * b[k][j]) % p;
        }
    return out;
}

/// Action matrix of every group element, built along the BFS words and
/// validated as a homomorphism against every (element, generator) pair.
std::vector<Mat> element_matrices(const FiniteGroup& G, const ModuleRep& M) {
    std::vector<Mat> gen_mats = M.generator_matrices;
    if (gen_mats.empty())
        gen_mats.assign(G.generators().size(), identity_matrix(M.dim));
    if (gen_mats.size() != G.generators().size())
        throw InvalidParams("element_matrices: one matrix per generator required");
    for (auto& g : gen_mats)
        for (auto& row : g)
            for (auto& v : row) {
                v %= M.p;
                if (v < 0)
                    v += M.p;
            }
    const long long n = G.order();
    std::vector<Mat> mats(static_cast<size_t>(n));
    mats[0] = identity_matrix(M.dim);
    for (long long i = 1; i < n; ++i) {
        const auto& step = G.bfs_words()[static_cast<size_t>(i)];
        mats[static_cast<size_t>(i)] =
            mat_mul(mats[static_cast<size_t>(step.parent)],
                    gen_mats[static_cast<size_t>(step.gen)], M.p);
    }
    for (long long i = 0; i < n; ++i) {
        for (size_t gi = 0; gi < G.generators().size(); ++gi) {
            const int prod = G.element_index(G.elements()[static_cast<size_t>(i)] *
                                             G.generators()[gi]);
            if (mats[static_cast<size_t>(prod)] !=
                mat_mul(mats[static_cast<size_t>(i)], gen_mats[gi], M.p))
                throw InvalidParams(
                    "element_matrices: generator assignment is not a G-module");
        }
    }
    return mats;
}

long long checked_pow(long long base, int exp, long long cap) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) {
        if (out > cap / base)
            return cap + 1;
        out *= base;
    }
    return out;
}

struct BarComplex {
    const FiniteGroup& G;
    const ModuleRep& M;
    std::vector<Mat> mats;
    long long n_nonid;

    BarComplex(const FiniteGroup& g, const ModuleRep& m)
        : G(g), M(m), mats(element_matrices(g, m)), n_nonid(g.order() - 1) {}

    long long cochain_dim(int i) const {
        long long out = M.dim;
        for (int t = 0; t < i; ++t)
            out *= n_nonid;
        return out;
    }

    // tuple entries are element indices in [1, order); index is big-endian
    std::vector<int> tuple_of_index(long long idx, int len) const {
        std::vector<int> tuple(static_cast<size_t>(len));
        for (int j = len; j-- > 0;) {
            tuple[static_cast<size_t>(j)] = static_cast<int>(idx % n_nonid) + 1;
            idx /= n_nonid;
        }
        return tuple;
    }

    long long index_of_tuple(const std::vector<int>& tuple) const {
        long long idx = 0;
        for (int e : tuple)
            idx = idx * n_nonid + (e - 1);
        return idx;
    }

    /// coboundary delta_i : C^i -> C^(i+1) as a sparse matrix
    SparseMatrixModP coboundary(int i) const {
        SparseMatrixModP out;
        out.p = M.p;
        out.n_rows = cochain_dim(i + 1);
        out.n_cols = cochain_dim(i);
        out.rows.resize(static_cast<size_t>(out.n_rows));
        const long long n_tuples_out = out.n_rows / M.dim;
        for (long long t_out = 0; t_out < n_tuples_out; ++t_out) {
            const std::vector<int> tuple = tuple_of_index(t_out, i + 1);
            for (int a = 0; a < M.dim; ++a) {
                std::map<long long, long long> entries;
                // g_1 . f(g_2, ..., g_{i+1})
                {
                    std::vector<int> rest(tuple.begin() + 1, tuple.end());
                    const long long base = index_of_tuple(rest) * M.dim;
                    const Mat& act = mats[static_cast<size_t>(tuple[0])];
                    for (int b = 0; b < M.dim; ++b) {
                        const long long c =
                            act[static_cast<size_t>(a)][static_cast<size_t>(b)];
                        if (c != 0)
                            entries[base + b] += c;
                    }
                }
                // alternating face maps merging adjacent entries
                for (int j = 1; j <= i; ++j) {
                    const int merged = G.product_index(tuple[static_cast<size_t>(j - 1)],
                                                       tuple[static_cast<size_t>(j)]);
                    if (merged == 0)
                        continue; // normalized: functionals vanish on identity slots
                    std::vector<int> face;
                    face.reserve(static_cast<size_t>(i));
                    for (int t = 0; t <= i; ++t) {
                        if (t == j - 1) {
                            face.push_back(merged);
                            ++t; // skip position j
                        } else {
                            face.push_back(tuple[static_cast<size_t>(t)]);
                        }
                    }
                    entries[index_of_tuple(face) * M.dim + a] += (j % 2 == 0) ? 1 : -1;
                }
                // last face: drop g_{i+1}
                {
                    std::vector<int> face(tuple.begin(), tuple.end() - 1);
                    entries[index_of_tuple(face) * M.dim + a] +=
                        ((i + 1) % 2 == 0) ? 1 : -1;
                }
                auto& row = out.rows[static_cast<size_t>(t_out * M.dim + a)];
                for (const auto& [col, val] : entries) {
                    long long v = val % M.p;
                    if (v < 0)
                        v += M.p;
                    if (v != 0)
                        row.emplace_back(col, v);
                }
            }
        }
        return out;
    }
};

} // namespace

std::vector<long long> bar_cohomology_dims(const FiniteGroup& G, const ModuleRep& M,
                                           int i_max, long long budget) {
    if (i_max < 0)
        throw InvalidParams("bar_cohomology_dims: i_max must be >= 0");
    if (checked_pow(G.order(), i_max + 1, budget / std::max(1, M.dim)) * M.dim > budget)
        throw ResourceLimit("bar_cohomology_dims: |G|^(i+1) * dim exceeds budget");
    const BarComplex bar(G, M);
    std::vector<long long> ranks; // rank of delta_i for i = 0..i_max
    for (int i = 0; i <= i_max; ++i)
        ranks.push_back(rank_mod_p(bar.coboundary(i)));
    std::vector<long long> dims;
    for (int i = 0; i <= i_max; ++i) {
        const long long kernel = bar.cochain_dim(i) - ranks[static_cast<size_t>(i)];
        dims.push_back(i == 0 ? kernel : kernel - ranks[static_cast<size_t>(i - 1)]);
    }
    return dims;
}

long long bar_cohomology_dim(const FiniteGroup& G, const ModuleRep& M, int i,
                             long long budget) {
    return bar_cohomology_dims(G, M, i, budget)[static_cast<size_t>(i)];
}

bool shapiro_vanishing_check(long long p, long long q, int i_max, long long budget) {
    const FiniteGroup G = metacyclic_group(metacyclic_params(p, q));
    // permutation module on the cosets of the complement <y>
    const ModuleRep induced =
        permutation_module(p, coset_images(G, {G.generators()[1]}));
    const auto dims = bar_cohomology_dims(G, induced, i_max, budget);
    for (int i = 1; i <= i_max; ++i)
        if (dims[static_cast<size_t>(i)] != 0)
            return false;
    return true;
}

} // namespace minact
