#include "minact/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace minact {

MetacyclicParams metacyclic_params(long long p, long long q) {
    if (!is_prime(p) || p == 2)
        throw InvalidParams("metacyclic_params: p must be an odd prime");
    if (q < 2)
        throw InvalidParams("metacyclic_params: q must be >= 2");
    if ((p - 1) % q != 0)
        throw OrderDoesNotDivide("metacyclic_params: q does not divide p-1");
    return MetacyclicParams{p, q, element_of_order(q, p)};
}

FiniteGroup::FiniteGroup(std::vector<Permutation> generators, long long budget)
    : generators_(std::move(generators)) {
    if (generators_.empty())
        generators_.push_back(Permutation::identity(1));
    degree_ = generators_[0].degree();
    for (const auto& g : generators_)
        if (g.degree() != degree_)
            throw InvalidParams("FiniteGroup: generator degrees differ");
    enumerate(budget);
    compute_classes();
    compute_derived_subgroup();
    compute_hash();
}

void FiniteGroup::enumerate(long long budget) {
    const Permutation id = Permutation::identity(degree_);
    elements_.push_back(id);
    index_.emplace(id, 0);
    words_.push_back(WordStep{-1, -1});
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int cur = queue.front();
        queue.pop_front();
        for (size_t gi = 0; gi < generators_.size(); ++gi) {
            Permutation next = elements_[static_cast<size_t>(cur)] * generators_[gi];
            if (index_.contains(next))
                continue;
            if (static_cast<long long>(elements_.size()) >= budget)
                throw TooLarge("FiniteGroup: enumeration budget exceeded");
            const int idx = static_cast<int>(elements_.size());
            index_.emplace(next, idx);
            elements_.push_back(std::move(next));
            words_.push_back(WordStep{cur, static_cast<int>(gi)});
            queue.push_back(idx);
        }
    }
    inverse_.resize(elements_.size());
    for (size_t i = 0; i < elements_.size(); ++i)
        inverse_[i] = index_.at(elements_[i].inverse());
}

int FiniteGroup::element_index(const Permutation& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

int FiniteGroup::product_index(int i, int j) const {
    return index_.at(elements_[static_cast<size_t>(i)] * elements_[static_cast<size_t>(j)]);
}

void FiniteGroup::compute_classes() {
    const int n = static_cast<int>(elements_.size());
    class_of_.assign(static_cast<size_t>(n), -1);
    std::vector<Permutation> gen_invs;
    gen_invs.reserve(generators_.size());
    for (const auto& g : generators_)
        gen_invs.push_back(g.inverse());

    struct RawClass {
        int rep_idx;
        std::vector<int> members;
    };
    std::vector<RawClass> raw;
    for (int seed = 0; seed < n; ++seed) {
        if (class_of_[static_cast<size_t>(seed)] >= 0)
            continue;
        const int cid = static_cast<int>(raw.size());
        std::vector<int> members{seed};
        class_of_[static_cast<size_t>(seed)] = cid;
        std::deque<int> queue{seed};
        while (!queue.empty()) {
            const int cur = queue.front();
            queue.pop_front();
            for (size_t gi = 0; gi < generators_.size(); ++gi) {
                const Permutation conj =
                    generators_[gi] * elements_[static_cast<size_t>(cur)] * gen_invs[gi];
                const int idx = index_.at(conj);
                if (class_of_[static_cast<size_t>(idx)] < 0) {
                    class_of_[static_cast<size_t>(idx)] = cid;
                    members.push_back(idx);
                    queue.push_back(idx);
                }
            }
        }
        // canonical representative: lexicographically smallest member
        int rep = members[0];
        for (int m : members)
            if (elements_[static_cast<size_t>(m)] < elements_[static_cast<size_t>(rep)])
                rep = m;
        raw.push_back(RawClass{rep, std::move(members)});
    }

    std::vector<int> order_of_raw(raw.size());
    for (size_t c = 0; c < raw.size(); ++c)
        order_of_raw[c] =
            static_cast<int>(elements_[static_cast<size_t>(raw[c].rep_idx)].order());

    std::vector<int> perm_ids(raw.size());
    for (size_t c = 0; c < raw.size(); ++c)
        perm_ids[c] = static_cast<int>(c);
    std::sort(perm_ids.begin(), perm_ids.end(), [&](int a, int b) {
        const auto& ca = raw[static_cast<size_t>(a)];
        const auto& cb = raw[static_cast<size_t>(b)];
        if (order_of_raw[static_cast<size_t>(a)] != order_of_raw[static_cast<size_t>(b)])
            return order_of_raw[static_cast<size_t>(a)] < order_of_raw[static_cast<size_t>(b)];
        if (ca.members.size() != cb.members.size())
            return ca.members.size() < cb.members.size();
        return elements_[static_cast<size_t>(ca.rep_idx)] <
               elements_[static_cast<size_t>(cb.rep_idx)];
    });

    std::vector<int> new_id(raw.size());
    classes_.clear();
    for (size_t pos = 0; pos < perm_ids.size(); ++pos) {
        const int old = perm_ids[pos];
        new_id[static_cast<size_t>(old)] = static_cast<int>(pos);
        const auto& rc = raw[static_cast<size_t>(old)];
        classes_.push_back(ConjugacyClass{elements_[static_cast<size_t>(rc.rep_idx)],
                                          static_cast<long long>(rc.members.size()),
                                          order_of_raw[static_cast<size_t>(old)]});
    }
    for (auto& c : class_of_)
        c = new_id[static_cast<size_t>(c)];

    exponent_ = 1;
    for (const auto& c : classes_)
        exponent_ = lcm_ll(exponent_, c.element_order);

    power_classes_.clear();
    for (const auto& c : classes_) {
        std::vector<int> pc;
        pc.reserve(static_cast<size_t>(c.element_order));
        Permutation acc = Permutation::identity(degree_);
        for (long long t = 0; t < c.element_order; ++t) {
            pc.push_back(class_of_[static_cast<size_t>(index_.at(acc))]);
            acc = acc * c.representative;
        }
        power_classes_.push_back(std::move(pc));
    }
}

int FiniteGroup::power_class(int class_idx, long long t) const {
    const auto& pc = power_classes_[static_cast<size_t>(class_idx)];
    const long long m = static_cast<long long>(pc.size());
    long long r = t % m;
    if (r < 0)
        r += m;
    return pc[static_cast<size_t>(r)];
}

void FiniteGroup::compute_derived_subgroup() {
    // normal closure of the commutators of generator pairs
    std::set<int> closure_gens;
    for (size_t a = 0; a < generators_.size(); ++a) {
        for (size_t b = a + 1; b < generators_.size(); ++b) {
            const Permutation comm = generators_[a] * generators_[b] *
                                     generators_[a].inverse() * generators_[b].inverse();
            closure_gens.insert(index_.at(comm));
        }
    }
    std::vector<char> in_sub(elements_.size(), 0);
    std::vector<int> members;
    for (;;) {
        std::fill(in_sub.begin(), in_sub.end(), 0);
        members.clear();
        members.push_back(0);
        in_sub[0] = 1;
        std::deque<int> queue{0};
        while (!queue.empty()) {
            const int cur = queue.front();
            queue.pop_front();
            for (int s : closure_gens) {
                const int prod = product_index(cur, s);
                if (!in_sub[static_cast<size_t>(prod)]) {
                    in_sub[static_cast<size_t>(prod)] = 1;
                    members.push_back(prod);
                    queue.push_back(prod);
                }
            }
        }
        bool grew = false;
        for (int m : members) {
            for (size_t gi = 0; gi < generators_.size(); ++gi) {
                const Permutation conj = generators_[gi] *
                                         elements_[static_cast<size_t>(m)] *
                                         generators_[gi].inverse();
                const int idx = index_.at(conj);
                if (!in_sub[static_cast<size_t>(idx)]) {
                    closure_gens.insert(idx);
                    grew = true;
                }
            }
        }
        if (!grew)
            break;
    }
    derived_order_ = static_cast<long long>(members.size());
}

bool FiniteGroup::has_trivial_center() const {
    for (size_t c = 1; c < classes_.size(); ++c)
        if (classes_[c].size == 1)
            return false;
    return true;
}

void FiniteGroup::compute_hash() {
    std::vector<const Permutation*> sorted;
    sorted.reserve(elements_.size());
    for (const auto& e : elements_)
        sorted.push_back(&e);
    std::sort(sorted.begin(), sorted.end(),
              [](const Permutation* a, const Permutation* b) { return *a < *b; });
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    mix(static_cast<uint64_t>(degree_));
    mix(static_cast<uint64_t>(elements_.size()));
    for (const auto* p : sorted)
        for (int v : p->images())
            mix(static_cast<uint64_t>(v));
    hash_ = h;
}

FiniteGroup metacyclic_group(const MetacyclicParams& params, long long budget) {
    const long long p = params.p;
    if (!is_prime(p) || p == 2)
        throw InvalidParams("metacyclic_group: p must be an odd prime");
    if (params.k.modulus != p)
        throw InvalidParams("metacyclic_group: k must be a residue mod p");
    if (mul_order(params.k) != params.q)
        throw InvalidParams("metacyclic_group: k does not have order q mod p");
    std::vector<int> ximg(static_cast<size_t>(p)), yimg(static_cast<size_t>(p));
    for (long long i = 0; i < p; ++i) {
        ximg[static_cast<size_t>(i)] = static_cast<int>((i + 1) % p);
        yimg[static_cast<size_t>(i)] = static_cast<int>(params.k.value * i % p);
    }
    return FiniteGroup({Permutation(std::move(ximg)), Permutation(std::move(yimg))},
                       budget);
}

FiniteGroup psl2(long long p, long long budget) {
    if (!is_prime(p) || p < 5)
        throw InvalidParams("psl2: p must be a prime >= 5");
    const int inf = static_cast<int>(p);
    std::vector<int> timg(static_cast<size_t>(p + 1)), simg(static_cast<size_t>(p + 1));
    for (long long z = 0; z < p; ++z)
        timg[static_cast<size_t>(z)] = static_cast<int>((z + 1) % p);
    timg[static_cast<size_t>(inf)] = inf;
    simg[0] = inf;
    simg[static_cast<size_t>(inf)] = 0;
    for (long long z = 1; z < p; ++z)
        simg[static_cast<size_t>(z)] = static_cast<int>((p - inv_mod(z, p)) % p);
    return FiniteGroup({Permutation(std::move(timg)), Permutation(std::move(simg))},
                       budget);
}

FiniteGroup symmetric_group(int n, long long budget) {
    if (n < 3)
        throw InvalidParams("symmetric_group: n must be >= 3");
    std::vector<int> swap01(static_cast<size_t>(n)), cycle(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        swap01[static_cast<size_t>(i)] = i;
        cycle[static_cast<size_t>(i)] = (i + 1) % n;
    }
    swap01[0] = 1;
    swap01[1] = 0;
    return FiniteGroup({Permutation(std::move(swap01)), Permutation(std::move(cycle))},
                       budget);
}

FiniteGroup alternating_group(int n, long long budget) {
    if (n < 5)
        throw InvalidParams("alternating_group: n must be >= 5");
    std::vector<int> three(static_cast<size_t>(n)), cycle(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        three[static_cast<size_t>(i)] = i;
        cycle[static_cast<size_t>(i)] = i;
    }
    three[0] = 1;
    three[1] = 2;
    three[2] = 0;
    if (n % 2 == 1) {
        for (int i = 0; i < n; ++i)
            cycle[static_cast<size_t>(i)] = (i + 1) % n;
    } else {
        for (int i = 1; i < n; ++i)
            cycle[static_cast<size_t>(i)] = i % (n - 1) + 1;
    }
    return FiniteGroup({Permutation(std::move(three)), Permutation(std::move(cycle))},
                       budget);
}

FiniteGroup cyclic_group(long long n, long long budget) {
    if (n < 1)
        throw InvalidParams("cyclic_group: n must be >= 1");
    std::vector<int> img(static_cast<size_t>(n));
    for (long long i = 0; i < n; ++i)
        img[static_cast<size_t>(i)] = static_cast<int>((i + 1) % n);
    return FiniteGroup({Permutation(std::move(img))}, budget);
}

std::vector<Permutation> coset_images(const FiniteGroup& G,
                                      const std::vector<Permutation>& subgroup_gens) {
    std::vector<int> sgen_idx;
    for (const auto& g : subgroup_gens) {
        const int idx = G.element_index(g);
        if (idx < 0)
            throw NotASubgroup("coset_images: generator not in G");
        sgen_idx.push_back(idx);
    }
    // subgroup closure (finite, so right-multiplication closure suffices)
    const long long n = G.order();
    std::vector<char> in_h(static_cast<size_t>(n), 0);
    std::vector<int> h_members{0};
    in_h[0] = 1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int cur = queue.front();
        queue.pop_front();
        for (int s : sgen_idx) {
            const int prod = G.product_index(cur, s);
            if (!in_h[static_cast<size_t>(prod)]) {
                in_h[static_cast<size_t>(prod)] = 1;
                h_members.push_back(prod);
                queue.push_back(prod);
            }
        }
    }

    std::vector<int> coset_of(static_cast<size_t>(n), -1);
    std::vector<int> coset_rep;
    for (int e = 0; e < n; ++e) {
        if (coset_of[static_cast<size_t>(e)] >= 0)
            continue;
        const int cid = static_cast<int>(coset_rep.size());
        coset_rep.push_back(e);
        for (int h : h_members)
            coset_of[static_cast<size_t>(G.product_index(e, h))] = cid;
    }

    const int n_cosets = static_cast<int>(coset_rep.size());
    std::vector<Permutation> image_gens;
    for (const auto& gen : G.generators()) {
        const int gidx = G.element_index(gen);
        std::vector<int> img(static_cast<size_t>(n_cosets));
        for (int c = 0; c < n_cosets; ++c)
            img[static_cast<size_t>(c)] =
                coset_of[static_cast<size_t>(G.product_index(gidx, coset_rep[static_cast<size_t>(c)]))];
        image_gens.push_back(Permutation(std::move(img)));
    }
    return image_gens;
}

FiniteGroup coset_action(const FiniteGroup& G,
                         const std::vector<Permutation>& subgroup_gens,
                         long long budget) {
    return FiniteGroup(coset_images(G, subgroup_gens), budget);
}

std::pair<FiniteGroup, MetacyclicParams> borel_subgroup_psl2(long long p,
                                                             long long budget) {
    if (!is_prime(p) || p < 5)
        throw InvalidParams("borel_subgroup_psl2: p must be a prime >= 5");
    const Residue g = primitive_root(p);
    const Residue k2 = g.pow(2); // order (p-1)/2
    const int inf = static_cast<int>(p);
    std::vector<int> timg(static_cast<size_t>(p + 1)), dimg(static_cast<size_t>(p + 1));
    for (long long z = 0; z < p; ++z) {
        timg[static_cast<size_t>(z)] = static_cast<int>((z + 1) % p);
        dimg[static_cast<size_t>(z)] = static_cast<int>(k2.value * z % p);
    }
    timg[static_cast<size_t>(inf)] = inf;
    dimg[static_cast<size_t>(inf)] = inf;
    FiniteGroup borel({Permutation(std::move(timg)), Permutation(std::move(dimg))},
                      budget);
    return {std::move(borel), MetacyclicParams{p, (p - 1) / 2, k2}};
}

} // namespace minact
