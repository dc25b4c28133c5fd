#include "minact/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "minact/modular.hpp"

namespace minact {

namespace {

// exact division of integer polynomials, remainder must vanish
std::vector<long long> poly_div_exact(std::vector<long long> num,
                                      const std::vector<long long>& den) {
    const size_t dn = num.size() - 1, dd = den.size() - 1;
    std::vector<long long> quot(dn - dd + 1, 0);
    for (size_t i = dn + 1; i-- > dd;) {
        const long long c = num[i] / den[dd];
        quot[i - dd] = c;
        if (c != 0)
            for (size_t j = 0; j <= dd; ++j)
                num[i - dd + j] -= c * den[j];
    }
    for (long long v : num)
        if (v != 0)
            throw Error("poly_div_exact: nonzero remainder");
    return quot;
}

std::vector<long long> compute_cyclotomic(long long m);

std::map<long long, std::vector<long long>>& cyclo_cache() {
    static std::map<long long, std::vector<long long>> cache;
    return cache;
}
std::mutex cyclo_mutex;

std::vector<long long> cyclotomic_cached(long long m) {
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    auto it = cyclo_cache().find(m);
    if (it != cyclo_cache().end())
        return it->second;
    auto poly = compute_cyclotomic(m);
    cyclo_cache().emplace(m, poly);
    return poly;
}

std::vector<long long> compute_cyclotomic(long long m) {
    if (m == 1)
        return {-1, 1}; // x - 1
    std::vector<long long> f(static_cast<size_t>(m + 1), 0);
    f[0] = -1;
    f[static_cast<size_t>(m)] = 1; // x^m - 1
    for (long long d = 1; d < m; ++d) {
        if (m % d != 0)
            continue;
        auto it = cyclo_cache().find(d);
        const std::vector<long long> phi_d =
            (it != cyclo_cache().end()) ? it->second : compute_cyclotomic(d);
        cyclo_cache().emplace(d, phi_d);
        f = poly_div_exact(std::move(f), phi_d);
    }
    return f;
}

struct ReductionTable {
    long long m = 1;
    long long phi = 1;
    // rows[j - phi] = zeta^j in the power basis, for j in [phi, m)
    std::vector<std::vector<long long>> rows;
};

std::mutex table_mutex;

const ReductionTable& reduction_table(long long m) {
    static std::map<long long, ReductionTable> cache;
    std::lock_guard<std::mutex> lock(table_mutex);
    auto it = cache.find(m);
    if (it != cache.end())
        return it->second;
    ReductionTable t;
    t.m = m;
    const auto poly = cyclotomic_cached(m);
    t.phi = static_cast<long long>(poly.size()) - 1;
    const size_t phi = static_cast<size_t>(t.phi);
    if (t.phi < m) {
        // zeta^phi = -(poly[0] + ... + poly[phi-1] zeta^{phi-1})
        std::vector<long long> cur(phi);
        for (size_t j = 0; j < phi; ++j)
            cur[j] = -poly[j];
        t.rows.push_back(cur);
        for (long long j = t.phi + 1; j < m; ++j) {
            std::vector<long long> next(phi, 0);
            const long long top = cur[phi - 1];
            for (size_t i = phi; i-- > 1;)
                next[i] = cur[i - 1];
            next[0] = 0;
            if (top != 0)
                for (size_t i = 0; i < phi; ++i)
                    next[i] += top * t.rows[0][i];
            t.rows.push_back(next);
            cur = std::move(next);
        }
    }
    return cache.emplace(m, std::move(t)).first->second;
}

// fold exponents mod m, then reduce degrees >= phi(m) via the table
std::vector<long long> canonicalize(long long m, const std::vector<long long>& raw) {
    std::vector<long long> folded(static_cast<size_t>(m), 0);
    for (size_t j = 0; j < raw.size(); ++j)
        if (raw[j] != 0)
            folded[j % static_cast<size_t>(m)] += raw[j];
    const auto& table = reduction_table(m);
    const size_t phi = static_cast<size_t>(table.phi);
    std::vector<long long> out(static_cast<size_t>(m), 0);
    for (size_t j = 0; j < phi && j < folded.size(); ++j)
        out[j] = folded[j];
    for (size_t j = phi; j < folded.size(); ++j) {
        const long long c = folded[j];
        if (c == 0)
            continue;
        const auto& row = table.rows[j - phi];
        for (size_t i = 0; i < phi; ++i)
            out[i] += c * row[i];
    }
    return out;
}

} // namespace

std::vector<long long> cyclotomic_polynomial(long long m) {
    if (m < 1)
        throw InvalidParams("cyclotomic_polynomial: m must be >= 1");
    return cyclotomic_cached(m);
}

long long euler_phi(long long m) {
    return static_cast<long long>(cyclotomic_polynomial(m).size()) - 1;
}

CyclotomicInteger CyclotomicInteger::integer(long long v) {
    return CyclotomicInteger(1, {v});
}

CyclotomicInteger CyclotomicInteger::root_of_unity(long long m, long long j) {
    if (m < 1)
        throw InvalidParams("root_of_unity: m must be >= 1");
    std::vector<long long> raw(static_cast<size_t>(m), 0);
    long long r = j % m;
    if (r < 0)
        r += m;
    raw[static_cast<size_t>(r)] = 1;
    return from_raw(m, raw);
}

CyclotomicInteger CyclotomicInteger::from_raw(long long m,
                                              const std::vector<long long>& raw) {
    if (m < 1)
        throw InvalidParams("from_raw: m must be >= 1");
    return CyclotomicInteger(m, canonicalize(m, raw));
}

CyclotomicInteger CyclotomicInteger::promoted(long long new_conductor) const {
    if (new_conductor == conductor_)
        return *this;
    if (new_conductor % conductor_ != 0)
        throw InvalidParams("promoted: new conductor must be a multiple");
    const long long step = new_conductor / conductor_;
    std::vector<long long> raw(static_cast<size_t>(new_conductor), 0);
    for (size_t j = 0; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0)
            raw[j * static_cast<size_t>(step)] = coeffs_[j];
    return from_raw(new_conductor, raw);
}

CyclotomicInteger CyclotomicInteger::operator+(const CyclotomicInteger& o) const {
    const long long m = lcm_ll(conductor_, o.conductor_);
    const CyclotomicInteger a = promoted(m), b = o.promoted(m);
    std::vector<long long> sum = a.coeffs_;
    for (size_t j = 0; j < sum.size(); ++j)
        sum[j] += b.coeffs_[j];
    return CyclotomicInteger(m, std::move(sum)); // sum of canonicals is canonical
}

CyclotomicInteger CyclotomicInteger::operator-(const CyclotomicInteger& o) const {
    return *this + (-o);
}

CyclotomicInteger CyclotomicInteger::operator-() const {
    std::vector<long long> neg = coeffs_;
    for (auto& v : neg)
        v = -v;
    return CyclotomicInteger(conductor_, std::move(neg));
}

CyclotomicInteger CyclotomicInteger::scaled(long long c) const {
    std::vector<long long> out = coeffs_;
    for (auto& v : out)
        v *= c;
    return CyclotomicInteger(conductor_, std::move(out));
}

CyclotomicInteger CyclotomicInteger::operator*(const CyclotomicInteger& o) const {
    const long long m = lcm_ll(conductor_, o.conductor_);
    const CyclotomicInteger a = promoted(m), b = o.promoted(m);
    std::vector<long long> raw(2 * static_cast<size_t>(m), 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            if (b.coeffs_[j] != 0)
                raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return from_raw(m, raw);
}

CyclotomicInteger CyclotomicInteger::conjugate() const {
    std::vector<long long> raw(static_cast<size_t>(conductor_), 0);
    for (size_t j = 0; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0)
            raw[static_cast<size_t>((conductor_ - static_cast<long long>(j)) %
                                    conductor_)] += coeffs_[j];
    return from_raw(conductor_, raw);
}

bool CyclotomicInteger::operator==(const CyclotomicInteger& o) const {
    if (conductor_ == o.conductor_)
        return coeffs_ == o.coeffs_;
    const long long m = lcm_ll(conductor_, o.conductor_);
    return promoted(m).coeffs_ == o.promoted(m).coeffs_;
}

bool CyclotomicInteger::is_zero() const {
    for (long long v : coeffs_)
        if (v != 0)
            return false;
    return true;
}

bool CyclotomicInteger::is_integer() const {
    for (size_t j = 1; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0)
            return false;
    return true;
}

long long CyclotomicInteger::integer_value() const {
    if (!is_integer())
        throw InvalidParams("integer_value: not a rational integer: " + to_string());
    return coeffs_[0];
}

std::string CyclotomicInteger::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        const long long c = coeffs_[j];
        if (c == 0)
            continue;
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const long long mag = c < 0 ? -c : c;
        if (j == 0) {
            os << mag;
        } else {
            if (mag != 1)
                os << mag << "*";
            os << "z" << conductor_;
            if (j > 1)
                os << "^" << j;
        }
    }
    return os.str();
}

} // namespace minact
