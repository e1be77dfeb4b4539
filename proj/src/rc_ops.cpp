#include "rigged/rc_ops.hpp"

#include "rigged/checked.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rigged {

std::int64_t vacancy(const AlgebraData& alg, const MultiplicityArray& L,
                     const Configuration& nu, int node, std::int64_t i) {
    alg.check_node(node);
    if (nu.rank() != alg.rank())
        throw std::invalid_argument("configuration rank does not match algebra rank");
    if (i < 1) throw std::invalid_argument("vacancy index must be >= 1");
    std::int64_t p = L.min_sum(node, i);
    for (int b = 1; b <= alg.rank(); ++b) {
        std::int64_t c = alg.cartan(node, b);
        if (c != 0) p = checked_sub(p, checked_mul(c, nu.min_sum(b, i)));
    }
    return p;
}

std::int64_t vacancy_at_infinity(const AlgebraData& alg, const MultiplicityArray& L,
                                 const Configuration& nu, int node) {
    alg.check_node(node);
    std::int64_t p = L.weighted_sum(node);
    for (int b = 1; b <= alg.rank(); ++b) {
        std::int64_t c = alg.cartan(node, b);
        if (c != 0) p = checked_sub(p, checked_mul(c, nu.size(b)));
    }
    return p;
}

namespace {

std::int64_t igcd(std::int64_t a, std::int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational reduce(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::logic_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = igcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

Rational rsub(Rational x, Rational y) {
    return reduce(checked_sub(checked_mul(x.num, y.den), checked_mul(y.num, x.den)),
                  checked_mul(x.den, y.den));
}

Rational rmul(Rational x, Rational y) {
    return reduce(checked_mul(x.num, y.num), checked_mul(x.den, y.den));
}

Rational rdiv(Rational x, Rational y) {
    if (y.num == 0) throw std::logic_error("rational division by zero");
    return reduce(checked_mul(x.num, y.den), checked_mul(x.den, y.num));
}

} // namespace

std::vector<Rational> solve_cartan(const AlgebraData& alg, const std::vector<std::int64_t>& rhs) {
    const int n = alg.rank();
    if (static_cast<int>(rhs.size()) != n)
        throw std::invalid_argument("rhs size does not match algebra rank");
    // Plain Gaussian elimination with exact rationals; the Cartan matrix of a
    // finite-type algebra is invertible, so a pivot always exists.
    std::vector<std::vector<Rational>> m(static_cast<size_t>(n),
                                         std::vector<Rational>(static_cast<size_t>(n + 1)));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) m[r][c] = Rational{alg.cartan(r + 1, c + 1), 1};
        m[r][static_cast<size_t>(n)] = Rational{rhs[static_cast<size_t>(r)], 1};
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col].num != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::logic_error("singular Cartan matrix");
        std::swap(m[static_cast<size_t>(col)], m[static_cast<size_t>(pivot)]);
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col].num == 0) continue;
            Rational factor = rdiv(m[r][col], m[static_cast<size_t>(col)][col]);
            for (int c = col; c <= n; ++c)
                m[r][c] = rsub(m[r][c], rmul(factor, m[static_cast<size_t>(col)][c]));
        }
    }
    std::vector<Rational> x(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r)
        x[static_cast<size_t>(r)] = rdiv(m[r][static_cast<size_t>(n)], m[r][static_cast<size_t>(r)]);
    return x;
}

std::optional<std::vector<std::int64_t>> config_sizes(const AlgebraData& alg,
                                                      const MultiplicityArray& L,
                                                      const Weight& lambda) {
    if (lambda.rank() != alg.rank())
        throw std::invalid_argument("weight rank does not match algebra rank");
    std::vector<std::int64_t> rhs(static_cast<size_t>(alg.rank()));
    for (int b = 1; b <= alg.rank(); ++b)
        rhs[static_cast<size_t>(b - 1)] = checked_sub(L.weighted_sum(b), lambda[b]);
    std::vector<Rational> x = solve_cartan(alg, rhs);
    std::vector<std::int64_t> sizes(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].den != 1 || x[i].num < 0) return std::nullopt;
        sizes[i] = x[i].num;
    }
    return sizes;
}

std::vector<Configuration> enumerate_configs(const AlgebraData& alg, const MultiplicityArray& L,
                                             const Weight& lambda) {
    std::vector<Configuration> out;
    auto sizes = config_sizes(alg, L, lambda);
    if (!sizes) return out;
    std::vector<std::vector<Partition>> choices;
    choices.reserve(sizes->size());
    for (auto s : *sizes) choices.push_back(partitions_of(s));
    // Odometer over the per-node partition lists, last node fastest.
    std::vector<size_t> idx(choices.size(), 0);
    while (true) {
        std::vector<Partition> parts(choices.size());
        for (size_t a = 0; a < choices.size(); ++a) parts[a] = choices[a][idx[a]];
        out.push_back(Configuration::from_partitions(parts));
        size_t a = choices.size();
        while (a > 0) {
            --a;
            if (++idx[a] < choices[a].size()) break;
            idx[a] = 0;
            if (a == 0) return out;
        }
    }
}

Weight rc_weight(const AlgebraData& alg, const MultiplicityArray& L, const Configuration& nu) {
    std::vector<std::int64_t> coords(static_cast<size_t>(alg.rank()));
    for (int b = 1; b <= alg.rank(); ++b)
        coords[static_cast<size_t>(b - 1)] = vacancy_at_infinity(alg, L, nu, b);
    return Weight(std::move(coords));
}

std::int64_t cocharge_shape(const AlgebraData& alg, const Configuration& nu) {
    if (nu.rank() != alg.rank())
        throw std::invalid_argument("configuration rank does not match algebra rank");
    std::int64_t twice = 0;
    for (int a = 1; a <= alg.rank(); ++a)
        for (int b = 1; b <= alg.rank(); ++b) {
            std::int64_t c = alg.cartan(a, b);
            if (c == 0) continue;
            std::int64_t s = 0;
            for (const auto& [j, mj] : nu.mult(a))
                for (const auto& [k, mk] : nu.mult(b))
                    s = checked_add(s, checked_mul(std::min(j, k), checked_mul(mj, mk)));
            twice = checked_add(twice, checked_mul(c, s));
        }
    if (twice % 2 != 0) throw std::logic_error("cocharge is not an integer");
    return twice / 2;
}

std::int64_t cocharge(const AlgebraData& alg, const RiggedConfiguration& rc) {
    return checked_add(cocharge_shape(alg, rc.shape()), rc.label_sum());
}

bool is_admissible(const AlgebraData& alg, const MultiplicityArray& L, const Configuration& nu) {
    std::int64_t top = std::max(L.max_width(), nu.max_part());
    for (int a = 1; a <= alg.rank(); ++a)
        for (std::int64_t i = 1; i <= top; ++i)
            if (vacancy(alg, L, nu, a, i) < 0) return false;
    // Beyond the support p_i^{(a)} is constant, so checking up to `top`
    // covers all i >= 1; the tail value itself is p at i = top.
    return true;
}

bool validate_rc(const AlgebraData& alg, const MultiplicityArray& L,
                 const RiggedConfiguration& rc) {
    Configuration nu = rc.shape();
    for (int a = 1; a <= alg.rank(); ++a)
        for (const auto& s : rc.strings(a))
            if (s.label > vacancy(alg, L, nu, a, s.length)) return false;
    return true;
}

} // namespace rigged
