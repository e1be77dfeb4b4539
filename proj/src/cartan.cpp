#include "rigged/cartan.hpp"

#include "rigged/checked.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rigged {

Family family_from_string(const std::string& s) {
    if (s == "A") return Family::A;
    if (s == "D") return Family::D;
    if (s == "E") return Family::E;
    throw std::invalid_argument("unknown algebra family '" + s + "' (expected A, D or E)");
}

std::string family_to_string(Family f) {
    switch (f) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::E: return "E";
    }
    throw std::logic_error("unreachable family");
}

namespace {

std::vector<std::pair<int, int>> dynkin_edges(Family family, int rank) {
    std::vector<std::pair<int, int>> edges;
    switch (family) {
    case Family::A:
        if (rank < 1) throw std::invalid_argument("type A requires rank >= 1");
        for (int i = 1; i < rank; ++i) edges.emplace_back(i, i + 1);
        break;
    case Family::D:
        if (rank < 4) throw std::invalid_argument("type D requires rank >= 4");
        for (int i = 1; i < rank - 2; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(rank - 2, rank - 1);
        edges.emplace_back(rank - 2, rank);
        break;
    case Family::E:
        if (rank < 6 || rank > 8) throw std::invalid_argument("type E requires rank 6, 7 or 8");
        edges.emplace_back(1, 3);
        for (int i = 3; i < rank; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(2, 4);
        break;
    }
    return edges;
}

} // namespace

AlgebraData::AlgebraData(Family family, int rank) : family_(family), rank_(rank) {
    a_.assign(static_cast<size_t>(rank), std::vector<std::int64_t>(static_cast<size_t>(rank), 0));
    for (int i = 1; i <= rank; ++i) a_[static_cast<size_t>(i - 1)][static_cast<size_t>(i - 1)] = 2;
    for (auto [u, v] : dynkin_edges(family, rank)) {
        a_[static_cast<size_t>(u - 1)][static_cast<size_t>(v - 1)] = -1;
        a_[static_cast<size_t>(v - 1)][static_cast<size_t>(u - 1)] = -1;
    }
}

std::int64_t AlgebraData::cartan(int a, int b) const {
    check_node(a);
    check_node(b);
    return a_[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)];
}

void AlgebraData::check_node(int a) const {
    if (a < 1 || a > rank_) {
        std::ostringstream os;
        os << "node " << a << " out of range 1.." << rank_;
        throw std::invalid_argument(os.str());
    }
}

bool Weight::dominant() const {
    for (auto v : c_)
        if (v < 0) return false;
    return true;
}

Weight Weight::minus_alpha(int a, const AlgebraData& alg) const {
    if (rank() != alg.rank()) throw std::invalid_argument("weight rank does not match algebra rank");
    alg.check_node(a);
    std::vector<std::int64_t> out = c_;
    for (int b = 1; b <= alg.rank(); ++b)
        out[static_cast<size_t>(b - 1)] = checked_sub(out[static_cast<size_t>(b - 1)], alg.cartan(b, a));
    return Weight(std::move(out));
}

std::string Weight::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ',';
        os << c_[i];
    }
    os << ')';
    return os.str();
}

TypeATuple::TypeATuple(std::vector<std::int64_t> lam) : lam_(std::move(lam)) {
    if (lam_.size() < 2) throw std::invalid_argument("type-A tuple needs at least two entries");
    for (auto v : lam_)
        if (v < 0) throw std::invalid_argument("type-A tuple entries must be nonnegative");
}

std::int64_t TypeATuple::sum() const {
    std::int64_t s = 0;
    for (auto v : lam_) s = checked_add(s, v);
    return s;
}

Weight TypeATuple::to_weight() const {
    std::vector<std::int64_t> coords(lam_.size() - 1);
    for (size_t a = 0; a + 1 < lam_.size(); ++a) coords[a] = lam_[a] - lam_[a + 1];
    return Weight(std::move(coords));
}

std::vector<std::int64_t> TypeATuple::column_lengths() const {
    std::vector<std::int64_t> c(lam_.size() - 1, 0);
    std::int64_t tail = 0;
    for (size_t k = lam_.size() - 1; k >= 1; --k) {
        tail = checked_add(tail, lam_[k]);
        c[k - 1] = tail;
    }
    return c;
}

std::string TypeATuple::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < lam_.size(); ++i) {
        if (i) os << ',';
        os << lam_[i];
    }
    os << ')';
    return os.str();
}

std::vector<std::int64_t> tuple_from_weight_or_empty(const Weight& mu, std::int64_t total) {
    const int n = mu.rank() + 1;
    // lambda_a = lambda_n + sum_{b>=a} mu_b and n*lambda_n = total - sum_b b*mu_b.
    std::int64_t weighted = 0;
    for (int b = 1; b < n; ++b) weighted = checked_add(weighted, checked_mul(b, mu[b]));
    std::int64_t num = checked_sub(total, weighted);
    if (num % n != 0) return {};
    std::int64_t lam_n = num / n;
    std::vector<std::int64_t> lam(static_cast<size_t>(n));
    lam[static_cast<size_t>(n - 1)] = lam_n;
    for (int a = n - 1; a >= 1; --a)
        lam[static_cast<size_t>(a - 1)] = checked_add(lam[static_cast<size_t>(a)], mu[a]);
    for (auto v : lam)
        if (v < 0) return {};
    return lam;
}

} // namespace rigged
