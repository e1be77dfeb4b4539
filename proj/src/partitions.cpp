#include "rigged/partitions.hpp"

#include <stdexcept>

namespace rigged {

namespace {

void partitions_rec(std::int64_t n, std::int64_t max_part, Partition& cur,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    // Smallest first part first gives lexicographic order overall.
    for (std::int64_t first = 1; first <= std::min(n, max_part); ++first) {
        cur.push_back(first);
        partitions_rec(n - first, first, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative argument");
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(n, n == 0 ? 1 : n, cur, out);
    return out;
}

namespace {

void weak_rec(std::int64_t m, std::int64_t lo, std::int64_t hi, std::vector<std::int64_t>& cur,
              std::vector<std::vector<std::int64_t>>& out) {
    if (static_cast<std::int64_t>(cur.size()) == m) {
        out.push_back(cur);
        return;
    }
    std::int64_t cap = cur.empty() ? hi : cur.back();
    for (std::int64_t v = lo; v <= cap; ++v) {
        cur.push_back(v);
        weak_rec(m, lo, hi, cur, out);
        cur.pop_back();
    }
}

void strict_rec(std::int64_t k, std::int64_t limit, std::int64_t next, std::vector<std::int64_t>& cur,
                std::vector<std::vector<std::int64_t>>& out) {
    if (static_cast<std::int64_t>(cur.size()) == k) {
        std::vector<std::int64_t> dec(cur.rbegin(), cur.rend());
        out.push_back(std::move(dec));
        return;
    }
    std::int64_t remaining = k - static_cast<std::int64_t>(cur.size());
    for (std::int64_t v = next; v + remaining - 1 <= limit; ++v) {
        cur.push_back(v);
        strict_rec(k, limit, v + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::vector<std::int64_t>> weakly_decreasing_tuples(std::int64_t m, std::int64_t lo,
                                                                std::int64_t hi) {
    if (m < 0) throw std::invalid_argument("weakly_decreasing_tuples: negative length");
    std::vector<std::vector<std::int64_t>> out;
    if (m == 0) {
        out.push_back({});
        return out;
    }
    if (lo > hi) return out;
    std::vector<std::int64_t> cur;
    weak_rec(m, lo, hi, cur, out);
    return out;
}

std::vector<std::vector<std::int64_t>> strictly_decreasing_tuples(std::int64_t k,
                                                                  std::int64_t limit) {
    if (k < 0) throw std::invalid_argument("strictly_decreasing_tuples: negative length");
    std::vector<std::vector<std::int64_t>> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    if (limit < k) return out;
    std::vector<std::int64_t> cur;
    strict_rec(k, limit, 1, cur, out);
    return out;
}

} // namespace rigged
