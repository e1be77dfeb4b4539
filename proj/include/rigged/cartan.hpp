#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace rigged {

// Simply-laced families. Node labelings:
//   A_n : chain 1 - 2 - ... - n                       (n >= 1)
//   D_n : chain 1 - 2 - ... - (n-2), fork n-1 and n   (n >= 4)
//         both attached to n-2
//   E_n : chain 1 - 3 - 4 - 5 - ... - n, node 2       (n in {6,7,8})
//         attached to node 4
enum class Family { A, D, E };

Family family_from_string(const std::string& s);
std::string family_to_string(Family f);

// Cartan datum of a simply-laced algebra. Immutable after construction.
class AlgebraData {
public:
    AlgebraData(Family family, int rank);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    bool is_type_a() const { return family_ == Family::A; }

    // Cartan matrix entry (alpha_a | alpha_b); nodes are 1-based.
    std::int64_t cartan(int a, int b) const;
    bool adjacent(int a, int b) const { return a != b && cartan(a, b) != 0; }

    void check_node(int a) const; // throws std::invalid_argument when out of range

private:
    Family family_;
    int rank_;
    std::vector<std::vector<std::int64_t>> a_; // rank x rank
};

// A weight written in fundamental-weight coordinates: mu = sum coords[a] * Lambda_a.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<std::int64_t> coords) : c_(std::move(coords)) {}

    int rank() const { return static_cast<int>(c_.size()); }
    std::int64_t operator[](int a) const { return c_.at(static_cast<size_t>(a) - 1); } // <h_a, mu>
    const std::vector<std::int64_t>& coords() const { return c_; }

    bool dominant() const;
    // mu -> mu - alpha_a (column a of the Cartan matrix in these coordinates).
    Weight minus_alpha(int a, const AlgebraData& alg) const;

    std::string to_string() const; // "(1,-1)"

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight& x, const Weight& y) { return x.c_ <=> y.c_; }

private:
    std::vector<std::int64_t> c_;
};

// A type-A content tuple lambda = (lambda_1,...,lambda_n), lambda_a >= 0,
// for the classical algebra A_{n-1}. Carries the tuple/weight conversions
// used by the lower-bound machinery and the promotion operator.
class TypeATuple {
public:
    TypeATuple() = default;
    explicit TypeATuple(std::vector<std::int64_t> lam); // throws when entries < 0 or size < 2

    int n() const { return static_cast<int>(lam_.size()); }
    std::int64_t operator[](int a) const { return lam_.at(static_cast<size_t>(a) - 1); }
    const std::vector<std::int64_t>& entries() const { return lam_; }
    std::int64_t sum() const;

    // Lambda = sum_a (lambda_a - lambda_{a+1}) Lambda_a, a = 1..n-1.
    Weight to_weight() const;

    // Column lengths c_k = lambda_{k+1} + ... + lambda_n for k = 1..n-1.
    std::vector<std::int64_t> column_lengths() const;

    std::string to_string() const;

    friend bool operator==(const TypeATuple&, const TypeATuple&) = default;

private:
    std::vector<std::int64_t> lam_;
};

// Inverse of to_weight() given the total box count: the unique tuple with
// lambda_a - lambda_{a+1} = mu_a and sum lambda = total, when it is a
// nonnegative integer tuple; empty optional otherwise.
std::vector<std::int64_t> tuple_from_weight_or_empty(const Weight& mu, std::int64_t total);

} // namespace rigged
