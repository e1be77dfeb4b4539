#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace rigged {

// Integer Laurent polynomial in a single variable q.  Exponents may be
// negative; coefficients are exact 64-bit integers with overflow checks.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;

    static LaurentPolynomial zero() { return LaurentPolynomial{}; }
    static LaurentPolynomial one() { return monomial(0, 1); }
    static LaurentPolynomial monomial(std::int64_t exponent, std::int64_t coefficient);

    bool is_zero() const { return terms_.empty(); }

    std::int64_t coefficient(std::int64_t exponent) const;
    void add_term(std::int64_t exponent, std::int64_t coefficient);

    // Lowest/highest exponent with a nonzero coefficient; throws on zero.
    std::int64_t min_exponent() const;
    std::int64_t max_exponent() const;

    // Sum of all coefficients, i.e. the evaluation at q = 1.
    std::int64_t evaluate_at_one() const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    LaurentPolynomial& operator-=(const LaurentPolynomial& other);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
        a += b;
        return a;
    }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
        a -= b;
        return a;
    }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

    // Multiplies by q^shift.
    LaurentPolynomial shifted(std::int64_t shift) const;

    bool operator==(const LaurentPolynomial& other) const = default;

    const std::map<std::int64_t, std::int64_t>& terms() const { return terms_; }

    // Human-readable single-line form, e.g. "q^-1 + 2 + 3*q + q^3"; "0" when zero.
    std::string to_string() const;

private:
    // exponent -> coefficient, zero coefficients never stored
    std::map<std::int64_t, std::int64_t> terms_;
};

}  // namespace rigged
