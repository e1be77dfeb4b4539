#include "rigged/laurent.hpp"

#include <sstream>
#include <stdexcept>

#include "rigged/checked.hpp"

namespace rigged {

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t exponent, std::int64_t coefficient) {
    LaurentPolynomial p;
    p.add_term(exponent, coefficient);
    return p;
}

std::int64_t LaurentPolynomial::coefficient(std::int64_t exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

void LaurentPolynomial::add_term(std::int64_t exponent, std::int64_t coefficient) {
    if (coefficient == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(exponent, coefficient);
    if (!inserted) {
        it->second = checked_add(it->second, coefficient);
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

std::int64_t LaurentPolynomial::min_exponent() const {
    if (terms_.empty()) {
        throw std::logic_error("min_exponent of the zero polynomial");
    }
    return terms_.begin()->first;
}

std::int64_t LaurentPolynomial::max_exponent() const {
    if (terms_.empty()) {
        throw std::logic_error("max_exponent of the zero polynomial");
    }
    return terms_.rbegin()->first;
}

std::int64_t LaurentPolynomial::evaluate_at_one() const {
    std::int64_t total = 0;
    for (const auto& [exponent, coefficient] : terms_) {
        total = checked_add(total, coefficient);
    }
    return total;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
    for (const auto& [exponent, coefficient] : other.terms_) {
        add_term(exponent, coefficient);
    }
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
    for (const auto& [exponent, coefficient] : other.terms_) {
        add_term(exponent, checked_sub(0, coefficient));
    }
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial product;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            product.add_term(checked_add(ea, eb), checked_mul(ca, cb));
        }
    }
    return product;
}

LaurentPolynomial LaurentPolynomial::shifted(std::int64_t shift) const {
    LaurentPolynomial result;
    for (const auto& [exponent, coefficient] : terms_) {
        result.terms_.emplace(checked_add(exponent, shift), coefficient);
    }
    return result;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [exponent, coefficient] : terms_) {
        std::int64_t magnitude = coefficient;
        if (first) {
            if (coefficient < 0) {
                out << "-";
                magnitude = -coefficient;
            }
            first = false;
        } else {
            if (coefficient < 0) {
                out << " - ";
                magnitude = -coefficient;
            } else {
                out << " + ";
            }
        }
        if (exponent == 0) {
            out << magnitude;
        } else {
            if (magnitude != 1) {
                out << magnitude << "*";
            }
            if (exponent == 1) {
                out << "q";
            } else {
                out << "q^" << exponent;
            }
        }
    }
    return out.str();
}

}  // namespace rigged
