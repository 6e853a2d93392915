#pragma once

#include <string>
#include <vector>

#include "kvl/truth_table.hpp"

namespace kvl {

/// Coefficients of a polynomial over GF(p), c_j multiplying x^j, all
/// reduced to [0, p-1]. Degree at most p - 1.
struct UnaryPolynomial {
    int modulus;
    std::vector<Value> coefficients;

    /// "c_0 + c_1*x + ... mod p"; zero terms omitted, empty sum is "0".
    std::string to_string() const;

    bool operator==(const UnaryPolynomial&) const = default;
};

/// The unique polynomial of degree <= p-1 over GF(p) matching a unary
/// table pointwise, by Lagrange interpolation. Requires prime k.
UnaryPolynomial interpolate_unary(const TruthTable& table);

/// Horner evaluation of the polynomial at x in E_p.
Value eval_polynomial(const UnaryPolynomial& poly, Value x);

bool is_prime(int k);

} // namespace kvl
