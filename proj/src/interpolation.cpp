#include "kvl/interpolation.hpp"

#include <sstream>
#include <string>

namespace kvl {

namespace {

int mod_pow(int base, int exp, int p) {
    int acc = 1;
    base %= p;
    while (exp > 0) {
        if (exp & 1)
            acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return acc;
}

// Fermat inverse; p prime, a != 0 mod p.
int mod_inverse(int a, int p) {
    return mod_pow(a, p - 2, p);
}

} // namespace

bool is_prime(int k) {
    if (k < 2)
        return false;
    for (int d = 2; d * d <= k; ++d)
        if (k % d == 0)
            return false;
    return true;
}

UnaryPolynomial interpolate_unary(const TruthTable& table) {
    if (table.arity() != 1)
        throw ArityError("interpolation is defined for unary tables only");
    const int p = table.order();
    if (!is_prime(p))
        throw NonPrimeModulus("analytical form requires a prime order, got " +
                              std::to_string(p));

    // Sum of y_i * L_i(x) with the Lagrange basis expanded to
    // coefficient form: L_i = prod_{j != i} (x - j) / (i - j).
    std::vector<int> coeffs(static_cast<std::size_t>(p), 0);
    for (int i = 0; i < p; ++i) {
        int y = table.at(static_cast<std::size_t>(i));
        if (y == 0)
            continue;
        std::vector<int> basis{1}; // numerator polynomial, low degree first
        int denom = 1;
        for (int j = 0; j < p; ++j) {
            if (j == i)
                continue;
            // multiply basis by (x - j)
            std::vector<int> next(basis.size() + 1, 0);
            for (std::size_t d = 0; d < basis.size(); ++d) {
                next[d + 1] = (next[d + 1] + basis[d]) % p;
                next[d] = (next[d] + basis[d] * ((p - j) % p)) % p;
            }
            basis = std::move(next);
            denom = denom * (((i - j) % p + p) % p) % p;
        }
        int scale = y * mod_inverse(denom, p) % p;
        for (std::size_t d = 0; d < basis.size(); ++d)
            coeffs[d] = (coeffs[d] + basis[d] * scale) % p;
    }

    std::vector<Value> out(coeffs.size());
    for (std::size_t d = 0; d < coeffs.size(); ++d)
        out[d] = static_cast<Value>(coeffs[d]);
    return UnaryPolynomial{p, std::move(out)};
}

Value eval_polynomial(const UnaryPolynomial& poly, Value x) {
    const int p = poly.modulus;
    if (x >= p)
        throw DomainError("evaluation point out of E_p");
    int acc = 0;
    for (auto it = poly.coefficients.rbegin(); it != poly.coefficients.rend(); ++it)
        acc = (acc * x + *it) % p;
    return static_cast<Value>(acc);
}

std::string UnaryPolynomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = 0; d < coefficients.size(); ++d) {
        if (coefficients[d] == 0)
            continue;
        if (!first)
            os << " + ";
        if (d == 0)
            os << int{coefficients[d]};
        else if (d == 1)
            os << int{coefficients[d]} << "*x";
        else
            os << int{coefficients[d]} << "*x^" << d;
        first = false;
    }
    if (first)
        os << '0';
    os << " mod " << modulus;
    return os.str();
}

} // namespace kvl
