#pragma once

#include <cstdint>
#include <vector>

#include "kvl/partition.hpp"
#include "kvl/truth_table.hpp"

namespace kvl {

/// x -> (a*x + b) mod k with gcd(a, k) = 1.
struct AffineParams {
    int a;
    int b;
    int k;
};

/// One summand a_i * f_i(X_i) of a modular-sum construction.
struct BlockSummand {
    int coefficient;    // reduced mod k, coprime to k
    VariableSet block;  // the variables f_i is applied to, ascending
    TruthTable function;
};

/// f(x̄) = (a*g(x̄) + b) mod k. Preserves the range of g.
TruthTable affine_transform(const TruthTable& g, const AffineParams& p);

/// f(x̄) = Σ a_i * f_i(x̄ restricted to X_i) mod k. The blocks must
/// partition {1, ..., n}. The H(S, q̄) property of the result is not
/// verified here.
TruthTable compose_sum(int k, int n, const std::vector<BlockSummand>& summands);

/// The linear function Σ a_i * x_i mod k, a Latin hypercube when every
/// coefficient is coprime to k.
TruthTable construct_linear_h(int k, const std::vector<int>& coeffs);

/// A seeded random member of P_n^{k,q}: exactly q distinct values, each
/// occurring at least once. Deterministic per seed.
TruthTable sample_with_range(int k, int n, int q, std::uint64_t seed);

/// gcd(Σ a_{j_r} mod k, k) = 1, the hypothesis of the variable
/// identification theorem.
bool identification_condition(const std::vector<int>& coeffs, int k);

/// Substitutes one variable z for all of `vars` (|vars| >= 2). z takes
/// the position of the smallest index in vars; the other variables keep
/// their relative order. Result arity is n - |vars| + 1.
TruthTable identify_variables(const TruthTable& f, const VariableSet& vars);

} // namespace kvl
