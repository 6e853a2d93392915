#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "kvl/errors.hpp"

namespace kvl {

/// A single value of E_k = {0, ..., k-1}. k is capped at 64.
using Value = std::uint8_t;

/// A point of E_k^n, one coordinate per variable, x_1 first.
using Assignment = std::vector<Value>;

/// 1-based variable positions, subset of {1, ..., n}.
using VariableSet = std::set<int>;

inline constexpr int kMaxOrder = 64;
inline constexpr std::size_t kMaxCells = std::size_t{1} << 28;

/// k^n with the capacity cap enforced. Throws CapacityError/DomainError.
std::size_t num_cells(int k, int n);

/// Lexicographic rank of an assignment, x_1 most significant.
std::size_t flat_index(std::span<const Value> a, int k);

/// Inverse of flat_index.
Assignment assignment_at(std::size_t index, int k, int n);

/// A total function E_k^n -> E_k stored as k^n values in lexicographic
/// assignment order (x_1 most significant). Immutable after construction.
class TruthTable {
public:
    TruthTable(int k, int n, std::vector<Value> values);

    static TruthTable constant(int k, int n, Value v);

    int order() const { return k_; }
    int arity() const { return n_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<Value>& values() const { return values_; }

    Value evaluate(std::span<const Value> a) const;
    Value at(std::size_t index) const { return values_[index]; }

    bool operator==(const TruthTable&) const = default;

private:
    int k_;
    int n_;
    std::vector<Value> values_;
};

/// The 1-based n-dimensional matrix indexing of a table:
/// at(i_1, ..., i_n) = f(i_1 - 1, ..., i_n - 1).
class HypercubeView {
public:
    explicit HypercubeView(const TruthTable& table) : table_(&table) {}

    Value at(std::span<const int> indices) const;
    const TruthTable& table() const { return *table_; }

private:
    const TruthTable* table_;
};

void validate_variable_set(const VariableSet& vars, int n);

} // namespace kvl
