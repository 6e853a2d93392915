#include "kvl/truth_table.hpp"

#include <string>
#include <utility>

namespace kvl {

std::size_t num_cells(int k, int n) {
    if (k < 2)
        throw DomainError("order k must be at least 2");
    if (k > kMaxOrder)
        throw CapacityError("order k exceeds the cap of 64");
    if (n < 1)
        throw DomainError("arity n must be at least 1");
    std::size_t cells = 1;
    for (int i = 0; i < n; ++i) {
        if (cells > kMaxCells / static_cast<std::size_t>(k))
            throw CapacityError("k^n exceeds the 2^28 cell cap");
        cells *= static_cast<std::size_t>(k);
    }
    if (cells > kMaxCells)
        throw CapacityError("k^n exceeds the 2^28 cell cap");
    return cells;
}

std::size_t flat_index(std::span<const Value> a, int k) {
    num_cells(k, static_cast<int>(a.size()));
    std::size_t index = 0;
    for (Value coord : a) {
        if (coord >= k)
            throw DomainError("assignment coordinate " + std::to_string(int{coord}) +
                              " out of E_" + std::to_string(k));
        index = index * static_cast<std::size_t>(k) + coord;
    }
    return index;
}

Assignment assignment_at(std::size_t index, int k, int n) {
    std::size_t cells = num_cells(k, n);
    if (index >= cells)
        throw DomainError("flat index out of range");
    Assignment a(static_cast<std::size_t>(n));
    for (int j = n - 1; j >= 0; --j) {
        a[static_cast<std::size_t>(j)] = static_cast<Value>(index % static_cast<std::size_t>(k));
        index /= static_cast<std::size_t>(k);
    }
    return a;
}

TruthTable::TruthTable(int k, int n, std::vector<Value> values)
    : k_(k), n_(n), values_(std::move(values)) {
    std::size_t cells = num_cells(k, n);
    if (values_.size() != cells)
        throw LengthError("expected " + std::to_string(cells) + " values, got " +
                          std::to_string(values_.size()));
    for (Value v : values_)
        if (v >= k)
            throw DomainError("table value " + std::to_string(int{v}) + " out of E_" +
                              std::to_string(k));
}

TruthTable TruthTable::constant(int k, int n, Value v) {
    return TruthTable(k, n, std::vector<Value>(num_cells(k, n), v));
}

Value TruthTable::evaluate(std::span<const Value> a) const {
    if (static_cast<int>(a.size()) != n_)
        throw ArityError("assignment has " + std::to_string(a.size()) +
                         " coordinates, table arity is " + std::to_string(n_));
    return values_[flat_index(a, k_)];
}

Value HypercubeView::at(std::span<const int> indices) const {
    if (static_cast<int>(indices.size()) != table_->arity())
        throw ArityError("index tuple length does not match table arity");
    Assignment a(indices.size());
    for (std::size_t j = 0; j < indices.size(); ++j) {
        if (indices[j] < 1 || indices[j] > table_->order())
            throw DomainError("1-based index out of [1, k]");
        a[j] = static_cast<Value>(indices[j] - 1);
    }
    return table_->evaluate(a);
}

void validate_variable_set(const VariableSet& vars, int n) {
    for (int v : vars)
        if (v < 1 || v > n)
            throw DomainError("variable position " + std::to_string(v) + " out of [1, " +
                              std::to_string(n) + "]");
}

} // namespace kvl
