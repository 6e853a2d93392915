#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kvl/partition.hpp"
#include "kvl/truth_table.hpp"

namespace kvl {

/// A set of variables bound to constants, the M of g ≺^M f.
struct Fixing {
    std::map<int, Value> bindings; // 1-based position -> constant

    bool operator==(const Fixing&) const = default;
};

enum class WitnessKind { RepeatedValueOnLine, WrongRange, MissingValue };

/// Counterexample to one of the predicates below. For line witnesses,
/// `axis` is the varying variable and `values` the k values along the
/// line; for WrongRange, `axis` is the 1-based block index and `fixed`
/// the complement fixing whose subfunction has the wrong range.
struct Witness {
    WitnessKind kind;
    int axis = 0;
    Fixing fixed;
    std::vector<Value> values;
    int observed_range = 0;
    int expected_range = 0;

    std::string to_string() const;
};

struct CheckResult {
    bool ok;
    std::optional<Witness> witness;

    explicit operator bool() const { return ok; }
};

/// Rng(f): number of distinct values f assumes.
int range(const TruthTable& f);

/// Fixes the bound variables and returns the function of the remaining
/// ones (original relative order kept). An empty fixing returns f.
TruthTable subfunction(const TruthTable& f, const Fixing& fix);

/// Spr(M, f): ranges of all subfunctions obtained by fixing the
/// complement of M in every possible way. M must be nonempty.
std::set<int> spectrum(const VariableSet& m, const TruthTable& f);

/// True iff changing any single variable always changes the value.
/// For n = 1 this degenerates to a bijectivity check.
CheckResult is_h_function(const TruthTable& f);

/// True iff every axis-parallel line of the hypercube contains all k
/// symbols. Checked directly against E_k, independently of
/// is_h_function.
CheckResult is_latin_hypercube(const TruthTable& f);

/// H(S, q̄): Spr(X_i, f) = {q_i} for every block X_i of s.
CheckResult check_hsq(const TruthTable& f, const Partition& s, const QVector& qvec);

/// q̄H: Spr(x_i, f) = {q_i} for every single variable.
CheckResult check_qh(const TruthTable& f, const QVector& qvec);

/// H(q): Spr(x_i, f) = {q} for every variable; q = k is the plain
/// H-function case.
CheckResult check_hq(const TruthTable& f, int q);

/// True iff every subfunction of f with at least one free variable
/// (f itself included) is an H(q)-function.
bool hereditary_check(const TruthTable& f, int q);

/// All witnesses instead of just the first.
std::vector<Witness> all_line_witnesses(const TruthTable& f);

} // namespace kvl
