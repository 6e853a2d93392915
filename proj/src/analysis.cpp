#include "kvl/analysis.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <sstream>

namespace kvl {

namespace {

// Advances a mixed-radix counter over E_k^m; returns false on wrap.
bool next_assignment(Assignment& a, int k) {
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        if (*it + 1 < k) {
            ++*it;
            return true;
        }
        *it = 0;
    }
    return false;
}

std::string join_values(const std::vector<Value>& vals) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i) os << ',';
        os << int{vals[i]};
    }
    os << ')';
    return os.str();
}

std::string join_fixing(const Fixing& fix) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (auto [pos, val] : fix.bindings) {
        if (!first) os << ',';
        os << 'x' << pos << '=' << int{val};
        first = false;
    }
    os << ')';
    return os.str();
}

// Calls visit(fixing) for every assignment of `positions`, in
// lexicographic order. Returns false if some visit returned false.
template <class Visit>
bool for_each_fixing(const VariableSet& positions, int k, Visit&& visit) {
    std::vector<int> pos(positions.begin(), positions.end());
    Fixing fix;
    for (int p : pos)
        fix.bindings[p] = 0;
    if (pos.empty())
        return visit(fix);
    Assignment a(pos.size(), 0);
    do {
        for (std::size_t i = 0; i < pos.size(); ++i)
            fix.bindings[pos[i]] = a[i];
        if (!visit(fix))
            return false;
    } while (next_assignment(a, k));
    return true;
}

VariableSet complement(const VariableSet& m, int n) {
    VariableSet out;
    for (int v = 1; v <= n; ++v)
        if (!m.contains(v))
            out.insert(v);
    return out;
}

// Scans axis-parallel lines in (axis, fixed coordinates) order and
// reports the first line whose value set differs from E_k. Reused by
// both predicates; only the witness kind differs.
std::optional<Witness> first_bad_line(const TruthTable& f, WitnessKind kind) {
    const int k = f.order();
    const int n = f.arity();
    for (int axis = 1; axis <= n; ++axis) {
        VariableSet others = complement({axis}, n);
        std::optional<Witness> found;
        for_each_fixing(others, k, [&](const Fixing& fix) {
            Assignment a(static_cast<std::size_t>(n), 0);
            for (auto [pos, val] : fix.bindings)
                a[static_cast<std::size_t>(pos - 1)] = val;
            std::vector<Value> line(static_cast<std::size_t>(k));
            std::bitset<kMaxOrder> seen;
            for (int j = 0; j < k; ++j) {
                a[static_cast<std::size_t>(axis - 1)] = static_cast<Value>(j);
                line[static_cast<std::size_t>(j)] = f.evaluate(a);
                seen.set(line[static_cast<std::size_t>(j)]);
            }
            if (static_cast<int>(seen.count()) != k) {
                found = Witness{kind, axis, fix, line, static_cast<int>(seen.count()), k};
                return false;
            }
            return true;
        });
        if (found)
            return found;
    }
    return std::nullopt;
}

} // namespace

std::string Witness::to_string() const {
    std::ostringstream os;
    switch (kind) {
    case WitnessKind::RepeatedValueOnLine:
    case WitnessKind::MissingValue:
        os << "axis=" << axis << " fixed=" << join_fixing(fixed)
           << " values=" << join_values(values);
        break;
    case WitnessKind::WrongRange:
        os << "block=" << axis << " fixed=" << join_fixing(fixed)
           << " values=" << join_values(values) << " range=" << observed_range
           << " expected=" << expected_range;
        break;
    }
    return os.str();
}

int range(const TruthTable& f) {
    std::bitset<kMaxOrder> seen;
    for (Value v : f.values())
        seen.set(v);
    return static_cast<int>(seen.count());
}

TruthTable subfunction(const TruthTable& f, const Fixing& fix) {
    const int k = f.order();
    const int n = f.arity();
    for (auto [pos, val] : fix.bindings) {
        if (pos < 1 || pos > n)
            throw DomainError("fixing position out of [1, n]");
        if (val >= k)
            throw DomainError("fixing constant out of E_k");
    }
    if (fix.bindings.empty())
        return f;
    std::vector<int> free_pos;
    for (int v = 1; v <= n; ++v)
        if (!fix.bindings.contains(v))
            free_pos.push_back(v);
    if (free_pos.empty()) {
        Assignment a(static_cast<std::size_t>(n));
        for (auto [pos, val] : fix.bindings)
            a[static_cast<std::size_t>(pos - 1)] = val;
        return TruthTable(k, 1, std::vector<Value>(static_cast<std::size_t>(k), f.evaluate(a)));
    }
    const int m = static_cast<int>(free_pos.size());
    std::vector<Value> out;
    out.reserve(num_cells(k, m));
    Assignment full(static_cast<std::size_t>(n));
    for (auto [pos, val] : fix.bindings)
        full[static_cast<std::size_t>(pos - 1)] = val;
    Assignment b(static_cast<std::size_t>(m), 0);
    do {
        for (int i = 0; i < m; ++i)
            full[static_cast<std::size_t>(free_pos[static_cast<std::size_t>(i)] - 1)] =
                b[static_cast<std::size_t>(i)];
        out.push_back(f.evaluate(full));
    } while (next_assignment(b, k));
    return TruthTable(k, m, std::move(out));
}

std::set<int> spectrum(const VariableSet& m, const TruthTable& f) {
    if (m.empty())
        throw EmptySetError("spectrum requires a nonempty variable set");
    validate_variable_set(m, f.arity());
    VariableSet comp = complement(m, f.arity());
    std::set<int> out;
    for_each_fixing(comp, f.order(), [&](const Fixing& fix) {
        out.insert(range(subfunction(f, fix)));
        return true;
    });
    return out;
}

CheckResult is_h_function(const TruthTable& f) {
    if (f.arity() == 1) {
        // Extension: unary f is an H-function iff it is a bijection.
        if (range(f) == f.order())
            return {true, std::nullopt};
        return {false, Witness{WitnessKind::RepeatedValueOnLine, 1, {}, f.values(),
                               range(f), f.order()}};
    }
    auto bad = first_bad_line(f, WitnessKind::RepeatedValueOnLine);
    return {!bad.has_value(), bad};
}

CheckResult is_latin_hypercube(const TruthTable& f) {
    auto bad = first_bad_line(f, WitnessKind::MissingValue);
    return {!bad.has_value(), bad};
}

CheckResult check_hsq(const TruthTable& f, const Partition& s, const QVector& qvec) {
    if (qvec.size() != s.blocks.size())
        throw PartitionError("q vector length does not match the partition");
    for (int q : qvec)
        if (q < 1 || q > f.order())
            throw DomainError("target range out of [1, k]");
    // Re-validate against this table's arity.
    Partition::of(s.blocks, f.arity());
    for (std::size_t i = 0; i < s.blocks.size(); ++i) {
        const VariableSet& block = s.blocks[i];
        VariableSet comp = complement(block, f.arity());
        std::optional<Witness> bad;
        for_each_fixing(comp, f.order(), [&](const Fixing& fix) {
            TruthTable g = subfunction(f, fix);
            int r = range(g);
            if (r != qvec[i]) {
                bad = Witness{WitnessKind::WrongRange, static_cast<int>(i + 1), fix,
                              g.values(), r, qvec[i]};
                return false;
            }
            return true;
        });
        if (bad)
            return {false, bad};
    }
    return {true, std::nullopt};
}

CheckResult check_qh(const TruthTable& f, const QVector& qvec) {
    if (static_cast<int>(qvec.size()) != f.arity())
        throw ArityError("q vector length does not match the table arity");
    Partition singletons;
    for (int v = 1; v <= f.arity(); ++v)
        singletons.blocks.push_back({v});
    return check_hsq(f, singletons, qvec);
}

CheckResult check_hq(const TruthTable& f, int q) {
    if (q < 1 || q > f.order())
        throw DomainError("q out of [1, k]");
    return check_qh(f, QVector(static_cast<std::size_t>(f.arity()), q));
}

bool hereditary_check(const TruthTable& f, int q) {
    if (q < 1 || q > f.order())
        throw DomainError("q out of [1, k]");
    const int n = f.arity();
    // Every fixing of every proper subset of the variables.
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) == n)
            continue; // would leave no free variable
        VariableSet fixed_vars;
        for (int v = 1; v <= n; ++v)
            if (mask & (1u << (v - 1)))
                fixed_vars.insert(v);
        bool ok = for_each_fixing(fixed_vars, f.order(), [&](const Fixing& fix) {
            return check_hq(subfunction(f, fix), q).ok;
        });
        if (!ok)
            return false;
    }
    return true;
}

std::vector<Witness> all_line_witnesses(const TruthTable& f) {
    std::vector<Witness> out;
    const int k = f.order();
    const int n = f.arity();
    for (int axis = 1; axis <= n; ++axis) {
        VariableSet others = complement({axis}, n);
        for_each_fixing(others, k, [&](const Fixing& fix) {
            Assignment a(static_cast<std::size_t>(n), 0);
            for (auto [pos, val] : fix.bindings)
                a[static_cast<std::size_t>(pos - 1)] = val;
            std::vector<Value> line(static_cast<std::size_t>(k));
            std::bitset<kMaxOrder> seen;
            for (int j = 0; j < k; ++j) {
                a[static_cast<std::size_t>(axis - 1)] = static_cast<Value>(j);
                line[static_cast<std::size_t>(j)] = f.evaluate(a);
                seen.set(line[static_cast<std::size_t>(j)]);
            }
            if (static_cast<int>(seen.count()) != k)
                out.push_back(Witness{WitnessKind::RepeatedValueOnLine, axis, fix, line,
                                      static_cast<int>(seen.count()), k});
            return true;
        });
    }
    return out;
}

Partition Partition::of(std::vector<VariableSet> blocks, int n) {
    if (blocks.empty())
        throw PartitionError("partition has no blocks");
    VariableSet seen;
    std::size_t total = 0;
    for (const VariableSet& block : blocks) {
        if (block.empty())
            throw PartitionError("partition block is empty");
        validate_variable_set(block, n);
        total += block.size();
        seen.insert(block.begin(), block.end());
    }
    if (seen.size() != total)
        throw PartitionError("partition blocks overlap");
    if (static_cast<int>(seen.size()) != n)
        throw PartitionError("partition does not cover all variables");
    return Partition{std::move(blocks)};
}

} // namespace kvl
