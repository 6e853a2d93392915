#include "kvl/construction.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>

#include "kvl/analysis.hpp"

namespace kvl {

namespace {

int mod_reduce(int a, int k) {
    int r = a % k;
    return r < 0 ? r + k : r;
}

void require_coprime(int a, int k) {
    if (std::gcd(mod_reduce(a, k), k) != 1)
        throw CoprimeViolation("coefficient " + std::to_string(a) + " is not coprime to " +
                               std::to_string(k));
}

} // namespace

TruthTable affine_transform(const TruthTable& g, const AffineParams& p) {
    if (p.k != g.order())
        throw DomainError("affine modulus does not match table order");
    require_coprime(p.a, p.k);
    const int a = mod_reduce(p.a, p.k);
    const int b = mod_reduce(p.b, p.k);
    std::vector<Value> out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        out[i] = static_cast<Value>((a * g.at(i) + b) % p.k);
    TruthTable f(g.order(), g.arity(), std::move(out));
    assert(range(f) == range(g));
    return f;
}

TruthTable compose_sum(int k, int n, const std::vector<BlockSummand>& summands) {
    std::vector<VariableSet> blocks;
    for (const BlockSummand& s : summands) {
        blocks.push_back(s.block);
        require_coprime(s.coefficient, k);
        if (s.function.order() != k)
            throw DomainError("block function order does not match k");
        if (s.function.arity() != static_cast<int>(s.block.size()))
            throw PartitionError("block function arity does not match block size");
    }
    Partition::of(blocks, n);

    std::size_t cells = num_cells(k, n);
    std::vector<Value> out(cells);
    Assignment full(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> block_pos;
    for (const BlockSummand& s : summands)
        block_pos.emplace_back(s.block.begin(), s.block.end());
    for (std::size_t idx = 0; idx < cells; ++idx) {
        full = assignment_at(idx, k, n);
        int acc = 0;
        for (std::size_t i = 0; i < summands.size(); ++i) {
            Assignment restricted;
            restricted.reserve(block_pos[i].size());
            for (int pos : block_pos[i])
                restricted.push_back(full[static_cast<std::size_t>(pos - 1)]);
            acc += mod_reduce(summands[i].coefficient, k) *
                   summands[i].function.evaluate(restricted);
        }
        out[idx] = static_cast<Value>(acc % k);
    }
    return TruthTable(k, n, std::move(out));
}

TruthTable construct_linear_h(int k, const std::vector<int>& coeffs) {
    if (coeffs.empty())
        throw DomainError("linear construction needs at least one coefficient");
    std::vector<BlockSummand> summands;
    std::vector<Value> identity(static_cast<std::size_t>(k));
    for (int v = 0; v < k; ++v)
        identity[static_cast<std::size_t>(v)] = static_cast<Value>(v);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        summands.push_back({coeffs[i], {static_cast<int>(i + 1)},
                            TruthTable(k, 1, identity)});
    return compose_sum(k, static_cast<int>(coeffs.size()), summands);
}

TruthTable sample_with_range(int k, int n, int q, std::uint64_t seed) {
    std::size_t cells = num_cells(k, n);
    if (q < 1 || q > k || static_cast<std::size_t>(q) > cells)
        throw DomainError("target range q out of [1, min(k, k^n)]");
    std::mt19937_64 rng(seed);

    // The q values actually used.
    std::vector<Value> alphabet(static_cast<std::size_t>(k));
    for (int v = 0; v < k; ++v)
        alphabet[static_cast<std::size_t>(v)] = static_cast<Value>(v);
    std::shuffle(alphabet.begin(), alphabet.end(), rng);
    alphabet.resize(static_cast<std::size_t>(q));

    // q distinct cells that each receive one mandatory value.
    std::unordered_set<std::size_t> pinned_set;
    std::vector<std::size_t> pinned;
    std::uniform_int_distribution<std::size_t> cell_dist(0, cells - 1);
    while (pinned.size() < static_cast<std::size_t>(q)) {
        std::size_t c = cell_dist(rng);
        if (pinned_set.insert(c).second)
            pinned.push_back(c);
    }

    std::uniform_int_distribution<std::size_t> value_dist(0, static_cast<std::size_t>(q) - 1);
    std::vector<Value> out(cells);
    for (std::size_t i = 0; i < cells; ++i)
        out[i] = alphabet[value_dist(rng)];
    for (std::size_t i = 0; i < pinned.size(); ++i)
        out[pinned[i]] = alphabet[i];

    TruthTable f(k, n, std::move(out));
    assert(range(f) == q);
    return f;
}

bool identification_condition(const std::vector<int>& coeffs, int k) {
    if (coeffs.size() < 2)
        throw DomainError("identification needs at least two coefficients");
    int sum = 0;
    for (int a : coeffs)
        sum = mod_reduce(sum + mod_reduce(a, k), k);
    return std::gcd(sum, k) == 1; // gcd(0, k) = k, never 1 for k >= 2
}

TruthTable identify_variables(const TruthTable& f, const VariableSet& vars) {
    if (vars.size() < 2)
        throw DomainError("identification needs at least two variables");
    validate_variable_set(vars, f.arity());
    const int k = f.order();
    const int n = f.arity();
    const int z_pos = *vars.begin();

    // Surviving positions of f, ascending; z replaces the smallest of vars.
    std::vector<int> kept;
    for (int v = 1; v <= n; ++v)
        if (v == z_pos || !vars.contains(v))
            kept.push_back(v);
    const int m = static_cast<int>(kept.size());

    std::size_t cells = num_cells(k, m);
    std::vector<Value> out(cells);
    Assignment full(static_cast<std::size_t>(n));
    for (std::size_t idx = 0; idx < cells; ++idx) {
        Assignment b = assignment_at(idx, k, m);
        Value z = 0;
        for (int i = 0; i < m; ++i) {
            full[static_cast<std::size_t>(kept[static_cast<std::size_t>(i)] - 1)] =
                b[static_cast<std::size_t>(i)];
            if (kept[static_cast<std::size_t>(i)] == z_pos)
                z = b[static_cast<std::size_t>(i)];
        }
        for (int v : vars)
            full[static_cast<std::size_t>(v - 1)] = z;
        out[idx] = f.evaluate(full);
    }
    return TruthTable(k, m, std::move(out));
}

} // namespace kvl
