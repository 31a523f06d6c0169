#include "sqbetti/counting.hpp"

namespace sqbetti {

std::vector<BigInt> pascal_row(int n, int q) {
    if (q < 1 || n < q)
        throw contract_error("pascal_row needs n >= q >= 1, got n=" + std::to_string(n) +
                             ", q=" + std::to_string(q));
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(n - q + 1));
    for (int j = 1; j <= n - q + 1; ++j) out.push_back(binomial(n - j, q - 1));
    return out;
}

namespace {

void check_countable(const Monomial& u) {
    if (u.degree() < 2)
        throw contract_error("position counting needs degree >= 2, got " + u.str());
}

} // namespace

DecompositionTrace count_upto_traced(const Monomial& u) {
    check_countable(u);
    int ell = u.degree();
    int m = u.max_index(); // = k + l
    std::vector<int> supp = u.support();

    // Stage s expands the coefficient counting monomials that agree with u on
    // the first s-1 support positions: C(m-1-i_{s-1}, l-s+1) decomposes into
    // C(m-1-j, l-s) over choices j of the s-th index; the first
    // i_s - i_{s-1} - 1 summands count monomials branching above u, and the
    // summand at j = i_s carries to the next stage.
    DecompositionTrace trace;
    trace.total = 0;
    trace.term_count = 1; // the closing C(0,0) for u itself
    int prev = 0;
    for (int s = 1; s <= ell - 1; ++s) {
        TraceStep step;
        step.position = s;
        step.top = m - 1 - prev;
        step.bottom = ell - s;
        step.selected = supp[s - 1] - prev - 1;
        step.contributed = 0;
        for (int j = prev + 1; j < supp[s - 1]; ++j)
            step.contributed += binomial(m - 1 - j, ell - s - 1);
        trace.total += step.contributed;
        trace.term_count += step.selected;
        trace.steps.push_back(std::move(step));
        prev = supp[s - 1];
    }
    trace.total += 1;
    return trace;
}

BigInt count_upto(const Monomial& u) { return count_upto_traced(u).total; }

BigInt count_strictly_above(const Monomial& u) { return count_upto(u) - 1; }

BigInt oracle_position(const Monomial& u) {
    check_countable(u);
    int k = u.max_index() - u.degree();
    ASet all = enumerate_A(u.ambient(), k, u.degree());
    BigInt position = 1;
    for (const Monomial& v : all.members) {
        if (v == u) return position;
        ++position;
    }
    throw contract_error(u.str() + " is not a member of its A-set");
}

} // namespace sqbetti
