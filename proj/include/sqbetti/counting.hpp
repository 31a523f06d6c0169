#pragma once

#include <vector>

#include "sqbetti/betti.hpp"

namespace sqbetti {

/// The identity C(n,q) = C(n-1,q-1) + C(n-2,q-1) + ... + C(q-1,q-1),
/// returned as the list of summands.  Requires n >= q >= 1.
std::vector<BigInt> pascal_row(int n, int q);

/// One stage of the nested binomial decomposition behind count_upto: the
/// coefficient C(top,bottom) attached to support position `position` is
/// expanded by pascal_row and the first `selected` summands contribute.
struct TraceStep {
    int position = 0;
    int top = 0;
    int bottom = 0;
    int selected = 0;
    BigInt contributed = 0;
};

/// Full record of a position computation: total = sum of contributions + 1
/// (the final C(0,0) accounting for u itself); term_count is the number of
/// binomial coefficients used, including that C(0,0).
struct DecompositionTrace {
    std::vector<TraceStep> steps;
    BigInt total = 0;
    int term_count = 0;
};

/// |[max A^s(k,l), u]|: the 1-based slex position of u inside its A-set,
/// together with the decomposition trace.  Requires deg(u) >= 2.
DecompositionTrace count_upto_traced(const Monomial& u);

/// Position only.
BigInt count_upto(const Monomial& u);

/// |[max A^s(k,l), u)| = count_upto(u) - 1.
BigInt count_strictly_above(const Monomial& u);

/// Independent check: position of u found by walking the enumeration of its
/// A-set.  Intended for tests and cross-validation only.
BigInt oracle_position(const Monomial& u);

} // namespace sqbetti
