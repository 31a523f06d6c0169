#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqbetti/betti.hpp"
#include "sqbetti/counting.hpp"

namespace sqbetti {

/// A prescribed corner sequence plus target corner values: the question is
/// whether a squarefree (strongly stable) ideal realizes them as its
/// extremal Betti numbers.
struct CornerSpec {
    int n = 0;
    std::vector<Corner> corners; // k strictly decreasing, l strictly increasing
    std::vector<BigInt> values;  // a_i >= 1, aligned with corners
};

/// Contract checks for a corner spec: n >= 5, l_1 >= 2, n-3 >= k_1 > ... >
/// k_r >= 2, l strictly increasing, k_i + l_i <= n, values positive.
void validate(const CornerSpec& spec);

/// One row of a basic-monomial chain: w_i is the chain (basic) monomial, v_i
/// the multiple of w_{i-1} that witnesses it.  The first row has no v; a
/// final row may have no w when the construction dies on a gap-free v.
struct ChainRow {
    std::optional<Monomial> v;
    std::optional<Monomial> w;
};

/// The alternating v/w chain bounding the number of corners of an ideal with
/// initial degree l and a corner there: w_1 = x_1...x_{l-1}x_n, each v_{i+1}
/// fills the top gap of w_i, each w_{i+1} is the greatest monomial with max
/// index n below v_{i+1}.  Stops at the first gap-free monomial produced.
/// The w's number n-3 for l = 2 and n-l for l >= 3.
std::vector<ChainRow> chain_basic_monomials(int n, int ell);

/// Smallest squarefree lex ideal of initial degree l1 whose corners are
/// exactly (n-l, l) for l = l1..n-1, each with extremal Betti value 1.
/// Requires n >= 5 and 3 <= l1 <= n-2.
MonomialIdeal lex_corner_ideal(int n, int ell1);

/// Per-corner bounds from the realizability analysis.  upper is n_i (the
/// position of the deepest usable segment end v_i), strictly_above is p_i
/// (monomials above the greedy segment head), admissible = n_i - p_i.
/// Fields stay empty for corners the analysis could not reach.
struct CornerBound {
    std::optional<BigInt> upper;
    std::optional<BigInt> strictly_above;
    std::optional<BigInt> admissible;
};

struct FeasibilityReport {
    std::vector<CornerBound> per_corner;
    bool feasible = false;
    std::optional<int> failing_corner; // 1-based
    std::optional<Monomial> witness;   // monomial explaining the failure
    std::string detail;
};

/// Evaluate the numerical realizability conditions for a corner spec:
/// bottom-up chain v_r, v_{r-1}, ... with n_i = |[max A^s, v_i]|, then the
/// greedy head positions p_i; feasible iff a_i <= n_i - p_i for every
/// corner.  The analysis walks A-sets member by member, so it is practical
/// for moderate n (roughly n <= 20).
FeasibilityReport feasibility_bounds(const CornerSpec& spec);

/// The per-corner generator seeds: corner 1 takes the a_1 greatest elements
/// of A^s(k_1,l_1); each later corner starts right below the minimum of the
/// restricted shadow of everything built so far.
struct BasicMonomialSet {
    std::vector<std::vector<Monomial>> per_corner;
};

/// Throws infeasible_error (carrying the failing corner) when the spec is
/// not realizable.
BasicMonomialSet basic_monomials(const CornerSpec& spec);

/// The smallest squarefree strongly stable ideal realizing the spec:
/// G(I)_{l_i} is the strongly stable closure of the corner-i basic monomials
/// minus the shadow of the lower-degree content.  Postcondition checked:
/// extremal_betti(result) reproduces the spec.
MonomialIdeal construct_ideal(const CornerSpec& spec);

/// All squarefree strongly stable ideals in n variables (towers of strongly
/// stable sets per degree), optionally restricted to initial degree >=
/// min_initial_degree.  Exponential; guarded by the bound.
std::vector<MonomialIdeal> enumerate_strongly_stable_ideals(int n, int min_initial_degree = 1,
                                                            int bound = 5);

/// A realized corner configuration with its smallest witness ideal
/// (fewest generators, ties to larger initial degree, then to the
/// slex-greater generator sequence).
struct CornerConfig {
    CornerReport report;
    MonomialIdeal witness;
};

/// Deduplicated corner configurations over all squarefree strongly stable
/// ideals in n variables whose corners all have k >= 1.
std::vector<CornerConfig> enumerate_corner_configs(int n, int min_initial_degree = 1,
                                                   int bound = 5);

} // namespace sqbetti
