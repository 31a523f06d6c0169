#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <utility>
#include <vector>

#include "sqbetti/stable.hpp"

namespace sqbetti {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient; C(a,b) = 0 for b > a >= 0 or b < 0, C(0,0) = 1.
BigInt binomial(int a, int b);

/// Graded Betti numbers of an ideal: (i, j) -> beta_{i,j}, zeros omitted.
/// In diagram form beta_{i,j} sits in column i and row j-i.
class BettiTable {
public:
    using Map = std::map<std::pair<int, int>, BigInt>;

    void set(int i, int j, BigInt value);
    const BigInt& at(int i, int j) const;

    bool empty() const noexcept { return entries_.empty(); }
    const Map& entries() const noexcept { return entries_; }

    /// Largest column index i with a nonzero entry; -1 when empty.
    int projective_dimension() const;

    /// Largest row index j-i with a nonzero entry; -1 when empty.
    int regularity() const;

    friend bool operator==(const BettiTable& a, const BettiTable& b) {
        return a.entries_ == b.entries_;
    }

private:
    Map entries_;
};

/// Betti numbers of a squarefree stable ideal via the closed formula
/// beta_{k,k+l} = sum over degree-l generators u of C(m(u)-l, k).
/// Refuses non-stable input, naming a violated exchange move.
BettiTable graded_betti(const MonomialIdeal& ideal);

struct Corner {
    int k = 0;
    int ell = 0;

    friend bool operator==(const Corner&, const Corner&) = default;
    friend auto operator<=>(const Corner&, const Corner&) = default;
};

/// Corner sequence (k strictly decreasing, l strictly increasing) together
/// with the extremal Betti values beta_{k,k+l}.
struct CornerReport {
    std::vector<Corner> corners;
    std::vector<BigInt> values;

    friend bool operator==(const CornerReport&, const CornerReport&) = default;
};

/// Extremal Betti numbers of a squarefree stable ideal.  Internally runs both
/// the diagram scan (unique nonzero entry in its northwest-cornered quadrant)
/// and the generator-side characterization, and insists they coincide.
CornerReport extremal_betti(const MonomialIdeal& ideal);

/// Degree-sequence data: generator degrees l_1 < ... < l_t, the deltas
/// m_{l_j} - l_j, and the subsequence of degrees carrying a corner.
struct DegreeSequence {
    std::vector<int> degrees;
    std::vector<int> deltas;
    std::vector<std::size_t> extremal_indices; // positions into degrees/deltas

    std::size_t degree_length() const noexcept { return extremal_indices.size(); }
};

DegreeSequence degree_sequence(const MonomialIdeal& ideal);

} // namespace sqbetti
