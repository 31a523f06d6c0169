#include "sqbetti/betti.hpp"

#include <algorithm>
#include <array>

namespace sqbetti {

BigInt binomial(int a, int b) {
    if (b < 0 || a < 0 || b > a) return 0;
    static const auto table = [] {
        constexpr int N = Monomial::max_ambient + 1;
        std::array<std::array<BigInt, N>, N> t{};
        for (int i = 0; i < N; ++i) {
            t[i][0] = 1;
            for (int j = 1; j <= i; ++j)
                t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : BigInt(0));
        }
        return t;
    }();
    if (a <= Monomial::max_ambient) return table[a][b];
    BigInt num = 1, den = 1;
    for (int i = 0; i < b; ++i) {
        num *= a - i;
        den *= i + 1;
    }
    return num / den;
}

void BettiTable::set(int i, int j, BigInt value) {
    if (value < 0) throw contract_error("Betti numbers are nonnegative");
    if (value == 0)
        entries_.erase({i, j});
    else
        entries_[{i, j}] = std::move(value);
}

const BigInt& BettiTable::at(int i, int j) const {
    static const BigInt zero = 0;
    auto it = entries_.find({i, j});
    return it == entries_.end() ? zero : it->second;
}

int BettiTable::projective_dimension() const {
    int pd = -1;
    for (const auto& [ij, v] : entries_) pd = std::max(pd, ij.first);
    return pd;
}

int BettiTable::regularity() const {
    int reg = -1;
    for (const auto& [ij, v] : entries_) reg = std::max(reg, ij.second - ij.first);
    return reg;
}

namespace {

void require_stable(const MonomialIdeal& ideal) {
    std::string violation = stable_violation(ideal);
    if (!violation.empty())
        throw not_stable_error("ideal is not squarefree stable: " + violation);
}

// Corners via the generator-side characterization: (k,l) with
// k+l = max{m(u) : u in G(I)_l} is a corner iff every higher-degree
// generator u satisfies m(u) < k + deg(u).  The corner value is the number
// of degree-l generators with m(u) = k+l.
CornerReport corners_from_generators(const MonomialIdeal& ideal) {
    CornerReport out;
    const auto& by_degree = ideal.generators_by_degree();
    for (auto it = by_degree.begin(); it != by_degree.end(); ++it) {
        int ell = it->first;
        int m = 0;
        for (const Monomial& u : it->second) m = std::max(m, u.max_index());
        int k = m - ell;
        bool corner = true;
        for (auto jt = std::next(it); jt != by_degree.end() && corner; ++jt)
            for (const Monomial& u : jt->second)
                if (u.max_index() >= k + jt->first) {
                    corner = false;
                    break;
                }
        if (!corner) continue;
        BigInt value = 0;
        for (const Monomial& u : it->second)
            if (u.max_index() == m) ++value;
        out.corners.push_back(Corner{k, ell});
        out.values.push_back(std::move(value));
    }
    return out;
}

// Corners straight from the definition: a nonzero beta_{k,k+l} is extremal
// iff it is the only nonzero entry in the quadrant i >= k, j-i >= l.
CornerReport corners_from_table(const BettiTable& table) {
    CornerReport out;
    for (const auto& [ij, value] : table.entries()) {
        int k = ij.first;
        int ell = ij.second - ij.first;
        bool extremal = true;
        for (const auto& [ij2, v2] : table.entries()) {
            if (ij2 == ij) continue;
            if (ij2.first >= k && ij2.second - ij2.first >= ell) {
                extremal = false;
                break;
            }
        }
        if (extremal) {
            out.corners.push_back(Corner{k, ell});
            out.values.push_back(value);
        }
    }
    // Entries came out in (i,j) order; corners are reported with l increasing.
    std::vector<std::size_t> order(out.corners.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return out.corners[a].ell < out.corners[b].ell;
    });
    CornerReport sorted;
    for (std::size_t idx : order) {
        sorted.corners.push_back(out.corners[idx]);
        sorted.values.push_back(out.values[idx]);
    }
    return sorted;
}

} // namespace

BettiTable graded_betti(const MonomialIdeal& ideal) {
    require_stable(ideal);
    BettiTable table;
    for (const auto& [ell, mons] : ideal.generators_by_degree()) {
        int max_m = 0;
        for (const Monomial& u : mons) max_m = std::max(max_m, u.max_index());
        for (int k = 0; k <= max_m - ell; ++k) {
            BigInt beta = 0;
            for (const Monomial& u : mons) beta += binomial(u.max_index() - ell, k);
            if (beta != 0) {
                BigInt total = table.at(k, k + ell) + beta;
                table.set(k, k + ell, total);
            }
        }
    }
    return table;
}

CornerReport extremal_betti(const MonomialIdeal& ideal) {
    require_stable(ideal);
    CornerReport by_generators = corners_from_generators(ideal);
    CornerReport by_table = corners_from_table(graded_betti(ideal));
    if (!(by_generators == by_table))
        throw std::logic_error("corner detection routes disagree; this is a bug");
    return by_generators;
}

DegreeSequence degree_sequence(const MonomialIdeal& ideal) {
    require_stable(ideal);
    DegreeSequence out;
    if (ideal.is_zero()) return out;
    CornerReport corners = extremal_betti(ideal);
    std::size_t pos = 0;
    for (const auto& [ell, mons] : ideal.generators_by_degree()) {
        int m = 0;
        for (const Monomial& u : mons) m = std::max(m, u.max_index());
        out.degrees.push_back(ell);
        out.deltas.push_back(m - ell);
        for (const Corner& c : corners.corners)
            if (c.ell == ell && c.k == m - ell) out.extremal_indices.push_back(pos);
        ++pos;
    }
    return out;
}

} // namespace sqbetti
