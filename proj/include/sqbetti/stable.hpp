#pragma once

#include <map>
#include <span>
#include <vector>

#include "sqbetti/monomial.hpp"

namespace sqbetti {

/// A squarefree monomial ideal given by its minimal generators, grouped by
/// degree.  Construct through minimal_generators() so the minimality
/// invariant (no generator divides another) holds.
class MonomialIdeal {
public:
    static MonomialIdeal zero(int n) { return MonomialIdeal(n); }

    int ambient() const noexcept { return n_; }
    bool is_zero() const noexcept { return gens_.empty(); }

    /// Initial degree; 0 for the zero ideal.
    int indeg() const noexcept { return gens_.empty() ? 0 : gens_.begin()->first; }

    /// Largest generator degree; 0 for the zero ideal.
    int top_degree() const noexcept { return gens_.empty() ? 0 : gens_.rbegin()->first; }

    const std::map<int, std::vector<Monomial>>& generators_by_degree() const noexcept {
        return gens_;
    }

    /// G(I)_d, empty when there is no generator of degree d.
    const std::vector<Monomial>& generators_in_degree(int d) const;

    /// All generators, by increasing degree and decreasing slex inside a degree.
    std::vector<Monomial> generators() const;

    std::size_t generator_count() const noexcept;

    /// Monomial membership: some generator divides m.
    bool contains(const Monomial& m) const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.n_ == b.n_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

private:
    explicit MonomialIdeal(int n) : n_(n) {}

    friend MonomialIdeal minimal_generators(int n, std::span<const Monomial> raw);

    int n_;
    std::map<int, std::vector<Monomial>> gens_;
};

/// Drop every monomial divisible by another one and assemble the ideal.
/// The empty input yields the zero ideal.
MonomialIdeal minimal_generators(int n, std::span<const Monomial> raw);
inline MonomialIdeal minimal_generators(int n, std::initializer_list<Monomial> raw) {
    return minimal_generators(n, std::span<const Monomial>(raw.begin(), raw.size()));
}

struct StabilityClass {
    bool is_stable = false;
    bool is_strongly_stable = false;
    bool is_lex = false;
};

/// Classify as squarefree stable / strongly stable / lex.  The zero ideal
/// gets all three flags vacuously.  The lex test walks entire degree slices,
/// so it is only practical for moderate n (roughly n <= 20).
StabilityClass classify(const MonomialIdeal& ideal);

/// If the ideal is not squarefree stable, a human-readable description of one
/// violated exchange move; empty string otherwise.
std::string stable_violation(const MonomialIdeal& ideal);

/// B(u_1..u_r): smallest squarefree strongly stable set of monomials of the
/// common degree containing the input.  Fixed point of the exchange moves
/// u -> x_j*u/x_i (i in supp, j < i, j not in supp), computed by worklist.
std::vector<Monomial> strongly_stable_closure(std::span<const Monomial> monomials);
inline std::vector<Monomial> strongly_stable_closure(std::initializer_list<Monomial> monomials) {
    return strongly_stable_closure(std::span<const Monomial>(monomials.begin(), monomials.size()));
}

/// Whether an equal-degree set is squarefree (strongly) stable.
bool is_stable_set(std::span<const Monomial> T);
bool is_strongly_stable_set(std::span<const Monomial> T);

/// i-fold shadow; Shad^0(T) = T.  Degrees past n fade to the empty set.
std::vector<Monomial> shad_power(std::span<const Monomial> T, int i);

/// Restricted shadow BShad(U)_(k2,l2): the (l2-l1)-fold shadow of the
/// strongly stable closure of U, truncated to max index <= k2+l2.  U must be
/// a set of degree-l1 monomials of common max index k1+l1 with k1 > k2,
/// l1 < l2 and k2+l2 <= n.  When the iterated shadow would pass degree n the
/// result is empty.
std::vector<Monomial> bshad(std::span<const Monomial> U, int k2, int ell2);

/// min BShad({u})_(k2,l2) by direct construction: keep the support of u
/// below k2+l2 and fill up with the greatest available indices.
Monomial min_bshad(const Monomial& u, int k2, int ell2);

/// Slex-minimum of BShad(U)_(k2,l2) for a nonempty equal-degree set, taken
/// as the least of the per-member minima.  Unlike min_bshad this accepts
/// members whose max index already sits at or below k2 + deg.
Monomial min_bshad_of_set(std::span<const Monomial> U, int k2, int ell2);

/// Membership test v in BShad({u})_(k2,l2) without materializing the set:
/// v must have max index <= k2+l2 and its deg(u) smallest support indices
/// must sit componentwise below supp(u).
bool bshad_contains(const Monomial& u, const Monomial& v, int k2, int ell2);

} // namespace sqbetti
