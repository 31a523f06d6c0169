#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqbetti/errors.hpp"

namespace sqbetti {

/// A squarefree monomial in K[x_1..x_n], stored as the bit set of its
/// support over 1..n.  Immutable value type; n is capped at 64 so that all
/// subset arithmetic stays inside one machine word.
///
/// The monomial 1 (empty support) is a valid value with degree 0 and
/// max_index() == min_index() == 0.
class Monomial {
public:
    static constexpr int max_ambient = 64;

    Monomial() : n_(1), mask_(0) {}

    Monomial(int n, std::uint64_t mask) : n_(n), mask_(mask) {
        check_ambient(n);
        if (n < 64 && (mask >> n) != 0)
            throw contract_error("monomial support exceeds ambient n=" + std::to_string(n));
    }

    static Monomial one(int n) { return Monomial(n, 0); }

    /// Build from 1-based variable indices; duplicates are rejected.
    static Monomial from_support(int n, std::span<const int> indices);
    static Monomial from_support(int n, std::initializer_list<int> indices) {
        return from_support(n, std::span<const int>(indices.begin(), indices.size()));
    }

    int ambient() const noexcept { return n_; }
    std::uint64_t mask() const noexcept { return mask_; }

    int degree() const noexcept { return __builtin_popcountll(mask_); }
    bool is_one() const noexcept { return mask_ == 0; }

    /// m(u): largest support index, 0 for the monomial 1.
    int max_index() const noexcept {
        return mask_ == 0 ? 0 : 64 - __builtin_clzll(mask_);
    }

    /// min(u): smallest support index, 0 for the monomial 1.
    int min_index() const noexcept {
        return mask_ == 0 ? 0 : __builtin_ctzll(mask_) + 1;
    }

    bool contains(int i) const {
        check_index(i);
        return (mask_ >> (i - 1)) & 1u;
    }

    std::vector<int> support() const;

    /// i-th support index, 1-based position; position must be in 1..degree().
    int support_at(int position) const;

    /// u * x_i; requires i not already in the support.
    Monomial with(int i) const {
        check_index(i);
        if (contains(i))
            throw contract_error("variable x" + std::to_string(i) + " already divides " + str());
        return Monomial(n_, mask_ | (std::uint64_t{1} << (i - 1)));
    }

    /// u / x_i; requires i in the support.
    Monomial without(int i) const {
        check_index(i);
        if (!contains(i))
            throw contract_error("variable x" + std::to_string(i) + " does not divide " + str());
        return Monomial(n_, mask_ & ~(std::uint64_t{1} << (i - 1)));
    }

    bool divides(const Monomial& other) const {
        require_same_ambient(other);
        return (mask_ & ~other.mask_) == 0;
    }

    /// Canonical text form, e.g. "x3*x4*x7"; "1" for the unit monomial.
    std::string str() const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.n_ == b.n_ && a.mask_ == b.mask_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    void require_same_ambient(const Monomial& other) const {
        if (n_ != other.n_)
            throw contract_error("monomials live in different ambient rings (n=" +
                                 std::to_string(n_) + " vs n=" + std::to_string(other.n_) + ")");
    }

private:
    static void check_ambient(int n) {
        if (n < 1 || n > max_ambient)
            throw contract_error("ambient variable count must be in 1.." +
                                 std::to_string(max_ambient) + ", got " + std::to_string(n));
    }
    void check_index(int i) const {
        if (i < 1 || i > n_)
            throw contract_error("variable index " + std::to_string(i) +
                                 " out of range 1.." + std::to_string(n_));
    }

    int n_;
    std::uint64_t mask_;
};

enum class Ordering { less, equal, greater };

/// Squarefree lexicographic comparison of two equal-degree monomials:
/// u > v iff at the first differing support position u's index is smaller.
Ordering slex_cmp(const Monomial& u, const Monomial& v);

inline bool slex_greater(const Monomial& u, const Monomial& v) {
    return slex_cmp(u, v) == Ordering::greater;
}
inline bool slex_less(const Monomial& u, const Monomial& v) {
    return slex_cmp(u, v) == Ordering::less;
}

/// One gap of a monomial: the support jumps from position `position` to
/// position+1 by width+1.
struct GapEntry {
    int position; // j in 1..deg-1
    int width;    // i_{j+1} - i_j - 1, always >= 1

    friend bool operator==(const GapEntry&, const GapEntry&) = default;
};

/// All gaps of u, in increasing position order; empty iff u is gap-free.
/// Rejects the monomial 1.
std::vector<GapEntry> gap_profile(const Monomial& u);

/// Joint of u with extra variables: support union, all extras disjoint
/// from supp(u).
Monomial joint(const Monomial& u, std::span<const int> extras);
Monomial joint(const Monomial& u, std::initializer_list<int> extras);

/// The set A^s(k,l): all squarefree degree-l monomials with max index k+l,
/// listed in strictly decreasing slex order.
struct ASet {
    int n = 1;
    int k = 0;
    int ell = 1;
    std::vector<Monomial> members;

    std::size_t size() const noexcept { return members.size(); }
};

/// Enumerate A^s(k,l) inside K[x_1..x_n]; requires l >= 1, k >= 0, k+l <= n.
ASet enumerate_A(int n, int k, int ell);

/// Largest / smallest element of A^s(k,l) without enumerating.
Monomial max_of_A(int n, int k, int ell);
Monomial min_of_A(int n, int k, int ell);

/// Slex-greatest squarefree monomial of the same degree strictly below u in
/// the full slex order on Mon^s_d(S), or nullopt when u is the global
/// minimum x_{n-d+1}...x_n.
std::optional<Monomial> next_in_slex(const Monomial& u);

/// Slex-greatest element of u's A-set strictly below u, or nullopt when u is
/// the set minimum (gap-free).
std::optional<Monomial> next_in_A(const Monomial& u);

/// Slex-least element of u's A-set strictly above u, or nullopt when u is
/// the set maximum.
std::optional<Monomial> prev_in_A(const Monomial& u);

/// Closed segment [u,v] (or left segment [u,v) when closed_right is false)
/// of the A-set containing both, in decreasing slex order.  Requires
/// u >=_slex v.
std::vector<Monomial> segment(const Monomial& u, const Monomial& v, bool closed_right = true);

/// Squarefree shadow {x_i * u : u in T, i not in supp(u)} of an
/// equal-degree set; degree n input yields the empty set.
std::vector<Monomial> shadow(std::span<const Monomial> T);

/// Sort an equal-degree family in decreasing slex order and drop duplicates.
std::vector<Monomial> sorted_slex_desc(std::vector<Monomial> monomials);

} // namespace sqbetti
