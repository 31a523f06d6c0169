#include "sqbetti/monomial.hpp"

#include <algorithm>
#include <bit>

namespace sqbetti {

Monomial Monomial::from_support(int n, std::span<const int> indices) {
    check_ambient(n);
    std::uint64_t mask = 0;
    for (int i : indices) {
        if (i < 1 || i > n)
            throw contract_error("variable index " + std::to_string(i) +
                                 " out of range 1.." + std::to_string(n));
        std::uint64_t bit = std::uint64_t{1} << (i - 1);
        if (mask & bit)
            throw contract_error("repeated variable x" + std::to_string(i) +
                                 ": monomial would not be squarefree");
        mask |= bit;
    }
    return Monomial(n, mask);
}

std::vector<int> Monomial::support() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(degree()));
    std::uint64_t m = mask_;
    while (m) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return out;
}

int Monomial::support_at(int position) const {
    if (position < 1 || position > degree())
        throw contract_error("support position " + std::to_string(position) +
                             " out of range 1.." + std::to_string(degree()));
    std::uint64_t m = mask_;
    for (int s = 1; s < position; ++s) m &= m - 1;
    return std::countr_zero(m) + 1;
}

std::string Monomial::str() const {
    if (mask_ == 0) return "1";
    std::string out;
    for (int i : support()) {
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(i);
    }
    return out;
}

Ordering slex_cmp(const Monomial& u, const Monomial& v) {
    u.require_same_ambient(v);
    if (u.degree() != v.degree())
        throw contract_error("slex comparison needs equal degrees, got " + u.str() +
                             " vs " + v.str());
    std::uint64_t diff = u.mask() ^ v.mask();
    if (diff == 0) return Ordering::equal;
    // The smallest index in the symmetric difference decides: supports agree
    // below it, and the monomial owning it is the greater one.
    std::uint64_t low = diff & (~diff + 1);
    return (u.mask() & low) ? Ordering::greater : Ordering::less;
}

std::vector<GapEntry> gap_profile(const Monomial& u) {
    if (u.is_one())
        throw contract_error("gap profile of the monomial 1 is undefined");
    std::vector<GapEntry> gaps;
    std::vector<int> supp = u.support();
    for (int j = 1; j < static_cast<int>(supp.size()); ++j) {
        int width = supp[j] - supp[j - 1] - 1;
        if (width > 0) gaps.push_back(GapEntry{j, width});
    }
    return gaps;
}

Monomial joint(const Monomial& u, std::span<const int> extras) {
    if (u.degree() + static_cast<int>(extras.size()) > u.ambient())
        throw contract_error("joint would exceed ambient degree bound n=" +
                             std::to_string(u.ambient()));
    Monomial out = u;
    for (int i : extras) out = out.with(i);
    return out;
}

Monomial joint(const Monomial& u, std::initializer_list<int> extras) {
    return joint(u, std::span<const int>(extras.begin(), extras.size()));
}

namespace {

void check_A_params(int n, int k, int ell) {
    if (ell < 1) throw contract_error("A^s(k,l) needs l >= 1, got l=" + std::to_string(ell));
    if (k < 0) throw contract_error("A^s(k,l) needs k >= 0, got k=" + std::to_string(k));
    if (k + ell > n)
        throw contract_error("A^s(" + std::to_string(k) + "," + std::to_string(ell) +
                             ") is empty in n=" + std::to_string(n) + " variables: k+l > n");
}

// Membership contract shared by next_in_A / prev_in_A and the counters.
void check_in_some_A(const Monomial& u) {
    if (u.is_one())
        throw contract_error("the monomial 1 belongs to no A^s(k,l)");
}

} // namespace

Monomial max_of_A(int n, int k, int ell) {
    check_A_params(n, k, ell);
    std::vector<int> supp;
    for (int i = 1; i < ell; ++i) supp.push_back(i);
    supp.push_back(k + ell);
    return Monomial::from_support(n, supp);
}

Monomial min_of_A(int n, int k, int ell) {
    check_A_params(n, k, ell);
    std::vector<int> supp;
    for (int i = k + 1; i <= k + ell; ++i) supp.push_back(i);
    return Monomial::from_support(n, supp);
}

ASet enumerate_A(int n, int k, int ell) {
    check_A_params(n, k, ell);
    ASet out;
    out.n = n;
    out.k = k;
    out.ell = ell;
    Monomial cur = max_of_A(n, k, ell);
    out.members.push_back(cur);
    while (auto next = next_in_A(cur)) {
        cur = *next;
        out.members.push_back(cur);
    }
    return out;
}

std::optional<Monomial> next_in_slex(const Monomial& u) {
    check_in_some_A(u);
    int n = u.ambient();
    int d = u.degree();
    std::vector<int> supp = u.support();
    // Rightmost position whose tail can shift to consecutive values within n.
    for (int s = d - 1; s >= 0; --s) {
        if (supp[s] <= n - (d - s)) {
            std::vector<int> out(supp.begin(), supp.begin() + s);
            for (int i = 0; i <= d - 1 - s; ++i) out.push_back(supp[s] + 1 + i);
            return Monomial::from_support(n, out);
        }
    }
    return std::nullopt;
}

std::optional<Monomial> next_in_A(const Monomial& u) {
    check_in_some_A(u);
    std::vector<GapEntry> gaps = gap_profile(u);
    if (gaps.empty()) return std::nullopt; // u is min A^s(k,l)
    int ell = u.degree();
    int m = u.max_index();
    std::vector<int> supp = u.support();
    int t = gaps.back().position;
    std::vector<int> out(supp.begin(), supp.begin() + (t - 1));
    int j = supp[t - 1];
    for (int i = 1; i <= ell - t; ++i) out.push_back(j + i);
    out.push_back(m);
    return Monomial::from_support(u.ambient(), out);
}

std::optional<Monomial> prev_in_A(const Monomial& u) {
    check_in_some_A(u);
    int ell = u.degree();
    int m = u.max_index();
    std::vector<int> supp = u.support();
    // Work on the (l-1)-prefix; find the rightmost entry that can move down.
    int s = -1;
    for (int p = ell - 2; p >= 0; --p) {
        int below = (p == 0) ? 0 : supp[p - 1];
        if (supp[p] - 1 > below) {
            s = p;
            break;
        }
    }
    if (s < 0) return std::nullopt; // u is max A^s(k,l)
    std::vector<int> out(supp.begin(), supp.begin() + s);
    out.push_back(supp[s] - 1);
    // Entries after s go to their largest values below m.
    int tail = ell - 2 - s;
    for (int i = 0; i < tail; ++i) out.push_back(m - tail + i);
    out.push_back(m);
    return Monomial::from_support(u.ambient(), out);
}

std::vector<Monomial> segment(const Monomial& u, const Monomial& v, bool closed_right) {
    u.require_same_ambient(v);
    if (u.degree() != v.degree() || u.max_index() != v.max_index())
        throw contract_error("segment endpoints must lie in the same A^s(k,l)");
    if (slex_less(u, v))
        throw contract_error("segment endpoints out of order: " + u.str() +
                             " <_slex " + v.str());
    std::vector<Monomial> out;
    Monomial cur = u;
    while (cur != v) {
        out.push_back(cur);
        auto next = next_in_A(cur);
        if (!next)
            throw contract_error("segment endpoint " + v.str() + " not reachable from " + u.str());
        cur = *next;
    }
    if (closed_right) out.push_back(v);
    return out;
}

std::vector<Monomial> sorted_slex_desc(std::vector<Monomial> monomials) {
    std::sort(monomials.begin(), monomials.end(),
              [](const Monomial& a, const Monomial& b) { return slex_greater(a, b); });
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    return monomials;
}

std::vector<Monomial> shadow(std::span<const Monomial> T) {
    if (T.empty()) return {};
    int n = T.front().ambient();
    int d = T.front().degree();
    for (const Monomial& u : T) {
        u.require_same_ambient(T.front());
        if (u.degree() != d)
            throw contract_error("shadow input must be of one degree, got " +
                                 std::to_string(d) + " and " + std::to_string(u.degree()));
    }
    if (d >= n) return {}; // no squarefree multiples left
    std::vector<Monomial> out;
    out.reserve(T.size() * static_cast<std::size_t>(n - d));
    for (const Monomial& u : T)
        for (int i = 1; i <= n; ++i)
            if (!u.contains(i)) out.push_back(u.with(i));
    return sorted_slex_desc(std::move(out));
}

} // namespace sqbetti
