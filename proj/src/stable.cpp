#include "sqbetti/stable.hpp"

#include <algorithm>
#include <unordered_set>

namespace sqbetti {

const std::vector<Monomial>& MonomialIdeal::generators_in_degree(int d) const {
    static const std::vector<Monomial> empty;
    auto it = gens_.find(d);
    return it == gens_.end() ? empty : it->second;
}

std::vector<Monomial> MonomialIdeal::generators() const {
    std::vector<Monomial> out;
    out.reserve(generator_count());
    for (const auto& [d, mons] : gens_) out.insert(out.end(), mons.begin(), mons.end());
    return out;
}

std::size_t MonomialIdeal::generator_count() const noexcept {
    std::size_t total = 0;
    for (const auto& [d, mons] : gens_) total += mons.size();
    return total;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.ambient() != n_)
        throw contract_error("membership test across different ambient rings");
    for (const auto& [d, mons] : gens_) {
        if (d > m.degree()) break;
        for (const Monomial& g : mons)
            if (g.divides(m)) return true;
    }
    return false;
}

MonomialIdeal minimal_generators(int n, std::span<const Monomial> raw) {
    MonomialIdeal ideal(n);
    std::vector<Monomial> mons(raw.begin(), raw.end());
    for (const Monomial& m : mons) {
        if (m.ambient() != n)
            throw contract_error("generator " + m.str() + " has ambient " +
                                 std::to_string(m.ambient()) + ", expected " + std::to_string(n));
        if (m.is_one())
            throw contract_error("the unit monomial cannot generate a proper ideal");
    }
    std::sort(mons.begin(), mons.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return slex_greater(a, b);
    });
    mons.erase(std::unique(mons.begin(), mons.end()), mons.end());
    std::vector<Monomial> kept;
    for (const Monomial& m : mons) {
        bool divisible = std::any_of(kept.begin(), kept.end(),
                                     [&](const Monomial& g) { return g.divides(m); });
        if (!divisible) kept.push_back(m);
    }
    for (const Monomial& m : kept) ideal.gens_[m.degree()].push_back(m);
    return ideal;
}

namespace {

// Exchange target x_j * u / x_i for i in supp(u), j < i, j not in supp(u).
Monomial exchange(const Monomial& u, int i, int j) {
    return u.without(i).with(j);
}

} // namespace

std::string stable_violation(const MonomialIdeal& ideal) {
    for (const auto& [d, mons] : ideal.generators_by_degree()) {
        for (const Monomial& u : mons) {
            int m = u.max_index();
            for (int j = 1; j < m; ++j) {
                if (u.contains(j)) continue;
                Monomial moved = exchange(u, m, j);
                if (!ideal.contains(moved))
                    return "x" + std::to_string(j) + "*" + u.str() + "/x" + std::to_string(m) +
                           " = " + moved.str() + " is not in the ideal";
            }
        }
    }
    return "";
}

StabilityClass classify(const MonomialIdeal& ideal) {
    StabilityClass out;
    if (ideal.is_zero()) {
        out.is_stable = out.is_strongly_stable = out.is_lex = true;
        return out;
    }

    out.is_stable = stable_violation(ideal).empty();

    out.is_strongly_stable = true;
    for (const auto& [d, mons] : ideal.generators_by_degree()) {
        for (const Monomial& u : mons) {
            for (int i : u.support()) {
                for (int j = 1; j < i && out.is_strongly_stable; ++j) {
                    if (u.contains(j)) continue;
                    if (!ideal.contains(exchange(u, i, j))) out.is_strongly_stable = false;
                }
                if (!out.is_strongly_stable) break;
            }
            if (!out.is_strongly_stable) break;
        }
        if (!out.is_strongly_stable) break;
    }

    // Lex: in each degree the monomials of I form a top slex segment.
    out.is_lex = true;
    int n = ideal.ambient();
    for (int d = ideal.indeg(); d <= n && out.is_lex; ++d) {
        bool seen_gap = false;
        std::vector<int> supp(d);
        for (int i = 0; i < d; ++i) supp[i] = i + 1;
        // Walk Mon^s_d(S) in decreasing slex order (ascending support tuples).
        while (true) {
            Monomial m = Monomial::from_support(n, supp);
            if (ideal.contains(m)) {
                if (seen_gap) {
                    out.is_lex = false;
                    break;
                }
            } else {
                seen_gap = true;
            }
            int p = d - 1;
            while (p >= 0 && supp[p] == n - (d - 1 - p)) --p;
            if (p < 0) break;
            ++supp[p];
            for (int q = p + 1; q < d; ++q) supp[q] = supp[q - 1] + 1;
        }
    }
    return out;
}

std::vector<Monomial> strongly_stable_closure(std::span<const Monomial> monomials) {
    if (monomials.empty()) return {};
    int d = monomials.front().degree();
    for (const Monomial& u : monomials) {
        u.require_same_ambient(monomials.front());
        if (u.degree() != d)
            throw contract_error("strongly stable closure needs a one-degree input");
    }
    std::unordered_set<std::uint64_t> seen;
    std::vector<Monomial> work(monomials.begin(), monomials.end());
    std::vector<Monomial> out;
    for (const Monomial& u : work) seen.insert(u.mask());
    while (!work.empty()) {
        Monomial u = work.back();
        work.pop_back();
        out.push_back(u);
        for (int i : u.support()) {
            for (int j = 1; j < i; ++j) {
                if (u.contains(j)) continue;
                Monomial moved = exchange(u, i, j);
                if (seen.insert(moved.mask()).second) work.push_back(moved);
            }
        }
    }
    return sorted_slex_desc(std::move(out));
}

bool is_stable_set(std::span<const Monomial> T) {
    std::unordered_set<std::uint64_t> masks;
    for (const Monomial& u : T) masks.insert(u.mask());
    for (const Monomial& u : T) {
        int m = u.max_index();
        for (int j = 1; j < m; ++j) {
            if (u.contains(j)) continue;
            if (!masks.count(exchange(u, m, j).mask())) return false;
        }
    }
    return true;
}

bool is_strongly_stable_set(std::span<const Monomial> T) {
    std::unordered_set<std::uint64_t> masks;
    for (const Monomial& u : T) masks.insert(u.mask());
    for (const Monomial& u : T)
        for (int i : u.support())
            for (int j = 1; j < i; ++j) {
                if (u.contains(j)) continue;
                if (!masks.count(exchange(u, i, j).mask())) return false;
            }
    return true;
}

std::vector<Monomial> shad_power(std::span<const Monomial> T, int i) {
    if (i < 0) throw contract_error("shadow power needs i >= 0");
    std::vector<Monomial> cur(T.begin(), T.end());
    for (int step = 0; step < i && !cur.empty(); ++step) cur = shadow(cur);
    return cur;
}

std::vector<Monomial> bshad(std::span<const Monomial> U, int k2, int ell2) {
    if (U.empty()) return {};
    int n = U.front().ambient();
    int ell1 = U.front().degree();
    int m1 = 0;
    for (const Monomial& u : U) {
        if (u.degree() != ell1)
            throw contract_error("restricted shadow input must be of one degree");
        m1 = std::max(m1, u.max_index());
    }
    int k1 = m1 - ell1;
    if (!(k1 > k2 && k2 >= 0 && ell1 < ell2))
        throw contract_error("restricted shadow needs k1 > k2 >= 0 and l1 < l2, got (k1,l1)=(" +
                             std::to_string(k1) + "," + std::to_string(ell1) + "), (k2,l2)=(" +
                             std::to_string(k2) + "," + std::to_string(ell2) + ")");
    if (k2 + ell2 > n)
        throw contract_error("restricted shadow target exceeds ambient: k2+l2 > n");
    std::vector<Monomial> content = strongly_stable_closure(U);
    content = shad_power(content, ell2 - ell1);
    std::vector<Monomial> out;
    for (const Monomial& v : content)
        if (v.max_index() <= k2 + ell2) out.push_back(v);
    return out;
}

bool bshad_contains(const Monomial& u, const Monomial& v, int k2, int ell2) {
    u.require_same_ambient(v);
    if (u.is_one() || v.degree() < u.degree())
        throw contract_error("restricted shadow membership needs 1 <= deg(u) <= deg(v)");
    if (v.degree() != ell2)
        throw contract_error("membership candidate must have degree l2");
    if (v.max_index() > k2 + ell2) return false;
    std::vector<int> us = u.support();
    std::vector<int> vs = v.support();
    for (std::size_t j = 0; j < us.size(); ++j)
        if (vs[j] > us[j]) return false;
    return true;
}

namespace {

// Keep the support below k2+l2, then fill with the greatest free indices.
Monomial min_bshad_core(const Monomial& u, int k2, int ell2) {
    int j = k2 + ell2;
    std::vector<int> kept;
    for (int idx : u.support())
        if (idx < j) kept.push_back(idx);
    Monomial v = Monomial::from_support(u.ambient(), kept);
    int q = ell2 - static_cast<int>(kept.size());
    while (q > 0) {
        if (j <= 0)
            throw contract_error("restricted shadow of " + u.str() + " at (" +
                                 std::to_string(k2) + "," + std::to_string(ell2) + ") is empty");
        if (!v.contains(j)) {
            v = v.with(j);
            --q;
        }
        --j;
    }
    return v;
}

} // namespace

Monomial min_bshad(const Monomial& u, int k2, int ell2) {
    int ell1 = u.degree();
    int k1 = u.max_index() - ell1;
    if (u.is_one())
        throw contract_error("min of a restricted shadow needs a nonunit monomial");
    if (!(k1 > k2 && k2 >= 0 && ell1 < ell2))
        throw contract_error("min of restricted shadow needs k1 > k2 >= 0 and l1 < l2");
    if (k2 + ell2 > u.ambient())
        throw contract_error("restricted shadow target exceeds ambient: k2+l2 > n");
    return min_bshad_core(u, k2, ell2);
}

Monomial min_bshad_of_set(std::span<const Monomial> U, int k2, int ell2) {
    if (U.empty()) throw contract_error("min of a restricted shadow needs a nonempty set");
    int ell1 = U.front().degree();
    if (k2 < 0 || ell1 < 1 || ell1 >= ell2 || k2 + ell2 > U.front().ambient())
        throw contract_error("min of restricted shadow needs 1 <= l1 < l2, 0 <= k2, k2+l2 <= n");
    std::optional<Monomial> best;
    for (const Monomial& u : U) {
        u.require_same_ambient(U.front());
        if (u.degree() != ell1)
            throw contract_error("restricted shadow input must be of one degree");
        Monomial v = min_bshad_core(u, k2, ell2);
        if (!best || slex_greater(*best, v)) best = v;
    }
    return *best;
}

} // namespace sqbetti
