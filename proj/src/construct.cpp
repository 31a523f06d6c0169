#include "sqbetti/construct.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

namespace sqbetti {

void validate(const CornerSpec& spec) {
    int n = spec.n;
    if (n < 5 || n > Monomial::max_ambient)
        throw contract_error("corner specs need 5 <= n <= " +
                             std::to_string(Monomial::max_ambient));
    std::size_t r = spec.corners.size();
    if (r == 0) throw contract_error("corner spec needs at least one corner");
    if (spec.values.size() != r)
        throw contract_error("corner spec has " + std::to_string(r) + " corners but " +
                             std::to_string(spec.values.size()) + " values");
    for (std::size_t i = 0; i < r; ++i) {
        const Corner& c = spec.corners[i];
        if (c.ell < 2) throw contract_error("corner degrees must be >= 2");
        if (c.k < 2) throw contract_error("corner columns must be >= 2");
        if (c.k + c.ell > n) throw contract_error("corner (" + std::to_string(c.k) + "," +
                                                  std::to_string(c.ell) + ") violates k+l <= n");
        if (i > 0) {
            if (spec.corners[i - 1].k <= c.k)
                throw contract_error("corner columns must strictly decrease");
            if (spec.corners[i - 1].ell >= c.ell)
                throw contract_error("corner degrees must strictly increase");
        }
        if (spec.values[i] < 1) throw contract_error("corner values must be >= 1");
    }
    if (spec.corners.front().k > n - 3)
        throw contract_error("first corner column must be <= n-3");
    int ell1 = spec.corners.front().ell;
    std::size_t max_corners = (ell1 == 2) ? static_cast<std::size_t>(n - 3)
                                          : static_cast<std::size_t>(n - ell1);
    if (r > max_corners)
        throw contract_error("at most " + std::to_string(max_corners) +
                             " corners are possible with initial degree " + std::to_string(ell1));
}

std::vector<ChainRow> chain_basic_monomials(int n, int ell) {
    if (n < 5 || n > Monomial::max_ambient)
        throw contract_error("basic-monomial chains need 5 <= n <= " +
                             std::to_string(Monomial::max_ambient));
    if (ell != 2 && (ell < 3 || ell > n - 2))
        throw contract_error("basic-monomial chains need l = 2 or 3 <= l <= n-2");

    std::vector<int> start;
    for (int i = 1; i < ell; ++i) start.push_back(i);
    start.push_back(n);
    Monomial w = Monomial::from_support(n, start);

    std::vector<ChainRow> rows;
    rows.push_back(ChainRow{std::nullopt, w});
    while (true) {
        auto w_gaps = gap_profile(w);
        if (w_gaps.empty()) break;
        // v fills the top gap of w from the right.
        int t = w_gaps.back().position;
        Monomial v = w.with(w.support_at(t + 1) - 1);
        auto v_gaps = gap_profile(v);
        if (v_gaps.empty()) {
            rows.push_back(ChainRow{v, std::nullopt});
            break;
        }
        // w' is the greatest monomial with max index n below v: shift the top
        // gap of v to a consecutive run, re-anchoring at x_n if the run falls
        // short of it.
        int p = v_gaps.back().position;
        std::vector<int> supp = v.support();
        int d = v.degree();
        std::vector<int> out(supp.begin(), supp.begin() + (p - 1));
        int run_end = supp[p - 1] + d - p + 1;
        if (run_end == n) {
            for (int x = supp[p - 1] + 1; x <= run_end; ++x) out.push_back(x);
        } else {
            for (int x = supp[p - 1] + 1; x <= supp[p - 1] + d - p; ++x) out.push_back(x);
            out.push_back(n);
        }
        Monomial w_next = Monomial::from_support(n, out);
        if (!w.divides(v) || w.divides(w_next) || !slex_greater(v, w_next))
            throw std::logic_error("basic-monomial chain invariant broke at " + w.str());
        rows.push_back(ChainRow{v, w_next});
        w = w_next;
    }
    return rows;
}

MonomialIdeal lex_corner_ideal(int n, int ell1) {
    if (n < 5 || n > Monomial::max_ambient)
        throw contract_error("lex corner construction needs 5 <= n <= " +
                             std::to_string(Monomial::max_ambient));
    if (ell1 < 3 || ell1 > n - 2)
        throw contract_error("lex corner construction needs 3 <= l1 <= n-2, got l1=" +
                             std::to_string(ell1));

    std::vector<Monomial> gens;
    std::vector<Monomial> content; // degree-d monomials of the ideal, slex desc
    for (int d = ell1; d <= n - 1; ++d) {
        std::vector<Monomial> new_gens;
        Monomial cur = Monomial::one(n);
        if (d == ell1) {
            std::vector<int> top(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i) top[static_cast<std::size_t>(i)] = i + 1;
            cur = Monomial::from_support(n, top);
            new_gens.push_back(cur);
        } else {
            content = shadow(content);
            cur = content.back(); // minimum of the shadow
        }
        // New generators run from just below cur to the first monomial whose
        // max index reaches n; that one closes the degree with corner value 1.
        while (new_gens.empty() || new_gens.back().max_index() < n) {
            auto nxt = next_in_slex(cur);
            if (!nxt) throw std::logic_error("lex corner walk ran off degree " + std::to_string(d));
            cur = *nxt;
            new_gens.push_back(cur);
        }
        gens.insert(gens.end(), new_gens.begin(), new_gens.end());
        content.insert(content.end(), new_gens.begin(), new_gens.end());
        content = sorted_slex_desc(std::move(content));
    }
    return minimal_generators(n, gens);
}

namespace {

struct Analysis {
    FeasibilityReport report;
    std::vector<std::vector<Monomial>> basics;
};

Analysis analyze(const CornerSpec& spec) {
    validate(spec);
    int n = spec.n;
    std::size_t r = spec.corners.size();
    Analysis out;
    out.report.per_corner.resize(r);
    auto fail = [&](std::size_t corner, const Monomial& witness, const std::string& what) {
        out.report.feasible = false;
        out.report.failing_corner = static_cast<int>(corner) + 1;
        out.report.witness = witness;
        out.report.detail = what;
        out.basics.clear();
    };

    // Bottom-up chain: v_r is the minimum of its A-set; v_i closes the
    // longest top prefix of A^s(k_i,l_i) all of whose members keep the head
    // of corner i+1's segment out of their restricted shadow; n_i is the
    // position of v_i.
    std::vector<Monomial> segment_head(r, Monomial::one(n));
    std::vector<BigInt> n_vals(r);
    for (std::size_t idx = r; idx-- > 0;) {
        const Corner& c = spec.corners[idx];
        std::optional<Monomial> v;
        if (idx + 1 == r) {
            v = min_of_A(n, c.k, c.ell);
        } else {
            const Corner& next_c = spec.corners[idx + 1];
            Monomial cur = max_of_A(n, c.k, c.ell);
            while (!bshad_contains(cur, segment_head[idx + 1], next_c.k, next_c.ell)) {
                v = cur;
                auto down = next_in_A(cur);
                if (!down) break;
                cur = *down;
            }
            if (!v) {
                fail(idx, segment_head[idx + 1],
                     "every monomial of A^s(" + std::to_string(c.k) + "," + std::to_string(c.ell) +
                         ") shadows the next corner's segment head");
                return out;
            }
        }
        n_vals[idx] = count_upto(*v);
        out.report.per_corner[idx].upper = n_vals[idx];
        if (idx == 0) {
            out.report.per_corner[0].strictly_above = 0;
            out.report.per_corner[0].admissible = n_vals[0];
        }
        if (spec.values[idx] > n_vals[idx]) {
            fail(idx, *v,
                 "requested value " + spec.values[idx].str() + " exceeds the bound " +
                     n_vals[idx].str() + " at corner " + std::to_string(idx + 1));
            return out;
        }
        Monomial head = *v;
        for (BigInt step = 1; step < spec.values[idx]; ++step) {
            auto up = prev_in_A(head);
            if (!up) throw std::logic_error("segment head walked past the top of its A-set");
            head = *up;
        }
        segment_head[idx] = head;
    }

    // Top-down greedy selection; p_i is the count of monomials above the
    // segment start.
    std::vector<Monomial> content;
    for (std::size_t idx = 0; idx < r; ++idx) {
        const Corner& c = spec.corners[idx];
        Monomial head = Monomial::one(n);
        BigInt p = 0;
        if (idx == 0) {
            head = max_of_A(n, c.k, c.ell);
        } else {
            Monomial shadow_min = min_bshad_of_set(content, c.k, c.ell);
            auto below = next_in_A(shadow_min);
            if (!below) {
                fail(idx, shadow_min,
                     "A^s(" + std::to_string(c.k) + "," + std::to_string(c.ell) +
                         ") is exhausted: nothing lies below the restricted shadow");
                return out;
            }
            head = *below;
            p = count_upto(head) - 1;
        }
        out.report.per_corner[idx].strictly_above = p;
        BigInt admissible = n_vals[idx] - p;
        out.report.per_corner[idx].admissible = admissible;
        if (spec.values[idx] > admissible) {
            fail(idx, head,
                 "admissible segment length at corner " + std::to_string(idx + 1) + " is " +
                     admissible.str() + ", requested " + spec.values[idx].str());
            return out;
        }
        std::vector<Monomial> picked{head};
        Monomial cur = head;
        for (BigInt step = 1; step < spec.values[idx]; ++step) {
            auto down = next_in_A(cur);
            if (!down) throw std::logic_error("greedy segment walked past the bottom of its A-set");
            cur = *down;
            picked.push_back(cur);
        }
        out.basics.push_back(picked);
        std::vector<Monomial> closed = strongly_stable_closure(picked);
        if (idx == 0) {
            content = std::move(closed);
        } else {
            content = shad_power(content, c.ell - spec.corners[idx - 1].ell);
            content.insert(content.end(), closed.begin(), closed.end());
            content = sorted_slex_desc(std::move(content));
        }
    }
    out.report.feasible = true;
    return out;
}

} // namespace

FeasibilityReport feasibility_bounds(const CornerSpec& spec) { return analyze(spec).report; }

BasicMonomialSet basic_monomials(const CornerSpec& spec) {
    Analysis a = analyze(spec);
    if (!a.report.feasible)
        throw infeasible_error(a.report.detail, a.report.failing_corner.value_or(0));
    return BasicMonomialSet{std::move(a.basics)};
}

MonomialIdeal construct_ideal(const CornerSpec& spec) {
    BasicMonomialSet basics = basic_monomials(spec);
    int n = spec.n;
    std::vector<Monomial> gens;
    std::vector<Monomial> content;
    for (std::size_t idx = 0; idx < basics.per_corner.size(); ++idx) {
        std::vector<Monomial> closed = strongly_stable_closure(basics.per_corner[idx]);
        if (idx == 0) {
            gens = closed;
            content = std::move(closed);
            continue;
        }
        content = shad_power(content, spec.corners[idx].ell - spec.corners[idx - 1].ell);
        std::unordered_set<std::uint64_t> shadow_masks;
        for (const Monomial& m : content) shadow_masks.insert(m.mask());
        for (const Monomial& m : closed)
            if (!shadow_masks.count(m.mask())) gens.push_back(m);
        content.insert(content.end(), closed.begin(), closed.end());
        content = sorted_slex_desc(std::move(content));
    }
    MonomialIdeal ideal = minimal_generators(n, gens);
    CornerReport realized = extremal_betti(ideal);
    CornerReport wanted{spec.corners, spec.values};
    if (!(realized == wanted))
        throw std::logic_error("constructed ideal does not realize the requested corners");
    return ideal;
}

namespace {

std::vector<Monomial> all_monomials_of_degree(int n, int d) {
    std::vector<Monomial> out;
    std::vector<int> supp(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) supp[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.push_back(Monomial::from_support(n, supp));
        int p = d - 1;
        while (p >= 0 && supp[static_cast<std::size_t>(p)] == n - (d - 1 - p)) --p;
        if (p < 0) break;
        ++supp[static_cast<std::size_t>(p)];
        for (int q = p + 1; q < d; ++q)
            supp[static_cast<std::size_t>(q)] = supp[static_cast<std::size_t>(q - 1)] + 1;
    }
    return out;
}

// DFS over strongly stable subsets of one degree that contain `forced`.
// The universe is slex-descending, so every exchange-lowering of an element
// is decided before the element itself.
void strongly_stable_subsets(const std::vector<Monomial>& universe, std::size_t idx,
                             std::vector<Monomial>& chosen,
                             std::unordered_set<std::uint64_t>& chosen_masks,
                             const std::unordered_set<std::uint64_t>& forced,
                             const std::function<void(const std::vector<Monomial>&)>& sink) {
    if (idx == universe.size()) {
        sink(chosen);
        return;
    }
    const Monomial& u = universe[idx];
    bool closed = true;
    for (int i : u.support()) {
        for (int j = 1; j < i && closed; ++j) {
            if (u.contains(j)) continue;
            if (!chosen_masks.count(u.without(i).with(j).mask())) closed = false;
        }
        if (!closed) break;
    }
    bool must = forced.count(u.mask()) > 0;
    if (must && !closed) throw std::logic_error("forced set is not strongly stable");
    if (closed) {
        chosen.push_back(u);
        chosen_masks.insert(u.mask());
        strongly_stable_subsets(universe, idx + 1, chosen, chosen_masks, forced, sink);
        chosen_masks.erase(u.mask());
        chosen.pop_back();
    }
    if (!must) strongly_stable_subsets(universe, idx + 1, chosen, chosen_masks, forced, sink);
}

void towers(int n, int d, int min_indeg, const std::vector<Monomial>& required,
            std::vector<Monomial>& gens, std::vector<MonomialIdeal>& out) {
    if (d > n) {
        if (!gens.empty()) out.push_back(minimal_generators(n, gens));
        return;
    }
    if (d < min_indeg) {
        // No generators allowed yet: the degree-d content is exactly the
        // shadow of the previous one.
        towers(n, d + 1, min_indeg, shadow(required), gens, out);
        return;
    }
    std::vector<Monomial> universe = all_monomials_of_degree(n, d);
    std::unordered_set<std::uint64_t> forced;
    for (const Monomial& m : required) forced.insert(m.mask());
    std::vector<Monomial> chosen;
    std::unordered_set<std::uint64_t> chosen_masks;
    strongly_stable_subsets(universe, 0, chosen, chosen_masks, forced,
                            [&](const std::vector<Monomial>& T) {
                                std::size_t added = 0;
                                for (const Monomial& m : T)
                                    if (!forced.count(m.mask())) {
                                        gens.push_back(m);
                                        ++added;
                                    }
                                towers(n, d + 1, min_indeg, shadow(T), gens, out);
                                gens.resize(gens.size() - added);
                            });
}

// Preference order on witness ideals: fewest generators, then larger initial
// degree, then the slex-greater generator sequence.
bool better_witness(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.generator_count() != b.generator_count())
        return a.generator_count() < b.generator_count();
    if (a.indeg() != b.indeg()) return a.indeg() > b.indeg();
    std::vector<Monomial> ga = a.generators();
    std::vector<Monomial> gb = b.generators();
    for (std::size_t i = 0; i < ga.size() && i < gb.size(); ++i) {
        if (ga[i] == gb[i]) continue;
        if (ga[i].degree() != gb[i].degree()) return ga[i].degree() > gb[i].degree();
        return slex_greater(ga[i], gb[i]);
    }
    return false;
}

} // namespace

std::vector<MonomialIdeal> enumerate_strongly_stable_ideals(int n, int min_initial_degree,
                                                            int bound) {
    if (n < 2) throw contract_error("ideal enumeration needs n >= 2");
    if (n > bound)
        throw contract_error("ideal enumeration is capped at n=" + std::to_string(bound) +
                             "; raise the bound explicitly (hard limit 6) for larger n");
    if (n > 6 || bound > 6)
        throw contract_error("ideal enumeration beyond n=6 is intractable with this approach");
    std::vector<MonomialIdeal> out;
    std::vector<Monomial> gens;
    towers(n, 1, std::max(1, min_initial_degree), {}, gens, out);
    return out;
}

std::vector<CornerConfig> enumerate_corner_configs(int n, int min_initial_degree, int bound) {
    std::vector<MonomialIdeal> ideals =
        enumerate_strongly_stable_ideals(n, min_initial_degree, bound);
    using Key = std::pair<std::vector<Corner>, std::vector<BigInt>>;
    std::map<Key, MonomialIdeal> best;
    for (const MonomialIdeal& ideal : ideals) {
        CornerReport report = extremal_betti(ideal);
        bool all_positive = true;
        for (const Corner& c : report.corners)
            if (c.k < 1) all_positive = false;
        if (!all_positive) continue;
        Key key{report.corners, report.values};
        auto it = best.find(key);
        if (it == best.end())
            best.emplace(key, ideal);
        else if (better_witness(ideal, it->second))
            it->second = ideal;
    }
    std::vector<CornerConfig> out;
    for (auto& [key, witness] : best)
        out.push_back(CornerConfig{CornerReport{key.first, key.second}, witness});
    return out;
}

} // namespace sqbetti
