#include <doctest.h>

#include <algorithm>

#include "sqbetti/stable.hpp"

using namespace sqbetti;

namespace {

Monomial mk(int n, std::initializer_list<int> idx) { return Monomial::from_support(n, idx); }

std::vector<Monomial> degree_slice(int n, int d) {
    std::vector<Monomial> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
        if (__builtin_popcountll(mask) == d) out.push_back(Monomial(n, mask));
    return sorted_slex_desc(std::move(out));
}

bool set_contains(const std::vector<Monomial>& set, const Monomial& m) {
    return std::find(set.begin(), set.end(), m) != set.end();
}

MonomialIdeal example_n6() {
    // 10-generator strongly stable ideal in 6 variables.
    return minimal_generators(
        6, {mk(6, {1, 2}), mk(6, {1, 3}), mk(6, {1, 4}), mk(6, {1, 5}), mk(6, {2, 3, 4}),
            mk(6, {2, 3, 5}), mk(6, {2, 3, 6}), mk(6, {2, 4, 5}), mk(6, {2, 4, 6}),
            mk(6, {3, 4, 5, 6})});
}

} // namespace

TEST_CASE("minimal generators") {
    MonomialIdeal a = minimal_generators(3, {mk(3, {1, 2}), mk(3, {1, 2, 3})});
    CHECK(a.generators() == std::vector<Monomial>{mk(3, {1, 2})});

    MonomialIdeal b = minimal_generators(3, {mk(3, {1, 2}), mk(3, {1, 3})});
    CHECK(b.generator_count() == 2);
    CHECK(b.indeg() == 2);

    CHECK(example_n6().generator_count() == 10);

    MonomialIdeal zero = minimal_generators(4, std::initializer_list<Monomial>{});
    CHECK(zero.is_zero());
    CHECK(zero.indeg() == 0);

    CHECK(example_n6().contains(mk(6, {1, 2, 6})));
    CHECK_FALSE(example_n6().contains(mk(6, {5, 6})));
}

TEST_CASE("classification") {
    MonomialIdeal lex = minimal_generators(5, {mk(5, {1, 2, 3}), mk(5, {1, 2, 4}),
                                               mk(5, {1, 2, 5}), mk(5, {1, 3, 4}),
                                               mk(5, {2, 3, 4, 5})});
    StabilityClass c = classify(lex);
    CHECK(c.is_lex);
    CHECK(c.is_strongly_stable);
    CHECK(c.is_stable);

    StabilityClass c6 = classify(example_n6());
    CHECK(c6.is_strongly_stable);

    // Strongly stable but not lex: x1*x4 sits above x2*x3 and is missing.
    MonomialIdeal not_lex =
        minimal_generators(4, {mk(4, {1, 2}), mk(4, {1, 3}), mk(4, {2, 3})});
    StabilityClass cn = classify(not_lex);
    CHECK(cn.is_strongly_stable);
    CHECK_FALSE(cn.is_lex);

    MonomialIdeal bad = minimal_generators(3, {mk(3, {2, 3})});
    StabilityClass cb = classify(bad);
    CHECK_FALSE(cb.is_stable);
    CHECK_FALSE(cb.is_strongly_stable);
    CHECK(stable_violation(bad).find("x1*x2") != std::string::npos);

    StabilityClass cz = classify(MonomialIdeal::zero(4));
    CHECK(cz.is_stable);
    CHECK(cz.is_strongly_stable);
    CHECK(cz.is_lex);
}

TEST_CASE("lex implies strongly stable implies stable (n <= 5 exhaustive by closures)") {
    for (int n = 3; n <= 5; ++n)
        for (int d = 1; d <= n; ++d)
            for (const Monomial& seed : degree_slice(n, d)) {
                MonomialIdeal ideal = minimal_generators(n, strongly_stable_closure({seed}));
                StabilityClass c = classify(ideal);
                CHECK(c.is_strongly_stable);
                if (c.is_lex) CHECK(c.is_strongly_stable);
                if (c.is_strongly_stable) CHECK(c.is_stable);
            }
}

TEST_CASE("strongly stable closure") {
    CHECK(strongly_stable_closure({mk(3, {2, 3})}) ==
          std::vector<Monomial>{mk(3, {1, 2}), mk(3, {1, 3}), mk(3, {2, 3})});
    CHECK(strongly_stable_closure({mk(4, {1, 2})}) == std::vector<Monomial>{mk(4, {1, 2})});
    CHECK(strongly_stable_closure(std::vector<Monomial>{}).empty());
    std::vector<Monomial> mixed{mk(4, {1, 2}), mk(4, {1, 2, 3})};
    CHECK_THROWS_AS(strongly_stable_closure(mixed), contract_error);
}

TEST_CASE("closure is idempotent, monotone, minimal (n <= 7)") {
    for (int n = 3; n <= 7; ++n)
        for (int d = 1; d < n; ++d) {
            std::vector<Monomial> slice = degree_slice(n, d);
            for (const Monomial& u : slice) {
                std::vector<Monomial> once = strongly_stable_closure({u});
                CHECK(is_strongly_stable_set(once));
                CHECK(strongly_stable_closure(once) == once);
                // Componentwise description: w is in B(u) iff supp(w) sits
                // under supp(u) position by position.
                std::vector<int> us = u.support();
                for (const Monomial& w : slice) {
                    std::vector<int> ws = w.support();
                    bool dominated = true;
                    for (std::size_t j = 0; j < ws.size(); ++j)
                        if (ws[j] > us[j]) dominated = false;
                    CHECK(set_contains(once, w) == dominated);
                }
            }
            // Monotonicity on pairs.
            for (std::size_t a = 0; a < slice.size(); a += 2)
                for (std::size_t b = a + 1; b < slice.size(); b += 3) {
                    std::vector<Monomial> small = strongly_stable_closure({slice[a]});
                    std::vector<Monomial> big =
                        strongly_stable_closure({slice[a], slice[b]});
                    for (const Monomial& m : small) CHECK(set_contains(big, m));
                }
        }
}

TEST_CASE("closure as one-degree ideal is strongly stable") {
    for (int n = 3; n <= 6; ++n)
        for (int d = 1; d < n; ++d)
            for (const Monomial& u : degree_slice(n, d)) {
                MonomialIdeal ideal = minimal_generators(n, strongly_stable_closure({u}));
                CHECK(classify(ideal).is_strongly_stable);
            }
}

TEST_CASE("shad_power") {
    std::vector<Monomial> T{mk(4, {1, 2})};
    CHECK(shad_power(T, 0) == T);
    CHECK(shad_power(std::vector<Monomial>{mk(3, {1, 2})}, 1) ==
          std::vector<Monomial>{mk(3, {1, 2, 3})});
    CHECK(shad_power(T, 2) == std::vector<Monomial>{mk(4, {1, 2, 3, 4})});
    CHECK(shad_power(T, 3).empty());
}

TEST_CASE("bshad paper anchors (n = 11)") {
    // Degree-3 seeds x1*x2*x11 .. x1*x8*x11.
    std::vector<Monomial> g3;
    for (int j = 2; j <= 8; ++j) g3.push_back(mk(11, {1, j, 11}));
    std::vector<Monomial> shad2 = bshad(g3, 4, 5);
    REQUIRE_FALSE(shad2.empty());
    CHECK(shad2.back() == mk(11, {1, 6, 7, 8, 9}));

    std::vector<Monomial> g5{mk(11, {2, 3, 4, 5, 9}), mk(11, {2, 3, 4, 6, 9}),
                             mk(11, {2, 3, 4, 7, 9}), mk(11, {2, 3, 4, 8, 9}),
                             mk(11, {2, 3, 5, 6, 9})};
    std::vector<Monomial> b6 = bshad(g5, 3, 6);
    CHECK_FALSE(set_contains(b6, mk(11, {2, 3, 5, 7, 8, 9})));
    CHECK(set_contains(b6, mk(11, {2, 3, 5, 6, 8, 9})));
    CHECK(b6.back() == mk(11, {2, 3, 5, 6, 8, 9}));

    CHECK(bshad(std::vector<Monomial>{}, 3, 6).empty());
}

TEST_CASE("min_bshad paper anchors") {
    CHECK(min_bshad(mk(11, {1, 8, 11}), 4, 5) == mk(11, {1, 6, 7, 8, 9}));
    CHECK(min_bshad(mk(11, {2, 3, 5, 6, 9}), 3, 6) == mk(11, {2, 3, 5, 6, 8, 9}));
    CHECK(min_bshad(mk(11, {2, 3, 6, 7, 8, 9}), 2, 9) ==
          mk(11, {2, 3, 5, 6, 7, 8, 9, 10, 11}));
    CHECK_THROWS_AS(min_bshad(mk(11, {1, 8, 11}), 8, 5), contract_error);
}

TEST_CASE("min_bshad equals the enumerated minimum (n <= 7 sweep)") {
    for (int n = 4; n <= 7; ++n)
        for (int ell1 = 2; ell1 < n; ++ell1)
            for (int k1 = 2; k1 + ell1 <= n; ++k1)
                for (int ell2 = ell1 + 1; ell2 <= n; ++ell2)
                    for (int k2 = 1; k2 < k1 && k2 + ell2 <= n; ++k2)
                        for (const Monomial& u : enumerate_A(n, k1, ell1).members) {
                            std::vector<Monomial> full = bshad(std::vector<Monomial>{u}, k2, ell2);
                            REQUIRE_FALSE(full.empty());
                            CHECK(min_bshad(u, k2, ell2) == full.back());
                        }
}

TEST_CASE("set minimum of bshad comes from the slex-least seed (n <= 9)") {
    for (int n = 5; n <= 9; ++n)
        for (int ell1 = 2; ell1 < n; ++ell1)
            for (int k1 = 2; k1 + ell1 <= n; ++k1) {
                ASet cell = enumerate_A(n, k1, ell1);
                for (std::size_t a = 0; a + 1 < cell.size(); a += 2) {
                    std::vector<Monomial> U{cell.members[a], cell.members[a + 1]};
                    for (int ell2 = ell1 + 1; ell2 <= n; ++ell2)
                        for (int k2 = 1; k2 < k1 && k2 + ell2 <= n; ++k2) {
                            std::vector<Monomial> full = bshad(U, k2, ell2);
                            REQUIRE_FALSE(full.empty());
                            CHECK(full.back() == min_bshad(cell.members[a + 1], k2, ell2));
                            CHECK(full.back() ==
                                  min_bshad_of_set(std::span(U.data(), U.size()), k2, ell2));
                        }
                }
            }
}

TEST_CASE("bshad_contains matches materialized membership (n <= 7)") {
    for (int n = 4; n <= 7; ++n)
        for (int ell1 = 2; ell1 < n; ++ell1)
            for (int k1 = 2; k1 + ell1 <= n; ++k1)
                for (int ell2 = ell1 + 1; ell2 <= n; ++ell2)
                    for (int k2 = 1; k2 < k1 && k2 + ell2 <= n; ++k2)
                        for (const Monomial& u : enumerate_A(n, k1, ell1).members) {
                            std::vector<Monomial> full = bshad(std::vector<Monomial>{u}, k2, ell2);
                            for (const Monomial& v : enumerate_A(n, k2, ell2).members)
                                CHECK(bshad_contains(u, v, k2, ell2) == set_contains(full, v));
                        }
}

TEST_CASE("gap lemma: a gappy shadow minimum leaves room in the A-set (n <= 9)") {
    for (int n = 5; n <= 9; ++n)
        for (int ell1 = 2; ell1 < n; ++ell1)
            for (int k1 = 2; k1 + ell1 <= n; ++k1)
                for (int ell2 = ell1 + 1; ell2 <= n; ++ell2)
                    for (int k2 = 1; k2 < k1 && k2 + ell2 <= n; ++k2)
                        for (const Monomial& u : enumerate_A(n, k1, ell1).members) {
                            Monomial v = min_bshad(u, k2, ell2);
                            if (gap_profile(v).empty()) continue;
                            std::vector<Monomial> inside =
                                bshad(std::vector<Monomial>{u}, k2, ell2);
                            bool missing = false;
                            for (const Monomial& w : enumerate_A(n, k2, ell2).members)
                                if (!set_contains(inside, w)) missing = true;
                            CHECK(missing);
                        }
}
