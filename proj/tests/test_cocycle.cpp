#include <catch2/catch_amalgamated.hpp>

#include "glm/cocycle.hpp"
#include "support.hpp"

using namespace glm;
using namespace glm::testing;

TEST_CASE("battery cocycles satisfy every property") {
    for (const auto& f : battery()) {
        auto data = build(parse_jordan(f));
        auto rep = verify_cocycle(data);
        INFO(f << (rep.failure ? ": " + rep.failure->property + " " + rep.failure->witness : ""));
        CHECK(rep.ok());
        CHECK(rep.checked.size() == 10);
    }
}

TEST_CASE("cyclotomic 2-adic component values") {
    auto d = build(parse_jordan("4_1^+1"));
    CHECK(d.sigma(1, 1) == Root(1, 8));
    CHECK(d.q(1) == Root(1, 16));
    CHECK(d.delta() == 0);
    auto two = build(parse_jordan("2_1^+1"));
    CHECK(two.delta() == 1);
    auto eight = build(parse_jordan("8_3^-1"));
    CHECK(eight.q(1) == Root(3, 32));
}

TEST_CASE("sigma restricts to Q on the diagonal and squares to B") {
    for (std::string f : {"2_II^-2", "4_II^-2", "2_II^+2", "8_II^-2"}) {
        auto d = build(parse_jordan(f));
        const auto& form = d.form();
        INFO(f);
        for (int a = 0; a < d.order(); ++a) {
            CHECK(d.sigma(a, a) == form.Q(a));
            CHECK(d.q(a) * d.q(a) == form.Q(a));
            for (int b = 0; b < d.order(); ++b) CHECK(d.sigma(a, b).pow(2) == form.B(a, b));
        }
    }
}

TEST_CASE("omega takes values +-1 and vanishes for odd groups") {
    for (const auto& f : battery()) {
        auto d = build(parse_jordan(f));
        bool odd = d.order() % 2 == 1;
        for (int a = 0; a < d.order(); ++a)
            for (int b = 0; b < d.order(); ++b)
                for (int c = 0; c < d.order(); c += 2) {
                    Root w = d.omega(a, b, c);
                    CHECK((w == Root() || w == Root(1, 2)));
                    if (odd) CHECK(w == Root());
                }
    }
}

TEST_CASE("mutations are detected") {
    auto d = build(parse_jordan("4_1^+1"));
    CHECK_FALSE(verify_cocycle(d.with_sigma(1, 1, d.sigma(1, 1) * Root(1, 2))).ok());
    CHECK_FALSE(verify_cocycle(d.with_q(1, d.q(1) * Root(1, 4))).ok());
    auto bad = verify_cocycle(d.with_q(2, d.q(2) * Root(1, 2)));
    REQUIRE(bad.failure);
    CHECK_FALSE(bad.failure->property.empty());
}

TEST_CASE("partial Gauss sums") {
    // direct summation, independent of the library
    for (const auto& f : battery()) {
        auto d = build(parse_jordan(f));
        const auto& g = d.group();
        std::complex<double> s = 0;
        for (int a = 0; a < g.order(); ++a)
            if (g.coset_id(a) == g.coset_id(d.delta())) s += std::conj(e_num(d.q(a)));
        s /= std::sqrt(static_cast<double>(g.two_gamma().size()));
        INFO(f);
        CHECK(close(gauss_partial_q(d).approx(), s));
        CHECK(close(std::abs(s), 1.0));
    }
    auto d = build(parse_jordan("4_1^+1"));
    CHECK(gauss_partial_q(d) == root_of_unity(7, 8));
    CHECK(gauss_partial_Q(d, 0).is_zero());
    CHECK(gauss_partial_Q(d, 1) == sqrt_int(2) * root_of_unity(1, 8));
}

TEST_CASE("character sum lemma on small forms") {
    for (std::string f : {"4_1^+1", "2_1^+1", "2_II^-2", "3^+1"}) {
        auto d = build(parse_jordan(f));
        const auto& g = d.group();
        for (const auto& r : g.cosets_mod2())
            for (int s = 0; s < g.order(); ++s)
                for (int l = 0; l < g.order(); ++l) {
                    if (g.coset_id(s) != g.coset_id(l)) continue;
                    CHECK(character_sum(d, r, g.element(s), g.element(l)) == Cyclotomic(s == l ? 1 : 0));
                }
    }
}

TEST_CASE("character sum needs s and l in one coset") {
    auto d = build(parse_jordan("4_1^+1"));
    const auto& g = d.group();
    CHECK_THROWS(character_sum(d, g.cosets_mod2()[0], g.element(0), g.element(1)));
}

TEST_CASE("element-level omega agrees with the table") {
    auto d = build(parse_jordan("4_1^+1 + 2_II^-2"));
    const auto& g = d.group();
    for (int a = 0; a < g.order(); a += 3)
        for (int b = 0; b < g.order(); ++b)
            for (int c = 0; c < g.order(); c += 5)
                CHECK(omega(d, g.element(a), g.element(b), g.element(c)) == Cyclotomic(d.omega(a, b, c)));
}
