#include <catch2/catch_amalgamated.hpp>

#include "glm/equivar.hpp"
#include "support.hpp"

using namespace glm;
using namespace glm::testing;

namespace {

GLMCategory category(const std::string& f, int eps = 1, BetaChoice b = BetaChoice::pseudo_unitary) {
    return make_category(build(parse_jordan(f)), eps, Branch::principal, b);
}

std::vector<std::string> labels(const GLMCategory& cat, const std::vector<EqSimple>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(eq_label(cat, x));
    return out;
}

}  // namespace

TEST_CASE("object counts") {
    CHECK(simple_objects(category("4_1^+1")).size() == 9);
    CHECK(simple_objects(category("3^-1")).size() == 5);
    CHECK(simple_objects(category("2_1^+1")).size() == 8);
    for (const auto& f : battery()) {
        auto cat = category(f);
        const auto& g = cat.group();
        std::size_t t2 = g.torsion2().size(), n = g.order();
        auto objs = simple_objects(cat);
        CHECK(objs.size() == 2 * t2 + (n - t2) / 2 + 2 * t2);
        CHECK(objs.front() == EqSimple::X(0, 1));
    }
}

TEST_CASE("fusion rule examples for 4_1") {
    auto cat = category("4_1^+1");
    auto y = EqSimple::Y(1);
    CHECK(labels(cat, eq_fusion(cat, y, y)) == std::vector<std::string>{"X(0)+", "X(0)-", "X(2)+", "X(2)-"});
    CHECK(labels(cat, eq_fusion(cat, y, EqSimple::Z(0, -1))) == std::vector<std::string>{"Z(1)+", "Z(1)-"});
    // B(2,2) = 1 here
    CHECK(labels(cat, eq_fusion(cat, EqSimple::X(2, -1), EqSimple::X(2, -1))) == std::vector<std::string>{"X(0)+"});
    CHECK(labels(cat, eq_fusion(cat, EqSimple::X(2, 1), EqSimple::X(2, -1))) == std::vector<std::string>{"X(0)-"});
    // for 2_1 B(1,1) = -1 flips the sign
    auto c2 = category("2_1^+1");
    CHECK(labels(c2, eq_fusion(c2, EqSimple::X(1, 1), EqSimple::X(1, 1))) == std::vector<std::string>{"X(0)-"});
    CHECK(labels(cat, eq_fusion(cat, EqSimple::X(2, 1), y)) == std::vector<std::string>{"Y(1)"});
}

TEST_CASE("fusion rings are commutative, associative and dimension preserving") {
    for (const auto& f : battery()) {
        auto cat = category(f);
        auto md = modular_data(cat);
        int n = md.size();
        INFO(f);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Cyclotomic d;
                for (int c = 0; c < n; ++c) {
                    CHECK(md.N(a, b, c) == md.N(b, a, c));
                    d += Cyclotomic(md.N(a, b, c)) * md.dims[c];
                }
                CHECK(d == md.dims[a] * md.dims[b]);
                CHECK(md.N(0, a, b) == (a == b ? 1 : 0));
            }
        for (int a = 0; a < n; a += 2)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d) {
                        int lhs = 0, rhs = 0;
                        for (int m = 0; m < n; ++m) {
                            lhs += md.N(a, b, m) * md.N(m, c, d);
                            rhs += md.N(b, c, m) * md.N(a, m, d);
                        }
                        CHECK(lhs == rhs);
                    }
    }
}

TEST_CASE("reference 4_1 modular data") {
    auto cat = category("4_1^+1");
    auto md = permuted(modular_data(cat), paper_order(modular_data(cat)));
    CHECK(md.labels == std::vector<std::string>{"X(0)+", "X(0)-", "X(2)-", "X(2)+", "Z(0)-", "Z(1)-", "Z(0)+", "Z(1)+", "Y(1)"});
    std::vector<Cyclotomic> T = {1, 1, -1, -1, root_of_unity(15, 16), root_of_unity(15, 16),
                                 root_of_unity(7, 16), root_of_unity(7, 16), root_of_unity(7, 8)};
    CHECK(md.T == T);
    CHECK(md.S[0] == std::vector<Cyclotomic>{1, 1, 1, 1, sqrt_int(2), sqrt_int(2), sqrt_int(2), sqrt_int(2), 2});
    CHECK(md.S[4][5] == Cyclotomic(2));
    CHECK(md.S[4][6] == Cyclotomic(0));
    CHECK(md.global_dim == Cyclotomic(16));
}

TEST_CASE("S_XZ does not depend on the coset representative") {
    for (const auto& f : battery()) {
        auto cat = category(f);
        const auto& g = cat.group();
        const auto& form = cat.data().form();
        for (int a : g.torsion2())
            for (int c = 0; c < g.num_cosets(); ++c) {
                Root first = form.B(g.coset_rep(c), a);
                for (int x : g.coset_members(c)) CHECK(form.B(x, a) == first);
            }
    }
}

TEST_CASE("S_ZZ without 2_t, 4_t or 2_II components") {
    for (std::string f : {"3^+1", "3^-1", "5^-1", "9^+1", "8_1^+1", "8_3^-1", "16_5^-1", "4_II^+2", "4_II^-2",
                          "8_1^+1 + 3^-1", "4_II^-2 + 5^+1"}) {
        for (int eps : {1, -1}) {
            auto cat = category(f, eps);
            auto objs = simple_objects(cat);
            auto S = s_matrix(cat);
            const auto& g = cat.group();
            int s_even = 1;
            long long odd = 1;
            for (const auto& c : cat.data().form().components()) {
                if (c.p == 2) s_even *= c.sign;
                else odd *= c.modulus;
            }
            Cyclotomic base = Cyclotomic(eps * s_even * jacobi(2, odd)) * sqrt_int(g.order());
            INFO(f << " eps " << eps);
            REQUIRE(cat.data().delta() == 0);
            for (std::size_t i = 0; i < objs.size(); ++i)
                for (std::size_t j = 0; j < objs.size(); ++j) {
                    if (objs[i].kind != EqSimple::Kind::Z || objs[j].kind != EqSimple::Kind::Z) continue;
                    bool diag = g.coset_add(objs[i].label, objs[j].label) == g.coset_id(0);
                    CHECK(S[i][j] == (diag ? Cyclotomic(objs[i].sign * objs[j].sign) * base : Cyclotomic(0)));
                }
        }
    }
}

TEST_CASE("Verlinde values") {
    auto cat = category("4_1^+1");
    auto md = modular_data(cat);
    int y = md.index_of("Y(1)"), x0 = md.index_of("X(0)+"), z = md.index_of("Z(0)+");
    CHECK(verlinde(md, y, y, x0) == Rational(1));
    CHECK(verlinde(md, z, z, x0) == Rational(md.N(z, z, x0)));
    for (int j = 0; j < md.size(); ++j)
        for (int k = 0; k < md.size(); ++k) CHECK(verlinde(md, 0, j, k) == Rational(j == k ? 1 : 0));
}

TEST_CASE("modularity on the battery") {
    for (const auto& f : battery())
        for (int eps : {1, -1})
            for (auto b : {BetaChoice::pseudo_unitary, BetaChoice::negative}) {
                auto cat = category(f, eps, b);
                auto rep = verify_modular(modular_data(cat), b == BetaChoice::pseudo_unitary);
                std::string failed;
                for (const auto& c : rep.checks)
                    if (!c.ok) failed += " " + c.name + " (" + c.detail + ")";
                INFO(f << " eps " << eps << failed);
                CHECK(rep.ok());
            }
}

TEST_CASE("negative beta flips the defect dimensions") {
    auto md = modular_data(category("8_1^+1", 1, BetaChoice::negative));
    for (int i = 0; i < md.size(); ++i)
        if (md.objects[i].kind == EqSimple::Kind::Z) CHECK(md.dims[i] == -sqrt_int(4));
    CHECK(md.global_dim == Cyclotomic(32));
}

TEST_CASE("tampered data is caught by the two S computations") {
    auto base = build(parse_jordan("4_1^+1"));
    auto cat = make_category(base, 1);
    // wrong epsilon: the closed form changes sign on Z x Z, the balanced one does not
    GLMCategory bad(base, -1, cat.alpha(), cat.beta());
    CHECK_THROWS_AS(s_matrix(bad), SMatrixMismatch);
    // alpha beta no longer a sign
    CHECK_THROWS(s_matrix(GLMCategory(base, 1, cat.alpha(), cat.beta() * Root(1, 4))));
}

TEST_CASE("permutations") {
    auto md = modular_data(category("2_1^+1 + 3^-1"));
    std::vector<int> rev(md.size());
    for (int i = 0; i < md.size(); ++i) rev[i] = md.size() - 1 - i;
    auto p = permuted(permuted(md, rev), rev);
    CHECK(p.S == md.S);
    CHECK(p.labels == md.labels);
    CHECK(p.fusion == md.fusion);
    CHECK(p.dual == md.dual);
    auto r = permuted(md, rev);
    CHECK(verify_modular(r, true).ok());
    CHECK_THROWS(permuted(md, std::vector<int>(md.size(), 0)));
}
