// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "glm/equivar.hpp"
#include "glm/lattice.hpp"
#include "support.hpp"

using namespace glm;
using namespace glm::testing;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;

    void fail(const std::string& what) {
        if (ok) note << what;
        ok = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

GLMCategory category(const std::string& f, int eps, BetaChoice b = BetaChoice::pseudo_unitary,
                     Branch br = Branch::principal) {
    return make_category(build(parse_jordan(f)), eps, br, b);
}

Cyclotomic cyc(Root r) { return Cyclotomic(r); }

// 1 -----------------------------------------------------------------------

void fixture_4_1(Outcome& out) {
    auto t0 = std::chrono::steady_clock::now();
    auto cat = category("4_1^+1", 1);
    auto md = modular_data(cat);
    md = permuted(md, paper_order(md));
    double dt = seconds_since(t0);

    if (cat.alpha() != Root(7, 16) || cat.beta() != Root(9, 16)) out.fail("alpha/beta differ");
    std::vector<std::string> labels = {"X(0)+", "X(0)-", "X(2)-", "X(2)+", "Z(0)-", "Z(1)-", "Z(0)+", "Z(1)+", "Y(1)"};
    if (md.labels != labels) out.fail("object order differs");

    std::vector<Cyclotomic> T = {1, 1, -1, -1, root_of_unity(15, 16), root_of_unity(15, 16),
                                 root_of_unity(7, 16), root_of_unity(7, 16), root_of_unity(7, 8)};
    Cyclotomic r = sqrt_int(2);
    Cyclotomic z = 0;
    // upper triangle, row by row
    std::vector<std::vector<Cyclotomic>> upper = {
        {1, 1, 1, 1, r, r, r, r, 2},
        {1, 1, 1, -r, -r, -r, -r, 2},
        {1, 1, r, -r, r, -r, -2},
        {1, -r, r, -r, r, -2},
        {z, 2, z, -2, z},
        {z, -2, z, z},
        {z, 2, z},
        {z, z},
        {z},
    };
    CycMatrix S(9, std::vector<Cyclotomic>(9));
    for (int i = 0; i < 9; ++i)
        for (int j = i; j < 9; ++j) S[i][j] = S[j][i] = upper[i][j - i];

    if (md.T != T) out.fail("T differs");
    int bad = 0;
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            if (md.S[i][j] != S[i][j]) ++bad;
    if (bad) out.fail(std::to_string(bad) + " S entries differ");
    if (dt >= 1.0) out.fail("too slow");
    out.note << (out.ok ? "" : "; ") << "T and 81 S entries exact, " << dt << " s";
}

// 2 -----------------------------------------------------------------------

void coherence_battery(Outcome& out) {
    auto t0 = std::chrono::steady_clock::now();
    int runs = 0;
    long long instances = 0;
    for (const auto& f : battery())
        for (int eps : {1, -1})
            for (auto b : {BetaChoice::pseudo_unitary, BetaChoice::negative}) {
                auto rep = verify_all(category(f, eps, b));
                ++runs;
                for (const auto& fam : rep.families) instances += fam.instances_checked;
                if (!rep.ok()) {
                    std::string names;
                    for (const auto& n : rep.failed_families()) names += " " + n;
                    out.fail(f + " eps " + std::to_string(eps) + ":" + names);
                }
            }
    double dt = seconds_since(t0);
    if (dt >= 300) out.fail("too slow");
    out.note << (out.ok ? "" : "; ") << runs << " categories, " << instances << " instances, " << dt << " s";
}

// 3 -----------------------------------------------------------------------

void odd_reduction(Outcome& out) {
    long long scalars = 0;
    for (std::string f : {"3^+1", "3^-1", "5^+1", "5^-1", "7^+1", "7^-1"}) {
        auto form = parse_jordan(f);
        const auto& g = form.group();
        int n = g.order();
        // q = Q^{1/2}, sigma = B^{1/2}
        std::vector<Root> q(n);
        for (int a = 0; a < n; ++a) q[a] = form.Q(a).pow((n + 1) / 2);
        auto sigma = [&](int a, int b) { return q[g.add(a, b)] / (q[a] * q[b]); };
        Cyclotomic gq;
        for (int a = 0; a < n; ++a) gq += cyc(q[a].inv());
        gq /= sqrt_int(n);

        for (int eps : {1, -1})
            for (auto br : {Branch::principal, Branch::negative})
                for (auto bc : {BetaChoice::pseudo_unitary, BetaChoice::negative}) {
                    auto cat = category(f, eps, bc, br);
                    std::string tag = f + " eps " + std::to_string(eps);
                    auto expect = [&](const Scalar& got, const Cyclotomic& want, const std::string& what) {
                        ++scalars;
                        if (cat.value(got) != want) out.fail(tag + ": " + what);
                    };
                    Cyclotomic alpha = cyc(cat.alpha()), beta = cyc(cat.beta());
                    if (alpha * alpha != Cyclotomic(eps) * gq) out.fail(tag + ": alpha^2");
                    if (cat.data().delta() != 0 || g.num_cosets() != 1) out.fail(tag + ": not one defect");
                    int X = cat.defect(0);
                    int N = cat.num_simples();
                    Cyclotomic inv_sqrt = Cyclotomic(eps) / sqrt_int(n);
                    // associators over every admissible labelling
                    for (int a = 0; a < N; ++a)
                        for (int b = 0; b < N; ++b)
                            for (int c = 0; c < N; ++c)
                                for (int e : cat.fuse(a, b))
                                    for (int d : cat.fuse(e, c))
                                        for (int fi : cat.fuse(b, c)) {
                                            if (!cat.fuses(a, fi, d)) continue;
                                            Cyclotomic want = 1;
                                            bool da = cat.is_defect(a), db = cat.is_defect(b), dc = cat.is_defect(c);
                                            if (!da && db && !dc) want = cyc(sigma(a, c));
                                            else if (da && !db && dc) want = cyc(sigma(b, d));
                                            else if (da && db && dc) want = inv_sqrt * cyc(sigma(e, fi).inv());
                                            expect(cat.F(a, b, c, d, e, fi), want, "F");
                                        }
                    for (int a = 0; a < N; ++a)
                        for (int b = 0; b < N; ++b)
                            for (int w : cat.fuse(a, b)) {
                                Cyclotomic want;
                                if (!cat.is_defect(a) && !cat.is_defect(b)) want = cyc(sigma(a, b));
                                else if (!cat.is_defect(a)) want = cyc(q[a].inv());
                                else if (!cat.is_defect(b)) want = cyc(q[b].inv());
                                else want = alpha * cyc(q[w]);
                                expect(cat.R(a, b, w), want, "R");
                                expect(cat.tau(a, b, w), 1, "tau");
                            }
                    for (int a = 0; a < n; ++a) expect(cat.theta(a), cyc(q[a] * q[a]), "theta point");
                    expect(cat.theta(X), beta, "theta defect");

                    // equivariant closed forms
                    auto md = modular_data(cat);
                    int dsign = eps * (cat.alpha() * cat.beta()).as_sign();
                    Cyclotomic rt = sqrt_int(n);
                    int k2 = kronecker(2, n);
                    for (int i = 0; i < md.size(); ++i) {
                        const auto& x = md.objects[i];
                        Cyclotomic t;
                        switch (x.kind) {
                            case EqSimple::Kind::X: t = 1; break;
                            case EqSimple::Kind::Y: t = cyc(form.Q(x.label).inv()); break;
                            case EqSimple::Kind::Z: t = Cyclotomic(x.sign) / beta; break;
                        }
                        ++scalars;
                        if (md.T[i] != t) out.fail(tag + ": T " + md.labels[i]);
                        for (int j = 0; j < md.size(); ++j) {
                            const auto& y = md.objects[j];
                            using K = EqSimple::Kind;
                            Cyclotomic s;
                            if (x.kind == K::X && y.kind == K::X) s = 1;
                            else if (x.kind == K::X && y.kind == K::Y) s = 2;
                            else if (x.kind == K::Y && y.kind == K::X) s = 2;
                            else if (x.kind == K::X && y.kind == K::Z) s = Cyclotomic(x.sign * dsign) * rt;
                            else if (x.kind == K::Z && y.kind == K::X) s = Cyclotomic(y.sign * dsign) * rt;
                            else if (x.kind == K::Y && y.kind == K::Y) {
                                Cyclotomic bq = cyc(form.B(x.label, y.label));
                                s = Cyclotomic(2) * (bq + bq.inv());
                            } else if (x.kind == K::Z && y.kind == K::Z)
                                s = Cyclotomic(eps * x.sign * y.sign * k2) * rt;
                            else s = 0;
                            ++scalars;
                            if (md.S[i][j] != s) out.fail(tag + ": S " + md.labels[i] + "," + md.labels[j]);
                        }
                    }
                }
    }
    out.note << (out.ok ? "" : "; ") << scalars << " scalars compared";
}

// 4 -----------------------------------------------------------------------

Cyclotomic direct_partial_q(const CocycleData& data) {
    const auto& g = data.group();
    Cyclotomic sum;
    for (int a = 0; a < g.order(); ++a)
        if (g.coset_id(a) == g.coset_id(data.delta())) sum += cyc(data.q(a).inv());
    return sum / sqrt_int(static_cast<std::int64_t>(g.two_gamma().size()));
}

void gauss_sums(Outcome& out) {
    int count = 0;
    for (const auto& f : battery()) {
        auto d = parse_jordan(f);
        bool has_2t = false;
        long long odd = 1;
        for (const auto& c : d.components()) {
            if (c.kind == JordanKind::two_adic_cyclic && c.k == 1) has_2t = true;
            if (c.p != 2) odd *= c.modulus;
        }
        if (has_2t) continue;
        auto data = build(d);
        Cyclotomic want = Cyclotomic(sign_s_even(d) * kronecker(2, odd)) * root_of_unity(-signature(d), 8);
        ++count;
        if (direct_partial_q(data) != want) out.fail(f + " direct sum");
        if (gauss_partial_q(data) != want) out.fail(f + " library");
    }
    for (int k = 2; k <= 4; ++k)
        for (int t : {1, 3, 5, 7}) {
            int s = kronecker2(t);
            std::string f = std::to_string(1 << k) + "_" + std::to_string(t) + "^" + (s > 0 ? "+" : "-") + "1";
            auto data = build(parse_jordan(f));
            int sgn = (k + 1) % 2 == 0 ? 1 : s;
            Cyclotomic want = Cyclotomic(sgn) * root_of_unity(-t, 8);
            ++count;
            if (direct_partial_q(data) != want || gauss_partial_q(data) != want) out.fail(f);
        }
    out.note << (out.ok ? "" : "; ") << count << " forms";
}

// 5 -----------------------------------------------------------------------

void lattice_pipeline(Outcome& out) {
    auto t0 = std::chrono::steady_clock::now();
    for (long long n : {2, 4, 6, 8}) {
        auto data = build_cocycle_from_lattice(make_lattice({{n}}));
        if (gauss_partial_q(data) != root_of_unity(7, 8) || direct_partial_q(data) != root_of_unity(7, 8))
            out.fail("G_delta for [[" + std::to_string(n) + "]]");
    }

    auto lat = build_cocycle_from_lattice(make_lattice({{4}}));
    auto jor = build(parse_jordan("4_1^+1"));
    if (lat.order() != jor.order()) out.fail("[[4]] order");
    else {
        for (int a = 0; a < jor.order(); ++a) {
            if (lat.form().Q(a) != jor.form().Q(a)) out.fail("[[4]] Q");
            if (lat.q(a) != jor.q(a)) out.fail("[[4]] q");
            for (int b = 0; b < jor.order(); ++b)
                if (lat.form().B(a, b) != jor.form().B(a, b)) out.fail("[[4]] B");
        }
        if (lat.delta() != jor.delta()) out.fail("[[4]] delta");
        for (int eps : {1, -1}) {
            auto m1 = modular_data(make_category(lat, eps));
            auto m2 = modular_data(make_category(jor, eps));
            if (m1.labels != m2.labels || m1.S != m2.S || m1.T != m2.T || m1.fusion != m2.fusion)
                out.fail("[[4]] modular data");
        }
    }

    std::vector<std::pair<std::string, IntMatrix>> grams = {
        {"[[2]]", {{2}}}, {"[[4]]", {{4}}}, {"[[0,2],[2,0]]", {{0, 2}, {2, 0}}},
        {"diag(2,2)", {{2, 0}, {0, 2}}}, {"diag(4,6)", {{4, 0}, {0, 6}}}};
    for (const auto& [name, g] : grams)
        if (!verify_milgram(make_lattice(g)).ok()) out.fail("Milgram " + name);
    double dt = seconds_since(t0);
    if (dt >= 10) out.fail("too slow");
    out.note << (out.ok ? "" : "; ") << dt << " s";
}

// 6 -----------------------------------------------------------------------

void modularity(Outcome& out) {
    int runs = 0;
    for (const auto& f : battery())
        for (int eps : {1, -1})
            for (auto b : {BetaChoice::pseudo_unitary, BetaChoice::negative}) {
                auto md = modular_data(category(f, eps, b));
                auto rep = verify_modular(md, b == BetaChoice::pseudo_unitary);
                ++runs;
                if (!rep.ok()) {
                    std::string names;
                    for (const auto& c : rep.checks)
                        if (!c.ok) names += " " + c.name;
                    out.fail(f + " eps " + std::to_string(eps) + ":" + names);
                }
                Cyclotomic sum;
                for (const auto& d : md.dims) sum += d * d;
                if (sum != Cyclotomic(4 * md.group_order)) out.fail(f + " sum of dims");
            }
    out.note << (out.ok ? "" : "; ") << runs << " categories";
}

// 7 -----------------------------------------------------------------------

void character_sums(Outcome& out) {
    long long triples = 0;
    for (const auto& f : battery()) {
        auto data = build(parse_jordan(f));
        const auto& g = data.group();
        if (g.order() > 32) continue;
        auto m = static_cast<long long>(g.two_gamma().size());
        auto cosets = g.cosets_mod2();
        for (int rc = 0; rc < g.num_cosets(); ++rc) {
            auto rs = g.coset_members(rc);
            for (int s = 0; s < g.order(); ++s)
                for (int l = 0; l < g.order(); ++l) {
                    if (g.coset_id(s) != g.coset_id(l)) continue;
                    Cyclotomic direct;
                    for (int r : rs) direct += cyc(data.sigma(r, s) / data.sigma(r, l));
                    direct /= Cyclotomic(m);
                    Cyclotomic want = s == l ? 1 : 0;
                    Cyclotomic lib = character_sum(data, cosets[rc], g.element(s), g.element(l));
                    ++triples;
                    if (direct != want || lib != want) out.fail(f);
                }
        }
    }
    out.note << (out.ok ? "" : "; ") << triples << " triples";
}

// 8 -----------------------------------------------------------------------

void mutations(Outcome& out) {
    auto base = build(parse_jordan("4_1^+1"));
    auto cat = make_category(base, 1);
    std::vector<std::pair<std::string, GLMCategory>> cases = {
        {"sigma", GLMCategory(base.with_sigma(1, 2, base.sigma(1, 2) * Root(1, 2)), 1, cat.alpha(), cat.beta())},
        {"q", GLMCategory(base.with_q(1, base.q(1) * Root(1, 2)), 1, cat.alpha(), cat.beta())},
        {"alpha", GLMCategory(base, 1, cat.alpha() * Root(1, 4), cat.beta())},
        {"beta", GLMCategory(base, 1, cat.alpha(), cat.beta() * Root(1, 4))},
        {"associator", cat.with_associator_factor(1, cat.defect(0), 1, cat.defect(0), cat.defect(1), cat.defect(1),
                                                  Root(1, 2))},
    };
    if (!verify_all(cat).ok()) out.fail("unmutated category fails");
    for (const auto& [name, c] : cases) {
        auto failed = verify_all(c).failed_families();
        if (failed.empty()) {
            out.fail(name + " mutation not detected");
            continue;
        }
        if (!out.ok) continue;
        out.note << (name == cases.front().first ? "" : "; ") << name << " -> " << failed.front()
                 << (failed.size() > 1 ? " +" + std::to_string(failed.size() - 1) : "");
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string title;
        std::function<void(Outcome&)> run;
    };
    std::vector<Criterion> criteria = {
        {1, "4_1 fixture, exact S and T", fixture_4_1},
        {2, "coherence on the battery", coherence_battery},
        {3, "odd groups reduce to Tambara-Yamagami", odd_reduction},
        {4, "partial Gauss sum closed forms", gauss_sums},
        {5, "lattice pipeline", lattice_pipeline},
        {6, "modularity on the battery", modularity},
        {7, "character-sum lemma", character_sums},
        {8, "mutations are detected", mutations},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome out;
        try {
            c.run(out);
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        if (!out.ok) ++failures;
        std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << out.note.str()
                  << ")" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
