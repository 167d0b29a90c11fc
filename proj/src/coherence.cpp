#include <algorithm>
#include <deque>
#include <functional>

#include "glm/glmcat.hpp"

namespace glm {

namespace {

class Checker {
public:
    explicit Checker(const GLMCategory& cat) : cat_(cat) {}

    FamilyResult& family(const std::string& name) {
        auto it = index_.find(name);
        if (it != index_.end()) return families_[it->second];
        index_[name] = families_.size();
        families_.push_back(FamilyResult{name, 0, 0, {}});
        return families_.back();
    }

    void expect(FamilyResult& fam, const ScalarSum& lhs, const ScalarSum& rhs,
                const std::function<std::string()>& objects, const std::function<std::string()>& basis) {
        ++fam.instances_checked;
        if (lhs.equals(rhs)) return;
        ++fam.failure_count;
        if (fam.failures.size() < 5) fam.failures.push_back({objects(), basis(), lhs.value().str(), rhs.value().str()});
    }

    void expect(FamilyResult& fam, const Scalar& lhs, const Scalar& rhs, const std::function<std::string()>& objects,
                const std::function<std::string()>& basis) {
        expect(fam, sum(lhs), sum(rhs), objects, basis);
    }

    void expect_bool(FamilyResult& fam, bool ok, const std::string& objects, const std::string& what) {
        ++fam.instances_checked;
        if (ok) return;
        ++fam.failure_count;
        if (fam.failures.size() < 5) fam.failures.push_back({objects, what, "false", "true"});
    }

    ScalarSum sum(const Scalar& s) const {
        ScalarSum out(cat_.two_gamma_order());
        out.add(s);
        return out;
    }
    ScalarSum empty() const { return ScalarSum(cat_.two_gamma_order()); }

    std::string names(std::initializer_list<int> ids) const {
        std::string s;
        for (int i : ids) {
            if (!s.empty()) s += ",";
            s += cat_.name(i);
        }
        return s;
    }

    std::string letters(std::initializer_list<int> ids) const {
        std::string s;
        for (int i : ids) s += cat_.is_defect(i) ? 'X' : 'C';
        return s;
    }

    CoherenceReport finish() {
        CoherenceReport r{{families_.begin(), families_.end()}};
        std::stable_sort(r.families.begin(), r.families.end(),
                         [](const FamilyResult& a, const FamilyResult& b) { return a.family < b.family; });
        return r;
    }

    void pentagons();
    void action();
    void hexagons();
    void ribbon();
    void rigidity();
    void cross_validation();

private:
    const GLMCategory& cat_;
    std::deque<FamilyResult> families_;  // stable references
    std::map<std::string, std::size_t> index_;
};

void Checker::pentagons() {
    const auto& c = cat_;
    int s = c.num_simples();
    FamilyResult& invertible = family("associator invertibility");
    int nc = c.group().num_cosets();
    invertible.instances_checked = static_cast<long long>(nc) * nc * nc;
    for (const auto& b : c.singular_blocks()) {
        ++invertible.failure_count;
        if (invertible.failures.size() < 5)
            invertible.failures.push_back({names({b[0], b[1], b[2]}), "associator block", "singular", "invertible"});
    }
    for (int A = 0; A < s; ++A)
        for (int B = 0; B < s; ++B)
            for (int C = 0; C < s; ++C)
                for (int W = 0; W < s; ++W) {
                    FamilyResult& fam = family("pentagon " + letters({A, B, C, W}));
                    for (int e : c.fuse(A, B))
                        for (int p : c.fuse(e, C))
                            for (int r : c.fuse(p, W))
                                for (int h : c.fuse(C, W)) {
                                    if (!c.fuses(e, h, r)) continue;
                                    for (int g : c.fuse(B, h)) {
                                        if (!c.fuses(A, g, r)) continue;
                                        ScalarSum lhs = empty();
                                        for (int f : c.fuse(B, C)) {
                                            if (!c.fuses(A, f, p) || !c.fuses(f, W, g)) continue;
                                            lhs.add(c.F(A, B, C, p, e, f) * c.F(A, f, W, r, p, g) * c.F(B, C, W, g, f, h));
                                        }
                                        ScalarSum rhs = sum(c.F(e, C, W, r, p, h) * c.F(A, B, h, r, e, g));
                                        expect(
                                            fam, lhs, rhs, [&] { return names({A, B, C, W}); },
                                            [&] { return "e=" + c.name(e) + " p=" + c.name(p) + " r=" + c.name(r) +
                                                         " g=" + c.name(g) + " h=" + c.name(h); });
                                    }
                                }
                }
}

void Checker::action() {
    const auto& c = cat_;
    int s = c.num_simples();
    FamilyResult& objects = family("action on objects");
    for (int x = 0; x < s; ++x) {
        expect_bool(objects, c.g_act(c.g_act(x)) == x, c.name(x), "g(g(x)) = x");
        expect_bool(objects, c.grade(c.g_act(x)) == c.grade(x), c.name(x), "g preserves grading");
        for (int y = 0; y < s; ++y)
            for (int w = 0; w < s; ++w)
                expect_bool(objects, c.fuses(x, y, w) == c.fuses(c.g_act(x), c.g_act(y), c.g_act(w)),
                            names({x, y, w}), "g respects fusion");
    }
    FamilyResult& square = family("tau square");
    for (int X = 0; X < s; ++X)
        for (int Y = 0; Y < s; ++Y)
            for (int Z = 0; Z < s; ++Z)
                for (int e : c.fuse(X, Y))
                    for (int d : c.fuse(e, Z))
                        for (int f : c.fuse(Y, Z)) {
                            if (!c.fuses(X, f, d)) continue;
                            Scalar lhs = c.tau(X, Y, e) * c.tau(e, Z, d) *
                                         c.F(c.g_act(X), c.g_act(Y), c.g_act(Z), c.g_act(d), c.g_act(e), c.g_act(f));
                            Scalar rhs = c.F(X, Y, Z, d, e, f) * c.tau(X, f, d) * c.tau(Y, Z, f);
                            expect(
                                square, lhs, rhs, [&] { return names({X, Y, Z}); },
                                [&] { return "e=" + c.name(e) + " f=" + c.name(f) + " d=" + c.name(d); });
                        }
    FamilyResult& invol = family("tau involution");
    FamilyResult& unit = family("tau unit");
    FamilyResult& braid = family("braiding action compatibility");
    for (int X = 0; X < s; ++X)
        for (int Y = 0; Y < s; ++Y)
            for (int w : c.fuse(X, Y)) {
                auto objs = [&] { return names({X, Y}); };
                auto basis = [&] { return "w=" + c.name(w); };
                expect(invol, c.tau(X, Y, w) * c.tau(c.g_act(X), c.g_act(Y), c.g_act(w)), Scalar(), objs, basis);
                if (X == c.point(0) || Y == c.point(0)) expect(unit, c.tau(X, Y, w), Scalar(), objs, basis);
                expect(braid, c.R(X, Y, w) * c.tau(c.act_by(X, Y), X, w),
                       c.tau(X, Y, w) * c.R(c.g_act(X), c.g_act(Y), c.g_act(w)), objs, basis);
            }
}

void Checker::hexagons() {
    const auto& c = cat_;
    int s = c.num_simples();
    for (int X = 0; X < s; ++X)
        for (int Y = 0; Y < s; ++Y)
            for (int Z = 0; Z < s; ++Z) {
                FamilyResult& hex = family("hexagon " + letters({X, Y, Z}));
                int xY = c.act_by(X, Y), xZ = c.act_by(X, Z);
                for (int e : c.fuse(X, Y))
                    for (int d : c.fuse(e, Z))
                        for (int k : c.fuse(X, Z)) {
                            if (!c.fuses(xY, k, d)) continue;
                            ScalarSum top = empty();
                            for (int f : c.fuse(Y, Z)) {
                                if (!c.fuses(X, f, d)) continue;
                                Scalar t = c.F(X, Y, Z, d, e, f) * c.R(X, f, d);
                                if (c.is_defect(X)) t = t * c.tau(Y, Z, f);
                                int xf = c.act_by(X, f);
                                t = t * c.F(xY, xZ, X, d, xf, k);
                                top.add(t);
                            }
                            ScalarSum bottom = sum(c.R(X, Y, e) * c.F(xY, X, Z, d, e, k) * c.R(X, Z, k));
                            expect(
                                hex, top, bottom, [&] { return names({X, Y, Z}); },
                                [&] { return "e=" + c.name(e) + " d=" + c.name(d) + " k=" + c.name(k); });
                        }

                FamilyResult& inv = family("inverse hexagon " + letters({X, Y, Z}));
                int yZ = c.act_by(Y, Z);
                for (int f : c.fuse(Y, Z))
                    for (int d : c.fuse(X, f))
                        for (int k : c.fuse(X, yZ)) {
                            if (!c.fuses(k, Y, d)) continue;
                            ScalarSum top = empty();
                            for (int e : c.fuse(X, Y)) {
                                if (!c.fuses(e, Z, d)) continue;
                                int eZ = c.act_by(e, Z);
                                top.add(c.Finv(X, Y, Z, d, f, e) * c.R(e, Z, d) * c.Finv(eZ, X, Y, d, e, k));
                            }
                            ScalarSum bottom = sum(c.R(Y, Z, f) * c.Finv(X, yZ, Y, d, f, k) * c.R(X, yZ, k));
                            expect(
                                inv, top, bottom, [&] { return names({X, Y, Z}); },
                                [&] { return "f=" + c.name(f) + " d=" + c.name(d) + " k=" + c.name(k); });
                        }
            }
}

void Checker::ribbon() {
    const auto& c = cat_;
    int s = c.num_simples();
    FamilyResult& bal = family("twist balancing");
    for (int X = 0; X < s; ++X)
        for (int Y = 0; Y < s; ++Y)
            for (int w : c.fuse(X, Y)) {
                Scalar lhs = c.theta(w);
                if (c.is_defect(w)) lhs = lhs * c.tau(X, Y, w);
                Scalar rhs = c.R(X, Y, w) * c.R(c.act_by(X, Y), X, w) * c.theta(X) * c.theta(Y);
                expect(
                    bal, lhs, rhs, [&] { return names({X, Y}); }, [&] { return "w=" + c.name(w); });
            }
    FamilyResult& invar = family("twist invariance");
    FamilyResult& selfdual = family("twist self-duality");
    for (int X = 0; X < s; ++X) {
        auto objs = [&] { return c.name(X); };
        auto none = [] { return std::string(); };
        expect(invar, c.theta(c.g_act(X)), c.theta(X), objs, none);
        Scalar lhs = c.theta(X);
        if (c.is_defect(X)) lhs = lhs * c.tau(c.act_by(X, X), c.dual(X), c.point(0));
        expect(selfdual, lhs, c.theta(c.dual(X)), objs, none);
    }
}

void Checker::rigidity() {
    const auto& c = cat_;
    int s = c.num_simples();
    int one = c.point(0);
    FamilyResult& zig = family("zigzag");
    FamilyResult& dims = family("dimension");
    Cyclotomic root_m = sqrt_int(c.two_gamma_order());
    bool pseudo_unitary = c.alpha() * c.beta() == Root(c.epsilon() > 0 ? 0 : 1, 2);
    for (int X = 0; X < s; ++X) {
        int Xd = c.dual(X);
        auto objs = [&] { return c.name(X); };
        auto none = [] { return std::string(); };
        expect_bool(zig, c.fuses(X, Xd, one) && c.fuses(Xd, X, one), c.name(X), "unit in X (x) X*");
        expect_bool(zig, c.dual(Xd) == X, c.name(X), "X** = X");
        expect(zig, c.coev(X) * c.F(X, Xd, X, X, one, one) * c.ev(X), Scalar(), objs, none);
        expect(zig, c.coev(X) * c.Finv(Xd, X, Xd, Xd, one, one) * c.ev(X), Scalar(), objs, none);

        Cyclotomic d = c.value(c.dimension(X));
        if (!c.is_defect(X)) {
            expect_bool(dims, d == Cyclotomic(1), c.name(X), "dim C_a = 1");
        } else {
            expect_bool(dims, d * d == Cyclotomic(c.two_gamma_order()), c.name(X), "dim(X)^2 = |2G|");
            expect_bool(dims, is_positive_real(d) == pseudo_unitary, c.name(X), "dim(X) > 0 iff alpha beta = eps");
            Cyclotomic expected = Cyclotomic(c.epsilon()) * Cyclotomic(c.alpha() * c.beta()) * root_m;
            expect_bool(dims, d == expected, c.name(X), "dim(X) = eps alpha beta sqrt|2G|");
        }
    }
    expect_bool(dims, c.global_dim() == Cyclotomic(2LL * c.group().order()), "all", "global dimension = 2|G|");
}

void Checker::cross_validation() {
    const auto& c = cat_;
    const auto& data = c.data();
    const auto& g = c.group();
    int n = g.order();

    FamilyResult& alpha = family("check alpha squared");
    CyclotomicSum gs;
    for (int a = 0; a < n; ++a)
        if (g.coset_id(a) == g.coset_id(data.delta())) gs.add(data.q(a).inv());
    Cyclotomic gdelta = gs.value() / sqrt_int(c.two_gamma_order());
    ++alpha.instances_checked;
    Cyclotomic a2 = Cyclotomic(c.alpha()).pow(2);
    Cyclotomic rhs = Cyclotomic(c.epsilon()) * gdelta;
    if (a2 != rhs) {
        ++alpha.failure_count;
        alpha.failures.push_back({"alpha", "", a2.str(), rhs.str()});
    }

    FamilyResult& twist = family("check defect twist identity");
    for (int x = 0; x < g.num_cosets(); ++x)
        for (int y = 0; y < g.num_cosets(); ++y)
            for (int t : c.fuse(c.defect(x), c.defect(y))) {
                Scalar lhs = c.theta(t) * c.theta(c.defect(x)).inv() * c.theta(c.defect(y)).inv();
                Scalar r = Scalar(c.alpha() * data.q(t));
                expect(
                    twist, lhs, r * r, [&] { return names({c.defect(x), c.defect(y)}); },
                    [&] { return "t=" + c.name(t); });
            }

    FamilyResult& hex = family("check point hexagon reduction");
    const Root one;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int cc = 0; cc < n; ++cc) {
                Root w = data.omega(a, b, cc);
                expect(
                    hex, Scalar(w * w), Scalar(one), [&] { return names({a, b, cc}); },
                    [] { return std::string("omega^2 = 1"); });
                expect(
                    hex, Scalar(data.omega(b, cc, a)), Scalar(data.omega(b, a, cc)),
                    [&] { return names({a, b, cc}); }, [] { return std::string("omega(b,c,a) = omega(b,a,c)"); });
            }
}

}  // namespace

bool CoherenceReport::ok() const {
    for (const auto& f : families)
        if (!f.ok()) return false;
    return true;
}

const FamilyResult* CoherenceReport::find(const std::string& family) const {
    for (const auto& f : families)
        if (f.family == family) return &f;
    return nullptr;
}

std::vector<std::string> CoherenceReport::failed_families() const {
    std::vector<std::string> out;
    for (const auto& f : families)
        if (!f.ok()) out.push_back(f.family);
    return out;
}

CoherenceReport verify_all(const GLMCategory& cat) {
    Checker ch(cat);
    ch.pentagons();
    ch.action();
    ch.hexagons();
    ch.ribbon();
    ch.rigidity();
    ch.cross_validation();
    return ch.finish();
}

}  // namespace glm
