#include "glm/equivar.hpp"

#include <algorithm>

namespace glm {

namespace {

using Kind = EqSimple::Kind;

// Positions of the canonical objects.
struct Layout {
    const GLMCategory& cat;
    std::vector<int> t2_pos, orbit_pos;
    int nx = 0, ny = 0, nz = 0;

    explicit Layout(const GLMCategory& c) : cat(c) {
        const auto& g = c.group();
        t2_pos.assign(g.order(), -1);
        orbit_pos.assign(g.order(), -1);
        const auto& t2 = g.torsion2();
        for (std::size_t i = 0; i < t2.size(); ++i) t2_pos[t2[i]] = static_cast<int>(i);
        auto orbits = g.pair_orbits();
        for (std::size_t i = 0; i < orbits.size(); ++i) orbit_pos[orbits[i]] = static_cast<int>(i);
        nx = 2 * static_cast<int>(t2.size());
        ny = static_cast<int>(orbits.size());
        nz = 2 * g.num_cosets();
    }

    int index(const EqSimple& e) const {
        int neg = e.sign < 0 ? 1 : 0;
        switch (e.kind) {
            case Kind::X: return 2 * t2_pos[e.label] + neg;
            case Kind::Y: return nx + orbit_pos[e.label];
            case Kind::Z: return nx + ny + 2 * e.label + neg;
        }
        return -1;
    }
};

int sgn(Root r) { return r.as_sign(); }

}  // namespace

std::vector<EqSimple> simple_objects(const GLMCategory& cat) {
    const auto& g = cat.group();
    std::vector<EqSimple> out;
    for (int a : g.torsion2()) {
        out.push_back(EqSimple::X(a, 1));
        out.push_back(EqSimple::X(a, -1));
    }
    for (int a : g.pair_orbits()) out.push_back(EqSimple::Y(a));
    for (int c = 0; c < g.num_cosets(); ++c) {
        out.push_back(EqSimple::Z(c, 1));
        out.push_back(EqSimple::Z(c, -1));
    }
    return out;
}

std::string eq_label(const GLMCategory& cat, const EqSimple& x) {
    const auto& g = cat.group();
    std::string s = x.sign > 0 ? "+" : "-";
    switch (x.kind) {
        case Kind::X: return "X" + g.element(x.label).str() + s;
        case Kind::Y: return "Y" + g.element(x.label).str();
        case Kind::Z: return "Z" + g.element(g.coset_rep(x.label)).str() + s;
    }
    return {};
}

std::vector<EqSimple> eq_fusion(const GLMCategory& cat, const EqSimple& a, const EqSimple& b) {
    if (static_cast<int>(a.kind) > static_cast<int>(b.kind)) return eq_fusion(cat, b, a);
    const auto& g = cat.group();
    const auto& form = cat.data().form();
    auto B = [&](int x, int y) { return sgn(form.B(x, y)); };
    auto Yof = [&](int t) { return EqSimple::Y(g.orbit_rep(t)); };
    std::vector<EqSimple> out;

    if (a.kind == Kind::X && b.kind == Kind::X) {
        out.push_back(EqSimple::X(g.add(a.label, b.label), a.sign * b.sign * B(a.label, b.label)));
    } else if (a.kind == Kind::X && b.kind == Kind::Y) {
        out.push_back(Yof(g.add(a.label, b.label)));
    } else if (a.kind == Kind::X && b.kind == Kind::Z) {
        int ax = g.add(a.label, g.coset_rep(b.label));
        out.push_back(EqSimple::Z(g.coset_id(ax), a.sign * b.sign * B(ax, a.label)));
    } else if (a.kind == Kind::Y && b.kind == Kind::Y) {
        for (int t : {g.add(a.label, b.label), g.sub(a.label, b.label)}) {
            if (g.in_torsion2(t)) {
                out.push_back(EqSimple::X(t, 1));
                out.push_back(EqSimple::X(t, -1));
            } else {
                out.push_back(Yof(t));
            }
        }
    } else if (a.kind == Kind::Y && b.kind == Kind::Z) {
        int c = g.coset_add(b.label, g.coset_id(a.label));
        out.push_back(EqSimple::Z(c, 1));
        out.push_back(EqSimple::Z(c, -1));
    } else {
        int c = g.coset_add(g.coset_id(cat.data().delta()), g.coset_add(a.label, b.label));
        int x = g.coset_rep(a.label);
        for (int t : g.coset_members(c)) {
            if (g.in_torsion2(t))
                out.push_back(EqSimple::X(t, a.sign * b.sign * B(x, t)));
            else if (t == g.orbit_rep(t))
                out.push_back(EqSimple::Y(t));
        }
    }
    Layout lay(cat);
    std::sort(out.begin(), out.end(),
              [&](const EqSimple& p, const EqSimple& q) { return lay.index(p) < lay.index(q); });
    return out;
}

std::vector<Cyclotomic> t_matrix(const GLMCategory& cat) {
    const auto& form = cat.data().form();
    std::vector<Cyclotomic> t;
    for (const auto& x : simple_objects(cat)) {
        if (x.kind == Kind::Z)
            t.push_back(Cyclotomic(cat.beta().inv()) * Cyclotomic(x.sign));
        else
            t.push_back(Cyclotomic(form.Q(x.label).inv()));
    }
    return t;
}

CycMatrix s_matrix_closed(const GLMCategory& cat) {
    const auto& g = cat.group();
    const auto& form = cat.data().form();
    auto objs = simple_objects(cat);
    int n = static_cast<int>(objs.size());
    Cyclotomic root_m = sqrt_int(cat.two_gamma_order());
    // The closed form for S_{X,Z} is stated for the pseudo-unitary choice;
    // in general it carries the sign of the defect dimension.
    int dsign = sgn(Root(cat.epsilon() > 0 ? 0 : 1, 2) * cat.alpha() * cat.beta());
    Cyclotomic g_q = gauss_partial_q(cat.data());
    auto Bc = [&](int x, int y) { return Cyclotomic(form.B(x, y)); };

    auto entry = [&](const EqSimple& p, const EqSimple& q) -> Cyclotomic {
        if (p.kind == Kind::X && q.kind == Kind::X) return Bc(p.label, q.label);
        if (p.kind == Kind::X && q.kind == Kind::Y) return Cyclotomic(2) * Bc(p.label, q.label);
        if (p.kind == Kind::X && q.kind == Kind::Z)
            return Cyclotomic(p.sign * dsign) * root_m * Bc(g.coset_rep(q.label), p.label) *
                   Cyclotomic(form.Q(p.label));
        if (p.kind == Kind::Y && q.kind == Kind::Y) {
            Root b = form.B(p.label, q.label);
            return Cyclotomic(2) * (Cyclotomic(b) + Cyclotomic(b.inv()));
        }
        if (p.kind == Kind::Y && q.kind == Kind::Z) return Cyclotomic(0);
        return Cyclotomic(cat.epsilon() * p.sign * q.sign) * root_m * g_q *
               gauss_partial_Q(cat.data(), g.coset_add(p.label, q.label));
    };

    CycMatrix s(n, std::vector<Cyclotomic>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& p = objs[i];
            const auto& q = objs[j];
            s[i][j] = static_cast<int>(p.kind) <= static_cast<int>(q.kind) ? entry(p, q) : entry(q, p);
        }
    return s;
}

namespace {

Cyclotomic eq_twist(const GLMCategory& cat, const EqSimple& x) {
    if (x.kind == Kind::Z) return cat.twist(SimpleObj::defect_at(x.label)) * Cyclotomic(x.sign);
    return cat.twist(SimpleObj::point(x.label));
}

Cyclotomic eq_dim(const GLMCategory& cat, const EqSimple& x) {
    switch (x.kind) {
        case Kind::X: return cat.quantum_dimension(SimpleObj::point(x.label));
        case Kind::Y: return Cyclotomic(2) * cat.quantum_dimension(SimpleObj::point(x.label));
        case Kind::Z: return cat.quantum_dimension(SimpleObj::defect_at(x.label));
    }
    return {};
}

}  // namespace

CycMatrix s_matrix_balanced(const GLMCategory& cat) {
    auto objs = simple_objects(cat);
    int n = static_cast<int>(objs.size());
    Layout lay(cat);
    std::vector<Cyclotomic> theta(n), td(n);
    for (int i = 0; i < n; ++i) {
        theta[i] = eq_twist(cat, objs[i]);
        td[i] = theta[i] * eq_dim(cat, objs[i]);
    }
    CycMatrix s(n, std::vector<Cyclotomic>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            CyclotomicSum acc;
            for (const auto& z : eq_fusion(cat, objs[i], objs[j])) acc.add(td[lay.index(z)]);
            s[i][j] = acc.value() / (theta[i] * theta[j]);
            s[j][i] = s[i][j];
        }
    return s;
}

CycMatrix s_matrix(const GLMCategory& cat) {
    auto closed = s_matrix_closed(cat);
    auto balanced = s_matrix_balanced(cat);
    auto objs = simple_objects(cat);
    for (std::size_t i = 0; i < closed.size(); ++i)
        for (std::size_t j = 0; j < closed.size(); ++j)
            if (closed[i][j] != balanced[i][j])
                throw SMatrixMismatch("S(" + eq_label(cat, objs[i]) + ", " + eq_label(cat, objs[j]) +
                                      "): closed form " + closed[i][j].str() + " but balancing gives " +
                                      balanced[i][j].str());
    return closed;
}

int ModularData::index_of(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

int ModularData::unit() const {
    for (int i = 0; i < size(); ++i)
        if (objects[i] == EqSimple::X(0, 1)) return i;
    throw std::logic_error("no unit object");
}

ModularData modular_data(const GLMCategory& cat) {
    ModularData md;
    md.objects = simple_objects(cat);
    int n = md.size();
    for (const auto& x : md.objects) {
        md.labels.push_back(eq_label(cat, x));
        md.dims.push_back(eq_dim(cat, x));
    }
    md.S = s_matrix(cat);
    md.T = t_matrix(cat);
    CyclotomicSum gd;
    for (const auto& d : md.dims) gd.add_product(d, d);
    md.global_dim = gd.value();
    md.group_order = cat.group().order();

    Layout lay(cat);
    md.fusion.assign(static_cast<std::size_t>(n) * n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& z : eq_fusion(cat, md.objects[i], md.objects[j]))
                ++md.fusion[(static_cast<std::size_t>(i) * n + j) * n + lay.index(z)];
    md.dual.assign(n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (md.N(i, j, md.unit()) > 0) md.dual[i] = j;
    return md;
}

ModularData permuted(const ModularData& md, const std::vector<int>& perm) {
    int n = md.size();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation has wrong length");
    std::vector<int> inv(n, -1);
    for (int i = 0; i < n; ++i) inv.at(perm[i]) = i;
    if (std::count(inv.begin(), inv.end(), -1) > 0) throw std::invalid_argument("not a permutation");
    ModularData out = md;
    for (int i = 0; i < n; ++i) {
        out.objects[i] = md.objects[perm[i]];
        out.labels[i] = md.labels[perm[i]];
        out.T[i] = md.T[perm[i]];
        out.dims[i] = md.dims[perm[i]];
        out.dual[i] = md.dual[perm[i]] < 0 ? -1 : inv[md.dual[perm[i]]];
        for (int j = 0; j < n; ++j) {
            out.S[i][j] = md.S[perm[i]][perm[j]];
            for (int k = 0; k < n; ++k)
                out.fusion[(static_cast<std::size_t>(i) * n + j) * n + k] = md.N(perm[i], perm[j], perm[k]);
        }
    }
    return out;
}

std::vector<int> paper_order(const ModularData& md) {
    std::vector<int> xs, ys, zminus, zplus;
    for (int i = 0; i < md.size(); ++i) {
        const auto& o = md.objects[i];
        if (o.kind == Kind::X) xs.push_back(i);
        else if (o.kind == Kind::Y) ys.push_back(i);
        else (o.sign < 0 ? zminus : zplus).push_back(i);
    }
    // xs holds (a,+),(a,-) pairs; every second pair is reversed.
    for (std::size_t p = 2; p + 1 < xs.size(); p += 4) std::swap(xs[p], xs[p + 1]);
    std::vector<int> perm = xs;
    perm.insert(perm.end(), zminus.begin(), zminus.end());
    perm.insert(perm.end(), zplus.begin(), zplus.end());
    perm.insert(perm.end(), ys.begin(), ys.end());
    return perm;
}

Rational verlinde(const ModularData& md, int i, int j, int k) {
    int u = md.unit();
    CyclotomicSum acc;
    for (int m = 0; m < md.size(); ++m)
        acc.add_product(md.S[i][m] * md.S[j][m], md.S[k][m].conj(), md.S[u][m].inv());
    Cyclotomic v = acc.value() / md.global_dim;
    if (!v.is_rational()) throw std::domain_error("Verlinde value " + v.str() + " is not rational");
    return v.rational_value();
}

bool ModularReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const ModularCheck& c) { return c.ok; });
}

const ModularCheck* ModularReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

ModularReport verify_modular(const ModularData& md, bool require_positive_dims) {
    ModularReport rep;
    int n = md.size();
    auto at = [&](int i, int j) { return md.labels[i] + "," + md.labels[j]; };
    auto add = [&](const std::string& name, const std::string& failure) {
        rep.checks.push_back({name, failure.empty(), failure});
    };
    const Cyclotomic D2(4 * md.group_order);
    const int u = md.unit();

    {
        std::string f;
        for (int i = 0; i < n && f.empty(); ++i)
            for (int j = i + 1; j < n && f.empty(); ++j)
                if (md.S[i][j] != md.S[j][i]) f = "S(" + at(i, j) + ") != S(" + at(j, i) + ")";
        add("S symmetric", f);
    }
    {
        std::string f;
        CyclotomicSum gd;
        for (const auto& d : md.dims) gd.add_product(d, d);
        if (gd.value() != D2) f = "sum of dims^2 = " + gd.value().str() + ", expected " + D2.str();
        else if (md.global_dim != D2) f = "global dim " + md.global_dim.str();
        add("global dimension", f);
    }
    {
        std::string f;
        for (int j = 0; j < n && f.empty(); ++j)
            if (md.S[u][j] != md.dims[j]) f = "S(" + at(u, j) + ") = " + md.S[u][j].str() + " != dim";
        add("unit row", f);
    }
    {
        std::string f;
        for (int i = 0; i < n && f.empty(); ++i)
            for (int j = i; j < n && f.empty(); ++j) {
                CyclotomicSum acc;
                for (int m = 0; m < n; ++m) acc.add_product(md.S[i][m], md.S[j][m].conj());
                Cyclotomic v = acc.value();
                if (v != (i == j ? D2 : Cyclotomic(0))) f = "(S S*)(" + at(i, j) + ") = " + v.str();
            }
        add("S unitary", f);
    }
    {
        std::string f;
        for (int i = 0; i < n && f.empty(); ++i) {
            if (md.dual[i] < 0) {
                f = md.labels[i] + " has no dual";
                break;
            }
            for (int j = 0; j < n && f.empty(); ++j) {
                CyclotomicSum acc;
                for (int m = 0; m < n; ++m) acc.add_product(md.S[i][m], md.S[m][j]);
                Cyclotomic v = acc.value() / D2;
                if (v != Cyclotomic(j == md.dual[i] ? 1 : 0)) f = "(S^2/D^2)(" + at(i, j) + ") = " + v.str();
            }
        }
        add("charge conjugation", f);
    }
    {
        std::string f;
        for (int i = 0; i < n && f.empty(); ++i)
            if (!md.T[i].as_root()) f = "T(" + md.labels[i] + ") = " + md.T[i].str();
        add("T roots of unity", f);
    }
    {
        // S_im S_jm / (D^2 S_um) summed against conj(S_km).
        std::string f;
        std::vector<Cyclotomic> inv0(n), conjS(static_cast<std::size_t>(n) * n);
        bool singular = false;
        for (int m = 0; m < n; ++m) {
            if (md.S[u][m].is_zero()) singular = true;
            else inv0[m] = md.S[u][m].inv() / D2;
            for (int k = 0; k < n; ++k) conjS[static_cast<std::size_t>(k) * n + m] = md.S[k][m].conj();
        }
        if (singular) f = "zero entry in the unit row";
        for (int i = 0; i < n && f.empty(); ++i)
            for (int j = i; j < n && f.empty(); ++j) {
                std::vector<Cyclotomic> p(n);
                for (int m = 0; m < n; ++m) p[m] = md.S[i][m] * md.S[j][m] * inv0[m];
                for (int k = 0; k < n && f.empty(); ++k) {
                    CyclotomicSum acc;
                    for (int m = 0; m < n; ++m) acc.add_product(p[m], conjS[static_cast<std::size_t>(k) * n + m]);
                    Cyclotomic v = acc.value();
                    if (v != Cyclotomic(md.N(i, j, k)) || md.N(i, j, k) != md.N(j, i, k))
                        f = "N(" + at(i, j) + "," + md.labels[k] + "): Verlinde " + v.str() + ", fusion rules " +
                            std::to_string(md.N(i, j, k));
                }
            }
        add("Verlinde fusion", f);
    }
    if (require_positive_dims) {
        std::string f;
        for (int i = 0; i < n && f.empty(); ++i)
            if (!is_positive_real(md.dims[i])) f = "dim " + md.labels[i] + " = " + md.dims[i].str();
        add("dimensions positive", f);
    }
    return rep;
}

}  // namespace glm
