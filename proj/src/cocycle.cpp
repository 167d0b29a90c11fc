#include "glm/cocycle.hpp"

#include <sstream>

namespace glm {

CocycleData::CocycleData(DiscriminantForm form, std::vector<Root> sigma, std::vector<Root> q, int delta)
    : form_(std::move(form)), sigma_(std::move(sigma)), q_(std::move(q)), delta_(delta) {
    std::size_t n = static_cast<std::size_t>(order());
    if (sigma_.size() != n * n || q_.size() != n || delta_ < 0 || delta_ >= order())
        throw std::invalid_argument("cocycle tables do not match the group");
    build_omega();
}

void CocycleData::build_omega() {
    int n = order();
    omega_.clear();
    if (n > 128) return;
    omega_.resize(static_cast<std::size_t>(n) * n * n);
    const FinAbGroup& g = group();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                omega_[(static_cast<std::size_t>(a) * n + b) * n + c] = sigma(a, g.add(b, c)) / (sigma(a, b) * sigma(a, c));
}

Root CocycleData::omega(int a, int b, int c) const {
    int n = order();
    if (!omega_.empty()) return omega_[(static_cast<std::size_t>(a) * n + b) * n + c];
    return sigma(a, group().add(b, c)) / (sigma(a, b) * sigma(a, c));
}

CocycleData CocycleData::with_sigma(int a, int b, Root value) const {
    auto s = sigma_;
    s[static_cast<std::size_t>(a) * order() + b] = value;
    s[static_cast<std::size_t>(b) * order() + a] = value;
    return CocycleData(form_, s, q_, delta_);
}

CocycleData CocycleData::with_q(int a, Root value) const {
    auto q = q_;
    q[a] = value;
    return CocycleData(form_, sigma_, q, delta_);
}

namespace {

struct Local {
    std::vector<Root> sigma, q;
    int delta = 0;
    int order = 1;
};

Local component_data(const JordanComponent& c) {
    Local l;
    long long m = c.modulus;
    auto vals = [&](auto sig, auto qf, int n) {
        l.order = n;
        l.sigma.resize(static_cast<std::size_t>(n) * n);
        l.q.resize(n);
        for (int a = 0; a < n; ++a) {
            l.q[a] = qf(a);
            for (int b = 0; b < n; ++b) l.sigma[static_cast<std::size_t>(a) * n + b] = sig(a, b);
        }
    };
    switch (c.kind) {
        case JordanKind::odd_prime_power: {
            long long u = c.unit;
            long long h = (m + 1) / 2;
            vals([&](long long x, long long y) { return Root(u * x * y % m, m); },
                 [&](long long x) { return Root(u * x % m * x % m * h % m, m); }, static_cast<int>(m));
            break;
        }
        case JordanKind::two_adic_cyclic: {
            long long t = c.unit;
            vals([&](long long x, long long y) { return Root(t * x * y, 2 * m); },
                 [&](long long x) { return Root(t * x * x, 4 * m); }, static_cast<int>(m));
            l.delta = c.k == 1 ? 1 : 0;
            break;
        }
        case JordanKind::two_adic_even: {
            auto split = [&](long long a) { return std::pair<long long, long long>(a / m, a % m); };
            bool plus = c.sign > 0;
            vals(
                [&](long long a, long long b) {
                    auto [x1, x2] = split(a);
                    auto [y1, y2] = split(b);
                    long long n = plus ? x1 * y2 + x2 * y1 : 2 * x1 * y1 + 2 * x2 * y2 + x1 * y2 + x2 * y1;
                    return Root(n, 2 * m);
                },
                [&](long long a) {
                    auto [x1, x2] = split(a);
                    long long n = plus ? x1 * x2 : x1 * x1 + x1 * x2 + x2 * x2;
                    return Root(n, 2 * m);
                },
                static_cast<int>(m * m));
            break;
        }
    }
    return l;
}

}  // namespace

CocycleData build(const DiscriminantForm& d) {
    if (!d.has_jordan_symbol())
        throw std::invalid_argument("build needs a form given by Jordan components");
    // Component tables combine as a product; the group index is mixed radix
    // over components in order, so the global index of (x_1,...,x_r) is
    // ((x_1 n_2 + x_2) n_3 + ...).
    std::vector<Local> locals;
    for (const auto& c : d.components()) locals.push_back(component_data(c));
    int n = d.order();
    auto split = [&](int a) {
        std::vector<int> parts(locals.size());
        for (int i = static_cast<int>(locals.size()) - 1; i >= 0; --i) {
            parts[i] = a % locals[i].order;
            a /= locals[i].order;
        }
        return parts;
    };
    std::vector<std::vector<int>> parts(n);
    for (int a = 0; a < n; ++a) parts[a] = split(a);
    std::vector<Root> sigma(static_cast<std::size_t>(n) * n), q(n);
    for (int a = 0; a < n; ++a) {
        Root qa;
        for (std::size_t i = 0; i < locals.size(); ++i) qa = qa * locals[i].q[parts[a][i]];
        q[a] = qa;
        for (int b = 0; b < n; ++b) {
            Root s;
            for (std::size_t i = 0; i < locals.size(); ++i)
                s = s * locals[i].sigma[static_cast<std::size_t>(parts[a][i]) * locals[i].order + parts[b][i]];
            sigma[static_cast<std::size_t>(a) * n + b] = s;
        }
    }
    int delta = 0;
    for (const auto& l : locals) delta = delta * l.order + l.delta;
    return CocycleData(d, sigma, q, delta);
}

Cyclotomic omega(const CocycleData& data, const Element& a, const Element& b, const Element& c) {
    const auto& g = data.group();
    return data.omega(g.index(a), g.index(b), g.index(c));
}

Cyclotomic omega_bar(const CocycleData& data, const CosetMod2& x, const Element& b, const Element& c) {
    const auto& g = data.group();
    return data.omega_bar(x.id, g.index(b), g.index(c));
}

namespace {

Cyclotomic inv_sqrt(long long n) { return sqrt_int(n) / Cyclotomic(n); }

}  // namespace

Cyclotomic gauss_partial_q(const CocycleData& data) {
    const auto& g = data.group();
    CyclotomicSum s;
    for (int a : g.coset_members(g.coset_id(data.delta()))) s.add(data.q(a).inv());
    return s.value() * inv_sqrt(static_cast<long long>(g.two_gamma().size()));
}

Cyclotomic gauss_partial_Q(const CocycleData& data, int z_coset) {
    const auto& g = data.group();
    int c = g.coset_add(g.coset_id(data.delta()), z_coset);
    CyclotomicSum s;
    for (int a : g.coset_members(c)) s.add(data.form().Q(a));
    return s.value() * inv_sqrt(static_cast<long long>(g.two_gamma().size()));
}

Cyclotomic gauss_partial_Q(const CocycleData& data, const CosetMod2& z) { return gauss_partial_Q(data, z.id); }

CocycleReport verify_cocycle(const CocycleData& data) {
    CocycleReport rep;
    const auto& g = data.group();
    const auto& d = data.form();
    int n = g.order();
    auto el = [&](int a) { return g.element(a).str(); };
    auto fail = [&](const std::string& prop, const std::string& w) {
        rep.failure = CocycleReport::Failure{prop, w};
        return rep;
    };
    const Root one;
    const Root minus_one(1, 2);

    rep.checked.push_back("sigma normalised");
    for (int a = 0; a < n; ++a)
        if (data.sigma(a, 0) != one || data.sigma(0, a) != one) return fail("sigma normalised", "a=" + el(a));
    rep.checked.push_back("sigma symmetric");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (data.sigma(a, b) != data.sigma(b, a)) return fail("sigma symmetric", "a=" + el(a) + " b=" + el(b));
    rep.checked.push_back("sigma(a,a)=Q(a)");
    for (int a = 0; a < n; ++a)
        if (data.sigma(a, a) != d.Q(a)) return fail("sigma(a,a)=Q(a)", "a=" + el(a));
    rep.checked.push_back("sigma(a,b)^2=B(a,b)");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (data.sigma(a, b).pow(2) != d.B(a, b)) return fail("sigma(a,b)^2=B(a,b)", "a=" + el(a) + " b=" + el(b));
    rep.checked.push_back("omega is +-1");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                Root w = data.omega(a, b, c);
                if (w != one && w != minus_one)
                    return fail("omega is +-1", "a=" + el(a) + " b=" + el(b) + " c=" + el(c));
            }
    rep.checked.push_back("omega homomorphism in first slot");
    for (int a = 0; a < n; ++a)
        for (int a2 = 0; a2 < n; ++a2)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (data.omega(g.add(a, a2), b, c) != data.omega(a, b, c) * data.omega(a2, b, c))
                        return fail("omega homomorphism in first slot",
                                    "a=" + el(a) + " a'=" + el(a2) + " b=" + el(b) + " c=" + el(c));
    rep.checked.push_back("2 delta = 0");
    if (!g.in_torsion2(data.delta())) return fail("2 delta = 0", "delta=" + el(data.delta()));
    rep.checked.push_back("q(a)^2=Q(a)");
    for (int a = 0; a < n; ++a)
        if (data.q(a).pow(2) != d.Q(a)) return fail("q(a)^2=Q(a)", "a=" + el(a));
    rep.checked.push_back("q coboundary");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int s = g.add(a, b);
            Root lhs = data.q(s) / (data.q(a) * data.q(b));
            Root rhs = data.sigma(a, b) * data.omega(s, a, b) * data.omega(data.delta(), a, b);
            if (lhs != rhs) return fail("q coboundary", "a=" + el(a) + " b=" + el(b));
        }
    rep.checked.push_back("q(-a)=q(a)omega(a+delta,a,-a)");
    for (int a = 0; a < n; ++a) {
        int m = g.neg(a);
        if (data.q(m) != data.q(a) * data.omega(g.add(a, data.delta()), a, m))
            return fail("q(-a)=q(a)omega(a+delta,a,-a)", "a=" + el(a));
    }
    return rep;
}

Cyclotomic character_sum(const CocycleData& data, const CosetMod2& r, const Element& s, const Element& l) {
    const auto& g = data.group();
    int si = g.index(s), li = g.index(l);
    if (g.coset_id(si) != g.coset_id(li)) throw std::invalid_argument("character_sum: s and l lie in different cosets");
    CyclotomicSum sum;
    for (int x : g.coset_members(r.id)) sum.add(data.sigma(x, si) / data.sigma(x, li));
    return sum.value() / Cyclotomic(static_cast<long long>(g.two_gamma().size()));
}

}  // namespace glm
