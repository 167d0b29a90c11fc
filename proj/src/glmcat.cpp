#include "glm/glmcat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>

namespace glm {

namespace {

const Root kMinusOne(1, 2);

Root sign_root(int s) { return s > 0 ? Root() : kMinusOne; }

// sqrt(m)^(-k), cached.
Cyclotomic sqrt_power(std::int64_t m, int k) {
    static std::mutex mu;
    static std::map<std::pair<std::int64_t, int>, Cyclotomic> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(m, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Cyclotomic s = sqrt_int(m);
    Cyclotomic v = k > 0 ? s.inv().pow(k) : s.pow(-k);
    cache.emplace(key, v);
    return v;
}

}  // namespace

Scalar Scalar::general(const Cyclotomic& g) {
    Scalar s;
    s.g_ = std::make_shared<const Cyclotomic>(g);
    return s;
}

Scalar Scalar::from_value(const Cyclotomic& x, std::int64_t m) {
    if (auto r = x.as_root()) return Scalar(*r, 0);
    if (m > 1) {
        if (auto r = (x * sqrt_int(m)).as_root()) return Scalar(*r, 1);
        if (auto r = (x / sqrt_int(m)).as_root()) return Scalar(*r, -1);
    }
    return general(x);
}

Scalar Scalar::inv() const {
    Scalar s(r_.inv(), -k_);
    if (g_) s.g_ = std::make_shared<const Cyclotomic>(g_->inv());
    return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar s(a.r_ * b.r_, a.k_ + b.k_);
    if (a.g_ && b.g_) s.g_ = std::make_shared<const Cyclotomic>(*a.g_ * *b.g_);
    else if (a.g_) s.g_ = a.g_;
    else if (b.g_) s.g_ = b.g_;
    return s;
}

Cyclotomic Scalar::value(std::int64_t m) const {
    Cyclotomic v(r_);
    if (k_ != 0 && m > 1) v *= sqrt_power(m, k_);
    if (g_) v *= *g_;
    return v;
}

ScalarSum::ScalarSum(std::int64_t m) : m_(m) {
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(m))));
    for (std::int64_t c = std::max<std::int64_t>(r - 1, 1); c <= r + 1; ++c)
        if (c * c == m) square_root_ = c;
}

void ScalarSum::add(const Scalar& s, long long count) {
    if (count == 0) return;
    if (!s.is_monomial()) {
        general_.add(s.value(m_) * Cyclotomic(count));
        has_general_ = true;
        return;
    }
    Root r = s.root();
    Rational c(count);
    if (2 * r.num() >= r.den()) {
        r = r * kMinusOne;
        c = -c;
    }
    // m^(-k/2) = m^(-e) * m^(-j/2) with j in {0,1}; j is dropped when m is a square.
    int j = 0;
    if (m_ > 1) {
        int k = s.k();
        j = ((k % 2) + 2) % 2;
        int e = (k - j) / 2;
        Rational mm(m_);
        for (int i = 0; i < std::abs(e); ++i) c = e > 0 ? c / mm : c * mm;
        if (j == 1 && square_root_ > 0) {
            c /= Rational(square_root_);
            j = 0;
        }
    }
    auto key = std::make_pair(j, r);
    Rational& acc = mono_[key];
    acc += c;
    if (acc.is_zero()) mono_.erase(key);
}

Cyclotomic ScalarSum::value() const {
    std::map<int, CyclotomicSum> by_k;
    for (const auto& [key, c] : mono_) by_k[key.first].add(Cyclotomic(key.second) * Cyclotomic(c));
    Cyclotomic v = has_general_ ? general_.value() : Cyclotomic(0);
    for (const auto& [k, s] : by_k) v += s.value() * (k != 0 ? sqrt_power(m_, k) : Cyclotomic(1));
    return v;
}

bool ScalarSum::equals(const ScalarSum& o) const {
    if (!has_general_ && !o.has_general_) {
        if (mono_ == o.mono_) return true;
        // A single term c e(r) m^(-j/2) is in canonical form.
        if (mono_.size() <= 1 && o.mono_.size() <= 1) return false;
    }
    return value() == o.value();
}

Cyclotomic ScalarBlock::at(const SimpleObj& source, const SimpleObj& target, const SimpleObj& total) const {
    for (const auto& e : entries)
        if (e.source == source && e.target == target && e.total == total) return e.value;
    return Cyclotomic(0);
}

GLMCategory::GLMCategory(CocycleData data, int epsilon, Root alpha, Root beta)
    : data_(std::move(data)), epsilon_(epsilon), alpha_(alpha), beta_(beta) {
    if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
    build_tables();
}

void GLMCategory::build_tables() {
    const FinAbGroup& g = group();
    n_ = g.order();
    nc_ = g.num_cosets();
    m_ = static_cast<std::int64_t>(g.two_gamma().size());
    int s = num_simples();
    int delta = data_.delta();
    fusion_.assign(static_cast<std::size_t>(s) * s, {});
    for (int x = 0; x < s; ++x)
        for (int y = 0; y < s; ++y) {
            auto& out = fusion_[x * s + y];
            if (!is_defect(x) && !is_defect(y)) out.push_back(point(pt_add(x, y)));
            else if (!is_defect(x)) out.push_back(defect(g.coset_id(pt_add(x, crep(label(y))))));
            else if (!is_defect(y)) out.push_back(defect(g.coset_id(pt_add(crep(label(x)), y))));
            else {
                int c = g.coset_id(pt_add(delta, pt_add(crep(label(x)), crep(label(y)))));
                for (int t : g.coset_members(c)) out.push_back(point(t));
            }
        }
    channel_.assign(static_cast<std::size_t>(s) * s * s, 0);
    for (int x = 0; x < s; ++x)
        for (int y = 0; y < s; ++y)
            for (int w : fuse(x, y)) channel_[(x * s + y) * s + w] = 1;

    pos_in_coset_.assign(n_, 0);
    for (int c = 0; c < nc_; ++c) {
        auto mem = g.coset_members(c);
        for (std::size_t i = 0; i < mem.size(); ++i) pos_in_coset_[mem[i]] = static_cast<int>(i);
    }

    // Invert each defect-defect-defect associator block exactly.
    xxx_inverse_.assign(static_cast<std::size_t>(nc_) * nc_ * nc_, {});
    singular_blocks_.clear();
    int size = static_cast<int>(m_);
    for (int x = 0; x < nc_; ++x)
        for (int y = 0; y < nc_; ++y)
            for (int z = 0; z < nc_; ++z) {
                int A = defect(x), B = defect(y), C = defect(z);
                const auto& es = fuse(A, B);
                const auto& fs = fuse(B, C);
                int D = fuse(es[0], C)[0];
                std::vector<std::vector<Cyclotomic>> mat(size, std::vector<Cyclotomic>(size));
                std::vector<std::vector<Cyclotomic>> inv(size, std::vector<Cyclotomic>(size, Cyclotomic(0)));
                for (int i = 0; i < size; ++i) {
                    inv[i][i] = Cyclotomic(1);
                    for (int j = 0; j < size; ++j) mat[i][j] = value(F(A, B, C, D, es[i], fs[j]));
                }
                auto& out = xxx_inverse_[(x * nc_ + y) * nc_ + z];
                bool singular = false;
                for (int col = 0; col < size && !singular; ++col) {
                    int p = col;
                    while (p < size && mat[p][col].is_zero()) ++p;
                    if (p == size) {
                        singular = true;
                        break;
                    }
                    std::swap(mat[p], mat[col]);
                    std::swap(inv[p], inv[col]);
                    Cyclotomic piv = mat[col][col].inv();
                    for (int j = 0; j < size; ++j) {
                        mat[col][j] *= piv;
                        inv[col][j] *= piv;
                    }
                    for (int r = 0; r < size; ++r) {
                        if (r == col || mat[r][col].is_zero()) continue;
                        Cyclotomic f = mat[r][col];
                        for (int j = 0; j < size; ++j) {
                            mat[r][j] -= f * mat[col][j];
                            inv[r][j] -= f * inv[col][j];
                        }
                    }
                }
                // A singular block leaves zeros, which the coherence checks then expose.
                out.assign(static_cast<std::size_t>(size) * size, Scalar::general(Cyclotomic(0)));
                if (singular) {
                    singular_blocks_.push_back({A, B, C});
                    continue;
                }
                // mat was indexed (e, f); its inverse is indexed (f, e).
                for (int fi = 0; fi < size; ++fi)
                    for (int ei = 0; ei < size; ++ei) out[fi * size + ei] = Scalar::from_value(inv[fi][ei], m_);
            }
}

std::string GLMCategory::name(int id) const {
    if (is_defect(id)) return "X" + group().element(crep(label(id))).str();
    return "C" + group().element(id).str();
}

int GLMCategory::dual(int id) const {
    if (!is_defect(id)) return point(group().neg(id));
    int x = crep(label(id));
    return defect(group().coset_id(group().add(group().neg(x), data_.delta())));
}

Scalar GLMCategory::F_raw(int a, int b, int c, int d, int e, int f) const {
    const auto& cd = data_;
    int delta = cd.delta();
    int pattern = grade(a) * 4 + grade(b) * 2 + grade(c);
    switch (pattern) {
        case 0:  // CCC
            return cd.omega(a, b, c);
        case 4:  // XCC
            return cd.omega(pt_add(crep(label(a)), delta), b, c);
        case 2:  // CXC
            return cd.sigma(a, c);
        case 1:  // CCX
            return cd.omega(pt_add(pt_add(a, b), crep(label(c))), a, b);
        case 3:  // CXX
            return cd.omega(pt_add(a, crep(label(b))), a, label(f));
        case 6:  // XXC
            return cd.omega(crep(label(a)), label(e), c);
        case 5:  // XCX
            return cd.sigma(b, label(d));
        case 7:  // XXX
            return Scalar(sign_root(epsilon_) * cd.sigma(label(e), label(f)).inv(), 1);
    }
    return Scalar();
}

Scalar GLMCategory::F(int a, int b, int c, int d, int e, int f) const {
    Scalar s = F_raw(a, b, c, d, e, f);
    if (!overrides_.empty()) {
        auto it = overrides_.find({a, b, c, d, e, f});
        if (it != overrides_.end()) s = s * Scalar(it->second);
    }
    return s;
}

Scalar GLMCategory::Finv(int a, int b, int c, int d, int f, int e) const {
    if (is_defect(a) && is_defect(b) && is_defect(c)) {
        const auto& blk = xxx_inverse_[(label(a) * nc_ + label(b)) * nc_ + label(c)];
        return blk[pos_in_coset_[label(f)] * m_ + pos_in_coset_[label(e)]];
    }
    return F(a, b, c, d, e, f).inv();
}

Scalar GLMCategory::tau(int x, int y, int w) const {
    const auto& cd = data_;
    const FinAbGroup& g = group();
    if (!is_defect(x) && !is_defect(y)) return cd.omega(x, y, g.neg(y));
    if (!is_defect(x)) return cd.omega(pt_add(x, crep(label(y))), x, g.neg(x));
    if (!is_defect(y)) return cd.omega(pt_add(crep(label(x)), cd.delta()), y, g.neg(y));
    int t = label(w);
    return cd.omega(crep(label(x)), t, g.neg(t));
}

Scalar GLMCategory::R(int x, int y, int w) const {
    const auto& cd = data_;
    const FinAbGroup& g = group();
    if (!is_defect(x) && !is_defect(y)) return cd.sigma(x, y);
    if (!is_defect(x)) return cd.q(x).inv();
    if (!is_defect(y)) return cd.q(y).inv() * cd.omega(pt_add(crep(label(x)), y), y, g.neg(y));
    return alpha_ * cd.q(label(w));
}

Scalar GLMCategory::theta(int x) const {
    if (is_defect(x)) return beta_;
    return data_.form().Q(x);
}

Scalar GLMCategory::ev(int x) const {
    if (is_defect(x)) return Scalar(sign_root(epsilon_), -1);
    return data_.omega(x, group().neg(x), x);
}

Scalar GLMCategory::dimension(int x) const {
    return coev(x) * theta(x) * R(act_by(x, x), dual(x), point(0)) * ev(x);
}

Cyclotomic GLMCategory::global_dim() const {
    CyclotomicSum s;
    for (int x = 0; x < num_simples(); ++x) {
        Cyclotomic d = value(dimension(x));
        s.add_product(d, d);
    }
    return s.value();
}

std::vector<SimpleObj> GLMCategory::fuse(const SimpleObj& x, const SimpleObj& y) const {
    std::vector<SimpleObj> out;
    for (int w : fuse(id(x), id(y))) out.push_back(simple(w));
    return out;
}

ScalarBlock GLMCategory::associator(const SimpleObj& x, const SimpleObj& y, const SimpleObj& z) const {
    int a = id(x), b = id(y), c = id(z);
    ScalarBlock blk;
    for (int e : fuse(a, b))
        for (int d : fuse(e, c))
            for (int f : fuse(b, c))
                if (fuses(a, f, d)) blk.entries.push_back({simple(e), simple(f), simple(d), value(F(a, b, c, d, e, f))});
    return blk;
}

ScalarBlock GLMCategory::associator_inverse(const SimpleObj& x, const SimpleObj& y, const SimpleObj& z) const {
    int a = id(x), b = id(y), c = id(z);
    ScalarBlock blk;
    for (int f : fuse(b, c))
        for (int d : fuse(a, f))
            for (int e : fuse(a, b))
                if (fuses(e, c, d))
                    blk.entries.push_back({simple(f), simple(e), simple(d), value(Finv(a, b, c, d, f, e))});
    return blk;
}

ScalarBlock GLMCategory::tau_block(const SimpleObj& x, const SimpleObj& y) const {
    int a = id(x), b = id(y);
    ScalarBlock blk;
    for (int w : fuse(a, b)) blk.entries.push_back({simple(w), simple(g_act(w)), simple(w), value(tau(a, b, w))});
    return blk;
}

ScalarBlock GLMCategory::braiding(const SimpleObj& x, const SimpleObj& y) const {
    int a = id(x), b = id(y);
    ScalarBlock blk;
    for (int w : fuse(a, b)) blk.entries.push_back({simple(w), simple(w), simple(w), value(R(a, b, w))});
    return blk;
}

DualData GLMCategory::dual_data(const SimpleObj& x) const {
    int a = id(x);
    return {simple(dual(a)), value(ev(a)), value(coev(a))};
}

GLMCategory GLMCategory::with_associator_factor(int a, int b, int c, int d, int e, int f, Root factor) const {
    if (!fuses(a, b, e) || !fuses(e, c, d) || !fuses(b, c, f) || !fuses(a, f, d))
        throw std::invalid_argument("associator labels are not admissible");
    GLMCategory copy = *this;
    auto key = std::make_tuple(a, b, c, d, e, f);
    auto it = copy.overrides_.find(key);
    if (it == copy.overrides_.end()) copy.overrides_.emplace(key, factor);
    else it->second = it->second * factor;
    copy.build_tables();
    return copy;
}

GLMCategory make_category(const CocycleData& data, int epsilon, Branch alpha_branch, BetaChoice beta) {
    if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
    Cyclotomic g = gauss_partial_q(data);
    auto gr = g.as_root();
    if (!gr) throw std::invalid_argument("partial Gauss sum G_delta(q^-1) = " + g.str() + " is not a root of unity");
    Root eg = *gr * sign_root(epsilon);
    auto alpha = sqrt_of_root(Cyclotomic(eg), alpha_branch).as_root();
    Root a = *alpha;
    Root b = sign_root(epsilon) / a;
    if (beta == BetaChoice::negative) b = b * kMinusOne;
    return GLMCategory(data, epsilon, a, b);
}

}  // namespace glm
