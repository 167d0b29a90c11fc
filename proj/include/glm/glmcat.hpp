#pragma once

// The braided Z2-crossed category GLM(G, sigma, omega, delta, eps | q, alpha, beta).
//
// Simple objects are numbered: points C_a first (by group index), then the
// defects X^x (by coset id).  Every Hom space between a tensor product of two
// simples and a simple is at most one-dimensional, so each structure map is a
// scalar per fusion vertex.

#include <array>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "glm/cocycle.hpp"

namespace glm {

// g * root * m^(-k/2), with m = |2G| fixed by the category and g an optional
// general cyclotomic factor.  Structure constants are almost always pure
// monomials, which keeps the coherence sweep in root-of-unity arithmetic.
class Scalar {
public:
    Scalar() = default;  // 1
    Scalar(Root r, int k = 0) : r_(r), k_(k) {}  // NOLINT(google-explicit-constructor)
    static Scalar general(const Cyclotomic& g);
    static Scalar from_value(const Cyclotomic& x, std::int64_t m);

    bool is_monomial() const { return !g_; }
    Root root() const { return r_; }
    int k() const { return k_; }
    const Cyclotomic* factor() const { return g_.get(); }

    Scalar inv() const;
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Cyclotomic value(std::int64_t m) const;

private:
    Root r_;
    int k_ = 0;
    std::shared_ptr<const Cyclotomic> g_;
};

// Sum of Scalars with cheap exact equality in the common case.
class ScalarSum {
public:
    explicit ScalarSum(std::int64_t m);
    void add(const Scalar& s, long long count = 1);
    Cyclotomic value() const;
    bool equals(const ScalarSum& o) const;

private:
    std::int64_t m_;
    std::int64_t square_root_ = 0;  // sqrt(m) when m is a perfect square
    // (j, root folded into [0,1/2)) -> coefficient of e(root) m^(-j/2)
    std::map<std::pair<int, Root>, Rational> mono_;
    CyclotomicSum general_;
    bool has_general_ = false;
};

struct SimpleObj {
    bool defect = false;
    int label = 0;  // element index for points, coset id for defects

    static SimpleObj point(int a) { return {false, a}; }
    static SimpleObj defect_at(int coset) { return {true, coset}; }
    bool operator==(const SimpleObj& o) const = default;
};

struct ScalarBlock {
    // A structure map on all fusion channels: each entry sends the basis
    // vector labelled by the source intermediate object to the one labelled
    // by the target intermediate object inside the common summand `total`.
    struct Entry {
        SimpleObj source, target, total;
        Cyclotomic value;
    };
    std::vector<Entry> entries;
    // Zero when the entry is absent.
    Cyclotomic at(const SimpleObj& source, const SimpleObj& target, const SimpleObj& total) const;
};

enum class BetaChoice { pseudo_unitary, negative };

struct DualData {
    SimpleObj dual;
    Cyclotomic ev, coev;
};

class GLMCategory {
public:
    // All arguments are taken as given; make_category checks the relation
    // between alpha and the Gauss sum.
    GLMCategory(CocycleData data, int epsilon, Root alpha, Root beta);

    const CocycleData& data() const { return data_; }
    const FinAbGroup& group() const { return data_.group(); }
    int epsilon() const { return epsilon_; }
    Root alpha() const { return alpha_; }
    Root beta() const { return beta_; }
    std::int64_t two_gamma_order() const { return m_; }

    // Object numbering.
    int num_simples() const { return n_ + nc_; }
    int num_points() const { return n_; }
    int point(int a) const { return a; }
    int defect(int coset) const { return n_ + coset; }
    bool is_defect(int id) const { return id >= n_; }
    int grade(int id) const { return is_defect(id) ? 1 : 0; }
    int label(int id) const { return is_defect(id) ? id - n_ : id; }
    int id(const SimpleObj& x) const { return x.defect ? defect(x.label) : point(x.label); }
    SimpleObj simple(int id) const { return {is_defect(id), label(id)}; }
    std::string name(int id) const;

    const std::vector<int>& fuse(int a, int b) const { return fusion_[a * num_simples() + b]; }
    bool fuses(int a, int b, int w) const { return channel_[(a * num_simples() + b) * num_simples() + w]; }
    int g_act(int id) const { return is_defect(id) ? id : point(group().neg(id)); }
    // g^{grade(x)} applied to y.
    int act_by(int x, int y) const { return is_defect(x) ? g_act(y) : y; }
    int dual(int id) const;

    // Vertex scalars.  F maps ((AB)_E C)_D to (A(BC)_F)_D; Finv is its inverse
    // block, indexed (F, E).  tau and R are indexed by the fusion vertex
    // (X, Y -> W).  All return 1 for inadmissible labels; callers only query
    // admissible ones.
    Scalar F(int a, int b, int c, int d, int e, int f) const;
    Scalar Finv(int a, int b, int c, int d, int f, int e) const;
    Scalar tau(int x, int y, int w) const;
    Scalar R(int x, int y, int w) const;
    Scalar theta(int x) const;
    Scalar ev(int x) const;
    Scalar coev(int x) const { (void)x; return Scalar(); }
    Cyclotomic value(const Scalar& s) const { return s.value(m_); }

    // Cyclotomic-valued views of the structure.
    std::vector<SimpleObj> fuse(const SimpleObj& x, const SimpleObj& y) const;
    ScalarBlock associator(const SimpleObj& x, const SimpleObj& y, const SimpleObj& z) const;
    ScalarBlock associator_inverse(const SimpleObj& x, const SimpleObj& y, const SimpleObj& z) const;
    ScalarBlock tau_block(const SimpleObj& x, const SimpleObj& y) const;
    ScalarBlock braiding(const SimpleObj& x, const SimpleObj& y) const;
    SimpleObj g_act(const SimpleObj& x) const { return simple(g_act(id(x))); }
    Cyclotomic twist(const SimpleObj& x) const { return value(theta(id(x))); }
    DualData dual_data(const SimpleObj& x) const;
    Cyclotomic quantum_dimension(const SimpleObj& x) const { return value(dimension(id(x))); }
    Scalar dimension(int x) const;
    Cyclotomic global_dim() const;

    // Defect triples whose associator block has no inverse.
    const std::vector<std::array<int, 3>>& singular_blocks() const { return singular_blocks_; }

    // Copy with one associator entry multiplied by `factor`; the labels must be admissible.
    GLMCategory with_associator_factor(int a, int b, int c, int d, int e, int f, Root factor) const;

private:
    void build_tables();
    int pt_add(int a, int b) const { return group().add(a, b); }
    int crep(int coset) const { return group().coset_rep(coset); }
    Scalar F_raw(int a, int b, int c, int d, int e, int f) const;

    CocycleData data_;
    int epsilon_;
    Root alpha_, beta_;
    int n_ = 1, nc_ = 1;
    std::int64_t m_ = 1;
    std::vector<std::vector<int>> fusion_;
    std::vector<char> channel_;
    std::map<std::tuple<int, int, int, int, int, int>, Root> overrides_;
    // Inverse of each defect-defect-defect block, keyed by the three cosets;
    // entry [r_pos * size + t_pos] with positions inside the sorted cosets.
    std::vector<std::vector<Scalar>> xxx_inverse_;
    std::vector<int> pos_in_coset_;
    std::vector<std::array<int, 3>> singular_blocks_;
};

GLMCategory make_category(const CocycleData& data, int epsilon, Branch alpha_branch = Branch::principal,
                          BetaChoice beta = BetaChoice::pseudo_unitary);

struct CoherenceFailure {
    std::string objects, basis, lhs, rhs;
};

struct FamilyResult {
    std::string family;
    long long instances_checked = 0;
    long long failure_count = 0;
    std::vector<CoherenceFailure> failures;  // first few only
    bool ok() const { return failure_count == 0; }
};

struct CoherenceReport {
    std::vector<FamilyResult> families;
    bool ok() const;
    const FamilyResult* find(const std::string& family) const;
    std::vector<std::string> failed_families() const;
};

CoherenceReport verify_all(const GLMCategory& cat);

}  // namespace glm
