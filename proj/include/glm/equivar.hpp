#pragma once

// The Z2-equivariantisation of a GLM category: simple objects, fusion ring,
// and exact modular data.

#include <stdexcept>
#include <string>
#include <vector>

#include "glm/glmcat.hpp"

namespace glm {

// X(a, s) with a in G_2; Y(a) with a the pair_orbits representative;
// Z(x, s) with x a coset id of 2G.  sign is 0 for Y.
struct EqSimple {
    enum class Kind { X, Y, Z };
    Kind kind = Kind::X;
    int label = 0;
    int sign = 1;

    static EqSimple X(int a, int s) { return {Kind::X, a, s}; }
    static EqSimple Y(int a) { return {Kind::Y, a, 0}; }
    static EqSimple Z(int x, int s) { return {Kind::Z, x, s}; }
    bool operator==(const EqSimple& o) const = default;
};

using CycMatrix = std::vector<std::vector<Cyclotomic>>;

// Order: X by (a, s = +1 then -1), then Y by representative, then Z by
// (coset, s = +1 then -1).  The unit X(0,+1) comes first.
std::vector<EqSimple> simple_objects(const GLMCategory& cat);
std::string eq_label(const GLMCategory& cat, const EqSimple& x);

// Multiset of summands, each listed once per multiplicity, in canonical order.
std::vector<EqSimple> eq_fusion(const GLMCategory& cat, const EqSimple& a, const EqSimple& b);

std::vector<Cyclotomic> t_matrix(const GLMCategory& cat);  // diagonal

class SMatrixMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The closed-form S and the S obtained from fusion, twists and dimensions.
CycMatrix s_matrix_closed(const GLMCategory& cat);
CycMatrix s_matrix_balanced(const GLMCategory& cat);
// Both of the above; throws SMatrixMismatch unless they agree.
CycMatrix s_matrix(const GLMCategory& cat);

struct ModularData {
    std::vector<EqSimple> objects;
    std::vector<std::string> labels;
    CycMatrix S;
    std::vector<Cyclotomic> T;
    std::vector<Cyclotomic> dims;
    Cyclotomic global_dim;
    std::vector<int> dual;
    // N[(i*n + j)*n + k], from the closed-form fusion rules.
    std::vector<int> fusion;
    long long group_order = 1;

    int size() const { return static_cast<int>(objects.size()); }
    int N(int i, int j, int k) const { return fusion[(static_cast<std::size_t>(i) * size() + j) * size() + k]; }
    int index_of(const std::string& label) const;
    int unit() const;  // position of X(0,+1)
};

ModularData modular_data(const GLMCategory& cat);

// Same data with objects listed in the order `perm` (new position -> old).
ModularData permuted(const ModularData& md, const std::vector<int>& perm);
// Reference order for the 4_1 fixture: X(0,+) X(0,-) X(t,-) X(t,+) ...,
// then the Z with s = -1, then with s = +1, then the Y.
std::vector<int> paper_order(const ModularData& md);

// sum_m S_im S_jm conj(S_km) / (D^2 S_1m), 1 the unit object; throws std::domain_error if the
// value is not rational.
Rational verlinde(const ModularData& md, int i, int j, int k);

struct ModularCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct ModularReport {
    std::vector<ModularCheck> checks;
    bool ok() const;
    const ModularCheck* find(const std::string& name) const;
};

// `require_positive_dims` adds the positivity check (pseudo-unitary beta).
ModularReport verify_modular(const ModularData& md, bool require_positive_dims);

}  // namespace glm
