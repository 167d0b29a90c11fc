#pragma once

// Special abelian 3-cocycles (sigma, omega = d sigma) with a square root
// (q, delta) of the quadratic form.

#include <optional>
#include <string>
#include <vector>

#include "glm/discform.hpp"

namespace glm {

class CocycleData {
public:
    CocycleData() = default;
    // Takes the tables as given; verify_cocycle decides whether they are valid.
    CocycleData(DiscriminantForm form, std::vector<Root> sigma, std::vector<Root> q, int delta);

    const DiscriminantForm& form() const { return form_; }
    const FinAbGroup& group() const { return form_.group(); }
    int order() const { return form_.order(); }

    Root sigma(int a, int b) const { return sigma_[static_cast<std::size_t>(a) * order() + b]; }
    Root q(int a) const { return q_[a]; }
    int delta() const { return delta_; }
    // omega(a,b,c) = sigma(a,b+c) / (sigma(a,b) sigma(a,c)); +-1 for valid data.
    Root omega(int a, int b, int c) const;
    // First argument given as a coset of 2G, evaluated at its least member.
    Root omega_bar(int coset, int b, int c) const { return omega(group().coset_rep(coset), b, c); }

    const std::vector<Root>& sigma_table() const { return sigma_; }
    const std::vector<Root>& q_table() const { return q_; }

    // Single-entry edits, for building deliberately broken data.
    CocycleData with_sigma(int a, int b, Root value) const;
    CocycleData with_q(int a, Root value) const;

private:
    void build_omega();

    DiscriminantForm form_;
    std::vector<Root> sigma_, q_;
    int delta_ = 0;
    std::vector<Root> omega_;  // empty for large groups
};

CocycleData build(const DiscriminantForm& d);

Cyclotomic omega(const CocycleData& data, const Element& a, const Element& b, const Element& c);
Cyclotomic omega_bar(const CocycleData& data, const CosetMod2& x, const Element& b, const Element& c);

// |2G|^{-1/2} sum_{a in delta+2G} q(a)^{-1}
Cyclotomic gauss_partial_q(const CocycleData& data);
// |2G|^{-1/2} sum_{a in delta+z} Q(a)
Cyclotomic gauss_partial_Q(const CocycleData& data, int z_coset);
Cyclotomic gauss_partial_Q(const CocycleData& data, const CosetMod2& z);

struct CocycleReport {
    struct Failure {
        std::string property;
        std::string witness;
    };
    std::vector<std::string> checked;
    std::optional<Failure> failure;
    bool ok() const { return !failure; }
};

CocycleReport verify_cocycle(const CocycleData& data);

// |2G|^{-1} sum_{r in rbar} sigma(r,s) / sigma(r,l); requires s, l in the same coset.
Cyclotomic character_sum(const CocycleData& data, const CosetMod2& r, const Element& s, const Element& l);

}  // namespace glm
