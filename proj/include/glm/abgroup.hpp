#pragma once

// Finite abelian groups Z_{m1} x ... x Z_{md}.  Elements are numbered in
// lexicographic order of their residue vectors; the index form is what the
// rest of the library uses in its loops.

#include <string>
#include <vector>

namespace glm {

struct Element {
    std::vector<int> residues;

    bool operator==(const Element& o) const = default;
    auto operator<=>(const Element& o) const = default;
    std::string str() const;
};

struct CosetMod2 {
    Element rep;  // lexicographically least member
    int id = 0;   // position in cosets_mod2()

    bool operator==(const CosetMod2& o) const { return id == o.id; }
};

class FinAbGroup {
public:
    FinAbGroup() : FinAbGroup(std::vector<int>{}) {}
    explicit FinAbGroup(std::vector<int> orders);

    const std::vector<int>& orders() const { return orders_; }
    int order() const { return order_; }
    int rank() const { return static_cast<int>(orders_.size()); }

    int index(const Element& a) const;
    Element element(int idx) const;
    bool contains(const Element& a) const;

    int zero() const { return 0; }
    int add(int a, int b) const;
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int times(long long n, int a) const;

    Element add(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element zero_element() const { return element(0); }
    std::vector<Element> enumerate() const;

    // 2G and G_2 as sorted index lists.
    const std::vector<int>& two_gamma() const { return two_gamma_; }
    const std::vector<int>& torsion2() const { return torsion2_; }
    bool in_torsion2(int a) const { return add(a, a) == 0; }

    // Cosets of 2G, numbered by their least representative.
    int num_cosets() const { return static_cast<int>(coset_reps_.size()); }
    int coset_id(int a) const { return coset_id_[a]; }
    int coset_rep(int id) const { return coset_reps_[id]; }
    std::vector<int> coset_members(int id) const;
    int coset_add(int x, int y) const { return coset_id(add(coset_rep(x), coset_rep(y))); }
    int coset_neg(int x) const { return coset_id(neg(coset_rep(x))); }

    std::vector<CosetMod2> cosets_mod2() const;
    CosetMod2 coset_of(const Element& a) const;
    std::vector<Element> members(const CosetMod2& c) const;

    // One representative of each pair {a, -a} with a outside G_2: the
    // lexicographically smaller one.
    std::vector<int> pair_orbits() const;
    int orbit_rep(int a) const { return a < neg(a) ? a : neg(a); }

private:
    void check(const Element& a) const;

    std::vector<int> orders_;
    int order_ = 1;
    std::vector<int> neg_;
    std::vector<int> add_table_;  // empty for large groups
    std::vector<int> two_gamma_, torsion2_;
    std::vector<int> coset_id_, coset_reps_;
};

}  // namespace glm
