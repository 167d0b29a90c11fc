#include "glm/abgroup.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace glm {

std::string Element::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < residues.size(); ++i) {
        if (i) os << ",";
        os << residues[i];
    }
    os << ")";
    return os.str();
}

FinAbGroup::FinAbGroup(std::vector<int> orders) : orders_(std::move(orders)) {
    long long n = 1;
    for (int m : orders_) {
        if (m < 1) throw std::invalid_argument("cyclic factor order must be >= 1");
        n *= m;
        if (n > (1 << 24)) throw std::invalid_argument("group too large");
    }
    order_ = static_cast<int>(n);
    neg_.resize(order_);
    for (int a = 0; a < order_; ++a) neg_[a] = index(neg(element(a)));
    if (order_ <= 2048) {
        add_table_.resize(static_cast<std::size_t>(order_) * order_);
        for (int a = 0; a < order_; ++a)
            for (int b = 0; b < order_; ++b)
                add_table_[static_cast<std::size_t>(a) * order_ + b] = index(add(element(a), element(b)));
    }
    std::vector<char> in2g(order_, 0);
    for (int a = 0; a < order_; ++a) {
        in2g[add(a, a)] = 1;
        if (add(a, a) == 0) torsion2_.push_back(a);
    }
    for (int a = 0; a < order_; ++a)
        if (in2g[a]) two_gamma_.push_back(a);
    coset_id_.assign(order_, -1);
    for (int a = 0; a < order_; ++a) {
        if (coset_id_[a] >= 0) continue;
        int id = static_cast<int>(coset_reps_.size());
        coset_reps_.push_back(a);
        for (int t : two_gamma_) coset_id_[add(a, t)] = id;
    }
}

void FinAbGroup::check(const Element& a) const {
    if (!contains(a)) throw std::invalid_argument("element " + a.str() + " does not belong to the group");
}

bool FinAbGroup::contains(const Element& a) const {
    if (a.residues.size() != orders_.size()) return false;
    for (std::size_t i = 0; i < orders_.size(); ++i)
        if (a.residues[i] < 0 || a.residues[i] >= orders_[i]) return false;
    return true;
}

int FinAbGroup::index(const Element& a) const {
    check(a);
    int idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) idx = idx * orders_[i] + a.residues[i];
    return idx;
}

Element FinAbGroup::element(int idx) const {
    Element e;
    e.residues.resize(orders_.size());
    for (int i = rank() - 1; i >= 0; --i) {
        e.residues[i] = idx % orders_[i];
        idx /= orders_[i];
    }
    return e;
}

int FinAbGroup::add(int a, int b) const {
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * order_ + b];
    return index(add(element(a), element(b)));
}

int FinAbGroup::times(long long n, int a) const {
    Element e = element(a);
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        long long m = orders_[i];
        e.residues[i] = static_cast<int>((((n % m) * e.residues[i]) % m + m) % m);
    }
    return index(e);
}

Element FinAbGroup::add(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element r = a;
    for (std::size_t i = 0; i < orders_.size(); ++i) r.residues[i] = (a.residues[i] + b.residues[i]) % orders_[i];
    return r;
}

Element FinAbGroup::neg(const Element& a) const {
    check(a);
    Element r = a;
    for (std::size_t i = 0; i < orders_.size(); ++i) r.residues[i] = (orders_[i] - a.residues[i]) % orders_[i];
    return r;
}

std::vector<Element> FinAbGroup::enumerate() const {
    std::vector<Element> out;
    out.reserve(order_);
    for (int a = 0; a < order_; ++a) out.push_back(element(a));
    return out;
}

std::vector<int> FinAbGroup::coset_members(int id) const {
    std::vector<int> out;
    int r = coset_rep(id);
    for (int t : two_gamma_) out.push_back(add(r, t));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CosetMod2> FinAbGroup::cosets_mod2() const {
    std::vector<CosetMod2> out;
    for (int i = 0; i < num_cosets(); ++i) out.push_back({element(coset_rep(i)), i});
    return out;
}

CosetMod2 FinAbGroup::coset_of(const Element& a) const {
    int id = coset_id(index(a));
    return {element(coset_rep(id)), id};
}

std::vector<Element> FinAbGroup::members(const CosetMod2& c) const {
    std::vector<Element> out;
    for (int a : coset_members(c.id)) out.push_back(element(a));
    return out;
}

std::vector<int> FinAbGroup::pair_orbits() const {
    std::vector<int> out;
    for (int a = 0; a < order_; ++a)
        if (!in_torsion2(a) && a < neg(a)) out.push_back(a);
    return out;
}

}  // namespace glm
