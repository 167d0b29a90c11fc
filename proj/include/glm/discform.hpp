#pragma once

// Discriminant forms: a finite abelian group with a nondegenerate quadratic
// form Q.  Q is stored as a table of roots of unity over the group's index
// order.

#include <stdexcept>
#include <string>
#include <vector>

#include "glm/abgroup.hpp"
#include "glm/scalars.hpp"

namespace glm {

enum class JordanKind { odd_prime_power, two_adic_cyclic, two_adic_even };

struct JordanComponent {
    JordanKind kind = JordanKind::odd_prime_power;
    int p = 0;         // prime
    int k = 0;         // modulus = p^k
    int modulus = 1;
    int sign = 1;
    int unit = 1;      // u for odd components, t (mod 8) for 2-adic cyclic ones

    std::vector<int> orders() const;
    std::string str() const;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error("at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class DiscriminantForm {
public:
    DiscriminantForm();  // trivial form
    explicit DiscriminantForm(std::vector<JordanComponent> components);
    // Arbitrary table; throws if degenerate.  No Jordan bookkeeping.
    DiscriminantForm(FinAbGroup group, std::vector<Root> q_table);

    const FinAbGroup& group() const { return group_; }
    int order() const { return group_.order(); }
    const std::vector<JordanComponent>& components() const { return components_; }
    bool has_jordan_symbol() const { return has_jordan_; }

    Root Q(int a) const { return q_[a]; }
    Root B(int a, int b) const { return q_[group_.add(a, b)] / (q_[a] * q_[b]); }
    const std::vector<Root>& q_table() const { return q_; }

    std::string str() const;

private:
    void check_nondegenerate() const;

    FinAbGroup group_;
    std::vector<JordanComponent> components_;
    bool has_jordan_ = true;
    std::vector<Root> q_;
};

DiscriminantForm parse_jordan(const std::string& text);

Cyclotomic Q_of(const DiscriminantForm& d, const Element& a);
Cyclotomic B_of(const DiscriminantForm& d, const Element& a, const Element& b);

Cyclotomic gauss_full(const DiscriminantForm& d);
int signature(const DiscriminantForm& d);

// Kronecker symbol (a/n) for odd n >= 1, extended by (2/n) = (-1)^((n^2-1)/8).
int kronecker(long long a, long long n);
// (t/2) for odd t.
int kronecker2(long long t);

DiscriminantForm direct_sum(const DiscriminantForm& d1, const DiscriminantForm& d2);

// Product of the signs of the 2-adic components; throws when a component
// 2_t^{+-1} is present.
int sign_s_even(const DiscriminantForm& d);

}  // namespace glm
