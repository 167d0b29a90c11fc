#pragma once

// Exact arithmetic in the universal cyclotomic field.
//
// A Cyclotomic is stored at its conductor N (N = 1 or N != 2 mod 4) as a
// sparse list of coefficients on the Zumbroich basis of Q(zeta_N).  Because
// the representation is canonical, equality is structural.

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace glm {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class Rational {
public:
    Rational() = default;
    Rational(long long n);  // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d);
    explicit Rational(const BigRational& q);

    static Rational from_big(const BigInt& n, const BigInt& d);

    bool is_zero() const { return !big_ && num_ == 0; }
    int sign() const;
    bool is_integer() const;
    bool is_small() const { return !big_; }

    BigInt numerator() const;
    BigInt denominator() const;
    // Only valid when is_small().
    std::int64_t small_num() const { return num_; }
    std::int64_t small_den() const { return den_; }

    BigRational to_big() const;
    double to_double() const;
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

private:
    void set_from_i128(__int128 n, __int128 d);
    void set_from_big(BigRational q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const BigRational> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

// A root of unity e(num/den), kept as a reduced fraction in [0,1).
class Root {
public:
    Root() = default;
    Root(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Root inv() const { return Root(-num_, den_); }
    Root pow(std::int64_t k) const;
    Root operator*(const Root& o) const;
    Root operator/(const Root& o) const { return *this * o.inv(); }
    bool operator==(const Root& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Root& o) const { return !(*this == o); }
    bool operator<(const Root& o) const;

    // Value in {+1,-1}; throws if the root has order > 2.
    int as_sign() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

class Cyclotomic {
public:
    using Term = std::pair<std::int64_t, Rational>;  // exponent k at level N, coefficient

    Cyclotomic() = default;
    Cyclotomic(long long n);  // NOLINT(google-explicit-constructor)
    Cyclotomic(const Rational& q);  // NOLINT(google-explicit-constructor)
    Cyclotomic(const Root& r);  // NOLINT(google-explicit-constructor)

    // Sum of coeff * e(exponent) for arbitrary (unreduced) input.
    static Cyclotomic from_terms(const std::vector<std::pair<Rational, Rational>>& terms);

    std::int64_t level() const { return level_; }
    const std::vector<Term>& raw_terms() const { return terms_; }
    // Canonical terms as (reduced exponent fraction, coefficient), ascending.
    std::vector<std::pair<Rational, Rational>> terms() const;

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const { return level_ == 1; }
    Rational rational_value() const;  // throws unless is_rational()
    std::optional<Root> as_root() const;
    bool is_real() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inv(); }
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    Cyclotomic inv() const;
    Cyclotomic conj() const;
    Cyclotomic galois(std::int64_t j) const;  // e(r) -> e(j r), gcd(j, level) = 1
    Cyclotomic pow(std::int64_t k) const;

    std::complex<double> approx() const;
    std::string str() const;

private:
    friend class CyclotomicSum;
    friend Cyclotomic root_of_unity(std::int64_t num, std::int64_t den);
    static Cyclotomic canonical(std::int64_t level, std::map<std::int64_t, Rational>& raw);

    std::int64_t level_ = 1;
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

// Accumulates products without intermediate canonicalisation.
class CyclotomicSum {
public:
    void add(const Cyclotomic& x);
    void sub(const Cyclotomic& x);
    void add_product(const Cyclotomic& x, const Cyclotomic& y, bool negate = false);
    void add_product(const Cyclotomic& x, const Cyclotomic& y, const Cyclotomic& z,
                     bool negate = false);
    Cyclotomic value() const;
    bool is_zero() const { return value().is_zero(); }

private:
    void grow(std::int64_t level);
    std::int64_t level_ = 1;
    std::map<std::int64_t, Rational> raw_;
};

Cyclotomic root_of_unity(const Rational& r);
Cyclotomic root_of_unity(std::int64_t num, std::int64_t den);
Cyclotomic sqrt_int(std::int64_t n);

enum class Branch { principal, negative };
Cyclotomic sqrt_of_root(const Cyclotomic& x, Branch branch);

std::complex<double> approx(const Cyclotomic& x);

// True iff x is real and strictly positive.  Decided from the exact real
// test plus the sign of the numerical value.
bool is_positive_real(const Cyclotomic& x);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
std::int64_t mod64(std::int64_t a, std::int64_t m);
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

}  // namespace glm
