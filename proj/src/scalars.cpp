#include "glm/scalars.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace glm {

namespace {

using i128 = __int128;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(i128 x) {
    return x >= static_cast<i128>(INT64_MIN) && x <= static_cast<i128>(INT64_MAX);
}

BigInt big_from_i128(i128 x) {
    bool neg = x < 0;
    unsigned __int128 m = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1
                              : static_cast<unsigned __int128>(x);
    BigInt r = BigInt(static_cast<std::uint64_t>(m >> 64));
    r <<= 64;
    r += BigInt(static_cast<std::uint64_t>(m));
    return neg ? BigInt(-r) : r;
}

std::int64_t modinv(std::int64_t a, std::int64_t m) {
    std::int64_t g = m, x = 0, x1 = 1, a1 = mod64(a, m);
    while (a1 != 0) {
        std::int64_t q = g / a1;
        std::tie(g, a1) = std::make_pair(a1, g - q * a1);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1) throw std::logic_error("modinv: not invertible");
    return mod64(x, m);
}

}  // namespace

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd64(a, b) * b;
}

std::int64_t mod64(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// ---------------------------------------------------------------- Rational

Rational::Rational(long long n) : num_(n), den_(1) {}

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    set_from_i128(n, d);
}

Rational::Rational(const BigRational& q) { set_from_big(q); }

Rational Rational::from_big(const BigInt& n, const BigInt& d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    Rational r;
    r.set_from_big(BigRational(n, d));
    return r;
}

void Rational::set_from_i128(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return;
    }
    i128 g = gcd128(n, d);
    if (g != 1) {
        n /= g;
        d /= g;
    }
    if (fits64(n) && fits64(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        big_.reset();
    } else {
        big_ = std::make_shared<const BigRational>(big_from_i128(n), big_from_i128(d));
        num_ = 0;
        den_ = 1;
    }
}

void Rational::set_from_big(BigRational q) {
    const BigInt& n = boost::multiprecision::numerator(q);
    const BigInt& d = boost::multiprecision::denominator(q);
    static const BigInt lo = BigInt(INT64_MIN) + 1;
    static const BigInt hi = BigInt(INT64_MAX);
    if (n >= lo && n <= hi && d <= hi) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        big_.reset();
    } else {
        big_ = std::make_shared<const BigRational>(std::move(q));
        num_ = 0;
        den_ = 1;
    }
}

int Rational::sign() const {
    if (big_) return big_->sign();
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

bool Rational::is_integer() const {
    if (big_) return boost::multiprecision::denominator(*big_) == 1;
    return den_ == 1;
}

BigInt Rational::numerator() const {
    return big_ ? BigInt(boost::multiprecision::numerator(*big_)) : BigInt(num_);
}

BigInt Rational::denominator() const {
    return big_ ? BigInt(boost::multiprecision::denominator(*big_)) : BigInt(den_);
}

BigRational Rational::to_big() const {
    return big_ ? *big_ : BigRational(BigInt(num_), BigInt(den_));
}

double Rational::to_double() const {
    if (big_) return static_cast<double>(*big_);
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    std::ostringstream os;
    os << numerator();
    if (denominator() != 1) os << "/" << denominator();
    return os.str();
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.set_from_big(-*big_);
    } else {
        r.set_from_i128(-static_cast<i128>(num_), den_);
    }
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == o.den_) {
            set_from_i128(static_cast<i128>(num_) + o.num_, den_);
        } else {
            set_from_i128(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                          static_cast<i128>(den_) * o.den_);
        }
    } else {
        set_from_big(to_big() + o.to_big());
    }
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        set_from_i128(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
    } else {
        set_from_big(to_big() * o.to_big());
    }
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (!big_ && !o.big_) {
        set_from_i128(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
    } else {
        set_from_big(to_big() / o.to_big());
    }
    return *this;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    return a.to_big() == b.to_big();
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_)
        return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
    return a.to_big() < b.to_big();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

// -------------------------------------------------------------------- Root

Root::Root(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::domain_error("root exponent needs positive denominator");
    std::int64_t g = gcd64(num, den);
    num_ = mod64(num / g, den / g);
    den_ = den / g;
}

Root Root::pow(std::int64_t k) const {
    return Root(static_cast<std::int64_t>(mod64(num_, den_) * static_cast<i128>(mod64(k, den_)) % den_),
                den_);
}

Root Root::operator*(const Root& o) const {
    std::int64_t l = lcm64(den_, o.den_);
    return Root(num_ * (l / den_) + o.num_ * (l / o.den_), l);
}

bool Root::operator<(const Root& o) const {
    return static_cast<i128>(num_) * o.den_ < static_cast<i128>(o.num_) * den_;
}

int Root::as_sign() const {
    if (num_ == 0) return 1;
    if (den_ == 2) return -1;
    throw std::logic_error("root of unity is not a sign");
}

// -------------------------------------------------------------- Cyclotomic

namespace {

struct PrimePower {
    std::int64_t p;
    int nu;
};

const std::vector<PrimePower>& level_primes(std::int64_t n) {
    thread_local std::unordered_map<std::int64_t, std::vector<PrimePower>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<PrimePower> v;
    for (auto [p, e] : factorize(n)) v.push_back({p, e});
    return cache.emplace(n, std::move(v)).first->second;
}

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

void drop_zeros(std::map<std::int64_t, Rational>& m) {
    for (auto it = m.begin(); it != m.end();) {
        if (it->second.is_zero())
            it = m.erase(it);
        else
            ++it;
    }
}

}  // namespace

Cyclotomic::Cyclotomic(long long n) {
    if (n != 0) terms_.emplace_back(0, Rational(n));
}

Cyclotomic::Cyclotomic(const Rational& q) {
    if (!q.is_zero()) terms_.emplace_back(0, q);
}

Cyclotomic::Cyclotomic(const Root& r) { *this = root_of_unity(r.num(), r.den()); }

Cyclotomic Cyclotomic::canonical(std::int64_t L, std::map<std::int64_t, Rational>& m) {
    drop_zeros(m);
    Cyclotomic out;
    if (m.empty()) return out;
    if (L % 4 == 2) {
        std::map<std::int64_t, Rational> half;
        for (auto& [k, c] : m) {
            if (k % 2 == 1)
                half[((k + L / 2) % L) / 2] -= c;
            else
                half[k / 2] += c;
        }
        L /= 2;
        m.swap(half);
        drop_zeros(m);
        if (m.empty()) return out;
    }
    // Rewrite every term onto the Zumbroich basis, one prime at a time.
    std::vector<PrimePower> primes = level_primes(L);
    for (const auto& [p, nu] : primes) {
        std::int64_t pnu = ipow(p, nu);
        std::int64_t top = pnu / p;
        std::int64_t inv = modinv((L / pnu) % pnu, pnu);
        std::int64_t step = L / p;
        bool clean = true;
        for (auto& [k, c] : m) {
            std::int64_t digit = (k % pnu) * inv % pnu / top;
            if ((p == 2 && digit == 1) || (p != 2 && digit == 0)) {
                clean = false;
                break;
            }
        }
        if (clean) continue;
        std::map<std::int64_t, Rational> next;
        for (auto& [k, c] : m) {
            std::int64_t digit = (k % pnu) * inv % pnu / top;
            if (p == 2) {
                if (digit == 1)
                    next[(k + step) % L] -= c;
                else
                    next[k] += c;
            } else if (digit == 0) {
                for (std::int64_t j = 1; j < p; ++j) next[(k + j * step) % L] -= c;
            } else {
                next[k] += c;
            }
        }
        m.swap(next);
        drop_zeros(m);
        if (m.empty()) return out;
    }
    // Descend to the conductor.
    for (auto [p, nu] : primes) {
        while (nu > 0) {
            if (p == 2 && nu == 2) {
                bool ok = std::all_of(m.begin(), m.end(), [](auto& t) { return t.first % 4 == 0; });
                if (!ok) break;
                std::map<std::int64_t, Rational> next;
                for (auto& [k, c] : m) next.emplace(k / 4, c);
                m.swap(next);
                L /= 4;
                nu = 0;
            } else if (nu >= 2) {
                bool ok = std::all_of(m.begin(), m.end(), [p](auto& t) { return t.first % p == 0; });
                if (!ok) break;
                std::map<std::int64_t, Rational> next;
                for (auto& [k, c] : m) next.emplace(k / p, c);
                m.swap(next);
                L /= p;
                --nu;
            } else {
                // p odd, exact exponent 1: each class mod L/p must be the full
                // orbit of p-1 terms with equal coefficients.
                std::int64_t rest = L / p;
                std::map<std::int64_t, std::pair<int, Rational>> groups;
                bool ok = true;
                for (auto& [k, c] : m) {
                    auto [it, fresh] = groups.try_emplace(k % rest, 0, c);
                    if (!fresh && it->second.second != c) {
                        ok = false;
                        break;
                    }
                    ++it->second.first;
                }
                if (ok) {
                    for (auto& [r, g] : groups) {
                        if (g.first != p - 1) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (!ok) break;
                std::int64_t inv = modinv(rest % p, p);
                std::map<std::int64_t, Rational> next;
                for (auto& [r, g] : groups) {
                    std::int64_t j = mod64(-r * inv, p);
                    std::int64_t k0 = r + j * rest;
                    next.emplace(k0 / p, -g.second);
                }
                m.swap(next);
                L = rest;
                nu = 0;
            }
        }
    }
    out.level_ = L;
    out.terms_.assign(m.begin(), m.end());
    return out;
}

Cyclotomic Cyclotomic::from_terms(const std::vector<std::pair<Rational, Rational>>& terms) {
    CyclotomicSum acc;
    for (const auto& [r, c] : terms) {
        Cyclotomic t = root_of_unity(r);
        acc.add(t * Cyclotomic(c));
    }
    return acc.value();
}

std::vector<std::pair<Rational, Rational>> Cyclotomic::terms() const {
    std::vector<std::pair<Rational, Rational>> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.emplace_back(Rational(k, level_), c);
    return out;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic is not rational");
    return terms_.empty() ? Rational(0) : terms_.front().second;
}

std::optional<Root> Cyclotomic::as_root() const {
    if (terms_.empty()) return std::nullopt;
    std::int64_t n = level_ % 2 == 0 ? level_ : 2 * level_;
    if (terms_.size() == 1) {
        const auto& [k, c] = terms_.front();
        if (c == Rational(1)) return Root(k, level_);
        if (c == Rational(-1)) return Root(2 * k + level_, 2 * level_);
    }
    if (conj() * *this != Cyclotomic(1)) return std::nullopt;
    for (std::int64_t j = 0; j < n; ++j) {
        if (root_of_unity(j, n) == *this) return Root(j, n);
    }
    return std::nullopt;
}

bool Cyclotomic::is_real() const { return conj() == *this; }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    CyclotomicSum acc;
    acc.add(*this);
    acc.add(o);
    return *this = acc.value();
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    if (o.is_zero()) return *this;
    CyclotomicSum acc;
    acc.add(*this);
    acc.sub(o);
    return *this = acc.value();
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.is_zero() || b.is_zero()) return Cyclotomic();
    if (a.is_rational()) {
        Cyclotomic r = b;
        const Rational& c = a.terms_.front().second;
        for (auto& t : r.terms_) t.second *= c;
        return r;
    }
    if (b.is_rational()) return b * a;
    CyclotomicSum acc;
    acc.add_product(a, b);
    return acc.value();
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) { return *this = *this * o; }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.level_ == b.level_ && a.terms_ == b.terms_;
}

Cyclotomic Cyclotomic::galois(std::int64_t j) const {
    if (gcd64(j, level_) != 1) throw std::domain_error("galois exponent not coprime to level");
    std::map<std::int64_t, Rational> m;
    for (const auto& [k, c] : terms_) m[mod64(k * mod64(j, level_), level_)] += c;
    return canonical(level_, m);
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::inv() const {
    if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
    if (terms_.size() == 1) {
        std::map<std::int64_t, Rational> m;
        m.emplace(mod64(-terms_.front().first, level_), Rational(1) / terms_.front().second);
        return canonical(level_, m);
    }
    // x^{-1} = (product of the other Galois conjugates) / norm(x)
    Cyclotomic others(1);
    for (std::int64_t j = 2; j < level_; ++j) {
        if (gcd64(j, level_) == 1) others *= galois(j);
    }
    Cyclotomic norm = *this * others;
    if (!norm.is_rational()) throw std::logic_error("cyclotomic norm is not rational");
    return others * Cyclotomic(Rational(1) / norm.rational_value());
}

Cyclotomic Cyclotomic::pow(std::int64_t k) const {
    if (k < 0) return inv().pow(-k);
    Cyclotomic result(1), base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

std::complex<double> Cyclotomic::approx() const {
    std::complex<double> z = 0;
    for (const auto& [k, c] : terms_) {
        double th = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(level_);
        z += c.to_double() * std::complex<double>(std::cos(th), std::sin(th));
    }
    return z;
}

std::string Cyclotomic::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << c;
            continue;
        }
        if (c != Rational(1)) os << c << "*";
        Rational r(k, level_);
        os << "e(" << r << ")";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.str(); }

// ----------------------------------------------------------- CyclotomicSum

void CyclotomicSum::grow(std::int64_t level) {
    if (level_ % level == 0) return;
    std::int64_t nl = lcm64(level_, level);
    std::int64_t f = nl / level_;
    std::map<std::int64_t, Rational> next;
    for (auto& [k, c] : raw_) next.emplace(k * f, std::move(c));
    raw_.swap(next);
    level_ = nl;
}

void CyclotomicSum::add(const Cyclotomic& x) {
    if (x.is_zero()) return;
    grow(x.level_);
    std::int64_t f = level_ / x.level_;
    for (const auto& [k, c] : x.terms_) raw_[k * f] += c;
}

void CyclotomicSum::sub(const Cyclotomic& x) {
    if (x.is_zero()) return;
    grow(x.level_);
    std::int64_t f = level_ / x.level_;
    for (const auto& [k, c] : x.terms_) raw_[k * f] -= c;
}

void CyclotomicSum::add_product(const Cyclotomic& x, const Cyclotomic& y, bool negate) {
    if (x.is_zero() || y.is_zero()) return;
    grow(x.level_);
    grow(y.level_);
    std::int64_t fx = level_ / x.level_, fy = level_ / y.level_;
    for (const auto& [kx, cx] : x.terms_) {
        for (const auto& [ky, cy] : y.terms_) {
            Rational c = cx * cy;
            auto& slot = raw_[(kx * fx + ky * fy) % level_];
            if (negate)
                slot -= c;
            else
                slot += c;
        }
    }
}

void CyclotomicSum::add_product(const Cyclotomic& x, const Cyclotomic& y, const Cyclotomic& z,
                                bool negate) {
    if (x.is_zero() || y.is_zero() || z.is_zero()) return;
    grow(x.level_);
    grow(y.level_);
    grow(z.level_);
    std::int64_t fx = level_ / x.level_, fy = level_ / y.level_, fz = level_ / z.level_;
    for (const auto& [kx, cx] : x.terms_) {
        for (const auto& [ky, cy] : y.terms_) {
            Rational cxy = cx * cy;
            std::int64_t kxy = kx * fx + ky * fy;
            for (const auto& [kz, cz] : z.terms_) {
                Rational c = cxy * cz;
                auto& slot = raw_[(kxy + kz * fz) % level_];
                if (negate)
                    slot -= c;
                else
                    slot += c;
            }
        }
    }
}

Cyclotomic CyclotomicSum::value() const {
    std::map<std::int64_t, Rational> copy = raw_;
    return Cyclotomic::canonical(level_, copy);
}

// --------------------------------------------------------------- free fns

Cyclotomic root_of_unity(std::int64_t num, std::int64_t den) {
    Root r(num, den);
    std::map<std::int64_t, Rational> m;
    m.emplace(r.num(), Rational(1));
    return Cyclotomic::canonical(r.den(), m);
}

Cyclotomic root_of_unity(const Rational& r) {
    if (!r.is_small()) throw std::domain_error("root exponent too large");
    return root_of_unity(r.small_num(), r.small_den());
}

Cyclotomic sqrt_int(std::int64_t n) {
    if (n < 1) throw std::domain_error("sqrt_int needs n >= 1");
    Cyclotomic result(1);
    std::int64_t square_part = 1;
    for (auto [p, e] : factorize(n)) {
        square_part *= ipow(p, e / 2);
        if (e % 2 == 0) continue;
        if (p == 2) {
            result *= root_of_unity(1, 8) + root_of_unity(7, 8);
        } else {
            CyclotomicSum g;
            for (std::int64_t x = 0; x < p; ++x) g.add(root_of_unity(x * x % p, p));
            Cyclotomic gauss = g.value();
            if (p % 4 == 3) gauss *= root_of_unity(3, 4);
            result *= gauss;
        }
    }
    return result * Cyclotomic(Rational(square_part));
}

Cyclotomic sqrt_of_root(const Cyclotomic& x, Branch branch) {
    auto r = x.as_root();
    if (!r) throw std::domain_error("sqrt_of_root: input is not a root of unity");
    Root half(r->num(), 2 * r->den());
    if (branch == Branch::negative) half = half * Root(1, 2);
    return Cyclotomic(half);
}

std::complex<double> approx(const Cyclotomic& x) { return x.approx(); }

bool is_positive_real(const Cyclotomic& x) {
    if (x.is_zero() || !x.is_real()) return false;
    return x.approx().real() > 0;
}

}  // namespace glm
