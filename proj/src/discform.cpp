#include "glm/discform.hpp"

#include <cctype>
#include <sstream>

namespace glm {

std::vector<int> JordanComponent::orders() const {
    if (kind == JordanKind::two_adic_even) return {modulus, modulus};
    return {modulus};
}

std::string JordanComponent::str() const {
    std::ostringstream os;
    os << modulus;
    if (kind == JordanKind::two_adic_cyclic) os << "_" << unit;
    if (kind == JordanKind::two_adic_even) os << "_II";
    os << "^" << (sign > 0 ? "+" : "-") << (kind == JordanKind::two_adic_even ? 2 : 1);
    return os.str();
}

namespace {

// Q on a single component, by local residues.
Root component_q(const JordanComponent& c, const int* x) {
    long long m = c.modulus;
    switch (c.kind) {
        case JordanKind::odd_prime_power:
            return Root(static_cast<long long>(c.unit) * x[0] * x[0] % m, m);
        case JordanKind::two_adic_cyclic:
            return Root(static_cast<long long>(c.unit) * x[0] * x[0] % (2 * m), 2 * m);
        case JordanKind::two_adic_even: {
            long long a = x[0], b = x[1];
            long long n = c.sign > 0 ? a * b : a * a + a * b + b * b;
            return Root(n % m, m);
        }
    }
    return Root();
}

std::vector<int> all_orders(const std::vector<JordanComponent>& cs) {
    std::vector<int> out;
    for (const auto& c : cs)
        for (int m : c.orders()) out.push_back(m);
    return out;
}

}  // namespace

DiscriminantForm::DiscriminantForm() : q_(1, Root()) {}

DiscriminantForm::DiscriminantForm(std::vector<JordanComponent> components)
    : group_(all_orders(components)), components_(std::move(components)) {
    q_.resize(group_.order());
    for (int a = 0; a < group_.order(); ++a) {
        Element e = group_.element(a);
        Root r;
        std::size_t off = 0;
        for (const auto& c : components_) {
            r = r * component_q(c, e.residues.data() + off);
            off += c.orders().size();
        }
        q_[a] = r;
    }
    check_nondegenerate();
}

DiscriminantForm::DiscriminantForm(FinAbGroup group, std::vector<Root> q_table)
    : group_(std::move(group)), has_jordan_(false), q_(std::move(q_table)) {
    if (static_cast<int>(q_.size()) != group_.order())
        throw std::invalid_argument("quadratic form table has wrong size");
    check_nondegenerate();
}

void DiscriminantForm::check_nondegenerate() const {
    int n = group_.order();
    for (int a = 1; a < n; ++a) {
        bool radical = true;
        for (int b = 0; b < n && radical; ++b)
            if (B(a, b) != Root()) radical = false;
        if (radical)
            throw std::invalid_argument("degenerate quadratic form: " + group_.element(a).str() + " lies in the radical");
    }
}

std::string DiscriminantForm::str() const {
    if (!has_jordan_) {
        std::ostringstream os;
        os << "Z";
        for (int m : group_.orders()) os << "_" << m;
        return os.str();
    }
    if (components_.empty()) return "trivial";
    std::string s;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) s += " + ";
        s += components_[i].str();
    }
    return s;
}

int kronecker2(long long t) {
    long long r = mod64(t, 8);
    if (r % 2 == 0) return 0;
    return (r == 1 || r == 7) ? 1 : -1;
}

int kronecker(long long a, long long n) {
    if (n <= 0 || n % 2 == 0) throw std::invalid_argument("kronecker: n must be a positive odd integer");
    a = mod64(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

namespace {

class JordanParser {
public:
    explicit JordanParser(const std::string& text) {
        for (std::size_t i = 0; i < text.size(); ++i)
            if (!std::isspace(static_cast<unsigned char>(text[i]))) chars_.push_back({text[i], i});
        end_pos_ = text.size();
    }

    std::vector<JordanComponent> parse() {
        std::vector<JordanComponent> out;
        if (chars_.empty()) throw ParseError("empty Jordan symbol", 0);
        parse_component(out);
        while (i_ < chars_.size()) {
            expect('+', "'+' between components");
            parse_component(out);
        }
        return out;
    }

private:
    struct Ch {
        char c;
        std::size_t pos;
    };

    std::size_t pos() const { return i_ < chars_.size() ? chars_[i_].pos : end_pos_; }
    bool at(char c) const { return i_ < chars_.size() && chars_[i_].c == c; }

    void expect(char c, const std::string& what) {
        if (!at(c)) throw ParseError("expected " + what, pos());
        ++i_;
    }

    long long digits(const std::string& what) {
        std::size_t start = pos();
        if (i_ >= chars_.size() || !std::isdigit(static_cast<unsigned char>(chars_[i_].c)))
            throw ParseError("expected " + what, start);
        long long v = 0;
        while (i_ < chars_.size() && std::isdigit(static_cast<unsigned char>(chars_[i_].c))) {
            v = v * 10 + (chars_[i_].c - '0');
            if (v > (1 << 20)) throw ParseError(what + " too large", start);
            ++i_;
        }
        return v;
    }

    void parse_component(std::vector<JordanComponent>& out) {
        std::size_t start = pos();
        long long modulus = digits("modulus");
        if (modulus < 2) throw ParseError("modulus must be a prime power greater than 1", start);
        auto f = factorize(modulus);
        if (f.size() != 1) throw ParseError("modulus " + std::to_string(modulus) + " is not a prime power", start);
        int p = static_cast<int>(f[0].first);
        int k = f[0].second;

        enum { none, two_ii, cyclic } sub = none;
        long long t = 0;
        std::size_t sub_pos = pos();
        if (at('_')) {
            ++i_;
            sub_pos = pos();
            if (at('I')) {
                ++i_;
                expect('I', "'II'");
                sub = two_ii;
            } else {
                t = digits("subscript");
                sub = cyclic;
            }
        }
        std::size_t caret_pos = pos();
        expect('^', "'^'");
        std::size_t sign_pos = pos();
        int sign;
        if (at('+')) sign = 1;
        else if (at('-')) sign = -1;
        else throw ParseError("expected sign '+' or '-'", sign_pos);
        ++i_;
        std::size_t exp_pos = pos();
        long long n = digits("exponent");
        if (n == 0) throw ParseError("exponent must be positive", exp_pos);
        (void)caret_pos;

        if (p != 2) {
            if (sub != none) throw ParseError("subscript not allowed for odd prime " + std::to_string(p), sub_pos);
            for (long long i = 0; i < n; ++i) {
                JordanComponent c;
                c.kind = JordanKind::odd_prime_power;
                c.p = p;
                c.k = k;
                c.modulus = static_cast<int>(modulus);
                c.sign = i == 0 ? sign : 1;
                for (int u = 1;; ++u)
                    if (u % p != 0 && kronecker(2 * u, p) == c.sign) {
                        c.unit = u;
                        break;
                    }
                out.push_back(c);
            }
            return;
        }
        if (sub == none)
            throw ParseError("2-adic component needs a subscript _t or _II", caret_pos);
        if (sub == two_ii) {
            if (n % 2 != 0) throw ParseError("exponent of a _II component must be even", exp_pos);
            for (long long i = 0; i < n / 2; ++i) {
                JordanComponent c;
                c.kind = JordanKind::two_adic_even;
                c.p = 2;
                c.k = k;
                c.modulus = static_cast<int>(modulus);
                c.sign = i == 0 ? sign : 1;
                out.push_back(c);
            }
            return;
        }
        if (n != 1) throw ParseError("exponent of a 2-adic cyclic component must be 1", exp_pos);
        if (t % 2 == 0) throw ParseError("subscript t must be odd", sub_pos);
        if (kronecker2(t) != sign)
            throw ParseError("sign inconsistent with subscript: (" + std::to_string(t) + "/2) = " +
                                 std::to_string(kronecker2(t)),
                             sign_pos);
        JordanComponent c;
        c.kind = JordanKind::two_adic_cyclic;
        c.p = 2;
        c.k = k;
        c.modulus = static_cast<int>(modulus);
        c.sign = sign;
        c.unit = static_cast<int>(t % 8);
        out.push_back(c);
    }

    std::vector<Ch> chars_;
    std::size_t i_ = 0;
    std::size_t end_pos_ = 0;
};

}  // namespace

DiscriminantForm parse_jordan(const std::string& text) {
    return DiscriminantForm(JordanParser(text).parse());
}

Cyclotomic Q_of(const DiscriminantForm& d, const Element& a) { return d.Q(d.group().index(a)); }

Cyclotomic B_of(const DiscriminantForm& d, const Element& a, const Element& b) {
    return d.B(d.group().index(a), d.group().index(b));
}

Cyclotomic gauss_full(const DiscriminantForm& d) {
    CyclotomicSum s;
    for (const Root& r : d.q_table()) s.add(r);
    return s.value();
}

int signature(const DiscriminantForm& d) {
    Cyclotomic g = gauss_full(d);
    Cyclotomic root = sqrt_int(d.order());
    for (int k = 0; k < 8; ++k)
        if (root * root_of_unity(k, 8) == g) return k;
    throw std::logic_error("Milgram sum is not sqrt|G| times an 8th root of unity");
}

DiscriminantForm direct_sum(const DiscriminantForm& d1, const DiscriminantForm& d2) {
    if (d1.has_jordan_symbol() && d2.has_jordan_symbol()) {
        auto cs = d1.components();
        cs.insert(cs.end(), d2.components().begin(), d2.components().end());
        return DiscriminantForm(cs);
    }
    std::vector<int> orders = d1.group().orders();
    orders.insert(orders.end(), d2.group().orders().begin(), d2.group().orders().end());
    FinAbGroup g(orders);
    std::vector<Root> q(g.order());
    int n2 = d2.order();
    for (int a = 0; a < d1.order(); ++a)
        for (int b = 0; b < n2; ++b) q[a * n2 + b] = d1.Q(a) * d2.Q(b);
    return DiscriminantForm(g, q);
}

int sign_s_even(const DiscriminantForm& d) {
    if (!d.has_jordan_symbol()) throw std::invalid_argument("sign of 2-adic part needs a Jordan symbol");
    int s = 1;
    for (const auto& c : d.components()) {
        if (c.p != 2) continue;
        if (c.kind == JordanKind::two_adic_cyclic && c.modulus == 2)
            throw std::invalid_argument(
                "sign of 2-adic part undefined (exceptional isomorphisms 2_1^+1 = 2_5^-1)");
        s *= c.sign;
    }
    return s;
}

}  // namespace glm
