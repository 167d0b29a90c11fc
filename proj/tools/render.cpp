#include "render.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace glm::render {

namespace {

std::string root_text(Root r) {
    if (r.num() == 0) return "1";
    if (r.den() == 2) return "-1";
    return "e(" + std::to_string(r.num()) + "/" + std::to_string(r.den()) + ")";
}

// c * e(r) with c a positive rational coefficient string.
std::string scaled(const std::string& c, Root r) {
    if (r.num() == 0) return c;
    if (r.den() == 2) return "-" + c;
    return c + "*" + root_text(r);
}

nlohmann::json rational_json(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

BigInt big_from_json(const nlohmann::json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<long long>());
}

}  // namespace

std::string symbol(const Cyclotomic& x) {
    if (x.is_rational()) return x.rational_value().str();
    if (auto r = x.as_root()) return root_text(*r);
    Cyclotomic norm = x * x.conj();
    if (norm.is_rational()) {
        Rational n = norm.rational_value();
        if (n.is_integer() && n.sign() > 0 && n.is_small()) {
            long long v = n.small_num();
            // v = c^2 * w with w squarefree
            long long c = 1, w = 1;
            for (auto [p, e] : factorize(v)) {
                for (int i = 0; i < e / 2; ++i) c *= p;
                if (e % 2) w *= p;
            }
            Cyclotomic base = Cyclotomic(c) * sqrt_int(w);
            if (auto r = (x / base).as_root()) {
                std::string coeff = w == 1 ? std::to_string(c)
                                           : (c == 1 ? "" : std::to_string(c) + "*") + "√" + std::to_string(w);
                return scaled(coeff, *r);
            }
        } else if (n.sign() > 0) {
            // |x| rational?  Try the rational square root directly.
            BigInt num = n.numerator(), den = n.denominator();
            BigInt sn = boost::multiprecision::sqrt(num), sd = boost::multiprecision::sqrt(den);
            if (sn * sn == num && sd * sd == den) {
                Rational c = Rational::from_big(sn, sd);
                if (auto r = (x / Cyclotomic(c)).as_root()) return scaled(c.str(), *r);
            }
        }
    }
    return x.str();
}

std::string approx(const Cyclotomic& x, int digits) {
    auto z = x.approx();
    auto clean = [](double v) { return std::abs(v) < 1e-12 ? 0.0 : v; };
    std::ostringstream os;
    os.precision(digits);
    double re = clean(z.real()), im = clean(z.imag());
    if (im == 0) os << re;
    else if (re == 0) os << im << "i";
    else os << re << (im < 0 ? "-" : "+") << std::abs(im) << "i";
    return os.str();
}

nlohmann::json to_json(const Cyclotomic& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : x.terms()) {
        terms.push_back({rational_json(e.numerator()), rational_json(e.denominator()),
                         rational_json(c.numerator()), rational_json(c.denominator())});
    }
    auto z = x.approx();
    return {{"terms", terms}, {"approx", {z.real(), z.imag()}}, {"text", symbol(x)}};
}

Cyclotomic from_json(const nlohmann::json& j) {
    std::vector<std::pair<Rational, Rational>> terms;
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 4) throw std::invalid_argument("cyclotomic term must have 4 entries");
        terms.emplace_back(Rational::from_big(big_from_json(t[0]), big_from_json(t[1])),
                           Rational::from_big(big_from_json(t[2]), big_from_json(t[3])));
    }
    return Cyclotomic::from_terms(terms);
}

nlohmann::json to_json(const FamilyResult& f) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& x : f.failures)
        failures.push_back({{"objects", x.objects}, {"basis", x.basis}, {"lhs", x.lhs}, {"rhs", x.rhs}});
    return {{"family", f.family},
            {"instances_checked", f.instances_checked},
            {"failure_count", f.failure_count},
            {"failures", failures}};
}

nlohmann::json to_json(const CoherenceReport& r) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& f : r.families) out.push_back(to_json(f));
    return out;
}

}  // namespace glm::render
