#include "glm/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace glm {

namespace {

using RatMatrix = std::vector<RatVector>;

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (long long v : m[i]) r[i].push_back(Rational(v));
    return r;
}

// Exact Gauss-Jordan; throws on a singular matrix.
RatMatrix inverse(RatMatrix a) {
    std::size_t n = a.size();
    RatMatrix inv(n, RatVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) throw std::invalid_argument("Gram matrix is singular");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rational piv = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            Rational f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

RatVector mul(const RatMatrix& m, const RatVector& v) {
    RatVector out(m.size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

Rational bilinear(const IntMatrix& g, const RatVector& x, const RatVector& y) {
    Rational s(0);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (g[i][j] != 0) s += x[i] * Rational(g[i][j]) * y[j];
    return s;
}

long long to_ll(const Rational& r) {
    if (!r.is_integer() || !r.is_small()) throw std::logic_error("expected a machine integer");
    return r.small_num();
}

// e(r/2) for rational r.
Root half_root(const Rational& r) {
    Rational h = r / Rational(2);
    if (!h.is_small()) throw std::overflow_error("inner product too large");
    return Root(h.small_num() % h.small_den(), h.small_den());
}

}  // namespace

Lattice make_lattice(IntMatrix gram) {
    std::size_t n = gram.size();
    for (const auto& row : gram)
        if (row.size() != n) throw std::invalid_argument("Gram matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (gram[i][j] != gram[j][i]) throw std::invalid_argument("Gram matrix is not symmetric");
    inverse(to_rational(gram));
    return Lattice{std::move(gram)};
}

Lattice parse_gram(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<long long> nums;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            char* end = nullptr;
            long long v = std::strtoll(tok.c_str(), &end, 10);
            if (end == tok.c_str() || *end != '\0')
                throw std::invalid_argument("line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
            nums.push_back(v);
        }
    }
    if (nums.empty()) throw std::invalid_argument("empty Gram file");
    long long n = nums[0];
    if (n < 1) throw std::invalid_argument("rank must be positive");
    if (static_cast<long long>(nums.size()) != 1 + n * n)
        throw std::invalid_argument("expected " + std::to_string(n * n) + " matrix entries, got " +
                                    std::to_string(nums.size() - 1));
    IntMatrix g(n, std::vector<long long>(n));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) g[i][j] = nums[1 + i * n + j];
    return make_lattice(g);
}

Lattice read_gram_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open Gram file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_gram(ss.str());
}

Lattice block_diagonal(const Lattice& a, const Lattice& b) {
    int n = a.rank() + b.rank();
    IntMatrix g(n, std::vector<long long>(n, 0));
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < a.rank(); ++j) g[i][j] = a.gram[i][j];
    for (int i = 0; i < b.rank(); ++i)
        for (int j = 0; j < b.rank(); ++j) g[a.rank() + i][a.rank() + j] = b.gram[i][j];
    return Lattice{g};
}

SmithForm smith_normal_form(const IntMatrix& m) {
    int n = static_cast<int>(m.size());
    int cols = n ? static_cast<int>(m[0].size()) : 0;
    IntMatrix d = m;
    IntMatrix u(n, std::vector<long long>(n, 0)), v(cols, std::vector<long long>(cols, 0));
    for (int i = 0; i < n; ++i) u[i][i] = 1;
    for (int i = 0; i < cols; ++i) v[i][i] = 1;
    auto row_add = [&](int dst, int src, long long f) {  // row dst += f row src
        for (int j = 0; j < cols; ++j) d[dst][j] += f * d[src][j];
        for (int j = 0; j < n; ++j) u[dst][j] += f * u[src][j];
    };
    auto col_add = [&](int dst, int src, long long f) {
        for (int i = 0; i < n; ++i) d[i][dst] += f * d[i][src];
        for (int i = 0; i < cols; ++i) v[i][dst] += f * v[i][src];
    };
    int lim = std::min(n, cols);
    for (int t = 0; t < lim; ++t) {
        while (true) {
            int pi = -1, pj = -1;
            for (int i = t; i < n; ++i)
                for (int j = t; j < cols; ++j)
                    if (d[i][j] != 0 && (pi < 0 || std::llabs(d[i][j]) < std::llabs(d[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) break;
            std::swap(d[t], d[pi]);
            std::swap(u[t], u[pi]);
            for (int i = 0; i < n; ++i) std::swap(d[i][t], d[i][pj]);
            for (int i = 0; i < cols; ++i) std::swap(v[i][t], v[i][pj]);
            bool clean = true;
            for (int i = t + 1; i < n; ++i) {
                row_add(i, t, -(d[i][t] / d[t][t]));
                if (d[i][t] != 0) clean = false;
            }
            for (int j = t + 1; j < cols; ++j) {
                col_add(j, t, -(d[t][j] / d[t][t]));
                if (d[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            int bad = -1;
            for (int i = t + 1; i < n && bad < 0; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (d[i][j] % d[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            row_add(t, bad, 1);
        }
        if (d[t][t] < 0) {
            for (int j = 0; j < cols; ++j) d[t][j] = -d[t][j];
            for (int j = 0; j < n; ++j) u[t][j] = -u[t][j];
        }
    }
    SmithForm s{u, v, {}};
    for (int t = 0; t < lim; ++t) s.diagonal.push_back(d[t][t]);
    return s;
}

Rational LatticeDiscData::inner(int a, int b) const { return bilinear(gram, coset_rep[a], coset_rep[b]); }

std::vector<long long> LatticeDiscData::u_cocycle(int a, int b) const {
    const RatVector& x = coset_rep[a];
    const RatVector& y = coset_rep[b];
    const RatVector& z = coset_rep[group.add(a, b)];
    std::vector<long long> out;
    for (std::size_t i = 0; i < x.size(); ++i) out.push_back(to_ll(x[i] + y[i] - z[i]));
    return out;
}

Root LatticeDiscData::pairing(int a, const std::vector<long long>& v) const {
    RatVector w;
    for (long long x : v) w.push_back(Rational(x));
    return half_root(bilinear(gram, coset_rep[a], w));
}

LatticeDiscData discriminant_group(const Lattice& l) {
    int n = l.rank();
    for (int i = 0; i < n; ++i)
        if (l.gram[i][i] % 2 != 0) throw std::invalid_argument("lattice is not even");
    SmithForm s = smith_normal_form(l.gram);
    std::vector<int> nontrivial, orders;
    for (int i = 0; i < n; ++i)
        if (s.diagonal[i] > 1) {
            nontrivial.push_back(i);
            orders.push_back(static_cast<int>(s.diagonal[i]));
        }
    FinAbGroup g(orders);
    RatMatrix ginv = inverse(to_rational(l.gram));
    RatMatrix uinv = inverse(to_rational(s.U));
    std::vector<RatVector> reps(g.order());
    std::vector<Root> q(g.order());
    for (int a = 0; a < g.order(); ++a) {
        Element e = g.element(a);
        RatVector r(n, Rational(0));
        for (std::size_t k = 0; k < nontrivial.size(); ++k) r[nontrivial[k]] = Rational(e.residues[k]);
        reps[a] = mul(ginv, mul(uinv, r));
        q[a] = half_root(bilinear(l.gram, reps[a], reps[a]));
    }
    return LatticeDiscData{g, DiscriminantForm(g, q), reps, l.gram};
}

bool strong_even(const Lattice& l) {
    for (const auto& row : l.gram)
        for (long long v : row)
            if (v % 2 != 0) return false;
    return true;
}

CocycleData build_cocycle_from_lattice(const LatticeDiscData& data) {
    for (const auto& row : data.gram)
        for (long long v : row)
            if (v % 2 != 0) throw std::invalid_argument("lattice cocycle requires <u,v> in 2Z for all u,v");
    const FinAbGroup& g = data.group;
    int n = g.order();
    std::vector<Root> sigma(static_cast<std::size_t>(n) * n), q(n);
    for (int a = 0; a < n; ++a) {
        Rational aa = data.inner(a, a);
        q[a] = half_root(aa / Rational(2));
        for (int b = 0; b < n; ++b) sigma[static_cast<std::size_t>(a) * n + b] = half_root(data.inner(a, b));
    }
    // delta: the coset whose pairing with each basis vector v is e(<v,v>/4).
    int rank = static_cast<int>(data.gram.size());
    auto matches = [&](int d) {
        for (int i = 0; i < rank; ++i) {
            std::vector<long long> v(rank, 0);
            v[i] = 1;
            if (data.pairing(d, v) != half_root(Rational(data.gram[i][i], 2))) return false;
        }
        return true;
    };
    int delta = -1;
    for (int a : g.torsion2())
        if (matches(a)) {
            delta = a;
            break;
        }
    if (delta < 0)
        for (int a = 0; a < n && delta < 0; ++a)
            if (matches(a)) delta = a;
    if (delta < 0) throw std::logic_error("no coset realises the character v -> e(<v,v>/4)");
    return CocycleData(data.form, sigma, q, delta);
}

CocycleData build_cocycle_from_lattice(const Lattice& l) {
    if (!strong_even(l)) throw std::invalid_argument("lattice cocycle requires <u,v> in 2Z for all u,v");
    return build_cocycle_from_lattice(discriminant_group(l));
}

LatticeSignature signature_lattice(const Lattice& l) {
    RatMatrix a = to_rational(l.gram);
    int n = l.rank();
    LatticeSignature sig;
    for (int t = 0; t < n; ++t) {
        if (a[t][t].is_zero()) {
            int j = t + 1;
            while (j < n && a[j][j].is_zero()) ++j;
            if (j < n) {
                std::swap(a[t], a[j]);
                for (auto& row : a) std::swap(row[t], row[j]);
            } else {
                j = t + 1;
                while (j < n && a[t][j].is_zero()) ++j;
                if (j == n) throw std::invalid_argument("Gram matrix is singular");
                for (int k = 0; k < n; ++k) a[t][k] += a[j][k];
                for (int k = 0; k < n; ++k) a[k][t] += a[k][j];
            }
        }
        Rational piv = a[t][t];
        for (int i = t + 1; i < n; ++i) {
            if (a[i][t].is_zero()) continue;
            Rational f = a[i][t] / piv;
            for (int k = t; k < n; ++k) a[i][k] -= f * a[t][k];
            for (int k = t; k < n; ++k) a[k][i] -= f * a[k][t];
        }
        if (piv.sign() > 0) ++sig.p_plus;
        else ++sig.p_minus;
    }
    return sig;
}

MilgramReport verify_milgram(const Lattice& l) {
    MilgramReport r;
    LatticeDiscData data = discriminant_group(l);
    r.signature = signature_lattice(l).mod8();
    r.full_sum = gauss_full(data.form);
    r.full_sum_ok = r.full_sum == sqrt_int(data.group.order()) * root_of_unity(r.signature, 8);
    if (strong_even(l)) {
        r.partial_sum = gauss_partial_q(build_cocycle_from_lattice(data));
        r.partial_sum_ok = r.partial_sum == root_of_unity(-r.signature, 8);
    } else {
        r.partial_sum_ok = true;  // no lattice cocycle to test
    }
    return r;
}

}  // namespace glm
