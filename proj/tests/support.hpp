#pragma once

// Shared fixtures and brute-force oracles for the test programs.

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "glm/equivar.hpp"
#include "glm/lattice.hpp"

namespace glm::testing {

inline const std::vector<std::string>& battery() {
    static const std::vector<std::string> b = {
        "2_1^+1", "2_7^+1", "4_1^+1", "4_3^-1", "8_1^+1", "2_II^+2", "2_II^-2", "4_II^+2",
        "3^+1",   "3^-1",   "5^+1",   "5^-1",   "9^+1",  "2_1^+1 + 3^-1", "4_1^+1 + 4_1^+1"};
    return b;
}

inline std::complex<double> e_num(double x) { return std::polar(1.0, 2 * M_PI * x); }
inline std::complex<double> e_num(Root r) { return e_num(static_cast<double>(r.num()) / r.den()); }

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) { return std::abs(a - b) < tol; }

// Jacobi symbol by quadratic reciprocity, for odd n > 0.
inline int jacobi(long long a, long long n) {
    a %= n;
    if (a < 0) a += n;
    int r = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long m = n % 8;
            if (m == 3 || m == 5) r = -r;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) r = -r;
        a %= n;
    }
    return n == 1 ? r : 0;
}

// Signature mod 8 read off numerically from the Milgram sum.
inline int numeric_signature(const DiscriminantForm& d) {
    std::complex<double> s = 0;
    for (const Root& q : d.q_table()) s += e_num(q);
    s /= std::sqrt(static_cast<double>(d.order()));
    for (int k = 0; k < 8; ++k)
        if (close(s, e_num(k / 8.0), 1e-7)) return k;
    return -1;
}

inline long long odd_part(long long n) {
    while (n % 2 == 0) n /= 2;
    return n;
}

}  // namespace glm::testing
