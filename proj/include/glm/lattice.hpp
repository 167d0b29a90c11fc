#pragma once

// Even lattices given by Gram matrices, their discriminant forms L*/L and the
// cocycle data induced by the inner product.

#include <string>
#include <vector>

#include "glm/cocycle.hpp"

namespace glm {

using IntMatrix = std::vector<std::vector<long long>>;
using RatVector = std::vector<Rational>;

struct Lattice {
    IntMatrix gram;
    int rank() const { return static_cast<int>(gram.size()); }
};

// Throws unless the matrix is square, symmetric and nondegenerate.  Evenness
// is checked where it is needed.
Lattice make_lattice(IntMatrix gram);
Lattice parse_gram(const std::string& text);
Lattice read_gram_file(const std::string& path);
Lattice block_diagonal(const Lattice& a, const Lattice& b);

struct SmithForm {
    IntMatrix U, V;                 // U G V = D, both unimodular
    std::vector<long long> diagonal;
};
SmithForm smith_normal_form(const IntMatrix& m);

struct LatticeDiscData {
    FinAbGroup group;
    DiscriminantForm form;
    std::vector<RatVector> coset_rep;  // a -> a^ in L*, coordinates in the lattice basis
    Rational inner(int a, int b) const;
    // a^ + b^ - (a+b)^, an integer vector.
    std::vector<long long> u_cocycle(int a, int b) const;
    // e(<a^, v>/2) for v in L; +-1 when L is strongly even.
    Root pairing(int a, const std::vector<long long>& v) const;

    IntMatrix gram;
};

LatticeDiscData discriminant_group(const Lattice& l);
bool strong_even(const Lattice& l);
CocycleData build_cocycle_from_lattice(const Lattice& l);
CocycleData build_cocycle_from_lattice(const LatticeDiscData& data);

struct LatticeSignature {
    int p_plus = 0, p_minus = 0;
    int mod8() const { return static_cast<int>(mod64(p_plus - p_minus, 8)); }
};
LatticeSignature signature_lattice(const Lattice& l);

struct MilgramReport {
    bool full_sum_ok = false;
    bool partial_sum_ok = false;
    Cyclotomic full_sum, partial_sum;
    int signature = 0;
    bool ok() const { return full_sum_ok && partial_sum_ok; }
};
MilgramReport verify_milgram(const Lattice& l);

}  // namespace glm
