#ifndef APOLAR_FAMILIES_HPP
#define APOLAR_FAMILIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "apolar/ring.hpp"

namespace apolar {

// The explicit cubic constructions, keyed by variable count. n = 6 and n = 8
// have bespoke polynomials; from n = 9 on the shape is decided by n mod 3
// with block size m. n in {1..5, 7} has no construction.
enum class FamilyKind : std::uint8_t { ThreeM, ThreeMPlus1, ThreeMPlus2, SpecialN6, SpecialN8 };

struct FamilyDescriptor {
    std::int32_t n = 0;
    FamilyKind kind = FamilyKind::ThreeM;
    std::int32_t m = 0;  // block size (number of a-variables)
};

// Throws InputError for unsupported n.
FamilyDescriptor family_descriptor(std::int32_t n);

bool family_supported(std::int32_t n);

// The family cubic as a dual form with every coefficient equal to 1.
// Variable order: a1..am, b1..bm, c1..cm, then d, then e.
HomogeneousForm family_cubic(std::int32_t n, const FieldSpec& field);

// Dense random cubic, reproducible from the seed: uniform residues over a
// prime field, uniform integers in [-100, 100] over the rationals.
HomogeneousForm random_cubic(std::int32_t n, const FieldSpec& field, std::uint64_t seed);

// Index of a named variable under the family convention:
// a_i -> i-1, b_i -> m+i-1, c_i -> 2m+i-1, d -> 3m, e -> 3m+1.
std::int32_t variable_index(const std::string& name, const FamilyDescriptor& desc);

// The quartic monomials that, adjoined to the ideal square, are known to
// span all of degree 4: a_i a_{i+1} a_{i+2}^2 and the b/c analogues for each
// i, plus a1*b1*c1*d (and *e) when those variables exist. Empty for the two
// special small-n polynomials, which come with no such list.
std::vector<HomogeneousForm> auxiliary_square_generators(const FamilyDescriptor& desc,
                                                         const FieldSpec& field);

// A Macaulay2 session that rebuilds the same polynomial and runs the
// equivalent four Hilbert-function checks, for external cross-validation.
std::string macaulay2_script(std::int32_t n, const FieldSpec& field);

}  // namespace apolar

#endif
