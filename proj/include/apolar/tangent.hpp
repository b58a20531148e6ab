#ifndef APOLAR_TANGENT_HPP
#define APOLAR_TANGENT_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apolar/apolar_ideal.hpp"

namespace apolar {

// How the square dimensions in degrees 4 and 5 get computed. The product
// span streams all pairwise products of ideal basis elements and ranks them;
// the dual perp solves the adjoint constraint system, which is far cheaper
// at large n. Both must return the same dimension, so Both recomputes and
// compares, and Auto picks dual above n = 10.
enum class SquareMethod : std::uint8_t { Auto, Span, Dual, Both };

SquareMethod parse_square_method(const std::string& text);  // "auto"|"span"|"dual"|"both"

enum class FailureReason : std::uint8_t {
    BadHilbertFunction,  // HF(S/I) != (1,n,n,1)
    SquareDegree4,       // HF(S/I^2)_4 != n
    SquareDegree5,       // HF(S/I^2)_5 != 0
};

std::string failure_reason_str(FailureReason r);

// Hilbert function of S/I^2 in degrees 0..5 with the method used per degree.
// Degrees 0..3 are forced once I has nothing below degree 2; entries are
// absent when the check short-circuited before computing them.
struct SquareReport {
    std::array<std::optional<std::int64_t>, 6> hf;
    std::array<std::string, 6> method;  // "", "forced", "product-span", "dual-perp", "span+dual"
};

struct Verdict {
    bool condition_holds = false;
    std::vector<std::int64_t> hf_quotient;  // HF(S/I), degrees 0..3
    SquareReport square;
    std::optional<std::array<std::int64_t, 3>> tangent_hf;  // tangent degrees -1, 0, 1
    std::optional<FailureReason> failure_reason;
    double ms_apolar = 0.0;
    double ms_degree4 = 0.0;
    double ms_degree5 = 0.0;
};

// dim (I^2)_e for e in {4, 5} via the streamed product span. Requires a cubic
// ideal with no part below degree 2. For e = 5 the decomposition uses only
// I_2 * I_3 products, after asserting S_1 * I_2 lies inside I_3.
std::int64_t square_piece_dim_span(const ApolarIdeal& ideal, std::int32_t e);

// The underlying streamed span of (I^2)_e over the degree-e monomial
// coordinates, for callers that need more than the dimension (residues,
// complement checks). Stops streaming once the span saturates.
SpanBuilder build_square_span(const ApolarIdeal& ideal, std::int32_t e);

// The same dimension through the dual characterization: dim (I^2)_e equals
// the rank of the constraint system on degree-e dual forms G demanding that
// h . G falls into the perp of I_{e-2} for every h in the I_2 basis.
// Requires HF(S/I) = (1, n, n, 1).
std::int64_t square_piece_dim_dual(const ApolarIdeal& ideal, const HomogeneousForm& f,
                                   std::int32_t e);

// The constraint block contributed by a single I_2 basis element in the dual
// method, as a sparse matrix over the degree-e dual coordinates.
SparseMatrix dual_constraint_block(const ApolarIdeal& ideal, const HomogeneousForm& f,
                                   std::int32_t e, std::int64_t h_index);

// Full decision procedure for a nonzero cubic dual form. Evaluation
// short-circuits (Hilbert function, then degree 4, then degree 5) but every
// computed value is reported. With SquareMethod::Both a method disagreement
// raises InternalInconsistency.
Verdict check_small_tangent(const HomogeneousForm& f, SquareMethod method = SquareMethod::Auto);

// Hilbert function of the tangent space at Ann(f) in tangent degrees
// -1, 0, 1 (zero everywhere else). Defined when HF(S/I) = (1,n,n,1) and
// HF(S/I^2)_5 = 0; otherwise the tangent space has parts beyond the
// implemented range and this throws.
std::array<std::int64_t, 3> tangent_hilbert_function(const HomogeneousForm& f,
                                                     SquareMethod method = SquareMethod::Auto);

// Core of the above once the square values are in hand; hf5 must be zero.
std::array<std::int64_t, 3> tangent_hilbert_function_from(const ApolarIdeal& ideal,
                                                          std::int64_t hf4, std::int64_t hf5);

// An explicit expression of a degree-4 or degree-5 polynomial as a sum of
// products of two annihilator elements.
struct WitnessTerm {
    Scalar coeff;
    HomogeneousForm left;   // degree-2 factor
    HomogeneousForm right;  // degree-(e-2) factor
};

struct WitnessCombination {
    HomogeneousForm target;
    std::vector<WitnessTerm> terms;
};

// Result of a witness query, including the augmented expression over the
// supplied extra degree-e generators when the plain square was not enough.
struct WitnessQuery {
    std::optional<WitnessCombination> certificate;  // product part
    std::vector<std::pair<Scalar, HomogeneousForm>> auxiliary_terms;
    std::int64_t residue_support = 0;  // nonzero residue coordinates vs the square span
    bool in_square = false;            // target lies in (I^2)_e itself

    bool answered() const { return certificate.has_value(); }
    bool used_auxiliary() const { return !auxiliary_terms.empty(); }
};

// Nonempty exactly when target lies in (I^2)_deg; the returned combination
// re-expands to the target under exact arithmetic.
std::optional<WitnessCombination> witness_square_membership(const HomogeneousForm& target,
                                                            const ApolarIdeal& ideal);

// Same, but when membership in the plain square fails the target is also
// expressed over the square plus the given extra degree-e forms (when
// possible), and the residue support count versus the plain square is
// reported.
WitnessQuery witness_square_query(const HomogeneousForm& target, const ApolarIdeal& ideal,
                                  std::span<const HomogeneousForm> extras);

// Exact re-expansion check: the terms sum to the target and every factor
// annihilates f.
bool verify_witness(const WitnessCombination& w, const HomogeneousForm& f);

}  // namespace apolar

#endif
