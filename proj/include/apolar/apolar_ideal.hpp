#ifndef APOLAR_APOLAR_IDEAL_HPP
#define APOLAR_APOLAR_IDEAL_HPP

#include <memory>
#include <vector>

#include "apolar/linalg.hpp"
#include "apolar/ring.hpp"

namespace apolar {

// A degree-e subspace of the acting polynomial ring, held as an RREF basis
// over the degree-e monomial coordinates.
struct GradedSubspace {
    ContextPtr ctx;
    std::int32_t degree = 0;
    std::shared_ptr<const MonomialIndexer> indexer;
    RowBasis basis;

    std::int64_t dimension() const { return basis.rank(); }
    HomogeneousForm row_form(std::int64_t i) const;
    std::vector<HomogeneousForm> forms() const;
};

// The annihilator of a nonzero homogeneous dual form f, stored through its
// graded pieces up to deg f. Beyond deg f every degree piece is the full
// space (contraction to negative degree vanishes), available on demand via
// full_piece.
class ApolarIdeal {
public:
    static ApolarIdeal compute(const HomogeneousForm& f);

    const HomogeneousForm& dual_form() const { return f_; }
    const ContextPtr& context() const { return f_.context(); }
    std::int32_t top_degree() const { return f_.degree(); }

    const GradedSubspace& piece(std::int32_t e) const;  // 0 <= e <= top_degree
    GradedSubspace full_piece(std::int32_t e) const;    // e > top_degree: all of S_e

private:
    explicit ApolarIdeal(HomogeneousForm f) : f_(std::move(f)) {}

    HomogeneousForm f_;
    std::vector<GradedSubspace> pieces_;
};

// Matrix of the contraction map S_e -> P_{deg f - e} against f: columns are
// degree-e monomial coordinates, rows degree-(d-e) dual coordinates. Its
// kernel is the degree-e piece of Ann(f), its rank the Hilbert function
// value of the apolar algebra in degree e.
SparseMatrix contraction_matrix(const HomogeneousForm& f, std::int32_t e);

// Degree-e piece of Ann(f) for 0 <= e <= deg f; rejects the zero form.
GradedSubspace apolar_piece(const HomogeneousForm& f, std::int32_t e);

// Hilbert function of the apolar algebra in degrees 0..deg f, computed from
// contraction ranks.
std::vector<std::int64_t> hilbert_function(const HomogeneousForm& f);

// Minimal generators of the ideal in degree e: an RREF basis of a complement
// of S_1 * I_{e-1} inside I_e.
GradedSubspace minimal_generators_by_degree(const ApolarIdeal& ideal, std::int32_t e);

}  // namespace apolar

#endif
