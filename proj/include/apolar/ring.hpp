#ifndef APOLAR_RING_HPP
#define APOLAR_RING_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "apolar/field.hpp"
#include "apolar/linalg.hpp"

namespace apolar {

// Exponent vector of a monomial: one nonnegative entry per variable. The
// same index type addresses monomials of the acting polynomial ring and the
// divided-power functionals dual to them.
struct ExponentVector {
    std::vector<std::int32_t> e;

    std::int32_t degree() const {
        std::int32_t d = 0;
        for (std::int32_t x : e) d += x;
        return d;
    }

    bool operator==(const ExponentVector&) const = default;

    // Componentwise a >= b, so the contraction of b against a survives.
    bool dominates(const ExponentVector& b) const;
    ExponentVector minus(const ExponentVector& b) const;
    ExponentVector plus(const ExponentVector& b) const;
};

// Enumeration order: total degree first, then lexicographic with variable 0
// heaviest, largest monomial first within a degree. So for n = 2, degree 2
// the order is a^2, a*b, b^2. Comparator returns true when `a` enumerates
// before `b`.
struct GrlexBefore {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        std::int32_t da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.e > b.e;  // lexicographically larger enumerates first
    }
};

class RingContext;
using ContextPtr = std::shared_ptr<const RingContext>;

// Immutable description of the ambient graded ring: variable count, exact
// coefficient field, and the variable-name table used by the text grammar.
class RingContext {
public:
    RingContext(std::int32_t n, FieldSpec field, std::vector<std::string> names);

    // Standard naming: blocks a1..am, b1..bm, c1..cm with m = n/3, then d
    // when n % 3 >= 1 and e when n % 3 == 2.
    static ContextPtr make(std::int32_t n, FieldSpec field);
    static std::vector<std::string> standard_names(std::int32_t n);

    std::int32_t nvars() const { return n_; }
    const FieldSpec& field_spec() const { return field_.spec(); }
    const Field& field() const { return field_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::int32_t i) const { return names_[static_cast<std::size_t>(i)]; }
    std::int32_t variable(const std::string& name) const;  // throws InputError when unknown

    bool same_as(const RingContext& other) const;

private:
    std::int32_t n_;
    Field field_;
    std::vector<std::string> names_;
};

void require_same_context(const ContextPtr& a, const ContextPtr& b);

// The full degree-d monomial basis in enumeration order, with a reverse
// lookup computed combinatorially (no hashing), so positions are stable
// across runs and platforms.
class MonomialIndexer {
public:
    MonomialIndexer(ContextPtr ctx, std::int32_t degree);

    std::int64_t size() const { return static_cast<std::int64_t>(list_.size()); }
    std::int32_t degree() const { return degree_; }
    const ExponentVector& at(std::int64_t i) const { return list_[static_cast<std::size_t>(i)]; }
    std::int64_t index_of(const ExponentVector& ev) const;
    const ContextPtr& context() const { return ctx_; }

private:
    ContextPtr ctx_;
    std::int32_t degree_;
    std::vector<ExponentVector> list_;
};

// Whether a form lives in the acting polynomial ring or in its divided-power
// dual. Contraction sends (Poly, Dual) to Dual; multiplication stays in Poly.
enum class Side : std::uint8_t { Poly, Dual };

// A homogeneous form: sparse association from degree-d exponent vectors to
// nonzero field elements. Terms iterate in enumeration order.
class HomogeneousForm {
public:
    HomogeneousForm(ContextPtr ctx, std::int32_t degree, Side side);

    static HomogeneousForm monomial(ContextPtr ctx, Side side, const ExponentVector& ev,
                                    const Scalar& coeff);

    const ContextPtr& context() const { return ctx_; }
    std::int32_t degree() const { return degree_; }
    Side side() const { return side_; }
    bool is_zero() const { return terms_.empty(); }
    std::int64_t support_size() const { return static_cast<std::int64_t>(terms_.size()); }

    const std::map<ExponentVector, Scalar, GrlexBefore>& terms() const { return terms_; }

    Scalar coefficient(const ExponentVector& ev) const;  // zero when absent

    // Accumulates coeff onto the term at ev, pruning a vanished sum.
    void add_term(const ExponentVector& ev, const Scalar& coeff);

    void add_scaled(const HomogeneousForm& other, const Scalar& coeff);
    HomogeneousForm negated() const;

    bool equals(const HomogeneousForm& other) const;

private:
    ContextPtr ctx_;
    std::int32_t degree_;
    Side side_;
    std::map<ExponentVector, Scalar, GrlexBefore> terms_;
};

// Contraction by a single monomial of the acting ring: shifts every
// surviving dual term down by s and drops the rest. A shortfall in every
// term (including deg s > deg g) simply yields the zero form.
HomogeneousForm contract(const ExponentVector& s, const HomogeneousForm& g);

// Bilinear extension to polynomial contraction.
HomogeneousForm contract_poly(const HomogeneousForm& s, const HomogeneousForm& g);

// Ordinary product in the acting polynomial ring.
HomogeneousForm multiply(const HomogeneousForm& s, const HomogeneousForm& t);

// Evaluation pairing between a degree-d polynomial and a degree-d dual form;
// monomial against its dual functional gives 1, anything else 0.
Scalar pairing(const HomogeneousForm& s, const HomogeneousForm& g);

// Dense coordinates of a form over the indexer's monomial positions.
SparseRow coordinates(const HomogeneousForm& f, const MonomialIndexer& idx);
HomogeneousForm from_coordinates(const ContextPtr& ctx, Side side, const MonomialIndexer& idx,
                                 const SparseRow& row);

// Text grammar:
//   form := term (('+'|'-') term)* ;  term := [integer] ('*'? var ('^' nat)?)* ;
//   var  := letter+ digit*
// Whitespace is insignificant; characters outside [a-zA-Z0-9^*+- ] and
// whitespace are rejected. The parsed form must be homogeneous.
HomogeneousForm parse_form(const ContextPtr& ctx, Side side, const std::string& text);

// Inverse of parse_form for forms with integer coefficients (the only kind
// the grammar can carry); throws std::logic_error otherwise.
std::string format_form(const HomogeneousForm& f);

}  // namespace apolar

#endif
