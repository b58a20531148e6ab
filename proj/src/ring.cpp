#include "apolar/ring.hpp"

#include <algorithm>
#include <cctype>

#include "apolar/util.hpp"

namespace apolar {

bool ExponentVector::dominates(const ExponentVector& b) const {
    if (e.size() != b.e.size()) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < b.e[i]) return false;
    return true;
}

ExponentVector ExponentVector::minus(const ExponentVector& b) const {
    ExponentVector out{e};
    for (std::size_t i = 0; i < e.size(); ++i) out.e[i] -= b.e[i];
    return out;
}

ExponentVector ExponentVector::plus(const ExponentVector& b) const {
    ExponentVector out{e};
    for (std::size_t i = 0; i < e.size(); ++i) out.e[i] += b.e[i];
    return out;
}

RingContext::RingContext(std::int32_t n, FieldSpec field, std::vector<std::string> names)
    : n_(n), field_(field), names_(std::move(names)) {
    if (n_ < 1) throw std::invalid_argument("ring context needs at least one variable");
    if (static_cast<std::int32_t>(names_.size()) != n_)
        throw std::invalid_argument("name table size does not match variable count");
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw std::invalid_argument("duplicate variable name '" + names_[i] + "'");
}

std::vector<std::string> RingContext::standard_names(std::int32_t n) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    std::int32_t m = n / 3, r = n % 3;
    for (char block : {'a', 'b', 'c'})
        for (std::int32_t i = 1; i <= m; ++i)
            names.push_back(std::string(1, block) + std::to_string(i));
    if (r >= 1) names.push_back("d");
    if (r == 2) names.push_back("e");
    return names;
}

ContextPtr RingContext::make(std::int32_t n, FieldSpec field) {
    return std::make_shared<const RingContext>(n, field, standard_names(n));
}

std::int32_t RingContext::variable(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<std::int32_t>(i);
    throw InputError("unknown variable '" + name + "'");
}

bool RingContext::same_as(const RingContext& other) const {
    return n_ == other.n_ && field_spec() == other.field_spec() && names_ == other.names_;
}

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
    if (a == b) return;
    if (!a || !b || !a->same_as(*b))
        throw std::invalid_argument("ring context mismatch");
}

MonomialIndexer::MonomialIndexer(ContextPtr ctx, std::int32_t degree)
    : ctx_(std::move(ctx)), degree_(degree) {
    if (degree_ < 0) throw std::invalid_argument("negative degree");
    const std::int32_t n = ctx_->nvars();
    list_.reserve(static_cast<std::size_t>(binomial(n + degree_ - 1, degree_)));
    ExponentVector cur;
    cur.e.assign(static_cast<std::size_t>(n), 0);
    cur.e[0] = degree_;
    if (n == 1 || degree_ == 0) {
        list_.push_back(cur);
    } else {
        while (true) {
            list_.push_back(cur);
            // Successor in the enumeration: move one unit off the rightmost
            // positive entry left of the tail and restart the suffix.
            std::int32_t j = -1;
            for (std::int32_t i = n - 2; i >= 0; --i)
                if (cur.e[static_cast<std::size_t>(i)] > 0) { j = i; break; }
            if (j < 0) break;
            std::int32_t tail = 0;
            for (std::int32_t i = j + 1; i < n; ++i) {
                tail += cur.e[static_cast<std::size_t>(i)];
                cur.e[static_cast<std::size_t>(i)] = 0;
            }
            cur.e[static_cast<std::size_t>(j)] -= 1;
            cur.e[static_cast<std::size_t>(j + 1)] = tail + 1;
        }
    }
    if (static_cast<std::int64_t>(list_.size()) != binomial(n + degree_ - 1, degree_))
        throw std::logic_error("monomial enumeration produced the wrong count");
}

std::int64_t MonomialIndexer::index_of(const ExponentVector& ev) const {
    const std::int32_t n = ctx_->nvars();
    if (static_cast<std::int32_t>(ev.e.size()) != n)
        throw std::invalid_argument("exponent vector length mismatch");
    if (ev.degree() != degree_)
        throw std::invalid_argument("exponent vector degree mismatch");
    // Count monomials that enumerate strictly earlier: those with a larger
    // entry at the first differing variable.
    std::int64_t pos = 0;
    std::int32_t rem = degree_;
    for (std::int32_t i = 0; i < n - 1; ++i) {
        std::int32_t ai = ev.e[static_cast<std::size_t>(i)];
        std::int32_t vars_left = n - 1 - i;
        for (std::int32_t t = ai + 1; t <= rem; ++t)
            pos += binomial(vars_left - 1 + rem - t, vars_left - 1);
        rem -= ai;
    }
    return pos;
}

HomogeneousForm::HomogeneousForm(ContextPtr ctx, std::int32_t degree, Side side)
    : ctx_(std::move(ctx)), degree_(degree), side_(side) {
    if (degree_ < 0) throw std::invalid_argument("negative form degree");
}

HomogeneousForm HomogeneousForm::monomial(ContextPtr ctx, Side side, const ExponentVector& ev,
                                          const Scalar& coeff) {
    HomogeneousForm f(std::move(ctx), ev.degree(), side);
    f.add_term(ev, coeff);
    return f;
}

Scalar HomogeneousForm::coefficient(const ExponentVector& ev) const {
    auto it = terms_.find(ev);
    return it == terms_.end() ? ctx_->field().zero() : it->second;
}

void HomogeneousForm::add_term(const ExponentVector& ev, const Scalar& coeff) {
    if (static_cast<std::int32_t>(ev.e.size()) != ctx_->nvars())
        throw std::invalid_argument("exponent vector length mismatch");
    if (ev.degree() != degree_)
        throw std::invalid_argument("term degree does not match form degree");
    const Field& field = ctx_->field();
    if (field.is_zero(coeff)) return;
    auto [it, inserted] = terms_.emplace(ev, coeff);
    if (!inserted) {
        it->second = field.add(it->second, coeff);
        if (field.is_zero(it->second)) terms_.erase(it);
    }
}

void HomogeneousForm::add_scaled(const HomogeneousForm& other, const Scalar& coeff) {
    require_same_context(ctx_, other.ctx_);
    if (other.degree_ != degree_ || other.side_ != side_)
        throw std::invalid_argument("form degree or side mismatch in add_scaled");
    const Field& field = ctx_->field();
    if (field.is_zero(coeff)) return;
    for (const auto& [ev, c] : other.terms_) add_term(ev, field.mul(coeff, c));
}

HomogeneousForm HomogeneousForm::negated() const {
    HomogeneousForm out(ctx_, degree_, side_);
    const Field& field = ctx_->field();
    for (const auto& [ev, c] : terms_) out.terms_.emplace(ev, field.neg(c));
    return out;
}

bool HomogeneousForm::equals(const HomogeneousForm& other) const {
    if (!ctx_->same_as(*other.ctx_) || degree_ != other.degree_ || side_ != other.side_)
        return false;
    if (terms_.size() != other.terms_.size()) return false;
    const Field& field = ctx_->field();
    auto it = terms_.begin();
    auto jt = other.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (!(it->first == jt->first)) return false;
        if (!field.equal(it->second, jt->second)) return false;
    }
    return true;
}

HomogeneousForm contract(const ExponentVector& s, const HomogeneousForm& g) {
    if (g.side() != Side::Dual)
        throw std::invalid_argument("contract: second argument must be a dual form");
    if (static_cast<std::int32_t>(s.e.size()) != g.context()->nvars())
        throw std::invalid_argument("contract: exponent vector length mismatch");
    std::int32_t ds = s.degree();
    std::int32_t out_degree = std::max(0, g.degree() - ds);
    HomogeneousForm out(g.context(), out_degree, Side::Dual);
    if (ds > g.degree()) return out;
    for (const auto& [a, c] : g.terms())
        if (a.dominates(s)) out.add_term(a.minus(s), c);
    return out;
}

HomogeneousForm contract_poly(const HomogeneousForm& s, const HomogeneousForm& g) {
    require_same_context(s.context(), g.context());
    if (s.side() != Side::Poly || g.side() != Side::Dual)
        throw std::invalid_argument("contract_poly: expected (poly, dual) arguments");
    std::int32_t out_degree = std::max(0, g.degree() - s.degree());
    HomogeneousForm out(g.context(), out_degree, Side::Dual);
    if (s.degree() > g.degree()) return out;
    const Field& field = g.context()->field();
    for (const auto& [b, cb] : s.terms())
        for (const auto& [a, ca] : g.terms())
            if (a.dominates(b)) out.add_term(a.minus(b), field.mul(cb, ca));
    return out;
}

HomogeneousForm multiply(const HomogeneousForm& s, const HomogeneousForm& t) {
    require_same_context(s.context(), t.context());
    if (s.side() != Side::Poly || t.side() != Side::Poly)
        throw std::invalid_argument("multiply: both factors must be polynomial-side forms");
    HomogeneousForm out(s.context(), s.degree() + t.degree(), Side::Poly);
    const Field& field = s.context()->field();
    for (const auto& [a, ca] : s.terms())
        for (const auto& [b, cb] : t.terms()) out.add_term(a.plus(b), field.mul(ca, cb));
    return out;
}

Scalar pairing(const HomogeneousForm& s, const HomogeneousForm& g) {
    require_same_context(s.context(), g.context());
    if (s.side() != Side::Poly || g.side() != Side::Dual)
        throw std::invalid_argument("pairing: expected (poly, dual) arguments");
    if (s.degree() != g.degree())
        throw std::invalid_argument("pairing: degree mismatch");
    const Field& field = s.context()->field();
    Scalar acc = field.zero();
    const auto& small = s.support_size() <= g.support_size() ? s : g;
    const auto& large = s.support_size() <= g.support_size() ? g : s;
    for (const auto& [ev, c] : small.terms()) {
        auto other = large.coefficient(ev);
        if (!field.is_zero(other)) acc = field.add(acc, field.mul(c, other));
    }
    return acc;
}

SparseRow coordinates(const HomogeneousForm& f, const MonomialIndexer& idx) {
    require_same_context(f.context(), idx.context());
    if (f.degree() != idx.degree())
        throw std::invalid_argument("coordinates: degree mismatch with indexer");
    SparseRow row;
    row.entries.reserve(f.terms().size());
    for (const auto& [ev, c] : f.terms())
        row.entries.emplace_back(static_cast<std::int32_t>(idx.index_of(ev)), c);
    // Terms iterate in enumeration order, which is exactly column order.
    return row;
}

HomogeneousForm from_coordinates(const ContextPtr& ctx, Side side, const MonomialIndexer& idx,
                                 const SparseRow& row) {
    require_same_context(ctx, idx.context());
    HomogeneousForm f(ctx, idx.degree(), side);
    for (const auto& [col, val] : row.entries) f.add_term(idx.at(col), val);
    return f;
}

namespace {

struct Parser {
    const ContextPtr& ctx;
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return text[pos];
    }

    [[noreturn]] void fail(const std::string& what) {
        throw InputError("polynomial parse error at offset " + std::to_string(pos) + ": " + what);
    }

    std::int64_t parse_integer() {
        skip_ws();
        std::int64_t value = 0;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (value > 1000000000000000LL) fail("integer literal too large");
            value = value * 10 + (text[pos] - '0');
            ++pos;
        }
        if (pos == start) fail("expected an integer");
        return value;
    }

    std::string parse_var_name() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a variable name");
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return text.substr(start, pos - start);
    }

    // term := [integer] ('*'? var ('^' nat)?)*
    // Returns (coefficient magnitude, exponent vector).
    std::pair<std::int64_t, ExponentVector> parse_term() {
        ExponentVector ev;
        ev.e.assign(static_cast<std::size_t>(ctx->nvars()), 0);
        std::int64_t coeff = 1;
        bool saw_factor = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_integer();
            saw_factor = true;
        }
        while (!at_end()) {
            char c = peek();
            if (c == '*') {
                ++pos;
                skip_ws();
                c = at_end() ? '\0' : peek();
                if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected a variable after '*'");
            } else if (!std::isalpha(static_cast<unsigned char>(c))) {
                break;
            }
            std::string name = parse_var_name();
            std::int32_t var = ctx->variable(name);
            std::int64_t exp = 1;
            if (!at_end() && peek() == '^') {
                ++pos;
                exp = parse_integer();
            }
            if (exp > 64) fail("exponent too large");
            ev.e[static_cast<std::size_t>(var)] += static_cast<std::int32_t>(exp);
            saw_factor = true;
        }
        if (!saw_factor) fail("empty term");
        return {coeff, std::move(ev)};
    }
};

}  // namespace

HomogeneousForm parse_form(const ContextPtr& ctx, Side side, const std::string& text) {
    for (char c : text) {
        bool ok = std::isalnum(static_cast<unsigned char>(c)) ||
                  std::isspace(static_cast<unsigned char>(c)) || c == '^' || c == '*' ||
                  c == '+' || c == '-';
        if (!ok)
            throw InputError(std::string("illegal character '") + c + "' in polynomial text");
    }
    Parser p{ctx, text};
    if (p.at_end()) throw InputError("empty polynomial text");

    struct Pending {
        std::int64_t coeff;
        ExponentVector ev;
    };
    std::vector<Pending> pending;
    std::int64_t sign = 1;
    if (p.peek() == '+' || p.peek() == '-') {
        sign = p.peek() == '-' ? -1 : 1;
        ++p.pos;
    }
    while (true) {
        auto [coeff, ev] = p.parse_term();
        pending.push_back(Pending{sign * coeff, std::move(ev)});
        if (p.at_end()) break;
        char c = p.peek();
        if (c != '+' && c != '-') p.fail("expected '+' or '-' between terms");
        sign = c == '-' ? -1 : 1;
        ++p.pos;
    }

    std::int32_t degree = pending.front().ev.degree();
    for (const auto& t : pending)
        if (t.ev.degree() != degree)
            throw InputError("polynomial is not homogeneous (mixed term degrees " +
                             std::to_string(degree) + " and " + std::to_string(t.ev.degree()) + ")");
    HomogeneousForm f(ctx, degree, side);
    const Field& field = ctx->field();
    for (const auto& t : pending) f.add_term(t.ev, field.from_int(t.coeff));
    return f;
}

std::string format_form(const HomogeneousForm& f) {
    const Field& field = f.context()->field();
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [ev, c] : f.terms()) {
        if (!field.is_integer(c))
            throw std::logic_error("form has a non-integer coefficient; not expressible in the text grammar");
        std::string cs = field.str(c);
        bool negative = !cs.empty() && cs[0] == '-';
        std::string magnitude = negative ? cs.substr(1) : cs;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < ev.e.size(); ++i) {
            if (ev.e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += f.context()->name(static_cast<std::int32_t>(i));
            if (ev.e[i] > 1) mono += "^" + std::to_string(ev.e[i]);
        }
        if (mono.empty()) {
            out += magnitude;  // constant term
        } else if (magnitude == "1") {
            out += mono;
        } else {
            out += magnitude + "*" + mono;
        }
    }
    return out;
}

}  // namespace apolar
