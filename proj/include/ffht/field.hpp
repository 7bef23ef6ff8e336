#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ffht/error.hpp"

namespace ffht {

/// Polynomial over GF(p), coefficient of x^0 first.
using Poly = std::vector<int64_t>;

/// Parses the "x^5+x^4+x^2+1" text format. Terms are "+"-separated,
/// coefficients decimal, whitespace ignored. Returns a coefficient vector
/// with the constant term first; does not range-check against any p.
Poly parse_poly(std::string_view text);

/// Renders a coefficient vector in the same format ("0" for the zero
/// polynomial, bare integers for constants, "x" for degree one).
std::string render_poly(const Poly& coeffs);

class Field;

/// An element of GF(p^r), stored fully reduced in the polynomial basis.
/// Elements reference their Field and must not outlive it; contexts that
/// hand out elements (TrigContext, TransformPlan) keep the Field alive.
class Element {
public:
    Element() = default;

    const Field& field() const { return *field_; }
    const Field* field_ptr() const { return field_; }
    std::span<const int64_t> coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_one() const;

    friend Element operator+(const Element& x, const Element& y);
    friend Element operator-(const Element& x, const Element& y);
    friend Element operator*(const Element& x, const Element& y);
    Element operator-() const;

    /// Multiplicative inverse. Throws ZeroInverse on zero.
    Element inv() const;
    /// x^e for any integer e; negative exponents go through inv().
    /// By convention pow(x, 0) = 1, including for x = 0.
    Element pow(int64_t e) const;

    /// Value equality: same (p, r, modulus) and same coefficients.
    bool operator==(const Element& other) const;
    bool operator!=(const Element& other) const { return !(*this == other); }

private:
    friend class Field;
    Element(const Field* f, std::vector<int64_t> c) : field_(f), coeffs_(std::move(c)) {}

    const Field* field_ = nullptr;
    std::vector<int64_t> coeffs_;
};

/// A finite field GF(p^r) with odd prime characteristic p, represented
/// as GF(p)[x] modulo a monic irreducible polynomial of degree r.
///
/// Immutable after construction; safe to share across threads. The prime
/// factorization of p^r - 1 is computed up front by trial division so
/// order queries never mutate state.
class Field {
public:
    /// Constructs GF(p^r) with a generated modulus: the first monic
    /// irreducible polynomial of degree r when the non-leading coefficients
    /// are enumerated as a base-p counter with the constant term as the
    /// fastest digit. Generation is deterministic across runs.
    Field(int64_t p, int r);

    /// Constructs GF(p^r) with the supplied modulus, which must be monic of
    /// degree exactly r and irreducible over GF(p) (checked by trial
    /// division against every monic polynomial of degree <= r/2).
    Field(int64_t p, int r, Poly modulus);

    static std::shared_ptr<const Field> make(int64_t p, int r);
    static std::shared_ptr<const Field> make(int64_t p, int r, Poly modulus);

    int64_t characteristic() const { return p_; }
    int degree() const { return r_; }
    /// Number of field elements, p^r.
    int64_t card() const { return card_; }
    const Poly& modulus() const { return modulus_; }
    /// Distinct prime factors of p^r - 1, ascending.
    const std::vector<int64_t>& unit_order_factors() const { return factors_; }

    Element zero() const;
    Element one() const;
    /// The constant element (v mod p).
    Element from_int(int64_t v) const;
    /// Strict construction: at most r coefficients, each in [0, p).
    Element from_coeffs(std::span<const int64_t> coeffs) const;

    /// Elements enumerated by integer index in [0, p^r): base-p digits of
    /// the index are the coefficients, constant term least significant.
    /// This is the scan order used by find_element_of_order.
    Element element_at(uint64_t index) const;
    uint64_t index_of(const Element& x) const;

    /// Value identity: two Field objects with equal (p, r, modulus) are
    /// interchangeable.
    bool same_as(const Field& other) const;

    // Reduced arithmetic on raw coefficient vectors (used by Element).
    std::vector<int64_t> add_raw(std::span<const int64_t> a, std::span<const int64_t> b) const;
    std::vector<int64_t> sub_raw(std::span<const int64_t> a, std::span<const int64_t> b) const;
    std::vector<int64_t> neg_raw(std::span<const int64_t> a) const;
    std::vector<int64_t> mul_raw(std::span<const int64_t> a, std::span<const int64_t> b) const;

private:
    void init(Poly supplied_modulus, bool generate);

    int64_t p_ = 0;
    int r_ = 0;
    int64_t card_ = 0;
    Poly modulus_;                  // length r+1, monic
    std::vector<int64_t> factors_;  // prime factors of card-1
};

/// Smallest n >= 1 with x^n = 1. Throws ZeroElement on zero.
int64_t element_order(const Element& x);

/// Euler criterion: x^((p^r-1)/2) = 1. Throws ZeroElement on zero.
bool is_quadratic_residue(const Element& x);

/// First element of multiplicative order exactly n in the element_at scan
/// order. Throws NoSuchOrder when n does not divide p^r - 1.
Element find_element_of_order(const Field& field, int64_t n);

/// Renders as a decimal integer when r = 1, else in the polynomial format.
std::string to_string(const Element& x);

/// Parses an element in the format produced by to_string. Strict: degree
/// must be < r and every coefficient in [0, p).
Element parse_element(std::string_view text, const Field& field);

namespace detail {
/// Throws FieldMismatch unless both elements live in the same field.
void require_same_field(const Element& x, const Element& y, const char* op);
} // namespace detail

} // namespace ffht
