#include "ffht/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ffht {

namespace {

bool is_prime(int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<int64_t> prime_factors(int64_t n) {
    std::vector<int64_t> out;
    for (int64_t d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

int64_t mod_pos(int64_t v, int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}

int degree_of(std::span<const int64_t> c) {
    for (int d = static_cast<int>(c.size()) - 1; d >= 0; --d)
        if (c[d] != 0) return d;
    return -1;
}

// Remainder of a by the monic polynomial b over GF(p). Destroys a.
void rem_in_place(std::vector<int64_t>& a, std::span<const int64_t> b, int64_t p) {
    int db = degree_of(b);
    for (int d = degree_of(a); d >= db; d = degree_of(a)) {
        int64_t lead = a[d];
        for (int i = 0; i <= db; ++i)
            a[d - db + i] = mod_pos(a[d - db + i] - lead * b[i], p);
    }
}

// Irreducibility over GF(p) by trial division: a monic polynomial of
// degree r is reducible iff some monic polynomial of degree in [1, r/2]
// divides it.
bool is_irreducible(const Poly& f, int64_t p) {
    int r = degree_of(f);
    if (r <= 0) return false;
    if (r == 1) return true;
    std::vector<int64_t> divisor;
    for (int d = 1; d <= r / 2; ++d) {
        divisor.assign(d + 1, 0);
        divisor[d] = 1;
        // base-p counter over the non-leading coefficients, constant fastest
        for (int64_t n = 0;; ++n) {
            int64_t m = n;
            for (int i = 0; i < d; ++i) {
                divisor[i] = m % p;
                m /= p;
            }
            if (m != 0) break;  // counter exhausted for this degree
            std::vector<int64_t> rem(f.begin(), f.end());
            rem_in_place(rem, divisor, p);
            if (degree_of(rem) < 0) return false;
        }
    }
    return true;
}

} // namespace

Poly parse_poly(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw error(errc::parse_error, "empty polynomial");

    Poly coeffs;
    auto set_term = [&](int64_t coeff, int64_t exp) {
        if (exp < 0 || exp > 1'000'000)
            throw error(errc::parse_error, "exponent out of range");
        if (coeffs.size() <= static_cast<size_t>(exp)) coeffs.resize(exp + 1, 0);
        coeffs[exp] += coeff;
    };

    size_t pos = 0;
    while (pos < s.size()) {
        size_t end = s.find('+', pos);
        if (end == std::string::npos) end = s.size();
        std::string_view term(s.data() + pos, end - pos);
        if (term.empty())
            throw error(errc::parse_error, "empty term at position " + std::to_string(pos));

        int64_t coeff = 1;
        size_t i = 0;
        if (std::isdigit(static_cast<unsigned char>(term[0]))) {
            coeff = 0;
            while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) {
                coeff = coeff * 10 + (term[i] - '0');
                if (coeff > (int64_t(1) << 62))
                    throw error(errc::parse_error, "coefficient too large");
                ++i;
            }
        }
        int64_t exp = 0;
        if (i < term.size()) {
            if (term[i] != 'x')
                throw error(errc::parse_error,
                            "unexpected character at position " + std::to_string(pos + i));
            ++i;
            exp = 1;
            if (i < term.size()) {
                if (term[i] != '^' || i + 1 >= term.size())
                    throw error(errc::parse_error,
                                "malformed exponent at position " + std::to_string(pos + i));
                ++i;
                exp = 0;
                while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) {
                    exp = exp * 10 + (term[i] - '0');
                    ++i;
                }
                if (i != term.size())
                    throw error(errc::parse_error,
                                "unexpected character at position " + std::to_string(pos + i));
            }
        }
        set_term(coeff, exp);
        pos = end + 1;
        if (end < s.size() && pos == s.size())
            throw error(errc::parse_error, "trailing '+'");
    }
    return coeffs;
}

std::string render_poly(const Poly& coeffs) {
    std::ostringstream out;
    bool first = true;
    for (int d = static_cast<int>(coeffs.size()) - 1; d >= 0; --d) {
        int64_t c = coeffs[d];
        if (c == 0) continue;
        if (!first) out << '+';
        first = false;
        if (d == 0) {
            out << c;
        } else {
            if (c != 1) out << c;
            out << 'x';
            if (d > 1) out << '^' << d;
        }
    }
    if (first) out << '0';
    return out.str();
}

Field::Field(int64_t p, int r) : p_(p), r_(r) { init({}, true); }

Field::Field(int64_t p, int r, Poly modulus) : p_(p), r_(r) { init(std::move(modulus), false); }

std::shared_ptr<const Field> Field::make(int64_t p, int r) {
    return std::make_shared<const Field>(p, r);
}

std::shared_ptr<const Field> Field::make(int64_t p, int r, Poly modulus) {
    return std::make_shared<const Field>(p, r, std::move(modulus));
}

void Field::init(Poly supplied_modulus, bool generate) {
    if (p_ == 2) throw error(errc::even_characteristic, "characteristic 2 is not supported");
    if (!is_prime(p_))
        throw error(errc::not_prime, std::to_string(p_) + " is not prime");
    if (p_ >= (int64_t(1) << 31))
        throw error(errc::not_prime, "characteristic too large (must be < 2^31)");
    if (r_ < 1)
        throw error(errc::degree_mismatch, "extension degree must be >= 1");

    card_ = 1;
    for (int i = 0; i < r_; ++i) {
        if (card_ > (int64_t(1) << 62) / p_)
            throw error(errc::degree_mismatch, "field size overflows (p^r must be < 2^62)");
        card_ *= p_;
    }

    if (generate) {
        modulus_.assign(r_ + 1, 0);
        modulus_[r_] = 1;
        for (int64_t n = 0;; ++n) {
            int64_t m = n;
            for (int i = 0; i < r_; ++i) {
                modulus_[i] = m % p_;
                m /= p_;
            }
            if (m != 0)
                throw error(errc::reducible_modulus, "no irreducible modulus found");
            if (is_irreducible(modulus_, p_)) break;
        }
    } else {
        modulus_ = std::move(supplied_modulus);
        int deg = degree_of(modulus_);
        if (deg != r_)
            throw error(errc::degree_mismatch, "modulus has degree " + std::to_string(deg) +
                                                   ", expected " + std::to_string(r_));
        modulus_.resize(r_ + 1);
        if (modulus_[r_] != 1)
            throw error(errc::degree_mismatch, "modulus must be monic");
        for (int64_t c : modulus_)
            if (c < 0 || c >= p_)
                throw error(errc::out_of_range_coefficient,
                            "modulus coefficient " + std::to_string(c) + " not in [0, " +
                                std::to_string(p_) + ")");
        if (!is_irreducible(modulus_, p_))
            throw error(errc::reducible_modulus,
                        render_poly(modulus_) + " factors over GF(" + std::to_string(p_) + ")");
    }

    factors_ = prime_factors(card_ - 1);
}

Element Field::zero() const { return Element(this, std::vector<int64_t>(r_, 0)); }

Element Field::one() const {
    std::vector<int64_t> c(r_, 0);
    c[0] = 1;
    return Element(this, std::move(c));
}

Element Field::from_int(int64_t v) const {
    std::vector<int64_t> c(r_, 0);
    c[0] = mod_pos(v, p_);
    return Element(this, std::move(c));
}

Element Field::from_coeffs(std::span<const int64_t> coeffs) const {
    if (coeffs.size() > static_cast<size_t>(r_))
        throw error(errc::degree_mismatch, "element degree " +
                                               std::to_string(coeffs.size() - 1) +
                                               " exceeds field degree " + std::to_string(r_ - 1));
    std::vector<int64_t> c(r_, 0);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] < 0 || coeffs[i] >= p_)
            throw error(errc::out_of_range_coefficient,
                        "coefficient " + std::to_string(coeffs[i]) + " not in [0, " +
                            std::to_string(p_) + ")");
        c[i] = coeffs[i];
    }
    return Element(this, std::move(c));
}

Element Field::element_at(uint64_t index) const {
    std::vector<int64_t> c(r_, 0);
    for (int i = 0; i < r_; ++i) {
        c[i] = static_cast<int64_t>(index % p_);
        index /= p_;
    }
    if (index != 0)
        throw error(errc::out_of_range_coefficient, "element index exceeds field size");
    return Element(this, std::move(c));
}

uint64_t Field::index_of(const Element& x) const {
    uint64_t idx = 0;
    auto c = x.coeffs();
    for (int i = r_ - 1; i >= 0; --i) idx = idx * p_ + static_cast<uint64_t>(c[i]);
    return idx;
}

bool Field::same_as(const Field& other) const {
    return this == &other ||
           (p_ == other.p_ && r_ == other.r_ && modulus_ == other.modulus_);
}

std::vector<int64_t> Field::add_raw(std::span<const int64_t> a, std::span<const int64_t> b) const {
    std::vector<int64_t> c(r_);
    for (int i = 0; i < r_; ++i) c[i] = (a[i] + b[i]) % p_;
    return c;
}

std::vector<int64_t> Field::sub_raw(std::span<const int64_t> a, std::span<const int64_t> b) const {
    std::vector<int64_t> c(r_);
    for (int i = 0; i < r_; ++i) c[i] = mod_pos(a[i] - b[i], p_);
    return c;
}

std::vector<int64_t> Field::neg_raw(std::span<const int64_t> a) const {
    std::vector<int64_t> c(r_);
    for (int i = 0; i < r_; ++i) c[i] = a[i] == 0 ? 0 : p_ - a[i];
    return c;
}

std::vector<int64_t> Field::mul_raw(std::span<const int64_t> a, std::span<const int64_t> b) const {
    if (r_ == 1) return {a[0] * b[0] % p_};
    std::vector<int64_t> prod(2 * r_ - 1, 0);
    for (int i = 0; i < r_; ++i) {
        if (a[i] == 0) continue;
        for (int k = 0; k < r_; ++k) prod[i + k] = (prod[i + k] + a[i] * b[k]) % p_;
    }
    // monic reduction: x^r = -(modulus minus leading term)
    for (int d = 2 * r_ - 2; d >= r_; --d) {
        int64_t t = prod[d];
        if (t == 0) continue;
        for (int i = 0; i < r_; ++i)
            prod[d - r_ + i] = mod_pos(prod[d - r_ + i] - t * modulus_[i], p_);
    }
    prod.resize(r_);
    return prod;
}

bool Element::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](int64_t c) { return c == 0; });
}

bool Element::is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](int64_t c) { return c == 0; });
}

namespace detail {
void require_same_field(const Element& x, const Element& y, const char* op) {
    if (!x.field().same_as(y.field()))
        throw error(errc::field_mismatch,
                    std::string(op) + " requires operands from the same field");
}
} // namespace detail

Element operator+(const Element& x, const Element& y) {
    detail::require_same_field(x, y, "add");
    return Element(x.field_, x.field().add_raw(x.coeffs_, y.coeffs_));
}

Element operator-(const Element& x, const Element& y) {
    detail::require_same_field(x, y, "sub");
    return Element(x.field_, x.field().sub_raw(x.coeffs_, y.coeffs_));
}

Element operator*(const Element& x, const Element& y) {
    detail::require_same_field(x, y, "mul");
    return Element(x.field_, x.field().mul_raw(x.coeffs_, y.coeffs_));
}

Element Element::operator-() const {
    return Element(field_, field().neg_raw(coeffs_));
}

Element Element::inv() const {
    if (is_zero()) throw error(errc::zero_inverse, "zero has no multiplicative inverse");
    return pow(field().card() - 2);
}

Element Element::pow(int64_t e) const {
    const Field& f = field();
    if (e == 0) return f.one();
    if (is_zero()) {
        if (e < 0) throw error(errc::zero_inverse, "zero has no negative powers");
        return f.zero();
    }
    int64_t m = f.card() - 1;
    e %= m;
    if (e < 0) e += m;
    Element result = f.one();
    Element base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool Element::operator==(const Element& other) const {
    if (field_ == other.field_) return coeffs_ == other.coeffs_;
    if (field_ == nullptr || other.field_ == nullptr) return false;
    return field().same_as(other.field()) && coeffs_ == other.coeffs_;
}

int64_t element_order(const Element& x) {
    if (x.is_zero()) throw error(errc::zero_element, "zero has no multiplicative order");
    const Field& f = x.field();
    int64_t order = f.card() - 1;
    for (int64_t q : f.unit_order_factors()) {
        while (order % q == 0 && x.pow(order / q).is_one()) order /= q;
    }
    return order;
}

bool is_quadratic_residue(const Element& x) {
    if (x.is_zero()) throw error(errc::zero_element, "residue status of zero is undefined");
    return x.pow((x.field().card() - 1) / 2).is_one();
}

Element find_element_of_order(const Field& field, int64_t n) {
    if (n < 1 || (field.card() - 1) % n != 0)
        throw error(errc::no_such_order, "no element of order " + std::to_string(n) + " in GF(" +
                                             std::to_string(field.characteristic()) + "^" +
                                             std::to_string(field.degree()) + ")");
    for (uint64_t idx = 1; idx < static_cast<uint64_t>(field.card()); ++idx) {
        Element x = field.element_at(idx);
        if (element_order(x) == n) return x;
    }
    throw error(errc::no_such_order, "scan exhausted without finding order " + std::to_string(n));
}

std::string to_string(const Element& x) {
    auto c = x.coeffs();
    if (x.field().degree() == 1) return std::to_string(c[0]);
    return render_poly(Poly(c.begin(), c.end()));
}

Element parse_element(std::string_view text, const Field& field) {
    Poly coeffs = parse_poly(text);
    if (static_cast<int>(coeffs.size()) > field.degree()) {
        int deg = degree_of(coeffs);
        if (deg >= field.degree())
            throw error(errc::parse_error, "element degree " + std::to_string(deg) +
                                               " not below field degree " +
                                               std::to_string(field.degree()));
        coeffs.resize(field.degree());
    }
    return field.from_coeffs(coeffs);
}

} // namespace ffht
