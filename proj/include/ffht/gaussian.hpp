#pragma once

#include <memory>

#include "ffht/field.hpp"

namespace ffht {

/// An element a + jb of GI(q), with a, b in a common host field GF(q)
/// and j^2 = -1. Arithmetic follows the componentwise sum and the
/// (a1*a2 - b1*b2) + j(a1*b2 + a2*b1) product; the structure is a field
/// exactly when -1 is a quadratic non-residue in the host, which
/// GaussianField enforces at construction.
struct GiElement {
    Element re;
    Element im;

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool operator==(const GiElement& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GiElement& o) const { return !(*this == o); }

    friend GiElement operator+(const GiElement& x, const GiElement& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend GiElement operator-(const GiElement& x, const GiElement& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend GiElement operator*(const GiElement& x, const GiElement& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + y.re * x.im};
    }
    GiElement operator-() const { return {-re, -im}; }

    GiElement conj() const { return {re, -im}; }

    /// conj(x) / (re^2 + im^2); the norm is nonzero for nonzero x because
    /// -1 is a non-residue in the host field. Throws ZeroInverse on zero.
    GiElement inv() const;

    /// Square-and-multiply power for any integer exponent.
    GiElement pow(int64_t e) const;
};

/// The field GI(q) of Gaussian integers over a host GF(q) with
/// q = 3 (mod 4). Construction rejects hosts where -1 is a square,
/// since j would already lie in the host and GI(q) would not be a field.
class GaussianField {
public:
    explicit GaussianField(std::shared_ptr<const Field> host);

    const Field& host() const { return *host_; }
    const std::shared_ptr<const Field>& host_ptr() const { return host_; }

    GiElement zero() const { return {host_->zero(), host_->zero()}; }
    GiElement one() const { return {host_->one(), host_->zero()}; }
    GiElement j() const { return {host_->zero(), host_->one()}; }
    GiElement embed(const Element& x) const { return {x, host_->zero()}; }
    GiElement make(Element re, Element im) const { return {std::move(re), std::move(im)}; }

private:
    std::shared_ptr<const Field> host_;
};

/// x^e for e a positive power of the host characteristic p, computed
/// structurally as re^e + (im^e) j^e with j^e = -j when e = 3 (mod 4).
/// Agrees with GiElement::pow; throws BadExponent when e is not a power
/// of p.
GiElement frobenius(const GiElement& x, int64_t e);

} // namespace ffht
