#include "ffht/gaussian.hpp"

namespace ffht {

GiElement GiElement::inv() const {
    if (is_zero()) throw error(errc::zero_inverse, "zero has no multiplicative inverse");
    Element norm = re * re + im * im;
    Element scale = norm.inv();
    return {re * scale, -(im * scale)};
}

GiElement GiElement::pow(int64_t e) const {
    const Field& f = re.field();
    if (e == 0) return {f.one(), f.zero()};
    if (is_zero()) {
        if (e < 0) throw error(errc::zero_inverse, "zero has no negative powers");
        return {f.zero(), f.zero()};
    }
    GiElement base = *this;
    uint64_t mag;
    if (e < 0) {
        base = inv();
        mag = uint64_t(-(e + 1)) + 1;
    } else {
        mag = uint64_t(e);
    }
    // nonzero elements have order dividing q^2 - 1; reduce when it fits
    if (f.card() <= 3037000499) {
        mag %= uint64_t(f.card()) * uint64_t(f.card()) - 1;
    }
    GiElement result{f.one(), f.zero()};
    while (mag > 0) {
        if (mag & 1) result = result * base;
        base = base * base;
        mag >>= 1;
    }
    return result;
}

GaussianField::GaussianField(std::shared_ptr<const Field> host) : host_(std::move(host)) {
    if (host_->card() % 4 != 3)
        throw error(errc::minus_one_residue,
                    "-1 is a quadratic residue in GF(" + std::to_string(host_->characteristic()) +
                        "^" + std::to_string(host_->degree()) +
                        "); Gaussian integers over it do not form a field");
}

GiElement frobenius(const GiElement& x, int64_t e) {
    int64_t p = x.re.field().characteristic();
    int64_t t = e;
    if (t < p) throw error(errc::bad_exponent, std::to_string(e) + " is not a power of " +
                                                   std::to_string(p));
    while (t > 1 && t % p == 0) t /= p;
    if (t != 1)
        throw error(errc::bad_exponent,
                    std::to_string(e) + " is not a power of " + std::to_string(p));
    Element a = x.re.pow(e);
    Element b = x.im.pow(e);
    // j^e for odd e: -j when e = 3 (mod 4), j when e = 1 (mod 4)
    if (e % 4 == 3) b = -b;
    return {std::move(a), std::move(b)};
}

} // namespace ffht
