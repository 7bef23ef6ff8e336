#include <doctest.h>

#include "helpers.hpp"

using namespace ffht;
using namespace ffht::testing;

namespace {

std::vector<GiElement> all_gi(const GaussianField& gi) {
    const Field& f = gi.host();
    std::vector<GiElement> out;
    out.reserve(size_t(f.card() * f.card()));
    for (uint64_t a = 0; a < uint64_t(f.card()); ++a)
        for (uint64_t b = 0; b < uint64_t(f.card()); ++b)
            out.push_back(gi.make(f.element_at(a), f.element_at(b)));
    return out;
}

} // namespace

TEST_SUITE("gaussian") {

TEST_CASE("construction requires q = 3 (mod 4)") {
    CHECK_NOTHROW(GaussianField(Field::make(7, 1)));
    CHECK_NOTHROW(GaussianField(Field::make(11, 1)));
    CHECK_NOTHROW(GaussianField(Field::make(3, 3)));
    CHECK_NOTHROW(GaussianField(Field::make(3, 5)));
    CHECK(throws_errc([] { GaussianField g(Field::make(5, 1)); }, errc::minus_one_residue));
    CHECK(throws_errc([] { GaussianField g(Field::make(13, 1)); }, errc::minus_one_residue));
    CHECK(throws_errc([] { GaussianField g(Field::make(3, 2)); }, errc::minus_one_residue));
    // the residue criterion matches Euler's: -1 is a square iff q = 1 (mod 4)
    CHECK(!is_quadratic_residue(Field::make(7, 1)->from_int(-1)));
    CHECK(is_quadratic_residue(Field::make(5, 1)->from_int(-1)));
}

TEST_CASE("GI(7) is a field, exhaustively") {
    GaussianField gi(Field::make(7, 1));
    auto xs = all_gi(gi);
    REQUIRE(xs.size() == 49);

    CHECK(gi.j() * gi.j() == -gi.one());
    for (const GiElement& x : xs) {
        CHECK(x + gi.zero() == x);
        CHECK(x * gi.one() == x);
        CHECK(x + (-x) == gi.zero());
        CHECK(x.conj().conj() == x);
        if (!x.is_zero()) {
            CHECK(x * x.inv() == gi.one());
            CHECK(x.pow(48) == gi.one());  // unit group order q^2 - 1
        }
    }
    for (const GiElement& x : xs)
        for (const GiElement& y : xs) {
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            CHECK((x * y).conj() == x.conj() * y.conj());
        }
    // associativity and distributivity on a coarser sweep
    for (size_t a = 0; a < xs.size(); a += 3)
        for (size_t b = 0; b < xs.size(); b += 3)
            for (size_t c = 0; c < xs.size(); c += 3) {
                CHECK((xs[a] + xs[b]) + xs[c] == xs[a] + (xs[b] + xs[c]));
                CHECK((xs[a] * xs[b]) * xs[c] == xs[a] * (xs[b] * xs[c]));
                CHECK(xs[a] * (xs[b] + xs[c]) == xs[a] * xs[b] + xs[a] * xs[c]);
            }
    CHECK(throws_errc([&] { gi.zero().inv(); }, errc::zero_inverse));
}

TEST_CASE("powers") {
    GaussianField gi(Field::make(7, 1));
    const Field& f = gi.host();
    GiElement x = gi.make(f.from_int(2), f.from_int(2));
    CHECK(x.pow(7) == gi.make(f.from_int(2), f.from_int(5)));  // (2+2j)^7 = 2+5j
    CHECK(x.pow(0) == gi.one());
    CHECK(x.pow(1) == x);
    CHECK(x.pow(-1) == x.inv());
    CHECK(x.pow(-3) == x.inv().pow(3));
    CHECK(gi.zero().pow(0) == gi.one());
    CHECK(gi.zero().pow(4) == gi.zero());
    CHECK(throws_errc([&] { gi.zero().pow(-2); }, errc::zero_inverse));

    std::mt19937_64 rng(8001);
    GaussianField gi243(Field::make(3, 5, parse_poly("x^5+x^4+x^2+1")));
    for (int trial = 0; trial < 100; ++trial) {
        GiElement y = random_nonzero_gi(gi243.host(), rng);
        CHECK(y.pow(243 * 243 - 1) == gi243.one());
        CHECK(y.pow(5) * y.pow(9) == y.pow(14));
        CHECK(y * y.inv() == gi243.one());
    }
}

TEST_CASE("frobenius is the structural q-power map") {
    GaussianField gi(Field::make(7, 1));
    for (const GiElement& x : all_gi(gi)) {
        CHECK(frobenius(x, 7) == x.pow(7));
        CHECK(frobenius(x, 49) == x.pow(49));
        CHECK(frobenius(x, 49) == x);       // q^2-power fixes GI(q)
        CHECK(frobenius(x, 7) == x.conj()); // for m = 1 the q-power is conjugation
    }

    std::mt19937_64 rng(8002);
    GaussianField gi243(Field::make(3, 5, parse_poly("x^5+x^4+x^2+1")));
    for (int trial = 0; trial < 100; ++trial) {
        GiElement x = random_gi(gi243.host(), rng);
        GiElement y = random_gi(gi243.host(), rng);
        for (int64_t e : {int64_t(3), int64_t(9), int64_t(243)}) {
            CHECK(frobenius(x, e) == x.pow(e));
            CHECK(frobenius(x + y, e) == frobenius(x, e) + frobenius(y, e));
            CHECK(frobenius(x * y, e) == frobenius(x, e) * frobenius(y, e));
        }
    }
}

TEST_CASE("frobenius exponent validation") {
    GaussianField gi(Field::make(7, 1));
    GiElement x = gi.j();
    CHECK(throws_errc([&] { frobenius(x, 6); }, errc::bad_exponent));
    CHECK(throws_errc([&] { frobenius(x, 14); }, errc::bad_exponent));
    CHECK(throws_errc([&] { frobenius(x, 1); }, errc::bad_exponent));
    CHECK(throws_errc([&] { frobenius(x, 0); }, errc::bad_exponent));
    CHECK(throws_errc([&] { frobenius(x, -7); }, errc::bad_exponent));
    CHECK(frobenius(x, 7) == -x);   // j^7 = -j
    CHECK(frobenius(x, 49) == x);   // j^49 = j
}

} // TEST_SUITE
