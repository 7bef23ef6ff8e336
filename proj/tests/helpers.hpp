#pragma once

#include <numeric>
#include <random>

#include "ffht/transform.hpp"

namespace ffht::testing {

// The recurring transform plans. Rebuilt on each call; construction is
// cheap at these sizes and keeps test cases independent.
std::shared_ptr<const TransformPlan> plan_gf7();      // GF(7), alpha = 3, N = 6
std::shared_ptr<const TransformPlan> plan_gf11();     // GF(11), N = 10
std::shared_ptr<const TransformPlan> plan_gf19();     // GF(19), N = 18
std::shared_ptr<const TransformPlan> plan_gf243();    // GF(3^5)/x^5+x^4+x^2+1, alpha = x^22, N = 11
std::shared_ptr<const TransformPlan> plan_ext3_5();   // base GF(3), m = 5, N = 11
std::shared_ptr<const TransformPlan> plan_ext27_3();  // base GF(27), m = 3, N = 13
std::vector<std::shared_ptr<const TransformPlan>> all_plans();

Element random_element(const Field& f, std::mt19937_64& rng);
Element random_nonzero(const Field& f, std::mt19937_64& rng);
GiElement random_gi(const Field& f, std::mt19937_64& rng);
GiElement random_nonzero_gi(const Field& f, std::mt19937_64& rng);
std::vector<GiElement> random_gi_vector(const TransformPlan& plan, std::mt19937_64& rng);
std::vector<Element> random_base_vector(const TransformPlan& plan, std::mt19937_64& rng);

/// A uniform value consistent with an orbit of the given length: the
/// trace projection of a random GI element into the fixed field of
/// frobenius^len (frobenius meaning x -> x^q, of order 2m on GI(q^m)).
GiElement random_orbit_value(const TransformPlan& plan, int64_t orbit_len, std::mt19937_64& rng);

template <typename Fn>
bool throws_errc(Fn&& fn, errc expect) {
    try {
        fn();
        return false;
    } catch (const error& e) {
        return e.code() == expect;
    } catch (...) {
        return false;
    }
}

} // namespace ffht::testing
