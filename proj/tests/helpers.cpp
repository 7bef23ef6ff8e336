#include "helpers.hpp"

namespace ffht::testing {

std::shared_ptr<const TransformPlan> plan_gf7() {
    PlanSpec spec;
    spec.base = Field::make(7, 1);
    spec.alpha = Poly{3};
    return TransformPlan::make(std::move(spec));
}

std::shared_ptr<const TransformPlan> plan_gf11() {
    return TransformPlan::make_prime(11, 10);
}

std::shared_ptr<const TransformPlan> plan_gf19() {
    return TransformPlan::make_prime(19, 18);
}

std::shared_ptr<const TransformPlan> plan_gf243() {
    PlanSpec spec;
    spec.base = Field::make(3, 5, parse_poly("x^5+x^4+x^2+1"));
    spec.alpha = Poly{0, 0, 2, 2, 1};  // x^22 for the residue x, order 11
    return TransformPlan::make(std::move(spec));
}

std::shared_ptr<const TransformPlan> plan_ext3_5() {
    PlanSpec spec;
    spec.base = Field::make(3, 1);
    spec.m = 5;
    spec.ext_modulus = parse_poly("x^5+x^4+x^2+1");
    spec.alpha = Poly{0, 0, 2, 2, 1};
    return TransformPlan::make(std::move(spec));
}

std::shared_ptr<const TransformPlan> plan_ext27_3() {
    PlanSpec spec;
    spec.base = Field::make(3, 3);
    spec.m = 3;
    spec.n = 13;  // 13 divides 27^3 - 1 = 19682 = 2 * 13 * 757
    return TransformPlan::make(std::move(spec));
}

std::vector<std::shared_ptr<const TransformPlan>> all_plans() {
    return {plan_gf7(), plan_gf11(), plan_gf19(), plan_gf243(), plan_ext3_5(), plan_ext27_3()};
}

Element random_element(const Field& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<uint64_t> dist(0, uint64_t(f.card()) - 1);
    return f.element_at(dist(rng));
}

Element random_nonzero(const Field& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<uint64_t> dist(1, uint64_t(f.card()) - 1);
    return f.element_at(dist(rng));
}

GiElement random_gi(const Field& f, std::mt19937_64& rng) {
    return {random_element(f, rng), random_element(f, rng)};
}

GiElement random_nonzero_gi(const Field& f, std::mt19937_64& rng) {
    GiElement x{random_element(f, rng), random_element(f, rng)};
    while (x.is_zero()) x = GiElement{random_element(f, rng), random_element(f, rng)};
    return x;
}

std::vector<GiElement> random_gi_vector(const TransformPlan& plan, std::mt19937_64& rng) {
    std::vector<GiElement> v;
    v.reserve(plan.n());
    for (int64_t i = 0; i < plan.n(); ++i) v.push_back(random_gi(plan.ext(), rng));
    return v;
}

std::vector<Element> random_base_vector(const TransformPlan& plan, std::mt19937_64& rng) {
    std::vector<Element> v;
    v.reserve(plan.n());
    for (int64_t i = 0; i < plan.n(); ++i) v.push_back(random_element(plan.base(), rng));
    return v;
}

GiElement random_orbit_value(const TransformPlan& plan, int64_t orbit_len, std::mt19937_64& rng) {
    const int64_t q = plan.base().card();
    const int64_t two_m = 2 * plan.m();
    const int64_t d = std::gcd(orbit_len, two_m);
    GiElement cur = random_gi(plan.ext(), rng);
    GiElement acc = cur;
    for (int64_t t = 1; t < two_m / d; ++t) {
        for (int64_t s = 0; s < d; ++s) cur = frobenius(cur, q);
        acc = acc + cur;
    }
    return acc;
}

} // namespace ffht::testing
