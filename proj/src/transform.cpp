#include "ffht/transform.hpp"

#include <omp.h>

namespace ffht {

TransformPlan::TransformPlan(const PlanSpec& spec) : base_(spec.base), m_(spec.m) {
    if (!base_) throw error(errc::field_mismatch, "plan requires a base field");
    if (m_ < 1) throw error(errc::degree_mismatch, "extension degree m must be >= 1");

    std::shared_ptr<const Field> ext;
    if (m_ == 1) {
        if (spec.ext_modulus && *spec.ext_modulus != base_->modulus())
            throw error(errc::degree_mismatch,
                        "extension modulus given for m = 1 but differs from the base modulus");
        ext = base_;
    } else {
        int ext_degree = base_->degree() * m_;
        ext = spec.ext_modulus
                  ? Field::make(base_->characteristic(), ext_degree, *spec.ext_modulus)
                  : Field::make(base_->characteristic(), ext_degree);
    }

    if (spec.alpha) {
        Element alpha = ext->from_coeffs(*spec.alpha);
        trig_.emplace(ext, std::move(alpha));
        if (spec.n && *spec.n != trig_->n())
            throw error(errc::order_mismatch,
                        "kernel has order " + std::to_string(trig_->n()) + ", not " +
                            std::to_string(*spec.n));
    } else if (spec.n) {
        trig_.emplace(ext, *spec.n);
    } else {
        throw error(errc::no_such_order, "plan needs a kernel element or an order");
    }

    inv_n_ = ext->from_int(n() % base_->characteristic()).inv();

    if (m_ > 1) {
        // Exhaustive search for a root of the base modulus in the extension;
        // its powers realize the subfield embedding.
        const Poly& g = base_->modulus();
        Element theta = ext->zero();
        bool found = false;
        for (uint64_t idx = 0; idx < static_cast<uint64_t>(ext->card()); ++idx) {
            Element cand = ext->element_at(idx);
            Element acc = ext->zero();
            for (int d = static_cast<int>(g.size()) - 1; d >= 0; --d)
                acc = acc * cand + ext->from_int(g[d]);
            if (acc.is_zero()) {
                theta = std::move(cand);
                found = true;
                break;
            }
        }
        if (!found)
            throw error(errc::reducible_modulus, "base modulus has no root in the extension");
        theta_pows_.push_back(ext->one());
        for (int i = 1; i < base_->degree(); ++i)
            theta_pows_.push_back(theta_pows_.back() * theta);
    }
}

std::shared_ptr<const TransformPlan> TransformPlan::make(PlanSpec spec) {
    return std::make_shared<const TransformPlan>(spec);
}

std::shared_ptr<const TransformPlan> TransformPlan::make_prime(int64_t p, int64_t n) {
    PlanSpec spec;
    spec.base = Field::make(p, 1);
    spec.n = n;
    return make(std::move(spec));
}

Element TransformPlan::embed_base(const Element& x) const {
    if (!x.field().same_as(*base_))
        throw error(errc::field_mismatch, "value to embed is not from the base field");
    if (m_ == 1) return x;
    auto c = x.coeffs();
    Element acc = ext().zero();
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        acc = acc + ext().from_int(c[i]) * theta_pows_[i];
    }
    return acc;
}

bool TransformPlan::in_embedded_base(const Element& x) const {
    if (m_ == 1) return x.field().same_as(*base_);
    if (!x.field().same_as(ext())) return false;
    return x.pow(base_->card()) == x;
}

bool TransformPlan::in_embedded_base(const GiElement& x) const {
    return x.im.is_zero() && in_embedded_base(x.re);
}

bool TransformPlan::same_as(const TransformPlan& other) const {
    if (this == &other) return true;
    return base_->same_as(*other.base_) && m_ == other.m_ && ext().same_as(other.ext()) &&
           trig_->alpha() == other.trig_->alpha();
}

void TransformPlan::require_conforming(const Signal& v) const {
    if (!v.plan || !same_as(*v.plan))
        throw error(errc::plan_mismatch, "signal belongs to a different plan");
    if (v.values.size() != static_cast<size_t>(n()))
        throw error(errc::length_mismatch, "signal has length " + std::to_string(v.values.size()) +
                                               ", plan expects " + std::to_string(n()));
}

void TransformPlan::require_conforming(const Spectrum& v) const {
    if (!v.plan || !same_as(*v.plan))
        throw error(errc::plan_mismatch, "spectrum belongs to a different plan");
    if (v.values.size() != static_cast<size_t>(n()))
        throw error(errc::length_mismatch, "spectrum has length " +
                                               std::to_string(v.values.size()) +
                                               ", plan expects " + std::to_string(n()));
}

namespace {

std::vector<GiElement> checked_values(const TransformPlan& plan, std::vector<GiElement> values) {
    if (values.size() != static_cast<size_t>(plan.n()))
        throw error(errc::length_mismatch, "vector has length " + std::to_string(values.size()) +
                                               ", plan expects " + std::to_string(plan.n()));
    for (const GiElement& x : values)
        if (!x.re.field().same_as(plan.ext()) || !x.im.field().same_as(plan.ext()))
            throw error(errc::field_mismatch, "vector value not from the plan's extension field");
    return values;
}

// out[k] = scale * sum_i in[i] * cas_k(i). Each output index is
// independent, which is what the parallel path exploits.
std::vector<GiElement> cas_sum(const TransformPlan& plan, const std::vector<GiElement>& in,
                               const Element* scale, Exec exec) {
    const TrigContext& trig = plan.trig();
    const int64_t n = plan.n();
    std::vector<GiElement> out(n);

    auto accumulate = [&](int64_t k) {
        Element re = plan.ext().zero();
        Element im = plan.ext().zero();
        for (int64_t i = 0; i < n; ++i) {
            int64_t t = (i * k) % n;
            const Element& c = trig.cos_at(t);
            const Element& s = trig.sin_at(t);
            const GiElement& v = in[i];
            re = re + v.re * c - v.im * s;
            im = im + v.re * s + v.im * c;
        }
        if (scale) {
            re = re * *scale;
            im = im * *scale;
        }
        out[k] = GiElement{std::move(re), std::move(im)};
    };

    if (exec == Exec::serial) {
        for (int64_t k = 0; k < n; ++k) accumulate(k);
    } else {
#pragma omp parallel for schedule(static)
        for (int64_t k = 0; k < n; ++k) accumulate(k);
    }
    return out;
}

} // namespace

Signal make_signal(std::shared_ptr<const TransformPlan> plan, std::vector<GiElement> values) {
    auto checked = checked_values(*plan, std::move(values));
    return Signal{std::move(plan), std::move(checked)};
}

Spectrum make_spectrum(std::shared_ptr<const TransformPlan> plan, std::vector<GiElement> values) {
    auto checked = checked_values(*plan, std::move(values));
    return Spectrum{std::move(plan), std::move(checked)};
}

Signal embed_signal(std::shared_ptr<const TransformPlan> plan,
                    const std::vector<Element>& base_values) {
    std::vector<GiElement> values;
    values.reserve(base_values.size());
    for (const Element& x : base_values) values.push_back(plan->embed_base_gi(x));
    return make_signal(std::move(plan), std::move(values));
}

Spectrum forward(const TransformPlan& plan, const Signal& v, Exec exec) {
    plan.require_conforming(v);
    return Spectrum{v.plan, cas_sum(plan, v.values, nullptr, exec)};
}

Signal inverse(const TransformPlan& plan, const Spectrum& V, Exec exec) {
    plan.require_conforming(V);
    return Signal{V.plan, cas_sum(plan, V.values, &plan.inv_n(), exec)};
}

Signal convolve_spectral(const TransformPlan& plan, const Signal& g, const Signal& v, Exec exec) {
    plan.require_conforming(g);
    plan.require_conforming(v);
    Spectrum G = forward(plan, g, exec);
    Spectrum V = forward(plan, v, exec);
    const int64_t n = plan.n();
    const Element& half = plan.trig().inv2();
    std::vector<GiElement> w;
    w.reserve(n);
    for (int64_t k = 0; k < n; ++k) {
        int64_t rk = (n - k) % n;
        const GiElement& gk = G.values[k];
        const GiElement& gr = G.values[rk];
        const GiElement& vk = V.values[k];
        const GiElement& vr = V.values[rk];
        GiElement combined = gk * vk + gk * vr + gr * vk - gr * vr;
        w.push_back(GiElement{combined.re * half, combined.im * half});
    }
    return inverse(plan, Spectrum{g.plan, std::move(w)}, exec);
}

Signal convolve_naive(const TransformPlan& plan, const Signal& g, const Signal& v) {
    plan.require_conforming(g);
    plan.require_conforming(v);
    const int64_t n = plan.n();
    GiElement zero{plan.ext().zero(), plan.ext().zero()};
    std::vector<GiElement> w(n, zero);
    for (int64_t out = 0; out < n; ++out) {
        GiElement acc = zero;
        for (int64_t i = 0; i < n; ++i) {
            int64_t idx = out - i;
            if (idx < 0) idx += n;
            acc = acc + g.values[i] * v.values[idx];
        }
        w[out] = std::move(acc);
    }
    return Signal{g.plan, std::move(w)};
}

Spectrum shift_spectrum(const TransformPlan& plan, const Spectrum& G, int64_t d) {
    plan.require_conforming(G);
    const TrigContext& trig = plan.trig();
    const int64_t n = plan.n();
    std::vector<GiElement> out;
    out.reserve(n);
    for (int64_t k = 0; k < n; ++k) {
        GiElement shifted = trig.cos(k, d) * G.values[k] + trig.sin(k, d) * G.values[(n - k) % n];
        out.push_back(std::move(shifted));
    }
    return Spectrum{G.plan, std::move(out)};
}

GiElement dc_term(const TransformPlan& plan, const Spectrum& V) {
    plan.require_conforming(V);
    return V.values[0];
}

GiElement initial_value(const TransformPlan& plan, const Spectrum& V) {
    plan.require_conforming(V);
    GiElement acc{plan.ext().zero(), plan.ext().zero()};
    for (const GiElement& x : V.values) acc = acc + x;
    const Element& scale = plan.inv_n();
    return {acc.re * scale, acc.im * scale};
}

Spectrum reversed(const TransformPlan& plan, const Spectrum& V) {
    plan.require_conforming(V);
    const int64_t n = plan.n();
    std::vector<GiElement> out;
    out.reserve(n);
    for (int64_t k = 0; k < n; ++k) out.push_back(V.values[(n - k) % n]);
    return Spectrum{V.plan, std::move(out)};
}

Signal to_signal(const Spectrum& V) { return Signal{V.plan, V.values}; }

} // namespace ffht
