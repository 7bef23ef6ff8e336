#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ffht/trig.hpp"

namespace ffht {

class TransformPlan;

/// Length-N vector of GI(q^m) values in the time domain. Values reference
/// the plan they were built for; operations reject foreign vectors.
struct Signal {
    std::shared_ptr<const TransformPlan> plan;
    std::vector<GiElement> values;
};

/// Length-N vector of GI(q^m) values in the Hartley domain.
struct Spectrum {
    std::shared_ptr<const TransformPlan> plan;
    std::vector<GiElement> values;
};

struct PlanSpec {
    std::shared_ptr<const Field> base;  // GF(q), q = p^r
    int m = 1;                          // extension degree over the base
    std::optional<Poly> ext_modulus;    // modulus for GF(p^{r*m}); generated if absent
    std::optional<Poly> alpha;          // kernel element coefficients in the extension
    std::optional<int64_t> n;           // kernel order; required when alpha is absent
};

/// Everything needed to run length-N transforms: the base field GF(q), the
/// extension GF(q^m) hosting the kernel, the subfield embedding, the trig
/// context around alpha, and (N mod p)^-1. Immutable and shareable; all
/// tables are built at construction.
class TransformPlan {
public:
    explicit TransformPlan(const PlanSpec& spec);

    static std::shared_ptr<const TransformPlan> make(PlanSpec spec);
    /// Prime-field one-liner: base GF(p), m = 1, kernel of order n.
    static std::shared_ptr<const TransformPlan> make_prime(int64_t p, int64_t n);

    const Field& base() const { return *base_; }
    const std::shared_ptr<const Field>& base_ptr() const { return base_; }
    const Field& ext() const { return *trig_->host_ptr(); }
    const std::shared_ptr<const Field>& ext_ptr() const { return trig_->host_ptr(); }
    int m() const { return m_; }
    const TrigContext& trig() const { return *trig_; }
    int64_t n() const { return trig_->n(); }
    const Element& inv_n() const { return inv_n_; }

    /// Ring injection GF(q) -> GF(q^m): identity when m = 1, otherwise
    /// evaluation at a root of the base modulus inside the extension.
    Element embed_base(const Element& x) const;
    GiElement embed_base_gi(const Element& x) const { return {embed_base(x), ext().zero()}; }
    /// Whether an extension value lies in the embedded copy of GF(q)
    /// (the fixed set of x -> x^q).
    bool in_embedded_base(const Element& x) const;
    bool in_embedded_base(const GiElement& x) const;

    bool same_as(const TransformPlan& other) const;

    void require_conforming(const Signal& v) const;
    void require_conforming(const Spectrum& v) const;

private:
    std::shared_ptr<const Field> base_;
    int m_ = 1;
    std::optional<TrigContext> trig_;
    Element inv_n_;
    std::vector<Element> theta_pows_;  // powers of the embedding root; empty when m = 1
};

/// Validated vector constructors.
Signal make_signal(std::shared_ptr<const TransformPlan> plan, std::vector<GiElement> values);
Spectrum make_spectrum(std::shared_ptr<const TransformPlan> plan, std::vector<GiElement> values);
/// Embeds base-field values as a signal with zero imaginary parts.
Signal embed_signal(std::shared_ptr<const TransformPlan> plan,
                    const std::vector<Element>& base_values);

/// Kernel execution strategy. Serial is the reference implementation;
/// parallel runs the same summation under OpenMP and must agree bit for
/// bit (exact arithmetic, independent outputs).
enum class Exec { serial, parallel };

/// V_k = sum_i v_i cas_k(i), direct O(N^2) summation.
Spectrum forward(const TransformPlan& plan, const Signal& v, Exec exec = Exec::parallel);

/// v_i = (N mod p)^-1 sum_k V_k cas_k(i); same kernel as forward.
Signal inverse(const TransformPlan& plan, const Spectrum& V, Exec exec = Exec::parallel);

/// Cyclic convolution through the Hartley domain:
/// W_k = (G_k V_k + G_k V_{N-k} + G_{N-k} V_k - G_{N-k} V_{N-k}) / 2.
Signal convolve_spectral(const TransformPlan& plan, const Signal& g, const Signal& v,
                         Exec exec = Exec::parallel);

/// Reference cyclic convolution, w_n = sum_i g_i v_{(n-i) mod N}.
Signal convolve_naive(const TransformPlan& plan, const Signal& g, const Signal& v);

/// Spectrum of the signal cyclically delayed by d:
/// out_k = cos_k(d) G_k + sin_k(d) G_{(N-k) mod N}.
Spectrum shift_spectrum(const TransformPlan& plan, const Spectrum& G, int64_t d);

/// V_0, which equals the sum of the time-domain values.
GiElement dc_term(const TransformPlan& plan, const Spectrum& V);

/// (N mod p)^-1 sum_k V_k, which equals v_0.
GiElement initial_value(const TransformPlan& plan, const Spectrum& V);

/// The index-reversed spectrum {V_{(N-k) mod N}}.
Spectrum reversed(const TransformPlan& plan, const Spectrum& V);

/// Reinterprets a spectrum as a time-domain vector (for iterated
/// transforms).
Signal to_signal(const Spectrum& V);

} // namespace ffht
