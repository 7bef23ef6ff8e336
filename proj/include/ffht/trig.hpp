#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "ffht/gaussian.hpp"

namespace ffht {

/// N x N value grids with k indexing rows and i indexing columns.
struct TrigTables {
    std::vector<std::vector<GiElement>> cos;
    std::vector<std::vector<GiElement>> sin;
};

/// Evaluation context for the k-trigonometric functions over a fixed
/// kernel element alpha of multiplicative order N:
///
///   cos_k(i) = (alpha^{ik} + alpha^{-ik}) / 2
///   sin_k(i) = (alpha^{ik} - alpha^{-ik}) / 2j
///   cas_k(i) = cos_k(i) + sin_k(i)
///
/// Values live in GI(q) over the host field, so the host must satisfy
/// q = 3 (mod 4). Both functions depend only on (i*k) mod N; the context
/// precomputes the N cosine and sine coefficients at construction and is
/// immutable afterwards, so it can be shared freely across threads.
class TrigContext {
public:
    /// Kernel given explicitly; N becomes the exact order of alpha.
    TrigContext(std::shared_ptr<const Field> host, Element alpha);

    /// Kernel chosen as find_element_of_order(host, n).
    TrigContext(std::shared_ptr<const Field> host, int64_t n);

    const Field& host() const { return *host_; }
    const std::shared_ptr<const Field>& host_ptr() const { return host_; }
    const GaussianField& gi() const { return gi_; }
    const Element& alpha() const { return alpha_; }
    int64_t n() const { return n_; }
    const Element& inv2() const { return inv2_; }
    /// alpha^t for t in [0, N).
    const Element& power(int64_t t) const { return powers_[reduce_index(t)]; }

    /// Indices are reduced mod N, so negative arguments read backwards
    /// through the cycle.
    GiElement cos(int64_t k, int64_t i) const;
    GiElement sin(int64_t k, int64_t i) const;
    GiElement cas(int64_t k, int64_t i) const;

    /// Real cosine coefficient at reduced index t, i.e. cos_1(t).
    const Element& cos_at(int64_t t) const { return cos_tab_[t]; }
    /// Imaginary sine coefficient at reduced index t; sin_1(t) = j * sin_at(t).
    const Element& sin_at(int64_t t) const { return sin_tab_[t]; }

    /// Reduces (i*k) mod N with negative-index wrapping.
    int64_t kernel_index(int64_t k, int64_t i) const;
    int64_t reduce_index(int64_t v) const;

    TrigTables table() const;

private:
    void build(Element alpha);

    std::shared_ptr<const Field> host_;
    GaussianField gi_;
    Element alpha_;
    int64_t n_ = 0;
    Element inv2_;
    std::vector<Element> powers_;
    std::vector<Element> cos_tab_;
    std::vector<Element> sin_tab_;
};

} // namespace ffht
