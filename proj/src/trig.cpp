#include "ffht/trig.hpp"

namespace ffht {

TrigContext::TrigContext(std::shared_ptr<const Field> host, Element alpha)
    : host_(std::move(host)), gi_(host_) {
    if (!alpha.field().same_as(*host_))
        throw error(errc::field_mismatch, "kernel element not from the host field");
    build(std::move(alpha));
}

TrigContext::TrigContext(std::shared_ptr<const Field> host, int64_t n)
    : host_(std::move(host)), gi_(host_) {
    build(find_element_of_order(*host_, n));
}

void TrigContext::build(Element alpha) {
    alpha_ = std::move(alpha);
    n_ = element_order(alpha_);
    inv2_ = host_->from_int(2).inv();

    powers_.reserve(n_);
    powers_.push_back(host_->one());
    for (int64_t t = 1; t < n_; ++t) powers_.push_back(powers_.back() * alpha_);

    cos_tab_.reserve(n_);
    sin_tab_.reserve(n_);
    for (int64_t t = 0; t < n_; ++t) {
        const Element& fwd = powers_[t];
        const Element& bwd = powers_[(n_ - t) % n_];
        cos_tab_.push_back(inv2_ * (fwd + bwd));
        sin_tab_.push_back(inv2_ * (bwd - fwd));  // 1/(2j) = -j/2 flips the sign
    }
}

int64_t TrigContext::reduce_index(int64_t v) const {
    v %= n_;
    return v < 0 ? v + n_ : v;
}

int64_t TrigContext::kernel_index(int64_t k, int64_t i) const {
    return static_cast<int64_t>(
        (static_cast<__int128>(reduce_index(k)) * reduce_index(i)) % n_);
}

GiElement TrigContext::cos(int64_t k, int64_t i) const {
    return {cos_tab_[kernel_index(k, i)], host_->zero()};
}

GiElement TrigContext::sin(int64_t k, int64_t i) const {
    return {host_->zero(), sin_tab_[kernel_index(k, i)]};
}

GiElement TrigContext::cas(int64_t k, int64_t i) const {
    int64_t t = kernel_index(k, i);
    return {cos_tab_[t], sin_tab_[t]};
}

TrigTables TrigContext::table() const {
    TrigTables tabs;
    tabs.cos.resize(n_);
    tabs.sin.resize(n_);
    for (int64_t k = 0; k < n_; ++k) {
        tabs.cos[k].reserve(n_);
        tabs.sin[k].reserve(n_);
        for (int64_t i = 0; i < n_; ++i) {
            tabs.cos[k].push_back(cos(k, i));
            tabs.sin[k].push_back(sin(k, i));
        }
    }
    return tabs;
}

} // namespace ffht
