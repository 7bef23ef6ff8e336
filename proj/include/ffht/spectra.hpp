#pragma once

#include <map>

#include "ffht/transform.hpp"

namespace ffht {

/// Orbits of the index map k -> (-q*k) mod N partitioning {0, ..., N-1}.
/// A spectrum of a base-field-valued signal is constant along the
/// conjugacy relation V_{map(k)} = V_k^q, so one value per orbit pins the
/// whole vector. 0 is always a singleton orbit.
struct CyclotomicPartition {
    int64_t n = 0;
    int64_t q = 0;
    /// Each orbit starts at its smallest member and follows the map;
    /// orbits are ordered by representative.
    std::vector<std::vector<int64_t>> classes;

    std::vector<int64_t> representatives() const;
    /// The orbit index containing k.
    size_t class_of(int64_t k) const;
};

/// Orbits of k -> (-q*k) mod n. Throws NotCoprime unless gcd(n, q) = 1.
CyclotomicPartition cyclotomic_classes(int64_t n, int64_t q);

/// The class representatives: the minimal index set that determines a
/// valid spectrum.
std::vector<int64_t> free_components(const CyclotomicPartition& partition);

/// Whether V is the spectrum of some base-field-valued signal, i.e.
/// V_k^q = V_{(N - k*q) mod N} for every k, with the power taken by the
/// structural Frobenius.
bool is_valid_spectrum(const TransformPlan& plan, const Spectrum& V);

/// Builds the unique valid spectrum taking the given value at each class
/// representative, propagating V_{map(k)} = V_k^q along every orbit.
/// Throws InconsistentAssignment when a representative is missing, an
/// index is not a representative, or an orbit fails to close up
/// (frobenius^{|orbit|} does not fix the assigned value).
Spectrum expand_spectrum(const std::shared_ptr<const TransformPlan>& plan,
                         const std::map<int64_t, GiElement>& assignments);

} // namespace ffht
