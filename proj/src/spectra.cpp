#include "ffht/spectra.hpp"

#include <algorithm>
#include <numeric>

namespace ffht {

namespace {

int64_t step(int64_t k, int64_t n, int64_t neg_q) {
    return int64_t((__int128)neg_q * k % n);
}

} // namespace

std::vector<int64_t> CyclotomicPartition::representatives() const {
    std::vector<int64_t> reps;
    reps.reserve(classes.size());
    for (const auto& cls : classes) reps.push_back(cls.front());
    return reps;
}

size_t CyclotomicPartition::class_of(int64_t k) const {
    for (size_t c = 0; c < classes.size(); ++c)
        for (int64_t member : classes[c])
            if (member == k) return c;
    throw error(errc::inconsistent_assignment,
                "index " + std::to_string(k) + " is outside [0, " + std::to_string(n) + ")");
}

CyclotomicPartition cyclotomic_classes(int64_t n, int64_t q) {
    if (n < 1) throw error(errc::not_coprime, "transform length must be positive");
    if (q < 2) throw error(errc::not_coprime, "field cardinality must be at least 2");
    if (std::gcd(n, q) != 1)
        throw error(errc::not_coprime,
                    "gcd(" + std::to_string(n) + ", " + std::to_string(q) + ") != 1");

    CyclotomicPartition part;
    part.n = n;
    part.q = q;
    const int64_t neg_q = (n - q % n) % n;

    std::vector<char> seen(size_t(n), 0);
    for (int64_t k = 0; k < n; ++k) {
        if (seen[size_t(k)]) continue;
        std::vector<int64_t> orbit;
        int64_t cur = k;
        do {
            orbit.push_back(cur);
            seen[size_t(cur)] = 1;
            cur = step(cur, n, neg_q);
        } while (cur != k);
        part.classes.push_back(std::move(orbit));
    }
    return part;
}

std::vector<int64_t> free_components(const CyclotomicPartition& partition) {
    return partition.representatives();
}

bool is_valid_spectrum(const TransformPlan& plan, const Spectrum& V) {
    plan.require_conforming(V);
    const int64_t n = plan.n();
    const int64_t q = plan.base().card();
    for (int64_t k = 0; k < n; ++k) {
        const int64_t kq = int64_t((__int128)k * q % n);
        const int64_t paired = (n - kq) % n;
        if (frobenius(V.values[size_t(k)], q) != V.values[size_t(paired)]) return false;
    }
    return true;
}

Spectrum expand_spectrum(const std::shared_ptr<const TransformPlan>& plan,
                         const std::map<int64_t, GiElement>& assignments) {
    const int64_t n = plan->n();
    const int64_t q = plan->base().card();
    const CyclotomicPartition part = cyclotomic_classes(n, q);

    std::vector<char> is_rep(size_t(n), 0);
    for (const auto& cls : part.classes) is_rep[size_t(cls.front())] = 1;
    for (const auto& [k, value] : assignments) {
        if (k < 0 || k >= n || !is_rep[size_t(k)])
            throw error(errc::inconsistent_assignment,
                        "index " + std::to_string(k) + " is not a class representative");
        if (!plan->ext().same_as(value.re.field()))
            throw error(errc::field_mismatch,
                        "assigned value at " + std::to_string(k) +
                            " lives in a different field than the plan");
    }

    std::vector<GiElement> out(static_cast<size_t>(n));
    for (const auto& cls : part.classes) {
        const int64_t rep = cls.front();
        auto it = assignments.find(rep);
        if (it == assignments.end())
            throw error(errc::inconsistent_assignment,
                        "no value assigned to representative " + std::to_string(rep));
        GiElement val = it->second;
        for (int64_t member : cls) {
            out[size_t(member)] = val;
            val = frobenius(val, q);
        }
        // The orbit has closed; frobenius^{|orbit|} must fix the seed or no
        // valid spectrum takes this value here.
        if (val != it->second)
            throw error(errc::inconsistent_assignment,
                        "value at representative " + std::to_string(rep) +
                            " is not fixed by the class closure");
    }
    return make_spectrum(plan, std::move(out));
}

} // namespace ffht
