#pragma once

#include <map>

#include "ffht/spectra.hpp"
#include "ffht/trig.hpp"

namespace ffht {

/// Canonical Gaussian element form: "a", "bj", "a+bj", with "j" for a unit
/// imaginary part and "0" for zero. Over extensions (r > 1) a non-constant
/// imaginary coefficient is parenthesized, e.g. "x^4+2x+(x+2)j".
std::string render_gi(const GiElement& x);

/// Parses the render_gi grammar. Whitespace is ignored; coefficients are
/// range-checked against the host field. Throws ParseError or
/// OutOfRangeCoefficient.
GiElement parse_gi(std::string_view text, const Field& host);

/// Comma-separated element list, e.g. "3,2+2j,2j,6,5j,2+5j".
std::string render_values(std::span<const GiElement> values);
std::vector<GiElement> parse_values(std::string_view text, const Field& host);

/// "k=value" pairs, comma-separated, e.g. "0=3,1=2+2j". Duplicate indices
/// are a ParseError.
std::map<int64_t, GiElement> parse_assignments(std::string_view text, const Field& host);

/// "C0=(0) C1=(1,8,9,6,4,10,3,2,5,7)" with classes in representative order.
std::string render_partition(const CyclotomicPartition& partition);

/// Both kernel grids as aligned text, k indexing rows and i columns:
///
///   cos_k(i):
///   k\i   0   1 ...
///     0   1   1 ...
///
/// Cells are right-aligned to the widest token of each grid.
std::string render_trig_grids(const TrigContext& ctx);

} // namespace ffht
