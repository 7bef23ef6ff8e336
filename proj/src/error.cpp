#include "ffht/error.hpp"

namespace ffht {

const char* errc_name(errc code) {
    switch (code) {
    case errc::not_prime: return "NotPrime";
    case errc::even_characteristic: return "EvenCharacteristic";
    case errc::reducible_modulus: return "ReducibleModulus";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::zero_inverse: return "ZeroInverse";
    case errc::zero_element: return "ZeroElement";
    case errc::no_such_order: return "NoSuchOrder";
    case errc::order_mismatch: return "OrderMismatch";
    case errc::bad_exponent: return "BadExponent";
    case errc::minus_one_residue: return "MinusOneResidue";
    case errc::not_coprime: return "NotCoprime";
    case errc::inconsistent_assignment: return "InconsistentAssignment";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::plan_mismatch: return "PlanMismatch";
    case errc::parse_error: return "ParseError";
    case errc::out_of_range_coefficient: return "OutOfRangeCoefficient";
    }
    return "UnknownError";
}

} // namespace ffht
