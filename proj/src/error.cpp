#include "dicrit/error.hpp"

namespace dicrit {

std::string_view error_kind_name(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::field_mismatch: return "FieldMismatch";
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    case ErrorKind::zero_polynomial: return "ZeroPolynomial";
    case ErrorKind::zero_element: return "ZeroElement";
    case ErrorKind::not_homogeneous: return "NotHomogeneous";
    case ErrorKind::invalid_rees_element: return "InvalidReesElement";
    case ErrorKind::invalid_element: return "InvalidElement";
    case ErrorKind::non_rational_point: return "NonRationalPoint";
    case ErrorKind::not_m_primary: return "NotMPrimary";
    case ErrorKind::not_normal: return "NotNormal";
    case ErrorKind::not_in_ideal: return "NotInIdeal";
    case ErrorKind::field_too_small: return "FieldTooSmall";
    case ErrorKind::search_exhausted: return "SearchExhausted";
    case ErrorKind::not_equigenerated: return "NotEquigenerated";
    case ErrorKind::certification_failed: return "CertificationFailed";
    case ErrorKind::depth_exceeded: return "DepthExceeded";
    case ErrorKind::not_regular_parameter: return "NotRegularParameter";
    case ErrorKind::precondition_failed: return "PreconditionFailed";
    case ErrorKind::bad_parameters: return "BadParameters";
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::parse_error: return "ParseError";
    }
    return "Unknown";
}

}  // namespace dicrit
