#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dicrit {

enum class ErrorKind {
    field_mismatch,
    dimension_mismatch,
    zero_polynomial,
    zero_element,
    not_homogeneous,
    invalid_rees_element,
    invalid_element,
    non_rational_point,
    not_m_primary,
    not_normal,
    not_in_ideal,
    field_too_small,
    search_exhausted,
    not_equigenerated,
    certification_failed,
    depth_exceeded,
    not_regular_parameter,
    precondition_failed,
    bad_parameters,
    invalid_argument,
    parse_error,
};

std::string_view error_kind_name(ErrorKind kind);

/// Domain error carrying a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Input rejected while decoding a request; names the offending field.
class ParseError : public Error {
public:
    ParseError(std::string field, std::string reason)
        : Error(ErrorKind::parse_error, field + ": " + reason),
          field_(std::move(field)), reason_(std::move(reason)) {}

    const std::string& field() const noexcept { return field_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string field_;
    std::string reason_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what)
{
    throw Error(kind, what);
}

}  // namespace dicrit
