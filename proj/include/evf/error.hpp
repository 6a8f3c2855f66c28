#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evf {

/// Classification of every failure the library can raise. Codes are stable;
/// messages are free-form and meant for humans.
enum class ErrorCode {
    empty_universe,
    too_large,
    duplicate_label,
    out_of_universe,
    not_a_partition,
    duplicate_member,
    no_atoms,
    not_a_member,
    not_in_family,
    negative_mass,
    sum_not_one,
    duplicate_assignment,
    zero_observations,
    empty_sample,
    bad_normalization,
    value_out_of_range,
    unknown_filter,
    bad_config,
    parse_error,
    io_error,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

/// Parse failure with a 1-based source line attached.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string& message)
        : Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

}  // namespace evf
