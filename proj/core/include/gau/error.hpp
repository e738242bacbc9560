#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gau {

/// Failure categories surfaced by the library.  Tests and the CLI dispatch on
/// the code; the message carries the human-readable detail.
enum class errc {
  non_prime,
  degree_zero,
  too_large,
  zero_inverse,
  zero_polynomial,
  ambient_mismatch,
  parse,
  odd_dihedral,
  not_normal,
  not_an_ideal,
  not_a_unit,
  chopper_stall,
  not_nilpotent,
  not_semisimple,
  nonsquare_dimension,
  ambiguous_degrees,
  char_three,
  certification,
  internal,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what, std::size_t pos = npos)
      : std::runtime_error(what), code_(code), pos_(pos) {}

  errc code() const { return code_; }

  /// Byte offset for parse errors; npos when not applicable.
  std::size_t pos() const { return pos_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  errc code_;
  std::size_t pos_;
};

[[noreturn]] inline void fail(errc code, const std::string& what,
                              std::size_t pos = error::npos) {
  throw error(code, what, pos);
}

}  // namespace gau
