#pragma once

#include <stdexcept>
#include <string>

namespace flownet {

// Error categories used across the library. Tests and the CLI dispatch on
// these instead of matching message text.
enum class errc {
  malformed_input,
  domain_too_small,
  unknown_vertex,
  invalid_permutation,
  incompatible_networks,
  overflow,
  invalid_pair,
  invalid_cut,
  oracle_too_large,
  enumeration_limit,
  not_quasi_acyclic,
  infeasible_forcing,
  invalid_k,
  invalid_restriction,
  invalid_spec,
  invalid_suite,
  not_applicable,
  parse_error,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace flownet
