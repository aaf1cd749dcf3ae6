#pragma once

#include <stdexcept>
#include <string>

namespace apergo {

// Failure categories surfaced by every operation in the library.  The CLI
// maps invalid_input/domain_error/... to exit code 2 and numerical to 3.
enum class errc {
  invalid_input,
  domain_error,
  not_in_range,
  degenerate_input,
  grid_mismatch,
  inconsistent_decomposition,
  range_error,
  numerical,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw Error(code, msg);
}

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

inline const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::invalid_input: return "invalid_input";
    case errc::domain_error: return "domain_error";
    case errc::not_in_range: return "not_in_range";
    case errc::degenerate_input: return "degenerate_input";
    case errc::grid_mismatch: return "grid_mismatch";
    case errc::inconsistent_decomposition: return "inconsistent_decomposition";
    case errc::range_error: return "range_error";
    case errc::numerical: return "numerical";
  }
  return "unknown";
}

}  // namespace apergo
