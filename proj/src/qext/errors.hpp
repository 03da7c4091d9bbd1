#ifndef QEXT_ERRORS_HPP
#define QEXT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qext {

enum class errc {
  division_by_zero,
  pole_at_sample,
  bad_sample,
  shape_mismatch,
  singular_matrix,
  degree_too_high,
  odd_symplectic,
  n_too_small,
  certification_failed,
  degenerate_eigenvalues,
  identity_violated,
  precondition_violated,
  no_convergence,
  config_error,
  io_error,
  internal_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace qext

#endif
