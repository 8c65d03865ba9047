#ifndef QLOMMEL_ERRORS_HPP
#define QLOMMEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qlommel {

// Error codes are stable strings; CLI and tests match on code().
class QlError : public std::runtime_error {
public:
  QlError(std::string code, const std::string& detail)
      : std::runtime_error(code + (detail.empty() ? "" : ": " + detail)),
        code_(std::move(code)) {}
  explicit QlError(std::string code) : QlError(std::move(code), "") {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

inline QlError err_zero_divisor() { return QlError("zero-divisor"); }
inline QlError err_non_invertible_series() { return QlError("non-invertible-series"); }
inline QlError err_singular_substitution(const std::string& d = "") { return QlError("singular-substitution", d); }
inline QlError err_unsupported_substitution(const std::string& d = "") { return QlError("unsupported-substitution", d); }
inline QlError err_divergent_limit() { return QlError("divergent-limit"); }
inline QlError err_singular_parameter(const std::string& d = "") { return QlError("singular-parameter", d); }
inline QlError err_depth_too_small() { return QlError("depth-too-small"); }
inline QlError err_singular_fraction_level(int level) { return QlError("singular-fraction-level", std::to_string(level)); }
inline QlError err_unknown_identity(const std::string& id) { return QlError("unknown-identity", id); }

}  // namespace qlommel

#endif
