#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cutplane {

/// Classification of every failure the library can report.
enum class errc {
  domain,        ///< non-finite input, or a result that would overflow
  singularity,   ///< point on a cut or at a branch point where a rule has no value
  branch_point,  ///< excluded point at which the function is unbounded
  precondition,  ///< caller violated a documented precondition
  primitive_cut, ///< point in the domain, but on a discontinuity of a primitive
  path,          ///< no admissible integration path
  convergence,   ///< quadrature subdivision limit reached
  parse,         ///< malformed literal or name
};

constexpr std::string_view to_string(errc e) noexcept {
  switch (e) {
    case errc::domain: return "domain-error";
    case errc::singularity: return "singularity";
    case errc::branch_point: return "branch-point";
    case errc::precondition: return "precondition";
    case errc::primitive_cut: return "primitive-cut";
    case errc::path: return "path-error";
    case errc::convergence: return "convergence";
    case errc::parse: return "parse-error";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  errc kind() const noexcept { return kind_; }

 private:
  errc kind_;
};

}  // namespace cutplane
