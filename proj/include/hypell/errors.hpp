#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypell {

enum class Errc {
  invalid_parameter,
  out_of_domain,
  not_on_hyperboloid,
  not_an_ellipse,
  degenerate_combination,
  invalid_instance,
  degenerate_input,
  infeasible,
  invalid_configuration,
};

constexpr std::string_view to_string(Errc c) noexcept {
  switch (c) {
    case Errc::invalid_parameter: return "invalid-parameter";
    case Errc::out_of_domain: return "out-of-domain";
    case Errc::not_on_hyperboloid: return "not-on-hyperboloid";
    case Errc::not_an_ellipse: return "not-an-ellipse";
    case Errc::degenerate_combination: return "degenerate-combination";
    case Errc::invalid_instance: return "invalid-instance";
    case Errc::degenerate_input: return "degenerate-input";
    case Errc::infeasible: return "infeasible";
    case Errc::invalid_configuration: return "invalid-configuration";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hypell
