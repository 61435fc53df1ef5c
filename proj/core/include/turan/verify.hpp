#ifndef TURAN_VERIFY_HPP
#define TURAN_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace turan {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 1;
  std::vector<VerifyCheck> checks;

  int passed() const;
  int failed() const;
  bool all_passed() const { return failed() == 0; }
};

// Names of all checks, in execution order. One check per closed-form law the
// library implements.
std::vector<std::string> verify_check_names();

// suite: "all" or a comma-separated subset of check names.
// Output is a pure function of (suite, seed): identical inputs give
// byte-identical rendered reports.
VerifyReport run_verify(const std::string& suite, std::uint64_t seed);

std::string render_verify_json(const VerifyReport& report);
std::string render_verify_csv(const VerifyReport& report);

}  // namespace turan

#endif
