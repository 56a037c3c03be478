#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

namespace dsv {

// Thrown when a desk-scale guard would be exceeded. The CLI maps this to a
// usage error and points at the override flag.
class GuardError : public std::runtime_error {
 public:
  GuardError(const std::string& guard, const std::string& detail)
      : std::runtime_error("guard '" + guard + "' exceeded (" + detail +
                           "); override with --unsafe-size"),
        guard_(guard) {}
  const std::string& guard() const { return guard_; }

 private:
  std::string guard_;
};

namespace config {

struct Limits {
  int syt_max_cells = 12;        // enumerate_syt
  int groebner_max_vars = 7;     // Groebner-backed Hilbert series
  int section5_max_vars = 10;    // block symmetric ideal containment checks
  int hall_littlewood_max = 8;   // |lambda| for cocharge enumeration
  int paving_max_n = 7;          // cell / component / filling enumeration
  bool enforce = true;
};

inline Limits& limits() {
  static Limits instance;
  return instance;
}

inline int& thread_count() {
  static int n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

inline void check(bool within, const std::string& guard, const std::string& detail) {
  if (limits().enforce && !within) throw GuardError(guard, detail);
}

}  // namespace config
}  // namespace dsv
