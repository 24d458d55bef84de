#pragma once

#include <stdexcept>

namespace invol {

// Thrown when a brute-force enumeration request exceeds its configured cap.
class cap_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Upper bounds on brute-force enumeration sizes. The defaults keep the full
// oracle suite in the seconds range on commodity hardware; they are
// configuration, not constants, and may be raised via the environment:
//
//   INVOL_CAP_SN          full S_n enumeration          (default 10)
//   INVOL_CAP_INVOLUTION  involution enumeration        (default 14)
//   INVOL_CAP_GENINV_N    generalized involution length (default 10)
//   INVOL_CAP_GENINV_M    generalized involution alphabet (default 8)
struct EnumerationCaps {
  int symmetric_group = 10;
  int involutions = 14;
  int geninv_length = 10;
  int geninv_alphabet = 8;
};

// Caps for this process: defaults with environment overrides, read once.
const EnumerationCaps& caps();

}  // namespace invol
