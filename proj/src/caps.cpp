#include "invol/caps.hpp"

#include <cstdlib>
#include <string>

namespace invol {

namespace {

int env_or(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    const int value = std::stoi(raw);
    return value >= 0 ? value : fallback;
  } catch (const std::exception&) {
    return fallback;
  }
}

EnumerationCaps load_caps() {
  EnumerationCaps c;
  c.symmetric_group = env_or("INVOL_CAP_SN", c.symmetric_group);
  c.involutions = env_or("INVOL_CAP_INVOLUTION", c.involutions);
  c.geninv_length = env_or("INVOL_CAP_GENINV_N", c.geninv_length);
  c.geninv_alphabet = env_or("INVOL_CAP_GENINV_M", c.geninv_alphabet);
  return c;
}

}  // namespace

const EnumerationCaps& caps() {
  static const EnumerationCaps instance = load_caps();
  return instance;
}

}  // namespace invol
