#include "hibi/config.hpp"

#include <cstdlib>
#include <string>

namespace hibi {

namespace {

template <typename T>
void read_env(const char* name, T& out) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  try {
    long long v = std::stoll(raw);
    if (v > 0) out = static_cast<T>(v);
  } catch (const std::exception&) {
    // ignore unparsable values, keep the default
  }
}

}  // namespace

Caps Caps::from_env() {
  Caps caps;
  read_env("HIBI_MAX_ELEMENTS", caps.max_elements);
  read_env("HIBI_MAX_STATES", caps.max_states);
  read_env("HIBI_ORACLE_MAX_ELEMENTS", caps.oracle_max_elements);
  read_env("HIBI_ORACLE_MAX_Q", caps.oracle_max_q);
  return caps;
}

const Caps& default_caps() {
  static const Caps caps = Caps::from_env();
  return caps;
}

}  // namespace hibi
