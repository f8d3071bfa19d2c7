#include "gcard/limits.hpp"

#include <cstdlib>
#include <string>

namespace gcard {

Limits Limits::from_environment() {
  Limits limits;
  if (const char* env = std::getenv("GROUPOID_CARD_MAX_N"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long value = std::stoul(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
      limits.max_enumeration_n = static_cast<unsigned>(value);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("GROUPOID_CARD_MAX_N is not a natural number: ") + env);
    }
  }
  return limits;
}

}  // namespace gcard
