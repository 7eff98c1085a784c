#include "entangler/csv.hpp"

#include <cstdio>

namespace entangler {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string csv_stamp(std::uint64_t config_hash) {
  char buf[80];
  std::snprintf(buf, sizeof(buf), "# entangler v%s config_hash=%016llx\n",
                kToolVersion, static_cast<unsigned long long>(config_hash));
  return buf;
}

}  // namespace entangler
