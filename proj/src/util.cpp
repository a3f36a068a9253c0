#include "carleman/util.hpp"

#include <cstdio>

namespace carleman {

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace carleman
