#ifndef BELLKIT_NUMFMT_HPP_
#define BELLKIT_NUMFMT_HPP_

#include <cstdio>
#include <string>

namespace bellkit {

// 12 significant digits; the shared convention for every emitted number.
inline std::string sig12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Round to 12 significant digits (for JSON fields, so an emitted value
// re-parses to exactly what was printed).
inline double round_sig12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

}  // namespace bellkit

#endif  // BELLKIT_NUMFMT_HPP_
