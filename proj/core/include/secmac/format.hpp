#ifndef SECMAC_FORMAT_HPP
#define SECMAC_FORMAT_HPP

#include <cstdio>
#include <cstdlib>
#include <string>

namespace secmac {

/// 9-significant-digit text form; infinities print as "inf"/"-inf".
inline std::string format_sig9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

/// Round to the double nearest the 9-significant-digit decimal form.
inline double round_sig9(double v) {
  return std::strtod(format_sig9(v).c_str(), nullptr);
}

}  // namespace secmac

#endif
