#ifndef MAXCURVE_VERSION_HPP
#define MAXCURVE_VERSION_HPP

namespace maxcurve {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace maxcurve

#endif  // MAXCURVE_VERSION_HPP
