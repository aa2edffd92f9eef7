#ifndef TEMPSPAN_VERSION_HPP
#define TEMPSPAN_VERSION_HPP

namespace tempspan {

inline constexpr const char* version = "0.1.0";

}

#endif
