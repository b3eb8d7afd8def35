#ifndef WPS_ERRORS_HPP
#define WPS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wps {

// rejected input: wrong shape, unsupported theory/weight combination, parse error
class invalid_input : public std::runtime_error {
  public:
    explicit invalid_input(const std::string &msg) : std::runtime_error(msg) {}
};

// a structural identity the library relies on failed to hold at runtime
class consistency_error : public std::runtime_error {
  public:
    explicit consistency_error(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace wps

#endif
