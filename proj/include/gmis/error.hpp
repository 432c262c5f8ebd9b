#pragma once

#include <stdexcept>
#include <string>

namespace gmis {

enum class ErrorCode {
  Parse,
  OutOfRange,
  Contract,
  DegreeBound,
  Budget,
  Identity,
  InvalidArgument,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gmis
