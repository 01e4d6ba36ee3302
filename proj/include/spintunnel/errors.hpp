#pragma once

#include <stdexcept>
#include <string>

namespace spintunnel {

enum class ErrorCode {
  InvalidScenario,   // scenario field out of its validity domain
  ResonantEdge,      // E == V0: qx degenerates, closed forms singular
  ZeroMomentum,      // spinor requested at k = 0
  QxZero,            // closed form evaluated at qx == 0
  IllConditioned,    // matching system condition estimate above threshold
  SingularEtaPrime,  // eta + eps*eta^dag numerically singular
  VerificationFailed,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

}  // namespace spintunnel
