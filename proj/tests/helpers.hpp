#pragma once

#include "sdtp/model.hpp"

namespace sdtp::testing {

// Canonical two-point fixtures used across the suite.
inline SdtpInstance ex1() {
  return SdtpInstance::make(2, {{2, 1, 5}},
                            {{1, {{0, 2}, {8, 10}}}, {2, {{9, 12}}}});
}

inline SdtpInstance ex2() {
  return SdtpInstance::make(2, {{2, 1, 5}},
                            {{1, {{0, 2}, {8, 10}}}, {2, {{20, 22}}}});
}

inline SdtpInstance ex3() {
  return SdtpInstance::make(2, {{1, 2, -3}, {2, 1, 2}},
                            {{1, {{0, 100}}}, {2, {{0, 100}}}});
}

}  // namespace sdtp::testing
