#pragma once

#include "thetapairs/curve.hpp"

namespace testing {

inline thetapairs::CurveConfig cfg(long k, long l, long s, long r) {
  return thetapairs::make_config(k, l, thetapairs::make_angle(s, r));
}

}  // namespace testing
