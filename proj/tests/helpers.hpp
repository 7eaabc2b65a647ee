#pragma once

#include <vector>

#include "oracle/lr_oracle.hpp"
#include "schubert/young.hpp"

namespace testing {

inline std::vector<schubert::Frame> frames_up_to(int k_max, int w_max) {
  std::vector<schubert::Frame> out;
  for (int k = 1; k <= k_max; ++k) {
    for (int w = 1; w <= w_max; ++w) out.emplace_back(k, w);
  }
  return out;
}

inline oracle::Shape shape(const schubert::Partition& p) { return {p.parts().begin(), p.parts().end()}; }

}  // namespace testing
