#pragma once

#include <array>
#include <chrono>
#include <string>

#include "g2/chevalley.hpp"
#include "g2/replay.hpp"

namespace g2::detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// w_{a1}(+-1) and w_{a2}(+-1) have order four with square h_{ai}(-1), so the
// integer inverse is w * h (the two commute).
IMat w_inverse(const IMat& w, const IMat& h);

// x_r(1) as an integer matrix: the sum of the divided powers of the root
// generator.
IMat unipotent_one(const Root& r);

// 1-based positions of the long and short root vectors in the fixed basis.
inline constexpr std::array<int, 6> kLongPositions = {3, 4, 9, 10, 11, 12};
inline constexpr std::array<int, 6> kShortPositions = {1, 2, 5, 6, 7, 8};

inline bool is_long_position(int p) {
  return p == 3 || p == 4 || p == 9 || p == 10 || p == 11 || p == 12;
}
inline bool is_short_position(int p) {
  return p == 1 || p == 2 || p == 5 || p == 6 || p == 7 || p == 8;
}

// Renders a ring value compactly for witnesses and logs.
std::string show(const RingPtr& ring, const Value& v);

}  // namespace g2::detail
