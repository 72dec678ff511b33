#pragma once

#include <functional>
#include <random>
#include <string>

namespace purl::oracle {

/// Random row source without undetermined repeats: every basic stitch kind,
/// fixed repeats and compound stitches, nesting depth up to `max_depth`,
/// repeat counts up to 5.
inline std::string random_row_source(std::mt19937_64& rng, int max_depth = 3) {
  static const char* const kStitches[] = {"K",   "P",   "KB",  "PB",  "K2B", "P3B", "S",   "SK",  "SP",  "YO",
                                          "KFB", "PFB", "M1",  "M1L", "M2R", "K2T", "P3T", "SSK", "SSP", "PSSO"};
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  auto rep = [&] { return std::to_string(1 + pick(5)); };

  auto basic = [&] {
    std::string s = kStitches[pick(20)];
    if (pick(2) == 0) s += " " + rep();
    return s;
  };

  std::function<std::string(int)> op = [&](int depth) -> std::string {
    const std::size_t choice = depth < max_depth ? pick(4) : 0;
    if (choice == 2) {
      std::string s = "[";
      const std::size_t n = 1 + pick(3);
      for (std::size_t i = 0; i < n; ++i) s += (i ? ", " : "") + op(depth + 1);
      return s + "] " + rep();
    }
    if (choice == 3) {
      std::string s = "<";
      const std::size_t n = 1 + pick(3);
      for (std::size_t i = 0; i < n; ++i) s += (i ? ", " : "") + basic();
      s += ">";
      if (pick(2) == 0) s += " " + rep();
      return s;
    }
    return basic();
  };

  std::string row = pick(2) ? "row : " : "rnd : ";
  const std::size_t n = 1 + pick(5);
  for (std::size_t i = 0; i < n; ++i) row += (i ? ", " : "") + op(1);
  return row + ".";
}

}  // namespace purl::oracle
