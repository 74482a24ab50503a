#pragma once

#include "pafdp/paf.hpp"
#include "pafdp/paf_format.hpp"
#include "pafdp/random.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace pafdp::testing {

inline std::string data_path(const std::string& name) { return std::string(PAFDP_DATA_DIR) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline PafDocument load(const std::string& name) { return parse_paf(slurp(data_path(name))); }

struct RandomPafSpec {
  std::size_t max_args = 8;
  std::size_t max_uncertain = 12;
  double attack_density = 0.3;
  bool self_attacks = true;
};

// Small random PAF with tenth-valued probabilities.
inline Paf random_paf(std::uint64_t seed, const RandomPafSpec& spec = {}) {
  Rng rng = substream(seed, 99);
  const std::size_t n = 1 + uniform_below(rng, spec.max_args);
  std::size_t budget = uniform_below(rng, spec.max_uncertain + 1);
  auto prob = [&]() -> Rational {
    if (budget == 0 || uniform_below(rng, 2) == 0) return 1;
    --budget;
    return Rational(1 + static_cast<long>(uniform_below(rng, 9)), 10);
  };
  Paf::Builder b;
  for (std::size_t i = 0; i < n; ++i) b.argument(std::string(1, static_cast<char>('a' + i)), prob());
  const auto threshold = static_cast<std::uint64_t>(spec.attack_density * 1000);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && (!spec.self_attacks || uniform_below(rng, 10) != 0)) continue;
      if (uniform_below(rng, 1000) >= threshold) continue;
      b.attack(std::string(1, static_cast<char>('a' + i)), std::string(1, static_cast<char>('a' + j)),
               prob());
    }
  }
  return b.build();
}

inline ArgSet random_set(const AF& af, std::uint64_t seed) {
  Rng rng = substream(seed, 7);
  ArgSet s = af.empty_set();
  for (std::size_t i = 0; i < af.num_arguments(); ++i) {
    if (uniform_below(rng, 3) == 0) s.set(i);
  }
  return s;
}

}  // namespace pafdp::testing
