// Writes the Herz ratio band for a seeded corpus as JSON:
//   orlicz-calibrate-herz [seed] [functions] [margin]
// The band is [min / (1 + margin), max * (1 + margin)].

#include <cstdlib>
#include <iostream>
#include <string>

#include <nlohmann/json.hpp>

#include "orlicz/verify.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;
  const int functions = argc > 2 ? std::atoi(argv[2]) : 200;
  const double margin = argc > 3 ? std::atof(argv[3]) : 0.1;
  if (functions < 1 || !(margin >= 0.0)) {
    std::cerr << "usage: orlicz-calibrate-herz [seed] [functions >= 1] [margin >= 0]\n";
    return 2;
  }
  const orlicz::HerzCalibration c = orlicz::calibrate_herz(seed, functions);
  nlohmann::json out = {{"seed", seed},
                        {"functions", c.functions},
                        {"samples", c.samples},
                        {"min_ratio", c.min_ratio},
                        {"max_ratio", c.max_ratio},
                        {"margin", margin},
                        {"c1", c.min_ratio / (1.0 + margin)},
                        {"c2", c.max_ratio * (1.0 + margin)}};
  std::cout << out.dump(2) << '\n';
  return 0;
}
