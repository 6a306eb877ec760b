#pragma once

#include "ordlogic/poset.hpp"

#include <random>
#include <string>
#include <vector>

namespace testutil {

using ordlogic::ElemSet;
using ordlogic::Poset;

inline Poset diamond() {
  return Poset::build({"bot", "a", "b", "top"}, {}, "bot", "top");
}

inline Poset antichain5() {  // {bot, x, y, z, top}
  return Poset::build({"bot", "x", "y", "z", "top"}, {}, "bot", "top");
}

inline Poset two_chain() { return Poset::build({"bot", "top"}, {}, "bot", "top"); }

// random bounded poset: random DAG between the bounds, closed on build
inline Poset random_bounded_poset(std::mt19937_64& rng, int inner, double density) {
  std::vector<std::string> elems = {"bot", "top"};
  for (int i = 0; i < inner; ++i) elems.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> pairs;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < inner; ++i)
    for (int j = i + 1; j < inner; ++j)
      if (u(rng) < density)
        pairs.emplace_back("e" + std::to_string(i), "e" + std::to_string(j));
  return Poset::build(elems, pairs, "bot", "top");
}

inline ElemSet random_subset(std::mt19937_64& rng, const Poset& p, bool nonempty) {
  std::uniform_int_distribution<int> coin(0, 1);
  ElemSet out;
  for (int i = 0; i < p.size(); ++i)
    if (coin(rng)) out.push_back(i);
  if (nonempty && out.empty()) out.push_back(std::uniform_int_distribution<int>(0, p.size() - 1)(rng));
  return out;
}

}  // namespace testutil
