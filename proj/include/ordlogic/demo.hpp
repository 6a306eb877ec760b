#pragma once

#include <string>
#include <vector>

namespace ordlogic::demo {

struct DemoEntry {
  std::string label;
  std::string computed;
  std::string expected;
  bool pass = false;
};

struct DemoLedger {
  std::vector<DemoEntry> entries;
  bool all_pass() const;
};

// Replays the worked examples across all modules and compares them
// against their published values.
DemoLedger run_paper_demo();

}  // namespace ordlogic::demo
