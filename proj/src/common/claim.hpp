#pragma once

#include <string>
#include <vector>

namespace brsieve {

// A mathematical conclusion together with the criterion it instantiates and
// every unproved hypothesis it relies on.
struct Claim {
  std::string statement;
  std::string criterion;
  std::vector<std::string> assumptions;
};

}  // namespace brsieve
