#pragma once

#include <string>
#include <vector>

namespace suite {

// The finite rings every exhaustive property and acceptance check runs over.
inline std::vector<std::string> expressions() {
  std::vector<std::string> out;
  for (int n = 2; n <= 16; ++n) out.push_back("Zmod(" + std::to_string(n) + ")");
  for (int n : {27, 32, 49}) out.push_back("Zmod(" + std::to_string(n) + ")");
  out.insert(out.end(), {"prod(Zmod(4),Zmod(9))", "gring(Zmod(2),C3)", "gring(Zmod(3),C2*C2)",
                         "M(2,Zmod(2))", "M(2,Zmod(3))", "polyq(Zmod(4),[0,0,1])"});
  return out;
}

}  // namespace suite
