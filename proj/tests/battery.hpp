#pragma once

// Shared battery of test groups: cyclic, symmetric, wreath row-stabilizers,
// dihedral (through explicit generators) and trivial groups.

#include <string>
#include <vector>

namespace battery {

inline std::string dihedral_spec(int n) {
  std::string rotation = "(";
  for (int i = 1; i <= n; ++i) rotation += (i > 1 ? " " : "") + std::to_string(i);
  rotation += ")";
  std::string reflection;  // fixes 1, swaps i with n+2-i
  for (int i = 2; i <= n + 2 - i; ++i) {
    if (i == n + 2 - i) continue;
    reflection += "(" + std::to_string(i) + " " + std::to_string(n + 2 - i) + ")";
  }
  return "gens:" + std::to_string(n) + ":" + rotation + "," + reflection;
}

inline std::string trivial_spec(int n) { return "gens:" + std::to_string(n) + ":(1)"; }

inline std::vector<std::string> specs(int max_n) {
  std::vector<std::string> out;
  for (int n = 2; n <= max_n; ++n) out.push_back("cyclic:" + std::to_string(n));
  for (int n = 2; n <= max_n; ++n) out.push_back("symmetric:" + std::to_string(n));
  for (int k = 2; k <= 6; ++k)
    for (int l = 2; l <= 6; ++l)
      if (k * l <= 12) out.push_back("wreath:" + std::to_string(k) + "," + std::to_string(l));
  for (int n = 4; n <= std::min(max_n, 8); ++n) out.push_back(dihedral_spec(n));
  for (int n = 1; n <= std::min(max_n, 5); ++n) out.push_back(trivial_spec(n));
  return out;
}

}  // namespace battery
