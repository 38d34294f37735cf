#pragma once
#include <optional>
#include <string>
#include <vector>

namespace arr {

struct CheckLine {
  std::string name;
  bool ok = false;
  std::string detail;  // filled on failure or when a value is worth echoing
};

struct ReproduceResult {
  std::string target;
  std::vector<CheckLine> lines;
  bool ok() const {
    for (const auto& l : lines)
      if (!l.ok) return false;
    return true;
  }
};

// Scripted verification scenarios, each certifying one constructive chain
// end to end through the public library operations; they double as
// integration tests.
ReproduceResult reproduce_lemma21();
ReproduceResult reproduce_lemma31(int n);
ReproduceResult reproduce_ex32();
// X-localization story in D_n: r picks the generator e_r + e_{n-1}; when s,t
// are given the second generator e_s + e_t is added (r < s < t < n-1).
ReproduceResult reproduce_ex33(int n, int r, std::optional<std::pair<int, int>> st = {});
ReproduceResult reproduce_ex34(int jobs = 1);
ReproduceResult reproduce_ex35();

}  // namespace arr
