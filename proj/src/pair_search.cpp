#include <algorithm>
#include <cstdint>
#include <vector>

#include "trigsum/catalog.hpp"
#include "trigsum/errors.hpp"

namespace trigsum::catalog {

namespace {

std::int64_t cls(std::int64_t d, std::int64_t k) {
  d %= k;
  if (d < 0) d += k;
  return std::min(d, k - d);
}

void extend(std::int64_t k, std::vector<char>& used, PairList& cur, const PairVisitor& visit) {
  std::int64_t half = (k - 1) / 2;
  std::int64_t c = 1;
  while (c <= half && used[c]) ++c;
  if (c > half) {
    PairList fam = cur;
    std::sort(fam.begin(), fam.end());
    visit(fam);
    return;
  }
  for (std::int64_t a = 2; a < k; ++a) {
    for (std::int64_t b = 1; b < a && a + b <= k - 1; ++b) {
      std::int64_t x = cls(a - b, k), y = cls(a + b, k);
      if (x == y || used[x] || used[y]) continue;
      if (x != c && y != c) continue;
      used[x] = used[y] = 1;
      cur.emplace_back(a, b);
      extend(k, used, cur, visit);
      cur.pop_back();
      used[x] = used[y] = 0;
    }
  }
}

}  // namespace

void visit_pair_families(std::int64_t k, const PairVisitor& visit) {
  if (k < 5 || k % 4 != 1) throw DomainError("pair families: k must be >= 5 with k = 1 (mod 4)");
  std::vector<char> used(static_cast<std::size_t>(k), 0);
  PairList cur;
  extend(k, used, cur, visit);
}

std::vector<PairList> search_pair_families(std::int64_t k) {
  std::vector<PairList> out;
  visit_pair_families(k, [&](const PairList& f) { out.push_back(f); });
  std::sort(out.begin(), out.end());
  return out;
}

bool pair_family_covers(std::int64_t k, const PairList& pairs) {
  if (k < 2) return false;
  std::vector<int> seen(static_cast<std::size_t>(k), 0);
  auto hit = [&](std::int64_t v) {
    if (v < 1 || v > k - 1) return false;
    ++seen[v];
    return true;
  };
  for (auto [a, b] : pairs) {
    if (!hit(a - b) || !hit(a + b) || !hit(k - (a - b)) || !hit(k - (a + b))) return false;
  }
  for (std::int64_t v = 1; v < k; ++v)
    if (seen[v] != 1) return false;
  return true;
}

}  // namespace trigsum::catalog
