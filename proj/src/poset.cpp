#include "qbforge/poset.hpp"

#include <string>

namespace qbforge {

namespace {

std::string triple(int x, int y, int z) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + "," +
         std::to_string(z) + ")";
}

}  // namespace

Poset Poset::validate(int n, const std::vector<int>& leq) {
  if (n < 1 || n > kMaxCarrier)
    throw Error("cap_exceeded",
                "carrier size " + std::to_string(n) + " outside [1, " +
                    std::to_string(kMaxCarrier) + "]");
  if (leq.size() != static_cast<std::size_t>(n) * n)
    throw Error("validation_failed", "leq table is not n*n");

  auto le = [&](int x, int y) { return leq[x * n + y] != 0; };

  for (int x = 0; x < n; ++x)
    if (!le(x, x))
      throw Error("not_reflexive", "x=" + std::to_string(x));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && le(x, y) && le(y, x))
        throw Error("not_antisymmetric",
                    "(" + std::to_string(x) + "," + std::to_string(y) + ")");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (le(x, y) && le(y, z) && !le(x, z))
          throw Error("not_transitive", triple(x, y, z));

  std::vector<Mask> up(n, 0), dn(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (le(x, y)) {
        up[x] |= bit(y);
        dn[y] |= bit(x);
      }
  return Poset(n, std::move(up), std::move(dn));
}

bool Poset::is_upper(Mask s) const {
  for (int x = 0; x < n_; ++x)
    if (has_bit(s, x) && (up_[x] & ~s) != 0) return false;
  return true;
}

Mask Poset::upper_closure(Mask s) const {
  Mask out = 0;
  for (int x = 0; x < n_; ++x)
    if (has_bit(s, x)) out |= up_[x];
  return out;
}

std::optional<int> Poset::join(int x, int y) const {
  // least common upper bound, if the set of common upper bounds has one
  return least_of(up_[x] & up_[y]);
}

std::optional<int> Poset::meet(int x, int y) const {
  Mask lb = dn_[x] & dn_[y];
  // greatest element of lb: the one whose up set covers every lower bound
  for (int m = 0; m < n_; ++m)
    if (has_bit(lb, m) && (lb & ~dn_[m]) == 0) return m;
  return std::nullopt;
}

std::optional<int> Poset::top() const {
  for (int t = 0; t < n_; ++t)
    if (up_[t] == bit(t) && dn_[t] == (bit(n_) - 1)) return t;
  return std::nullopt;
}

std::optional<int> Poset::bottom() const {
  for (int b = 0; b < n_; ++b)
    if (up_[b] == (bit(n_) - 1)) return b;
  return std::nullopt;
}

std::optional<int> Poset::least_of(Mask s) const {
  for (int m = 0; m < n_; ++m)
    if (has_bit(s, m) && (s & ~up_[m]) == 0) return m;
  return std::nullopt;
}

}  // namespace qbforge
