#include "qbforge/catalog.hpp"

#include <algorithm>

namespace qbforge {

namespace {

std::vector<std::string> chain_labels(int n) {
  // 0 < a < b < ... < 1, degenerating to "1" for the one element chain
  std::vector<std::string> labels;
  if (n == 1) return {"1"};
  labels.push_back("0");
  for (int i = 1; i + 1 < n; ++i)
    labels.push_back(std::string(1, static_cast<char>('a' + i - 1)));
  labels.push_back("1");
  return labels;
}

std::vector<int> chain_leq(int n) {
  std::vector<int> leq(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) leq[x * n + y] = 1;
  return leq;
}

FiniteAlgebra make_chain(const std::string& name, int n,
                         std::vector<int> mul) {
  FiniteAlgebra::Data d;
  d.name = name;
  d.labels = chain_labels(n);
  d.leq = chain_leq(n);
  Poset order = Poset::validate(n, d.leq);
  auto res = residuals_from_mul(order, mul);
  if (!res)
    throw Error("validation_failed", name + ": product is not residuated");
  d.to = std::move(res->first);
  d.lto = std::move(res->second);
  d.mul = std::move(mul);
  d.unit = n - 1;
  if (n > 1) d.bottom = 0;
  return FiniteAlgebra::create(std::move(d));
}

FiniteAlgebra make_godel(const std::string& name, int n) {
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) mul[x * n + y] = std::min(x, y);
  return make_chain(name, n, std::move(mul));
}

FiniteAlgebra make_lukasiewicz(const std::string& name, int n) {
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) mul[x * n + y] = std::max(x + y - (n - 1), 0);
  return make_chain(name, n, std::move(mul));
}

FiniteAlgebra make_heyting_d5() {
  // 0 < a,b < c < 1 with a,b incomparable; product is the meet
  const int n = 5;
  FiniteAlgebra::Data d;
  d.name = "heyting-d5";
  d.labels = {"0", "a", "b", "c", "1"};
  d.leq.assign(static_cast<std::size_t>(n) * n, 0);
  auto set_le = [&](int x, int y) { d.leq[x * n + y] = 1; };
  for (int x = 0; x < n; ++x) set_le(x, x);
  for (int x = 0; x < 4; ++x) {
    set_le(0, x + 1);
    set_le(x, 4);
  }
  set_le(1, 3);
  set_le(2, 3);
  Poset order = Poset::validate(n, d.leq);
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) mul[x * n + y] = *order.meet(x, y);
  auto res = residuals_from_mul(order, mul);
  if (!res)
    throw Error("validation_failed", "heyting-d5: meet is not residuated");
  d.to = std::move(res->first);
  d.lto = std::move(res->second);
  d.mul = std::move(mul);
  d.unit = 4;
  d.bottom = 0;
  return FiniteAlgebra::create(std::move(d));
}

FiniteAlgebra make_product(const std::string& name, const FiniteAlgebra& a,
                           const FiniteAlgebra& b) {
  const int na = a.size(), nb = b.size(), n = na * nb;
  if (n > kMaxCarrier)
    throw Error("cap_exceeded",
                name + ": product carrier has " + std::to_string(n) +
                    " elements");
  auto idx = [&](int x, int y) { return x * nb + y; };
  FiniteAlgebra::Data d;
  d.name = name;
  d.labels.resize(n);
  d.leq.assign(static_cast<std::size_t>(n) * n, 0);
  d.to.resize(static_cast<std::size_t>(n) * n);
  d.lto.resize(static_cast<std::size_t>(n) * n);
  d.mul.emplace(static_cast<std::size_t>(n) * n);
  for (int x1 = 0; x1 < na; ++x1)
    for (int x2 = 0; x2 < nb; ++x2) {
      const int x = idx(x1, x2);
      d.labels[x] = "(" + a.label(x1) + "," + b.label(x2) + ")";
      for (int y1 = 0; y1 < na; ++y1)
        for (int y2 = 0; y2 < nb; ++y2) {
          const int y = idx(y1, y2);
          d.leq[x * n + y] = a.leq(x1, y1) && b.leq(x2, y2);
          d.to[x * n + y] = idx(a.to(x1, y1), b.to(x2, y2));
          d.lto[x * n + y] = idx(a.lto(x1, y1), b.lto(x2, y2));
          (*d.mul)[x * n + y] = idx(a.mul(x1, y1), b.mul(x2, y2));
        }
    }
  d.unit = idx(*a.unit(), *b.unit());
  if (a.bottom() && b.bottom()) d.bottom = idx(*a.bottom(), *b.bottom());
  return FiniteAlgebra::create(std::move(d));
}

int parse_chain_size(const std::string& name, const std::string& arg) {
  std::size_t pos = 0;
  int n = 0;
  try {
    n = std::stoi(arg, &pos);
  } catch (const std::exception&) {
    throw Error("unknown_name", name);
  }
  if (pos != arg.size() || n < 1 || n > kMaxCarrier)
    throw Error("unknown_name", name);
  return n;
}

FiniteAlgebra build(const std::string& name) {
  if (name.rfind("prod(", 0) == 0 && name.back() == ')') {
    const std::string inner = name.substr(5, name.size() - 6);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      const char c = inner[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        FiniteAlgebra left = build(inner.substr(0, i));
        FiniteAlgebra right = build(inner.substr(i + 1));
        return make_product(name, left, right);
      }
    }
    throw Error("unknown_name", name);
  }
  if (name == "heyting-d5") return make_heyting_d5();
  if (name == "chain:2") return make_godel("chain:2", 2);
  const auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string family = name.substr(0, colon);
    const int n = parse_chain_size(name, name.substr(colon + 1));
    if (family == "godel") return make_godel(name, n);
    if (family == "lukasiewicz") return make_lukasiewicz(name, n);
  }
  throw Error("unknown_name", name);
}

}  // namespace

FiniteAlgebra catalog(const std::string& name) {
  std::string stripped;
  for (char c : name)
    if (c != ' ') stripped += c;
  FiniteAlgebra a = build(stripped);
  // every shipped entry advertises itself as a residuated pseudo-hoop
  if (!check_residuated(a).holds || !check_pseudo_hoop(a).holds)
    throw Error("validation_failed", stripped + ": class check failed");
  return a;
}

std::vector<std::string> catalog_names() {
  return {"chain:2", "godel:n", "lukasiewicz:n", "heyting-d5",
          "prod(e1,e2)"};
}

}  // namespace qbforge
