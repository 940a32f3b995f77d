#include "graphsq/families.hpp"

#include <sstream>
#include <stdexcept>

namespace graphsq {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

Vertex vx(std::size_t v) { return static_cast<Vertex>(v); }

}  // namespace

Graph path(std::size_t n) {
  require(n >= 1, "path: n must be >= 1");
  std::vector<Edge> e;
  for (std::size_t v = 0; v + 1 < n; ++v) e.emplace_back(vx(v), vx(v + 1));
  return Graph::from_edges(n, e);
}

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle: n must be >= 3");
  std::vector<Edge> e;
  for (std::size_t v = 0; v < n; ++v) e.emplace_back(vx(v), vx((v + 1) % n));
  return Graph::from_edges(n, e);
}

Graph star(std::size_t n) {
  require(n >= 1, "star: n must be >= 1");
  std::vector<Edge> e;
  for (std::size_t v = 1; v < n; ++v) e.emplace_back(0, vx(v));
  return Graph::from_edges(n, e);
}

Graph complete(std::size_t n) {
  require(n >= 1, "complete: n must be >= 1");
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(vx(u), vx(v));
  return Graph::from_edges(n, e);
}

Graph star_plus(std::size_t n) {
  require(n >= 3, "star_plus: n must be >= 3");
  Edge extra{1, 2};
  return with_edges(star(n), std::span<const Edge>(&extra, 1));
}

Graph tadpole(std::size_t n) {
  require(n >= 4, "tadpole: n must be >= 4");
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
  for (std::size_t v = 2; v + 1 < n; ++v) e.emplace_back(vx(v), vx(v + 1));
  return Graph::from_edges(n, e);
}

Graph cycle_star(std::size_t n, std::size_t g) {
  require(g >= 3 && g <= n, "cycle_star: need 3 <= g <= n");
  std::vector<Edge> e;
  for (std::size_t v = 0; v < g; ++v) e.emplace_back(vx(v), vx((v + 1) % g));
  for (std::size_t v = g; v < n; ++v) e.emplace_back(0, vx(v));
  return Graph::from_edges(n, e);
}

Graph broom(std::size_t n, std::size_t d, std::size_t i) {
  require(d >= 2, "broom: d must be >= 2");
  require(i >= 2 && i <= d, "broom: need 2 <= i <= d");
  require(n >= d + 1, "broom: need n >= d + 1");
  std::vector<Edge> e;
  for (std::size_t v = 0; v < d; ++v) e.emplace_back(vx(v), vx(v + 1));
  for (std::size_t v = d + 1; v < n; ++v) e.emplace_back(vx(i - 1), vx(v));
  return Graph::from_edges(n, e);
}

Graph spider(std::size_t a, std::size_t b, std::size_t c) {
  std::vector<Edge> e;
  std::size_t next = 1;
  for (std::size_t leg : {a, b, c}) {
    Vertex prev = 0;
    for (std::size_t k = 0; k < leg; ++k, ++next) {
      e.emplace_back(prev, vx(next));
      prev = vx(next);
    }
  }
  return Graph::from_edges(a + b + c + 1, e);
}

FamilySpec FamilySpec::parse(const std::string& text) {
  FamilySpec spec;
  auto colon = text.find(':');
  spec.family = text.substr(0, colon);
  if (spec.family.empty()) throw std::invalid_argument("family spec: missing family name");
  if (colon == std::string::npos) return spec;
  std::stringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw std::invalid_argument("family spec: expected key=value, got '" + item + "'");
    const std::string value = item.substr(eq + 1);
    std::size_t used = 0;
    unsigned long long parsed = 0;
    try {
      parsed = std::stoull(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value.size() || value[0] == '-')
      throw std::invalid_argument("family spec: '" + value + "' is not a non-negative integer");
    spec.params[item.substr(0, eq)] = parsed;
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out = family;
  // Keys in the order the constructor takes them.
  static const std::map<std::string, std::vector<std::string>> order{
      {"path", {"n"}},      {"cycle", {"n"}},          {"star", {"n"}},
      {"complete", {"n"}},  {"star_plus", {"n"}},      {"tadpole", {"n"}},
      {"cycle_star", {"n", "g"}}, {"broom", {"n", "d", "i"}}, {"spider", {"a", "b", "c"}}};
  char sep = ':';
  auto it = order.find(family);
  if (it != order.end()) {
    for (const auto& k : it->second) {
      auto p = params.find(k);
      if (p == params.end()) continue;
      out += sep + k + "=" + std::to_string(p->second);
      sep = ',';
    }
  }
  return out;
}

Graph FamilySpec::build() const {
  auto get = [&](const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw std::invalid_argument("family '" + family + "' needs parameter '" + key + "'");
    return it->second;
  };
  auto expect = [&](std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : params) {
      bool known = false;
      for (const char* key : keys) known = known || k == key;
      if (!known) throw std::invalid_argument("family '" + family + "' has no parameter '" + k + "'");
    }
  };
  if (family == "path") return expect({"n"}), path(get("n"));
  if (family == "cycle") return expect({"n"}), cycle(get("n"));
  if (family == "star") return expect({"n"}), star(get("n"));
  if (family == "complete") return expect({"n"}), complete(get("n"));
  if (family == "star_plus") return expect({"n"}), star_plus(get("n"));
  if (family == "tadpole") return expect({"n"}), tadpole(get("n"));
  if (family == "cycle_star") return expect({"n", "g"}), cycle_star(get("n"), get("g"));
  if (family == "broom") return expect({"n", "d", "i"}), broom(get("n"), get("d"), get("i"));
  if (family == "spider") return expect({"a", "b", "c"}), spider(get("a"), get("b"), get("c"));
  throw std::invalid_argument("unknown family '" + family + "'");
}

}  // namespace graphsq
