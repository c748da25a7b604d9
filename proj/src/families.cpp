#include "bwl/families.hpp"

#include <cstdlib>

#include "bwl/io.hpp"

#ifndef BWL_DEFAULT_DATA_DIR
#define BWL_DEFAULT_DATA_DIR "data"
#endif

namespace bwl {

namespace {

int ceil_half(int v) { return v <= 0 ? 0 : (v + 1) / 2; }

[[noreturn]] void out_of_range(const FamilySpec& spec, const std::string& bound) {
  throw Error(spec.name() + ": parameter out of range, requires " + bound);
}

}  // namespace

std::string FamilySpec::name() const {
  const std::string sn = std::to_string(n);
  switch (kind) {
    case FamilyKind::Path: return "P_" + sn;
    case FamilyKind::Cycle: return "C_" + sn;
    case FamilyKind::Complete: return "K_" + sn;
    case FamilyKind::CompleteBipartite: return "K_{" + std::to_string(a) + "," + std::to_string(b) + "}";
    case FamilyKind::Q: return "Q_" + sn + "^" + std::to_string(c);
    case FamilyKind::R: return "R_{" + sn + "," + std::to_string(i) + "}^" + std::to_string(c);
    case FamilyKind::S: return "S_" + sn + "^" + std::to_string(c);
    case FamilyKind::T: return "T_{" + sn + "," + std::to_string(i) + "}";
  }
  return "?";
}

FamilySpec path_spec(int n) { return {FamilyKind::Path, n}; }
FamilySpec cycle_spec(int n) { return {FamilyKind::Cycle, n}; }
FamilySpec complete_spec(int n) { return {FamilyKind::Complete, n}; }
FamilySpec bipartite_spec(int a, int b) { return {FamilyKind::CompleteBipartite, a + b, 0, 0, a, b}; }
FamilySpec q_spec(int n, int c) { return {FamilyKind::Q, n, 0, c}; }
FamilySpec r_spec(int n, int i, int c) { return {FamilyKind::R, n, i, c}; }
FamilySpec s_spec(int n, int c) { return {FamilyKind::S, n, 0, c}; }
FamilySpec t_spec(int n, int i) { return {FamilyKind::T, n, i}; }

int r_index_count(int n, int c) { return c == 3 ? std::max(0, n - 3) : ceil_half(n - 3); }
int t_index_count(int n) { return ceil_half(n - 5); }

FamilyKind parse_family_kind(const std::string& text) {
  if (text == "P") return FamilyKind::Path;
  if (text == "C") return FamilyKind::Cycle;
  if (text == "K") return FamilyKind::Complete;
  if (text == "Kab") return FamilyKind::CompleteBipartite;
  if (text == "Q") return FamilyKind::Q;
  if (text == "R") return FamilyKind::R;
  if (text == "S") return FamilyKind::S;
  if (text == "T") return FamilyKind::T;
  throw Error("unknown family kind '" + text + "' (expected P, C, K, Kab, Q, R, S or T)");
}

void validate(const FamilySpec& s) {
  if (s.kind == FamilyKind::CompleteBipartite) {
    if (s.a < 1 || s.b < 1) out_of_range(s, "a >= 1 and b >= 1");
    if (s.a + s.b > kMaxPoints) out_of_range(s, "a + b <= " + std::to_string(kMaxPoints));
    return;
  }
  if (s.n > kMaxPoints) out_of_range(s, "n <= " + std::to_string(kMaxPoints));
  switch (s.kind) {
    case FamilyKind::Path:
    case FamilyKind::Complete:
      if (s.n < 1) out_of_range(s, "n >= 1");
      return;
    case FamilyKind::Cycle:
      if (s.n < 3) out_of_range(s, "n >= 3");
      return;
    case FamilyKind::Q:
      if (s.c != 2 && s.c != 3) out_of_range(s, "c in {2,3}");
      if (s.n < (s.c == 3 ? 4 : 3)) out_of_range(s, s.c == 3 ? "n >= 4" : "n >= 3");
      return;
    case FamilyKind::S:
      if (s.c < 2 || s.c > 4) out_of_range(s, "c in {2,3,4}");
      if (s.n < s.c + 1) out_of_range(s, "n >= " + std::to_string(s.c + 1));
      return;
    case FamilyKind::R: {
      if (s.c < 2 || s.c > 4) out_of_range(s, "c in {2,3,4}");
      const int min_n = s.c == 4 ? 5 : 4;
      if (s.n < min_n) out_of_range(s, "n >= " + std::to_string(min_n));
      const int top = r_index_count(s.n, s.c);
      if (s.i < 1 || s.i > top) out_of_range(s, "1 <= i <= " + std::to_string(top));
      return;
    }
    case FamilyKind::T: {
      if (s.n < 6) out_of_range(s, "n >= 6");
      const int top = t_index_count(s.n);
      if (s.i < 1 || s.i > top) out_of_range(s, "1 <= i <= " + std::to_string(top));
      return;
    }
    case FamilyKind::CompleteBipartite: return;
  }
}

WeightedGraph build(const FamilySpec& s) {
  validate(s);
  if (s.kind == FamilyKind::CompleteBipartite) {
    WeightedGraph g(s.a + s.b);
    for (Point u = 0; u < s.a; ++u)
      for (Point v = s.a; v < s.a + s.b; ++v) g.add_edge(u, v);
    return g;
  }
  const int n = s.n;
  WeightedGraph g(n);
  switch (s.kind) {
    case FamilyKind::Path:
      for (Point p = 0; p + 1 < n; ++p) g.add_edge(p, p + 1);
      return g;
    case FamilyKind::Cycle:
      for (Point p = 0; p < n; ++p) g.add_edge(p, (p + 1) % n);
      return g;
    case FamilyKind::Complete:
      for (Point p = 0; p < n; ++p)
        for (Point q = p + 1; q < n; ++q) g.add_edge(p, q);
      return g;
    default: break;
  }
  if (s.kind == FamilyKind::T) {
    // x_1..x_{n-4} -> 0..n-5, then y, z, u, v.
    const Point y = n - 4, z = n - 3, u = n - 2, v = n - 1;
    const auto x = [](int j) { return static_cast<Point>(j - 1); };
    for (int j = 1; j <= n - 5; ++j)
      if (j != s.i) g.add_edge(x(j), x(j + 1));
    g.add_edge(x(s.i), y);
    g.add_edge(x(s.i), z);
    g.add_edge(y, u);
    g.add_edge(y, v);
    g.add_edge(z, u);
    g.add_edge(z, v);
    g.add_edge(u, x(s.i + 1));
    g.add_edge(v, x(s.i + 1));
    return g;
  }
  // x_1..x_{n-2} -> 0..n-3, y -> n-2, z -> n-1.
  const Point y = n - 2, z = n - 1;
  const auto x = [](int j) { return static_cast<Point>(j - 1); };
  const int last = n - 2;
  const bool cut = s.kind == FamilyKind::R;
  for (int j = 1; j < last; ++j)
    if (!(cut && j == s.i)) g.add_edge(x(j), x(j + 1));
  switch (s.kind) {
    case FamilyKind::Q:
      g.add_edge(y, x(1));
      g.add_edge(z, x(1));
      if (s.c == 2) g.add_edge(y, z);
      break;
    case FamilyKind::R: {
      const Rational far = s.c == 3 ? Rational(2) : Rational(1);
      g.add_edge(y, x(s.i));
      g.add_edge(z, x(s.i));
      g.add_edge(y, x(s.i + 1), far);
      g.add_edge(z, x(s.i + 1), far);
      if (s.c == 2) g.add_edge(y, z);
      break;
    }
    case FamilyKind::S:
      g.add_edge(x(1), y);
      g.add_edge(x(last), z, s.c == 3 ? Rational(2) : Rational(1));
      g.add_edge(y, z, Rational(s.c == 4 ? n - 3 : n - 2));
      break;
    default: break;
  }
  return g;
}

BetweennessStructure induced_structure(const FamilySpec& spec) { return induce_graph(build(spec)); }

std::vector<FamilySpec> qrs_specs(int max_n) {
  std::vector<FamilySpec> out;
  for (int n = 3; n <= max_n; ++n) {
    for (int c = 2; c <= 3; ++c)
      if (n >= (c == 3 ? 4 : 3)) out.push_back(q_spec(n, c));
    for (int c = 2; c <= 4; ++c) {
      if (n >= (c == 4 ? 5 : 4))
        for (int i = 1; i <= r_index_count(n, c); ++i) out.push_back(r_spec(n, i, c));
      if (n >= c + 1) out.push_back(s_spec(n, c));
    }
  }
  return out;
}

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("BWL_DATA_DIR"); env && *env) return env;
  return BWL_DEFAULT_DATA_DIR;
}

namespace {

std::string normalize_label(std::string label) {
  for (auto& ch : label)
    if (ch == '^') ch = '_';
  return label;
}

}  // namespace

std::vector<std::pair<std::string, WeightedGraph>> exceptional_catalog(const std::filesystem::path& dir) {
  std::vector<std::pair<std::string, WeightedGraph>> out;
  for (const auto& label : exceptional_labels()) {
    const auto path = dir / "exceptional" / (label + ".wg");
    if (!std::filesystem::exists(path)) throw Error("exceptional catalog entry missing: " + path.string());
    try {
      out.emplace_back(label, load_wg(path));
    } catch (const Error& e) {
      throw Error("ill-formed catalog file " + path.string() + ": " + e.what());
    }
  }
  return out;
}

WeightedGraph exceptional_graph(const std::string& label, const std::filesystem::path& dir) {
  const std::string key = normalize_label(label);
  for (auto& [name, g] : exceptional_catalog(dir))
    if (name == key) return g;
  throw Error("unknown exceptional label '" + label + "'");
}

}  // namespace bwl
