#include "bwl/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace bwl {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> fields;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.fields.push_back(tok);
    if (!line.fields.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw FormatError("line " + std::to_string(line.number) + ": " + what);
}

int to_int(const Line& line, const std::string& tok) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    fail(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) fail(line, "expected an integer, got '" + tok + "'");
  return v;
}

int read_header(const std::vector<Line>& lines) {
  if (lines.empty()) throw FormatError("empty input: expected 'n <count>'");
  const Line& h = lines.front();
  if (h.fields.size() != 2 || h.fields[0] != "n") fail(h, "expected 'n <count>'");
  const int n = to_int(h, h.fields[1]);
  if (n < 1 || n > kMaxPoints) fail(h, "point count must be in 1.." + std::to_string(kMaxPoints));
  return n;
}

Point to_point(const Line& line, const std::string& tok, int n) {
  const int p = to_int(line, tok);
  if (p < 0 || p >= n) fail(line, "point " + tok + " out of range");
  return p;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

}  // namespace

BetweennessStructure read_bws(std::istream& in) {
  const auto lines = tokenize(in);
  const int n = read_header(lines);
  BetweennessStructure b(n);
  std::vector<bool> seen(b.triple_total(), false);
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const Line& line = lines[l];
    if (line.fields.size() != 5 || line.fields[0] != "c") fail(line, "expected 'c i j k m'");
    const Point i = to_point(line, line.fields[1], n);
    const Point j = to_point(line, line.fields[2], n);
    const Point k = to_point(line, line.fields[3], n);
    const Point m = to_point(line, line.fields[4], n);
    if (i == j || j == k || i == k) fail(line, "triple has repeated points");
    if (m != i && m != j && m != k) fail(line, "middle is not a point of the triple");
    const std::size_t r = triple_rank(i, j, k);
    if (seen[r]) fail(line, "triple listed twice");
    seen[r] = true;
    const Point ends[2] = {m == i ? j : i, m == k ? j : k};
    b.set_between(ends[0], m, ends[1]);
  }
  return b;
}

std::string write_bws(const BetweennessStructure& b) {
  std::ostringstream os;
  os << "n " << b.size() << "\n";
  for (std::size_t r = 0; r < b.triple_total(); ++r) {
    const TripleState s = b.state(r);
    if (s.is_triangle()) continue;
    const Triple t = triple_unrank(r);
    os << "c " << t.a << " " << t.b << " " << t.c << " " << t[s.middle_slot()] << "\n";
  }
  return os.str();
}

WeightedGraph read_wg(std::istream& in) {
  const auto lines = tokenize(in);
  const int n = read_header(lines);
  WeightedGraph g(n);
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const Line& line = lines[l];
    if (line.fields.size() != 4 || line.fields[0] != "e") fail(line, "expected 'e u v w'");
    const Point u = to_point(line, line.fields[1], n);
    const Point v = to_point(line, line.fields[2], n);
    try {
      g.add_edge(u, v, parse_rational(line.fields[3]));
    } catch (const FormatError&) {
      throw;
    } catch (const Error& e) {
      fail(line, e.what());
    }
  }
  return g;
}

std::string write_wg(const WeightedGraph& g) {
  std::ostringstream os;
  os << "n " << g.size() << "\n";
  for (const auto& e : g.edges()) os << "e " << e.u << " " << e.v << " " << format_rational(e.weight) << "\n";
  return os.str();
}

TriangleHypergraph read_th(std::istream& in) {
  const auto lines = tokenize(in);
  const int n = read_header(lines);
  TriangleHypergraph h(n);
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const Line& line = lines[l];
    if (line.fields.size() != 4 || line.fields[0] != "t") fail(line, "expected 't i j k'");
    const Point i = to_point(line, line.fields[1], n);
    const Point j = to_point(line, line.fields[2], n);
    const Point k = to_point(line, line.fields[3], n);
    try {
      h.add_edge(i, j, k);
    } catch (const Error& e) {
      fail(line, e.what());
    }
  }
  return h;
}

std::string write_th(const TriangleHypergraph& h) {
  std::ostringstream os;
  os << "n " << h.size() << "\n";
  for (const auto& t : h.edges()) os << "t " << t.a << " " << t.b << " " << t.c << "\n";
  return os.str();
}

RationalMetric read_metric(std::istream& in) {
  const auto lines = tokenize(in);
  const int n = read_header(lines);
  std::vector<Rational> values;
  for (std::size_t l = 1; l < lines.size(); ++l)
    for (const auto& tok : lines[l].fields) {
      try {
        values.push_back(parse_rational(tok));
      } catch (const Error& e) {
        fail(lines[l], e.what());
      }
    }
  if (values.size() != pair_count(n)) {
    throw FormatError("expected " + std::to_string(pair_count(n)) + " distances, got " +
                      std::to_string(values.size()));
  }
  RationalMetric m(n);
  std::size_t k = 0;
  for (Point x = 0; x < n; ++x)
    for (Point y = x + 1; y < n; ++y) m.set(x, y, values[k++]);
  return m;
}

std::string write_metric(const RationalMetric& m) {
  std::ostringstream os;
  os << "n " << m.size() << "\n";
  for (Point x = 0; x + 1 < m.size(); ++x) {
    for (Point y = x + 1; y < m.size(); ++y) os << (y == x + 1 ? "" : " ") << format_rational(m.at(x, y));
    os << "\n";
  }
  return os.str();
}

BetweennessStructure load_bws(const std::filesystem::path& path) {
  auto in = open(path);
  return read_bws(in);
}

WeightedGraph load_wg(const std::filesystem::path& path) {
  auto in = open(path);
  return read_wg(in);
}

TriangleHypergraph load_th(const std::filesystem::path& path) {
  auto in = open(path);
  return read_th(in);
}

RationalMetric load_metric(const std::filesystem::path& path) {
  auto in = open(path);
  return read_metric(in);
}

void save_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

}  // namespace bwl
