#include "bwl/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "bwl/propagate.hpp"

namespace bwl {

const char* to_string(PropertyFilter f) {
  switch (f) {
    case PropertyFilter::Trivial: return "trivial";
    case PropertyFilter::Regular: return "regular";
    case PropertyFilter::Orderable: return "orderable";
  }
  return "?";
}

PropertyFilter parse_filter(const std::string& text) {
  if (text == "trivial") return PropertyFilter::Trivial;
  if (text == "regular") return PropertyFilter::Regular;
  if (text == "orderable") return PropertyFilter::Orderable;
  throw Error("unknown filter '" + text + "' (expected trivial, regular or orderable)");
}

bool satisfies_filter(const BetweennessStructure& b, PropertyFilter f) {
  switch (f) {
    case PropertyFilter::Trivial: return true;
    case PropertyFilter::Regular: return is_regular(b);
    case PropertyFilter::Orderable: return is_orderable(b).has_value();
  }
  return false;
}

int enumeration_max_points(bool long_run) {
  if (const char* env = std::getenv("BWL_MAX_N"); env && *env) {
    try {
      return std::min(std::stoi(env), kCanonicalMaxPoints);
    } catch (const std::exception&) {
      throw Error(std::string("BWL_MAX_N is not an integer: ") + env);
    }
  }
  return long_run ? 8 : 7;
}

void check_enumeration_guard(int n, const EnumerateOptions& opt) {
  if (n < 1) throw GuardError("enumeration requires n >= 1");
  const int top = enumeration_max_points(opt.long_run);
  if (n > top) {
    std::string hint = n == 8 && !opt.long_run ? " (n = 8 needs the long-run flag)" : " (set BWL_MAX_N to override)";
    throw GuardError("enumeration requires n <= " + std::to_string(top) + hint);
  }
}

std::uint64_t ClassificationResult::labeled_total() const {
  std::uint64_t s = 0;
  for (const auto& c : classes) s += c.labeled_count;
  return s;
}

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

TriangleHypergraph hypergraph_from_form(const CanonicalForm& form) {
  TriangleHypergraph h(form.n);
  for (std::size_t r = 0; r < form.bytes.size(); ++r)
    if (form.bytes[r]) {
      const Triple t = triple_unrank(r);
      h.add_edge(t.a, t.b, t.c);
    }
  return h;
}

ClassRecord make_record(const CanonicalForm& form) {
  ClassRecord rec{form, structure_from_form(form), 0};
  rec.labeled_count = factorial(form.n) / canonize(rec.representative).automorphisms;
  return rec;
}

NodePrune prune_for(PropertyFilter filter) {
  if (filter != PropertyFilter::Regular) return nullptr;
  return [](const PartialStructure& p, const std::vector<std::size_t>& changed) {
    return touches_cyclic_line(p, changed);
  };
}

// Walks the completions of h passing the filter; visit returns false to stop.
bool walk_completions(const TriangleHypergraph& h, PropertyFilter filter, const LeafVisit& visit) {
  PartialStructure p(h.size());
  if (!p.fix_triangles(h)) return true;
  return for_each_completion(p, prune_for(filter), [&](const BetweennessStructure& b) {
    if (filter == PropertyFilter::Orderable && !is_orderable(b)) return true;
    return visit(b);
  });
}

struct ClassOutcome {
  std::vector<CanonicalForm> forms;  // sorted, distinct
  std::size_t leaves = 0;
};

ClassOutcome classify_hypergraph(const TriangleHypergraph& h, PropertyFilter filter) {
  ClassOutcome out;
  std::set<CanonicalForm> seen;
  walk_completions(h, filter, [&](const BetweennessStructure& b) {
    ++out.leaves;
    seen.insert(canonical_form(b));
    return true;
  });
  out.forms.assign(seen.begin(), seen.end());
  return out;
}

unsigned worker_count(const EnumerateOptions& opt, std::size_t jobs) {
  unsigned w = opt.workers ? opt.workers : std::max(1u, std::thread::hardware_concurrency());
  if (!opt.checkpoint.empty()) w = 1;
  return static_cast<unsigned>(std::min<std::size_t>(w, std::max<std::size_t>(jobs, 1)));
}

// Checkpoint layout: a header line, then per finished hypergraph class
// "done <index> <leaves> <form-hex>...".
struct Checkpoint {
  std::filesystem::path path;
  std::string header;
  std::map<std::size_t, ClassOutcome> done;

  void load() {
    std::ifstream in(path);
    if (!in) return;
    std::string line;
    if (!std::getline(in, line)) return;
    if (line != header) throw Error("checkpoint " + path.string() + " belongs to a different run");
    while (std::getline(in, line)) {
      std::istringstream ss(line);
      std::string tag;
      std::size_t idx = 0;
      ClassOutcome o;
      if (!(ss >> tag >> idx >> o.leaves) || tag != "done") continue;  // torn trailing line
      for (std::string hex; ss >> hex;) o.forms.push_back(CanonicalForm::from_hex(hex));
      done[idx] = std::move(o);
    }
  }

  void append(std::size_t idx, const ClassOutcome& o) {
    const bool fresh = !std::filesystem::exists(path);
    std::ofstream out(path, std::ios::app);
    if (!out) throw Error("cannot write checkpoint " + path.string());
    if (fresh) out << header << "\n";
    out << "done " << idx << " " << o.leaves;
    for (const auto& f : o.forms) out << " " << f.hex();
    out << "\n";
  }
};

}  // namespace

const std::vector<TriangleHypergraph>& hypergraph_classes(int n, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<TriangleHypergraph>> cache;
  if (n < 1 || n > kCanonicalMaxPoints) throw GuardError("hypergraph classes need 1 <= n <= " + std::to_string(kCanonicalMaxPoints));
  if (m < 0 || static_cast<std::size_t>(m) > triple_count(n)) throw Error("edge count out of range");
  std::lock_guard lock(mu);
  // Build level by level so each level reuses the one below.
  int have = -1;
  for (int k = m; k >= 0; --k)
    if (cache.count({n, k})) {
      have = k;
      break;
    }
  if (have < 0) {
    cache[{n, 0}] = {TriangleHypergraph(n)};
    have = 0;
  }
  for (int k = have + 1; k <= m; ++k) {
    std::set<CanonicalForm> forms;
    for (const auto& h : cache[{n, k - 1}]) {
      for (std::size_t r = 0; r < triple_count(n); ++r) {
        if (h.has_edge(r)) continue;
        auto edges = h.edges();
        edges.push_back(triple_unrank(r));
        forms.insert(canonical_form(TriangleHypergraph(n, std::move(edges))));
      }
    }
    std::vector<TriangleHypergraph> level;
    level.reserve(forms.size());
    for (const auto& f : forms) level.push_back(hypergraph_from_form(f));
    cache[{n, k}] = std::move(level);
  }
  return cache[{n, m}];
}

std::vector<BetweennessStructure> completions(const TriangleHypergraph& h, PropertyFilter filter) {
  std::vector<BetweennessStructure> out;
  walk_completions(h, filter, [&](const BetweennessStructure& b) {
    out.push_back(b);
    return true;
  });
  return out;
}

std::optional<BetweennessStructure> first_completion(const TriangleHypergraph& h, PropertyFilter filter) {
  std::optional<BetweennessStructure> out;
  walk_completions(h, filter, [&](const BetweennessStructure& b) {
    out = b;
    return false;
  });
  return out;
}

std::vector<ClassRecord> classify(std::span<const BetweennessStructure> items) {
  std::set<CanonicalForm> forms;
  for (const auto& b : items) forms.insert(canonical_form(b));
  std::vector<ClassRecord> out;
  for (const auto& f : forms) out.push_back(make_record(f));
  return out;
}

ClassificationResult enumerate_structures(int n, int cosize, PropertyFilter filter, const EnumerateOptions& opt) {
  check_enumeration_guard(n, opt);
  if (cosize < 0 || static_cast<std::size_t>(cosize) > triple_count(n))
    throw Error("co-size must lie in 0.." + std::to_string(triple_count(n)));
  const auto start = std::chrono::steady_clock::now();
  const auto& hs = hypergraph_classes(n, cosize);
  std::vector<ClassOutcome> outcomes(hs.size());
  std::vector<bool> finished(hs.size(), false);

  std::optional<Checkpoint> cp;
  if (!opt.checkpoint.empty()) {
    cp = Checkpoint{opt.checkpoint, "bwl-checkpoint 1 n=" + std::to_string(n) + " cosize=" + std::to_string(cosize) +
                                         " filter=" + to_string(filter),
                    {}};
    cp->load();
    for (auto& [idx, o] : cp->done)
      if (idx < hs.size()) {
        outcomes[idx] = std::move(o);
        finished[idx] = true;
      }
  }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < hs.size();) {
      if (finished[i]) continue;
      outcomes[i] = classify_hypergraph(hs[i], filter);
      if (cp) cp->append(i, outcomes[i]);
    }
  };
  const unsigned workers = worker_count(opt, hs.size());
  std::vector<std::future<void>> pool;
  for (unsigned w = 1; w < workers; ++w) pool.push_back(std::async(std::launch::async, work));
  work();
  for (auto& f : pool) f.get();

  ClassificationResult res;
  res.n = n;
  res.cosize = cosize;
  res.filter = filter;
  res.hypergraph_classes = hs.size();
  for (const auto& o : outcomes) {
    res.leaves += o.leaves;
    for (const auto& f : o.forms) res.classes.push_back(make_record(f));
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::optional<BetweennessStructure> find_structure(int n, int cosize, PropertyFilter filter, const EnumerateOptions& opt) {
  check_enumeration_guard(n, opt);
  if (cosize < 0 || static_cast<std::size_t>(cosize) > triple_count(n)) return std::nullopt;
  for (const auto& h : hypergraph_classes(n, cosize))
    if (auto b = first_completion(h, filter)) return b;
  return std::nullopt;
}

TauResult tau(int n, int k, PropertyFilter filter, const EnumerateOptions& opt) {
  check_enumeration_guard(n, opt);
  const int top = static_cast<int>(triple_count(n));
  for (int m = std::max(k + 1, 0); m <= top; ++m)
    if (auto b = find_structure(n, m, filter, opt)) return {m, *b};
  throw Error("no co-size above " + std::to_string(k) + " is attained at n = " + std::to_string(n));
}

TauResult tau_second(int n, PropertyFilter filter, const EnumerateOptions& opt) {
  if (n < 4) throw Error("tau_second requires n >= 4");
  return tau(n, n - 2, filter, opt);
}

std::vector<ProbeRow> probe_gamma_sigma(int k, int c, int n_from, int n_to, const EnumerateOptions& opt) {
  std::vector<ProbeRow> rows;
  for (int n = n_from; n <= n_to; ++n) {
    ProbeRow row{n, static_cast<long>(k) * n - c, false, false};
    if (row.m < 0 || row.m > static_cast<long>(triple_count(n))) {
      row.trivial = true;
    } else {
      row.nonempty = find_structure(n, static_cast<int>(row.m), PropertyFilter::Trivial, opt).has_value();
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace bwl
