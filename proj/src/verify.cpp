#include "bwl/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "bwl/families.hpp"
#include "bwl/hyper.hpp"
#include "bwl/io.hpp"
#include "bwl/iso.hpp"
#include "bwl/metrize.hpp"

namespace bwl {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skip: return "SKIP";
    case Verdict::Info: return "INFO";
  }
  return "?";
}

namespace {

using FormSet = std::set<CanonicalForm>;

class ClaimRun {
 public:
  ClaimRun(std::string id, const VerifyOptions& opt) : opt_(opt) { report_.claim = std::move(id); }

  const VerifyOptions& options() const { return opt_; }
  EnumerateOptions enum_options() const {
    EnumerateOptions e;
    e.long_run = opt_.long_run;
    e.workers = 1;  // claims already run side by side
    return e;
  }
  int top(int hi) const { return std::min(hi, opt_.max_n); }

  void params(std::string p) { report_.params = std::move(p); }
  void note(const std::string& line) { report_.details.push_back(line); }

  /// Records a failed check; returns ok so callers can chain.
  bool expect(bool ok, const std::string& what) {
    if (!ok) {
      failed_ = true;
      note("FAIL " + what);
    }
    return ok;
  }

  void witness(const std::string& name, const std::string& text) {
    if (opt_.out_dir.empty()) return;
    const auto path = opt_.out_dir / report_.claim / name;
    save_text(path, text);
    report_.witnesses.push_back(path);
  }
  void witness(const std::string& name, const BetweennessStructure& b) { witness(name + ".bws", write_bws(b)); }

  /// Saves b as a counterexample and fails.
  void counterexample(const std::string& what, const BetweennessStructure& b) {
    expect(false, what);
    witness("counterexample-" + std::to_string(++counterexamples_), b);
  }

  void skip(const std::string& why) {
    skipped_ = true;
    note(why);
  }
  void info() { info_ = true; }

  ClaimReport finish(double seconds) {
    report_.seconds = seconds;
    report_.verdict = failed_ ? Verdict::Fail : skipped_ ? Verdict::Skip : info_ ? Verdict::Info : Verdict::Pass;
    return std::move(report_);
  }

 private:
  const VerifyOptions& opt_;
  ClaimReport report_;
  bool failed_ = false;
  bool skipped_ = false;
  bool info_ = false;
  int counterexamples_ = 0;
};

std::string range_text(int lo, int hi) { return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi); }

std::string list_text(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

FormSet forms_of(const ClassificationResult& r) {
  FormSet s;
  for (const auto& c : r.classes) s.insert(c.form);
  return s;
}

FormSet forms_of(const std::vector<FamilySpec>& specs) {
  FormSet s;
  for (const auto& spec : specs) s.insert(canonical_form(induced_structure(spec)));
  return s;
}

std::string names_of(const std::vector<FamilySpec>& specs) {
  std::string s;
  for (const auto& spec : specs) s += (s.empty() ? "" : ", ") + spec.name();
  return s;
}

// Families of co-size n - c with 2 <= c <= 4 (the tight-star characterization).
std::vector<FamilySpec> tight_star_families(int n, int c) {
  std::vector<FamilySpec> out;
  if (c == 2 || c == 3) {
    if (n >= (c == 3 ? 4 : 3)) out.push_back(q_spec(n, c));
  }
  const int min_r = c == 4 ? 5 : 4;
  if (n >= min_r)
    for (int i = 1; i <= r_index_count(n, c); ++i) out.push_back(r_spec(n, i, c));
  if (n >= c + 1) out.push_back(s_spec(n, c));
  return out;
}

std::vector<FamilySpec> t_families(int n) {
  std::vector<FamilySpec> out;
  if (n >= 6)
    for (int i = 1; i <= t_index_count(n); ++i) out.push_back(t_spec(n, i));
  return out;
}

// Quasilinear classes expected at order n: the R/S families plus the catalog.
FormSet expected_quasilinear(int n, std::string* names) {
  auto specs = n >= 5 ? tight_star_families(n, 4) : std::vector<FamilySpec>{};
  FormSet s = forms_of(specs);
  std::string text = names_of(specs);
  for (const auto& [label, g] : exceptional_catalog(data_directory())) {
    if (g.size() != n) continue;
    s.insert(canonical_form(induce_graph(g)));
    text += (text.empty() ? "" : ", ") + label;
  }
  if (names) *names = text;
  return s;
}

bool matches(ClaimRun& run, const FormSet& got, const FormSet& want, const std::string& what) {
  return run.expect(got == want, what + ": got " + std::to_string(got.size()) + " classes, expected " +
                                     std::to_string(want.size()));
}

TriangleHypergraph tight_star_hypergraph(int n, int m) {
  TriangleHypergraph h(n);
  for (int a = 0; a < m; ++a) h.add_edge(0, 1, a + 2);
  return h;
}

bool kernel_is(const TriangleHypergraph& h, Point p, Point q) {
  const auto k = is_tight_star(h);
  return k && ((*k)[0] == std::min(p, q) && (*k)[1] == std::max(p, q));
}

// ---------------------------------------------------------------------------

void claim_plin(ClaimRun& run) {
  const int hi = run.top(7);
  run.params("n=" + range_text(3, hi));
  std::vector<int> counts;
  for (int n = 3; n <= hi; ++n) {
    const auto r = enumerate_structures(n, 0, PropertyFilter::Trivial, run.enum_options());
    counts.push_back(static_cast<int>(r.classes.size()));
    FormSet want = forms_of({path_spec(n)});
    if (n == 4) want.insert(canonical_form(induced_structure(cycle_spec(4))));
    matches(run, forms_of(r), want, "n=" + std::to_string(n) + " linear classes");
    for (const auto& c : r.classes) run.witness("class-" + c.form.hex().substr(c.form.hex().find(':') + 1), c.representative);
  }
  run.note("class counts " + list_text(counts));
}

void claim_tau(ClaimRun& run, PropertyFilter filter) {
  const int lo = filter == PropertyFilter::Regular ? 4 : 3;
  const int hi = run.top(7);
  run.params("n=" + range_text(lo, hi) + " filter=" + to_string(filter));
  std::vector<int> got;
  for (int n = lo; n <= hi; ++n) {
    const int expected = filter == PropertyFilter::Trivial   ? std::max(1, n - 4)
                         : filter == PropertyFilter::Regular ? std::max(1, n - 3)
                                                             : n - 2;
    const auto t = tau(n, 0, filter, run.enum_options());
    got.push_back(t.value);
    run.expect(t.value == expected,
               "tau(" + std::to_string(n) + ",0) = " + std::to_string(t.value) + ", expected " + std::to_string(expected));
    run.witness("tau-n" + std::to_string(n), t.witness);
    if (filter == PropertyFilter::Trivial) continue;
    // Extremal classes.
    std::vector<FamilySpec> specs;
    if (filter == PropertyFilter::Regular) specs = n == 3 ? std::vector<FamilySpec>{complete_spec(3)} : tight_star_families(n, 3);
    else specs = tight_star_families(n, 2);
    const auto r = enumerate_structures(n, t.value, filter, run.enum_options());
    matches(run, forms_of(r), forms_of(specs), "n=" + std::to_string(n) + " extremal classes vs {" + names_of(specs) + "}");
  }
  run.note("tau values " + list_text(got));
}

void claim_lsmallgr(ClaimRun& run) {
  const int hi = run.top(7);
  run.params("n=" + range_text(3, hi));
  std::vector<int> counts;
  for (int n = 3; n <= hi; ++n) {
    const int m = std::max(1, n - 4);
    const auto r = enumerate_structures(n, m, PropertyFilter::Trivial, run.enum_options());
    counts.push_back(static_cast<int>(r.classes.size()));
    std::string names;
    const FormSet want = expected_quasilinear(n, &names);
    matches(run, forms_of(r), want, "n=" + std::to_string(n) + " quasilinear classes vs {" + names + "}");
    for (const auto& c : r.classes)
      if (!want.count(c.form)) run.counterexample("unexpected quasilinear class at n=" + std::to_string(n), c.representative);
  }
  run.note("quasilinear class counts " + list_text(counts));
}

void all_tight_star(ClaimRun& run, int n, int m, PropertyFilter filter) {
  const auto r = enumerate_structures(n, m, filter, run.enum_options());
  std::size_t good = 0;
  for (const auto& c : r.classes) {
    if (is_tight_star(triangle_hypergraph(c.representative))) ++good;
    else run.counterexample("hypergraph is not a tight star", c.representative);
  }
  run.note(std::to_string(good) + "/" + std::to_string(r.classes.size()) + " classes (" +
           std::to_string(r.labeled_total()) + " labeled structures) have tight-star hypergraphs");
}

void claim_cn5(ClaimRun& run) {
  run.params("n=5 cosize=2 filter=regular");
  all_tight_star(run, 5, 2, PropertyFilter::Regular);
}

void claim_crn7(ClaimRun& run) {
  if (run.options().max_n < 7) return run.skip("needs max-n >= 7");
  run.params("n=7 cosize=3");
  all_tight_star(run, 7, 3, PropertyFilter::Trivial);
}

void claim_cmetr7(ClaimRun& run) {
  run.params("n=7 hypergraphs=1,2,3");
  const auto t71 = induced_structure(t_spec(7, 1));
  const auto v1 = metrize_hypergraph(seven_point_case(1), true);
  run.expect(v1.metrizable, "case 1 hypergraph should be metrizable");
  run.expect(v1.classes.size() == 1, "case 1 should have exactly one realizing class, got " + std::to_string(v1.classes.size()));
  for (const auto& c : v1.classes) {
    run.expect(is_isomorphic(c.representative, t71), "case 1 realizing class is not T_{7,1}");
    run.witness("case1-structure", c.representative);
  }
  if (v1.metric) run.witness("case1.metric", write_metric(*v1.metric));
  run.note("case 1: metrizable, " + std::to_string(v1.classes.size()) + " realizing class, " +
           std::to_string(v1.assignments) + " assignments");
  for (int which : {2, 3}) {
    const auto v = metrize_hypergraph(seven_point_case(which), true);
    run.expect(!v.metrizable, "case " + std::to_string(which) + " hypergraph should not be metrizable");
    if (v.structure) run.counterexample("case " + std::to_string(which) + " realized", *v.structure);
    run.note("case " + std::to_string(which) + ": not metrizable (" + (v.reason ? to_string(*v.reason) : "?") + ")");
  }
}

void claim_fano(ClaimRun& run) {
  run.params("n=7 lines=7");
  const auto v = metrize_hypergraph(fano_complement_hypergraph(), true);
  run.expect(!v.metrizable, "Fano hypergraph should not be metrizable");
  if (v.structure) run.counterexample("Fano realization", *v.structure);
  std::size_t feasible = 0;
  for (const auto& c : v.classes) feasible += c.metrizable;
  run.note(std::string("verdict ") + (v.metrizable ? "metrizable" : "not metrizable") +
           (v.reason ? std::string(" (") + to_string(*v.reason) + ")" : "") + ", " + std::to_string(v.assignments) +
           " almost-metrizable assignments in " + std::to_string(v.classes.size()) + " classes, " +
           std::to_string(feasible) + " LP-feasible");
}

void claim_family_cosizes(ClaimRun& run) {
  run.params("Q,R,S n<=10; T n=6..12");
  std::size_t checked = 0;
  for (const auto& spec : qrs_specs(10)) {
    const auto b = induced_structure(spec);
    const int want = spec.n - spec.c;
    ++checked;
    run.expect(static_cast<int>(cosize(b)) == want, spec.name() + " co-size " + std::to_string(cosize(b)));
    run.expect(check_frp(b), spec.name() + " violates the four relations property");
  }
  for (int n = 6; n <= 12; ++n)
    for (const auto& spec : t_families(n)) {
      const auto b = induced_structure(spec);
      ++checked;
      run.expect(static_cast<int>(cosize(b)) == 2 * n - 10, spec.name() + " co-size " + std::to_string(cosize(b)));
      const auto h = triangle_hypergraph(b);
      if (n >= 7) {
        run.expect(!is_tight_star(h), spec.name() + " hypergraph is a tight star");
        if (n <= kTightKStarMaxPoints) run.expect(is_tight_k_star(h, 2), spec.name() + " hypergraph is not a tight 2-star");
      }
    }
  run.note(std::to_string(checked) + " family members checked");
}

void claim_tlinsize1(ClaimRun& run) {
  const int hi = run.top(7);
  const auto eo = run.enum_options();
  run.params("n=" + range_text(3, hi));
  // Part 1: c > 4.
  for (int n = 5; n <= hi; ++n)
    for (int c = 5; c <= n; ++c) {
      const bool nonempty = find_structure(n, n - c, PropertyFilter::Trivial, eo).has_value();
      run.expect(nonempty == (n == c), "part 1: B(" + std::to_string(n) + "," + std::to_string(n - c) + ") emptiness");
    }
  // Part 2: 2 <= c <= 4, nonempty iff n >= c; characterization from n >= 11 - c.
  for (int c = 2; c <= 4; ++c)
    for (int n = std::max(3, c); n <= hi; ++n) {
      if (n - c < 0) continue;
      run.expect(find_structure(n, n - c, PropertyFilter::Trivial, eo).has_value(),
                 "part 2: B(" + std::to_string(n) + "," + std::to_string(n - c) + ") empty");
      if (n >= 11 - c) {
        const auto specs = tight_star_families(n, c);
        const auto r = enumerate_structures(n, n - c, PropertyFilter::Trivial, eo);
        matches(run, forms_of(r), forms_of(specs),
                "part 2: B(" + std::to_string(n) + "," + std::to_string(n - c) + ") vs {" + names_of(specs) + "}");
      }
    }
  // Part 4: n = 10 - c has a structure whose hypergraph is not a tight star.
  for (int c = 4; c >= 2; --c) {
    const int n = 10 - c;
    if (n > hi) {
      run.note("part 4 at c=" + std::to_string(c) + " (n=" + std::to_string(n) + ") beyond max-n");
      continue;
    }
    const auto r = enumerate_structures(n, n - c, PropertyFilter::Trivial, eo);
    const auto it = std::find_if(r.classes.begin(), r.classes.end(), [](const ClassRecord& rec) {
      return !is_tight_star(triangle_hypergraph(rec.representative));
    });
    if (run.expect(it != r.classes.end(), "part 4: B(" + std::to_string(n) + "," + std::to_string(n - c) + ") has no non-tight-star member"))
      run.witness("part4-n" + std::to_string(n), it->representative);
  }
  run.note("part 3 (c < 2, n >= 11 - c >= 10) lies beyond the enumeration range");
}

void claim_tlinsize3(ClaimRun& run) {
  const int hi = run.top(8);
  run.params("n=" + range_text(4, hi));
  std::vector<int> got;
  for (int n = 4; n <= hi; ++n) {
    const auto t = tau_second(n, PropertyFilter::Trivial, run.enum_options());
    got.push_back(t.value);
    run.expect(t.value == n - 1, "tau(" + std::to_string(n) + "," + std::to_string(n - 2) + ") = " + std::to_string(t.value));
    run.witness("tau2-n" + std::to_string(n), t.witness);
  }
  run.note("tau(n,n-2) values " + list_text(got));
}

void claim_tlinsize2(ClaimRun& run) {
  const int hi = run.top(8);
  const auto eo = run.enum_options();
  run.params("n=" + range_text(3, hi));
  // Part 1: c >= 11.
  for (int n = 3; n <= hi; ++n)
    for (int c = 11; c <= 2 * n; ++c) {
      const bool want = 2 * n == c || (c - 4 <= n && n <= c - 2);
      const bool got = find_structure(n, 2 * n - c, PropertyFilter::Trivial, eo).has_value();
      run.expect(got == want, "part 1: B(" + std::to_string(n) + "," + std::to_string(2 * n - c) + ") emptiness");
    }
  // Part 2: B(n, 2n - 10) nonempty iff n >= 5.
  for (int n = 5; n <= hi; ++n)
    run.expect(find_structure(n, 2 * n - 10, PropertyFilter::Trivial, eo).has_value(),
               "part 2: B(" + std::to_string(n) + "," + std::to_string(2 * n - 10) + ") empty");
  // Part 3: for 6 <= n < 9 some member is not a T graph.
  for (int n = 6; n <= std::min(hi, 8); ++n) {
    const auto r = enumerate_structures(n, 2 * n - 10, PropertyFilter::Trivial, eo);
    const FormSet ts = forms_of(t_families(n));
    const auto it = std::find_if(r.classes.begin(), r.classes.end(),
                                 [&](const ClassRecord& rec) { return !ts.count(rec.form); });
    if (run.expect(it != r.classes.end(), "part 3: every member of B(" + std::to_string(n) + "," +
                                              std::to_string(2 * n - 10) + ") is a T graph"))
      run.witness("part3-n" + std::to_string(n), it->representative);
    run.note("B(" + std::to_string(n) + "," + std::to_string(2 * n - 10) + "): " + std::to_string(r.classes.size()) + " classes");
  }
  // Beyond the enumeration range: the T members themselves.
  for (int i = 1; i <= t_index_count(9); ++i) {
    const auto b = induced_structure(t_spec(9, i));
    run.expect(check_frp(b) && cosize(b) == 8, "T_{9," + std::to_string(i) + "} is not in B(9,8)");
  }
  run.note("T_{9,1}, T_{9,2} lie in B(9,8); the n >= 9 classification is not enumerated");
}

void claim_out_of_scope(ClaimRun& run, const std::string& what) {
  run.params("out-of-scope");
  run.skip(what);
}

void claim_tlinsize3_large(ClaimRun& run) {
  if (run.options().max_n >= 8) {
    run.params("n=9");
    return run.skip("tau(9,7) = 8 needs n = 9, beyond the enumeration range");
  }
  run.params("n=8,9");
  run.skip("tau(n,n-2) at n = 8 needs the long-run flag with max-n 8; n = 9 is beyond the enumeration range");
}

void claim_lcyc(ClaimRun& run) {
  const int hi = run.top(7);
  run.params("n=" + range_text(5, hi));
  for (int n = 6; n <= hi; ++n)
    run.expect(!find_structure(n, 1, PropertyFilter::Trivial, run.enum_options()),
               "B(" + std::to_string(n) + ",1) is nonempty");
  run.expect(!find_structure(5, 1, PropertyFilter::Regular, run.enum_options()), "a regular member of B(5,1) exists");
}

void claim_otstar(ClaimRun& run) {
  const int hi = run.top(7);
  run.params("n=" + range_text(3, hi) + " 1<=c<=n-1");
  std::size_t instances = 0;
  for (int n = 3; n <= hi; ++n)
    for (int c = 1; c <= n - 1; ++c) {
      if (!(n > 2 * c - 1)) continue;
      const int m = n - c;
      if (static_cast<std::size_t>(m) > triple_count(n)) continue;
      for (const auto& h : hypergraph_classes(n, m)) {
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        for (const auto& e : h.edges()) ++deg[e.a], ++deg[e.b], ++deg[e.c];
        const bool condition = std::all_of(deg.begin(), deg.end(), [&](int d) { return d == m || d <= 1; });
        if (!condition) continue;
        const auto b = first_completion(h, PropertyFilter::Trivial);
        if (!b) continue;
        ++instances;
        if (!is_tight_star(h)) run.counterexample("degree condition holds but hypergraph is not a tight star", *b);
      }
    }
  run.note(std::to_string(instances) + " hypergraph classes meet the hypotheses");
}

void claim_okern(ClaimRun& run) {
  const int hi = run.top(7);
  run.params("n=" + range_text(6, hi));
  std::size_t instances = 0;
  for (int n = 6; n <= hi; ++n) {
    const auto r = enumerate_structures(n, n - 4, PropertyFilter::Trivial, run.enum_options());
    for (const auto& c : r.classes) {
      const auto k = is_tight_star(triangle_hypergraph(c.representative));
      if (!k) continue;
      ++instances;
      const auto lines = find_cyclic_lines(c.representative);
      const bool ok = lines.size() == 1 && std::count(lines[0].begin(), lines[0].end(), (*k)[0]) == 1 &&
                      std::count(lines[0].begin(), lines[0].end(), (*k)[1]) == 1;
      if (!ok) run.counterexample("expected one cyclic line through the kernel", c.representative);
    }
  }
  run.note(std::to_string(instances) + " tight-star quasilinear classes checked");
}

void claim_o6qlin(ClaimRun& run) {
  run.params("n=6 cosize=2");
  const auto r = enumerate_structures(6, 2, PropertyFilter::Trivial, run.enum_options());
  const auto s = induced_structure(s_spec(6, 4));
  const auto r1 = induced_structure(r_spec(6, 1, 4));
  const auto r2 = induced_structure(r_spec(6, 2, 4));
  // Family labels: x_1..x_4 -> 0..3, y -> 4, z -> 5.
  auto place = [](const BetweennessStructure& fam, Point y, Point z, std::array<Point, 4> xs) {
    std::vector<Point> perm(6);
    for (int j = 0; j < 4; ++j) perm[j] = xs[j];
    perm[4] = y;
    perm[5] = z;
    return relabel(fam, perm);
  };
  std::size_t hits[4] = {0, 0, 0, 0};
  for (const auto& c : r.classes)
    for (const auto& b : labeled_members(c.representative)) {
      const auto h = triangle_hypergraph(b);
      if (!is_tight_star(h)) continue;
      for (Point q = 0; q < 6; ++q) {
        std::vector<Point> rest;
        for (Point x = 0; x < 6; ++x)
          if (x != q) rest.push_back(x);
        const auto order = is_ordered(restrict_to(b, rest));
        if (!order) continue;
        for (int dir = 0; dir < 2; ++dir) {
          std::array<Point, 5> p;
          for (int j = 0; j < 5; ++j) p[j] = rest[order->perm[dir ? 4 - j : j]];
          for (int i = 1; i <= 3; ++i) {
            if (!kernel_is(h, p[i - 1], q)) continue;
            ++hits[i];
            BetweennessStructure want(6);
            if (i == 1) want = place(s, p[0], q, {p[1], p[2], p[3], p[4]});
            else if (i == 2) want = place(r1, q, p[1], {p[0], p[2], p[3], p[4]});
            else want = place(r2, q, p[2], {p[0], p[1], p[3], p[4]});
            if (!(b == want)) run.counterexample("kernel position " + std::to_string(i) + " mismatch", b);
          }
        }
      }
    }
  run.note("labeled instances with kernel position 1/2/3: " + std::to_string(hits[1]) + "/" +
           std::to_string(hits[2]) + "/" + std::to_string(hits[3]));
  run.expect(hits[1] && hits[2] && hits[3], "some kernel position never occurred");
}

void claim_lgen2a(ClaimRun& run) {
  const int hi = run.top(7);
  run.params("n<=" + std::to_string(hi) + " (trivial,c=4) (regular,c=3) (orderable,c=2)");
  const std::pair<PropertyFilter, int> cases[] = {
      {PropertyFilter::Trivial, 4}, {PropertyFilter::Regular, 3}, {PropertyFilter::Orderable, 2}};
  for (const auto& [filter, c] : cases) {
    // Hypothesis tau_filter(n', 0) >= n' - c on the probed range.
    for (int n = 3; n <= hi; ++n)
      run.expect(tau(n, 0, filter, run.enum_options()).value >= n - c,
                 std::string("hypothesis fails for ") + to_string(filter) + " at n=" + std::to_string(n));
    std::size_t count = 0;
    for (int n = c + 1; n <= hi; ++n) {
      const auto r = enumerate_structures(n, n - c, filter, run.enum_options());
      for (const auto& rec : r.classes) {
        ++count;
        const auto h = triangle_hypergraph(rec.representative);
        if (!is_delta_star(h)) run.counterexample("hypergraph is not a delta-star", rec.representative);
        else if (n > 2 * c - 1 && !is_tight_star(h)) run.counterexample("hypergraph is not a tight star", rec.representative);
      }
    }
    run.note(std::string(to_string(filter)) + ": " + std::to_string(count) + " classes checked");
  }
}

void claim_lgen3(ClaimRun& run) {
  const int hi = run.top(7);
  run.params("n=" + range_text(3, hi) + " tight-star hypergraphs");
  for (int n = 3; n <= hi; ++n)
    for (int m = 1; m <= n - 2; ++m) {
      const int c = n - m;
      const auto filter = n == 5 ? PropertyFilter::Regular : PropertyFilter::Trivial;
      const auto all = completions(tight_star_hypergraph(n, m), filter);
      const auto classes = classify(all);
      FormSet got;
      for (const auto& rec : classes) got.insert(rec.form);
      auto specs = c >= 2 && c <= 4 ? tight_star_families(n, c) : std::vector<FamilySpec>{};
      if (filter == PropertyFilter::Regular)
        std::erase_if(specs, [](const FamilySpec& s) { return !is_regular(induced_structure(s)); });
      matches(run, got, forms_of(specs),
              "n=" + std::to_string(n) + " c=" + std::to_string(c) + " vs {" + names_of(specs) + "}");
    }
}

void probe_table(ClaimRun& run, int k, int c, int n_from, int n_to, std::vector<ProbeRow>* out = nullptr) {
  const auto rows = probe_gamma_sigma(k, c, n_from, n_to, run.enum_options());
  std::string line = "B(n," + std::to_string(k) + "n-" + std::to_string(c) + "):";
  for (const auto& row : rows) line += " n=" + std::to_string(row.n) + (row.nonempty ? ":yes" : ":no");
  run.note(line);
  if (out) *out = rows;
}

void claim_crl1(ClaimRun& run) {
  const int hi = run.top(7);
  run.params("k=1 n<=" + std::to_string(hi));
  // sigma(1, c) = c - 1 for 2 <= c <= 4: empty at n = c - 1, nonempty from n = c on.
  for (int c = 2; c <= 4; ++c) {
    std::vector<ProbeRow> rows;
    probe_table(run, 1, c, std::max(1, c - 1), hi, &rows);
    for (const auto& row : rows)
      run.expect(row.nonempty == (row.n >= c), "sigma(1," + std::to_string(c) + ") row n=" + std::to_string(row.n));
  }
  // gamma(1, c) = c for c > 4: nonempty at n = c, empty beyond.
  for (int c = 5; c <= hi; ++c) {
    std::vector<ProbeRow> rows;
    probe_table(run, 1, c, c, hi, &rows);
    for (const auto& row : rows)
      run.expect(row.nonempty == (row.n == c), "gamma(1," + std::to_string(c) + ") row n=" + std::to_string(row.n));
  }
}

void claim_crl2(ClaimRun& run) {
  const int hi = run.top(7);
  run.params("k=2 c=10 n<=" + std::to_string(hi));
  std::vector<ProbeRow> rows;
  probe_table(run, 2, 10, 4, hi, &rows);
  for (const auto& row : rows)
    run.expect(row.nonempty == (row.n >= 5), "sigma(2,10) row n=" + std::to_string(row.n));
}

void claim_theta2(ClaimRun& run) {
  const int hi = run.top(7);
  run.info();
  run.params("k=2 c=6..10 n<=" + std::to_string(hi));
  for (int c = 6; c <= 10; ++c) probe_table(run, 2, c, 3, hi);
  run.note("data only; no value of the smallest c with unbounded support is asserted");
}

void claim_cnktight(ClaimRun& run) {
  const int hi = run.top(7);
  run.info();
  run.params("(k,c)=(1,4),(2,10) n<=" + std::to_string(hi));
  for (const auto& [k, c] : {std::pair{1, 4}, std::pair{2, 10}})
    for (int n = 5; n <= hi; ++n) {
      const int m = k * n - c;
      if (m < 0) continue;
      const auto r = enumerate_structures(n, m, PropertyFilter::Trivial, run.enum_options());
      std::size_t good = 0;
      for (const auto& rec : r.classes) good += is_tight_k_star(triangle_hypergraph(rec.representative), k);
      run.note("k=" + std::to_string(k) + " c=" + std::to_string(c) + " n=" + std::to_string(n) + ": " +
               std::to_string(good) + "/" + std::to_string(r.classes.size()) + " classes are tight " +
               std::to_string(k) + "-stars");
    }
}

struct Entry {
  ClaimInfo info;
  std::function<void(ClaimRun&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{"plin", "linear structures are the paths and C_4", "n=3..7", "seconds"}, claim_plin},
      {{"tqus1", "tau(n,0) = max{1, n-4}", "n=3..7", "seconds"},
       [](ClaimRun& r) { claim_tau(r, PropertyFilter::Trivial); }},
      {{"tqus2", "regular: tau(n,0) = max{1, n-3} and its extremal classes", "n=4..7", "seconds"},
       [](ClaimRun& r) { claim_tau(r, PropertyFilter::Regular); }},
      {{"tqus3", "orderable: tau(n,0) = n-2 and its extremal classes", "n=3..7", "seconds"},
       [](ClaimRun& r) { claim_tau(r, PropertyFilter::Orderable); }},
      {{"lsmallgr", "quasilinear classes of order at most 7", "n=3..7", "seconds"}, claim_lsmallgr},
      {{"families", "co-sizes of the Q, R, S, T families", "n<=12", "seconds"}, claim_family_cosizes},
      {{"tlinsize1", "B(n, n-c) emptiness and characterization", "n=3..7", "seconds"}, claim_tlinsize1},
      {{"tlinsize1-part3", "B(n, n-c) empty for c < 2, n >= 11-c", "n>=10", "out-of-scope"},
       [](ClaimRun& r) { claim_out_of_scope(r, "needs n >= 10, beyond the enumeration range"); }},
      {{"tlinsize2", "B(n, 2n-c) for c >= 10", "n=3..8", "seconds"}, claim_tlinsize2},
      {{"tlinsize2-large", "B(n, 2n-10) consists of T graphs for n >= 9", "n>=9", "out-of-scope"},
       [](ClaimRun& r) { claim_out_of_scope(r, "classification at n >= 9 is beyond the enumeration range; "
                                               "membership of T_{9,i} is checked under tlinsize2"); }},
      {{"tlinsize3", "tau(n, n-2) = n-1", "n=4..8", "seconds"}, claim_tlinsize3},
      {{"tlinsize3-large", "tau(n, n-2) at the upper end", "n=8,9", "out-of-scope"}, claim_tlinsize3_large},
      {{"crl1", "finite consequences for k = 1", "n<=7", "seconds"}, claim_crl1},
      {{"crl2", "finite consequences for k = 2, c = 10", "n<=7", "seconds"}, claim_crl2},
      {{"lcyc", "no co-size 1 structure for n >= 6, none regular at n = 5", "n=5..7", "seconds"}, claim_lcyc},
      {{"otstar", "degree condition forces a tight star", "n<=7", "seconds"}, claim_otstar},
      {{"lgen2a", "delta-star and tight-star conclusions", "n<=7", "seconds"}, claim_lgen2a},
      {{"lgen3", "tight-star structures are Q, R or S", "n<=7", "seconds"}, claim_lgen3},
      {{"cn5", "regular B(5,2) members have tight-star hypergraphs", "n=5", "seconds"}, claim_cn5},
      {{"crn7", "B(7,3) members have tight-star hypergraphs", "n=7", "seconds"}, claim_crn7},
      {{"okern", "tight-star quasilinear structures have one cyclic line through the kernel", "n=6..7", "seconds"},
       claim_okern},
      {{"o6qlin", "labeled identification of B(6,2) by kernel position", "n=6", "seconds"}, claim_o6qlin},
      {{"cmetr7", "the three 7-point case hypergraphs", "n=7", "seconds"}, claim_cmetr7},
      {{"fano", "the Fano-plane hypergraph is not metrizable", "n=7", "seconds"}, claim_fano},
      {{"theta2", "probe of B(n, 2n-c) for small c", "n<=7", "seconds"}, claim_theta2},
      {{"cnktight", "probe of tight k-star hypergraphs", "n<=7", "seconds"}, claim_cnktight},
  };
  return entries;
}

}  // namespace

std::vector<ClaimInfo> claim_registry() {
  std::vector<ClaimInfo> out;
  for (const auto& e : registry()) out.push_back(e.info);
  return out;
}

ClaimReport verify(const std::string& claim_id, const VerifyOptions& opt) {
  const auto& entries = registry();
  const auto it = std::find_if(entries.begin(), entries.end(), [&](const Entry& e) { return e.info.id == claim_id; });
  if (it == entries.end()) throw Error("unknown claim '" + claim_id + "'");
  if (opt.max_n < 3) throw GuardError("max-n must be at least 3");
  EnumerateOptions probe;
  probe.long_run = opt.long_run;
  check_enumeration_guard(opt.max_n, probe);
  const auto start = std::chrono::steady_clock::now();
  ClaimRun run(claim_id, opt);
  it->run(run);
  return run.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
}

std::vector<ClaimReport> verify_all(const VerifyOptions& opt) {
  const auto& entries = registry();
  std::vector<ClaimReport> reports(entries.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex mu;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < entries.size();) {
      try {
        reports[i] = verify(entries[i].info.id, opt);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  unsigned workers = opt.workers ? opt.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(entries.size()));
  std::vector<std::future<void>> pool;
  for (unsigned w = 1; w < workers; ++w) pool.push_back(std::async(std::launch::async, work));
  work();
  for (auto& f : pool) f.get();
  if (error) std::rethrow_exception(error);
  return reports;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string ledger_header() { return "# bwl-ledger version=" + std::to_string(kLedgerVersion) + "\n"; }

std::string ledger_line(const ClaimReport& r) {
  std::ostringstream os;
  os << "claim=" << r.claim << " verdict=" << to_string(r.verdict) << " params=" << quote(r.params);
  os << " runtime=" << std::fixed;
  os.precision(3);
  os << r.seconds;
  std::string paths;
  for (const auto& p : r.witnesses) paths += (paths.empty() ? "" : ",") + p.string();
  os << " witnesses=" << quote(paths);
  std::string detail;
  for (const auto& d : r.details) detail += (detail.empty() ? "" : "; ") + d;
  os << " detail=" << quote(detail) << "\n";
  return os.str();
}

std::string text_report(const ClaimReport& r) {
  std::ostringstream os;
  os << to_string(r.verdict) << "  " << r.claim << "  (" << r.params << ", ";
  os.precision(2);
  os << std::fixed << r.seconds << "s)\n";
  for (const auto& d : r.details) os << "    " << d << "\n";
  for (const auto& d : r.details)
    if (d.rfind("FAIL", 0) == 0) {
      for (const auto& p : r.witnesses)
        if (p.filename().string().rfind("counterexample", 0) == 0) os << "    counterexample: " << p.string() << "\n";
      break;
    }
  return os.str();
}

std::vector<BetweennessStructure> labeled_members(const BetweennessStructure& b) {
  const int n = b.size();
  std::vector<Point> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<std::uint8_t>> seen;
  std::vector<BetweennessStructure> out;
  do {
    auto r = relabel(b, perm);
    std::vector<std::uint8_t> key(r.codes().begin(), r.codes().end());
    if (seen.insert(std::move(key)).second) out.push_back(std::move(r));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<std::filesystem::path> regenerate_catalog(const std::filesystem::path& data_dir) {
  std::vector<std::pair<std::string, WeightedGraph>> graphs = {
      {"K_3", build(complete_spec(3))},
      {"A_4_1", build(q_spec(4, 3))},
      {"A_4_2", build(r_spec(4, 1, 3))},
      {"A_5_1", build(bipartite_spec(2, 3))},
      {"A_6_1", build(cycle_spec(6))},
  };
  // The two remaining order-6 quasilinear classes, ordered by canonical form.
  FormSet known = forms_of({r_spec(6, 1, 4), r_spec(6, 2, 4), s_spec(6, 4), cycle_spec(6), bipartite_spec(3, 3)});
  const auto r = enumerate_structures(6, 2, PropertyFilter::Trivial);
  std::vector<BetweennessStructure> rest;
  for (const auto& c : r.classes)
    if (!known.count(c.form)) rest.push_back(c.representative);
  if (rest.size() != 2)
    throw Error("expected two unmatched order-6 quasilinear classes, found " + std::to_string(rest.size()));
  for (std::size_t k = 0; k < rest.size(); ++k) {
    const auto& b = rest[k];
    // Prefer the unit-weight adjacency graph when it already induces b.
    WeightedGraph g(6);
    for (const auto& [u, v] : adjacency_graph(b).edges()) g.add_edge(u, v);
    if (!(induce_graph(g) == b)) {
      const auto m = metrize_structure(b);
      if (!m) throw Error("order-6 quasilinear class is not metrizable");
      g = spanner_graph(*m);
    }
    if (!(induce_graph(g) == b)) throw Error("spanner graph does not induce its class");
    graphs.emplace_back("A_6_" + std::to_string(k + 2), std::move(g));
  }
  graphs.emplace_back("A_6_4", build(bipartite_spec(3, 3)));
  std::vector<std::filesystem::path> written;
  for (const auto& [label, g] : graphs) {
    const auto path = data_dir / "exceptional" / (label + ".wg");
    save_text(path, write_wg(g));
    written.push_back(path);
  }
  return written;
}

}  // namespace bwl
