#include "bwl/metrize.hpp"

#include <map>

#include "bwl/propagate.hpp"

namespace bwl {

const char* to_string(NotMetrizableReason r) {
  switch (r) {
    case NotMetrizableReason::NoAlmostMetrizableAssignment: return "no-almost-metrizable-assignment";
    case NotMetrizableReason::AllAssignmentsLPInfeasible: return "all-assignments-lp-infeasible";
  }
  return "?";
}

LinearSystem metric_system(const BetweennessStructure& b) {
  const int n = b.size();
  LinearSystem sys;
  sys.num_vars = static_cast<int>(pair_count(n));
  for (std::size_t r = 0; r < b.triple_total(); ++r) {
    const Triple t = triple_unrank(r);
    const TripleState s = b.state(r);
    if (s.is_collinear()) {
      const Point m = t[s.middle_slot()];
      Point ends[2];
      int k = 0;
      for (int slot = 0; slot < 3; ++slot)
        if (slot != s.middle_slot()) ends[k++] = t[slot];
      auto& row = sys.add_equality();
      row.coeffs[pair_rank(ends[0], ends[1])] = 1;
      row.coeffs[pair_rank(ends[0], m)] = -1;
      row.coeffs[pair_rank(m, ends[1])] = -1;
      continue;
    }
    for (int slot = 0; slot < 3; ++slot) {
      // slot is the point opposite the longest side in this slack
      const Point m = t[slot];
      Point ends[2];
      int k = 0;
      for (int o = 0; o < 3; ++o)
        if (o != slot) ends[k++] = t[o];
      auto& row = sys.add_inequality();
      row.coeffs[pair_rank(ends[0], m)] = 1;
      row.coeffs[pair_rank(m, ends[1])] = 1;
      row.coeffs[pair_rank(ends[0], ends[1])] = -1;
      row.rhs = 1;
    }
  }
  for (std::size_t p = 0; p < pair_count(n); ++p) {
    auto& row = sys.add_inequality();
    row.coeffs[p] = 1;
    row.rhs = 1;
  }
  return sys;
}

StructureMetrization metrize_structure_detailed(const BetweennessStructure& b) {
  const auto sys = metric_system(b);
  auto res = solve_feasibility(sys);
  StructureMetrization out;
  out.status = res.status;
  out.note = res.note;
  if (res.status != FeasibilityStatus::Feasible) return out;
  RationalMetric m(b.size());
  for (std::size_t p = 0; p < res.point.size(); ++p) {
    const auto [x, y] = pair_unrank(p);
    m.set(x, y, res.point[p]);
  }
  if (auto bad = m.violation()) throw Error("solver produced an invalid metric: " + *bad);
  if (!(induce(m) == b)) throw Error("solver produced a metric inducing a different structure");
  out.metric = std::move(m);
  return out;
}

std::optional<RationalMetric> metrize_structure(const BetweennessStructure& b) {
  return metrize_structure_detailed(b).metric;
}

MetrizationVerdict metrize_hypergraph(const TriangleHypergraph& h, bool collect_all) {
  const int n = h.size();
  if (n > kMetrizeMaxPoints)
    throw GuardError("metrize_hypergraph supports n <= " + std::to_string(kMetrizeMaxPoints));
  MetrizationVerdict v;
  PartialStructure p(n);
  p.fix_triangles(h);

  // Metrizability is isomorphism-invariant, so the LP runs once per class.
  std::map<CanonicalForm, std::size_t> index;
  auto leaf = [&](const BetweennessStructure& b) {
    ++v.assignments;
    auto form = canonical_form(b);
    auto it = index.find(form);
    if (it != index.end()) {
      ++v.classes[it->second].assignments;
      return true;
    }
    RealizingClass rc{form, b, 1, false, std::nullopt};
    rc.metric = metrize_structure(b);
    rc.metrizable = rc.metric.has_value();
    if (rc.metrizable && !v.metrizable) {
      v.metrizable = true;
      v.metric = rc.metric;
      v.structure = b;
    }
    index.emplace(std::move(form), v.classes.size());
    v.classes.push_back(std::move(rc));
    return collect_all || !v.metrizable;
  };
  v.exhaustive = for_each_completion(p, nullptr, leaf);
  if (!v.metrizable) {
    v.reason = v.assignments == 0 ? NotMetrizableReason::NoAlmostMetrizableAssignment
                                  : NotMetrizableReason::AllAssignmentsLPInfeasible;
  }
  if (!collect_all && !v.exhaustive) v.classes.clear();
  return v;
}

}  // namespace bwl
