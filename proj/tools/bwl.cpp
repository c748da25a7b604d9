#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bwl/enumerate.hpp"
#include "bwl/families.hpp"
#include "bwl/io.hpp"
#include "bwl/iso.hpp"
#include "bwl/metrize.hpp"
#include "bwl/verify.hpp"

namespace {

using namespace bwl;

enum class Format { Text, Ledger };

struct Usage : Error {
  using Error::Error;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Usage("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class Reader>
auto parse_input(const std::string& path, Reader reader) {
  std::istringstream in(read_all(path));
  return reader(in);
}

const char* yes_no(bool v) { return v ? "true" : "false"; }

std::string order_text(const Ordering& o) {
  std::string s;
  for (const Point p : o.perm) s += (s.empty() ? "" : ",") + std::to_string(p);
  return s;
}

void emit_pairs(Format fmt, const std::vector<std::pair<std::string, std::string>>& kv) {
  if (fmt == Format::Ledger) {
    std::string line;
    for (const auto& [k, v] : kv) line += (line.empty() ? "" : " ") + k + "=" + v;
    std::cout << line << "\n";
  } else {
    for (const auto& [k, v] : kv) std::cout << k << ": " << v << "\n";
  }
}

int cmd_check(const std::string& input, Format fmt) {
  const auto b = parse_input(input, read_bws);
  const auto violation = find_frp_violation(b);
  std::vector<std::pair<std::string, std::string>> kv = {
      {"n", std::to_string(b.size())},
      {"frp", yes_no(!violation)},
      {"cosize", std::to_string(cosize(b))},
      {"linear", yes_no(is_linear(b))},
  };
  const auto ordered = is_ordered(b);
  kv.emplace_back("ordered", ordered ? "[" + order_text(*ordered) + "]" : "false");
  kv.emplace_back("cyclic_lines", std::to_string(find_cyclic_lines(b).size()));
  kv.emplace_back("regular", yes_no(is_regular(b)));
  if (b.size() <= kOrderableMaxPoints) {
    const auto orderable = is_orderable(b);
    kv.emplace_back("orderable", orderable ? "[" + order_text(*orderable) + "]" : "false");
  } else {
    kv.emplace_back("orderable", "skipped");
  }
  if (violation) kv.emplace_back("violation", "\"" + *violation + "\"");
  emit_pairs(fmt, kv);
  return 0;
}

int cmd_iso(const std::vector<std::string>& inputs, bool hyper, Format fmt) {
  if (inputs.empty() || inputs.size() > 2) throw Usage("iso takes one or two input files");
  std::vector<CanonicalForm> forms;
  for (const auto& in : inputs)
    forms.push_back(hyper ? canonical_form(parse_input(in, read_th)) : canonical_form(parse_input(in, read_bws)));
  std::vector<std::pair<std::string, std::string>> kv;
  for (std::size_t i = 0; i < forms.size(); ++i) kv.emplace_back("form" + std::to_string(i + 1), forms[i].hex());
  if (forms.size() == 2) kv.emplace_back("isomorphic", yes_no(forms[0] == forms[1]));
  emit_pairs(fmt, kv);
  return 0;
}

int cmd_hyper(const std::string& input, bool from_th, bool analyze, int k_star, std::optional<int> link, Format fmt) {
  const TriangleHypergraph h = from_th ? parse_input(input, read_th) : triangle_hypergraph(parse_input(input, read_bws));
  if (!analyze && k_star == 0 && !link) {
    std::cout << write_th(h);
    return 0;
  }
  std::vector<std::pair<std::string, std::string>> kv = {{"n", std::to_string(h.size())},
                                                         {"edges", std::to_string(h.edge_count())}};
  if (analyze && h.edge_count() > 0) {
    const auto d = is_delta_star(h);
    std::string kernel;
    if (d)
      for (const Point p : *d) kernel += (kernel.empty() ? "" : ",") + std::to_string(p);
    kv.emplace_back("delta_star", d ? "{" + kernel + "}" : "false");
    const auto t = is_tight_star(h);
    kv.emplace_back("tight_star", t ? "{" + std::to_string((*t)[0]) + "," + std::to_string((*t)[1]) + "}" : "false");
  } else if (analyze) {
    kv.emplace_back("delta_star", "undefined");
    kv.emplace_back("tight_star", "undefined");
  }
  if (k_star > 0) kv.emplace_back("tight_" + std::to_string(k_star) + "_star", yes_no(is_tight_k_star(h, k_star)));
  if (link) {
    if (*link < 0 || *link >= h.size()) throw Usage("--link point out of range");
    std::string edges;
    for (const auto& e : link_graph(h, *link).edges())
      edges += (edges.empty() ? "" : " ") + std::to_string(e[0]) + "-" + std::to_string(e[1]);
    kv.emplace_back("link", "\"" + edges + "\"");
  }
  emit_pairs(fmt, kv);
  return 0;
}

int cmd_metrize(const std::string& hyper_path, const std::string& structure_path, bool all,
                const std::string& certificate, const std::string& out_dir, Format fmt) {
  if (hyper_path.empty() == structure_path.empty()) throw Usage("metrize needs exactly one of --hypergraph or --structure");
  std::vector<std::pair<std::string, std::string>> kv;
  std::optional<RationalMetric> metric;
  if (!structure_path.empty()) {
    const auto b = parse_input(structure_path, read_bws);
    const auto res = metrize_structure_detailed(b);
    metric = res.metric;
    kv.emplace_back("verdict", metric ? "metrizable" : "not-metrizable");
    if (!metric) kv.emplace_back("reason", to_string(res.status));
  } else {
    const auto h = parse_input(hyper_path, read_th);
    const auto v = metrize_hypergraph(h, all);
    metric = v.metric;
    kv.emplace_back("verdict", v.metrizable ? "metrizable" : "not-metrizable");
    if (v.reason) kv.emplace_back("reason", to_string(*v.reason));
    kv.emplace_back("assignments", std::to_string(v.assignments));
    if (all || v.exhaustive) kv.emplace_back("classes", std::to_string(v.classes.size()));
    if (all) {
      for (std::size_t i = 0; i < v.classes.size(); ++i) {
        const auto& c = v.classes[i];
        const std::string tag = "class" + std::to_string(i + 1);
        kv.emplace_back(tag, std::string(c.metrizable ? "metrizable" : "lp-infeasible") + ",assignments=" +
                                 std::to_string(c.assignments) + ",form=" + c.form.hex());
        if (!out_dir.empty()) {
          save_text(std::filesystem::path(out_dir) / (tag + ".bws"), write_bws(c.representative));
          if (c.metric) save_text(std::filesystem::path(out_dir) / (tag + ".metric"), write_metric(*c.metric));
        }
      }
    }
    if (v.structure && !out_dir.empty()) save_text(std::filesystem::path(out_dir) / "structure.bws", write_bws(*v.structure));
  }
  if (metric && !certificate.empty()) {
    save_text(certificate, write_metric(*metric));
    kv.emplace_back("certificate", certificate);
  }
  emit_pairs(fmt, kv);
  if (metric && certificate.empty() && fmt == Format::Text) std::cout << write_metric(*metric);
  return 0;
}

int cmd_enumerate(int n, int cosize_value, PropertyFilter filter, const EnumerateOptions& eo, const std::string& out_dir,
                  Format fmt) {
  const auto r = enumerate_structures(n, cosize_value, filter, eo);
  std::ostringstream secs;
  secs.precision(3);
  secs << std::fixed << r.seconds;
  emit_pairs(fmt, {{"n", std::to_string(n)},
                   {"cosize", std::to_string(cosize_value)},
                   {"filter", to_string(filter)},
                   {"classes", std::to_string(r.classes.size())},
                   {"labeled", std::to_string(r.labeled_total())},
                   {"hypergraph_classes", std::to_string(r.hypergraph_classes)},
                   {"leaves", std::to_string(r.leaves)},
                   {"seconds", secs.str()}});
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const auto& c = r.classes[i];
    const auto h = triangle_hypergraph(c.representative);
    const bool tight = h.edge_count() > 0 && is_tight_star(h).has_value();
    const std::string tag = "class" + std::to_string(i + 1);
    std::string path;
    if (!out_dir.empty()) {
      path = (std::filesystem::path(out_dir) / (tag + ".bws")).string();
      save_text(path, write_bws(c.representative));
    }
    std::vector<std::pair<std::string, std::string>> kv = {{"class", std::to_string(i + 1)},
                                                           {"labeled", std::to_string(c.labeled_count)},
                                                           {"regular", yes_no(is_regular(c.representative))},
                                                           {"tight_star", yes_no(tight)},
                                                           {"form", c.form.hex()}};
    if (!path.empty()) kv.emplace_back("file", path);
    if (fmt == Format::Text) {
      std::cout << "  ";
      for (const auto& [k, v] : kv) std::cout << k << "=" << v << " ";
      std::cout << "\n";
    } else {
      emit_pairs(fmt, kv);
    }
  }
  return 0;
}

int run_verify(const std::vector<ClaimReport>& reports, Format fmt, const std::string& ledger_path) {
  std::string ledger = ledger_header();
  for (const auto& r : reports) ledger += ledger_line(r);
  if (fmt == Format::Ledger) std::cout << ledger;
  else
    for (const auto& r : reports) std::cout << text_report(r);
  if (!ledger_path.empty()) save_text(ledger_path, ledger);
  const bool failed =
      std::any_of(reports.begin(), reports.end(), [](const ClaimReport& r) { return r.verdict == Verdict::Fail; });
  if (fmt == Format::Text && reports.size() > 1) {
    std::size_t counts[4] = {0, 0, 0, 0};
    for (const auto& r : reports) ++counts[static_cast<int>(r.verdict)];
    std::cout << "summary: " << counts[0] << " PASS, " << counts[1] << " FAIL, " << counts[2] << " SKIP, " << counts[3]
              << " INFO\n";
  }
  return failed ? 1 : 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Betweenness structures: construction, enumeration and metrization"};
  app.require_subcommand(1);
  std::string format_text = "text";
  app.add_option("--format", format_text, "Output format")->check(CLI::IsMember({"text", "ledger"}));

  // family
  auto* family = app.add_subcommand("family", "Emit a family graph as .wg");
  std::string kind;
  int fn = 0, fi = 0, fc = 0, fa = 0, fb = 0;
  family->add_option("kind", kind, "P, C, K, Kab, Q, R, S or T")->required();
  family->add_option("--n", fn, "Order");
  family->add_option("--i", fi, "Index");
  family->add_option("--c", fc, "Co-size offset c");
  family->add_option("--a", fa, "First part size (Kab)");
  family->add_option("--b", fb, "Second part size (Kab)");

  // induce
  auto* induce_cmd = app.add_subcommand("induce", "Induced betweenness of a .wg graph or .metric, as .bws");
  std::string induce_in = "-";
  bool induce_metric = false;
  induce_cmd->add_option("input", induce_in, "Input file, - for stdin");
  induce_cmd->add_flag("--metric", induce_metric, "Read a .metric instead of a .wg");

  // check
  auto* check = app.add_subcommand("check", "Report axioms and properties of a .bws");
  std::string check_in = "-";
  check->add_option("input", check_in, "Input file, - for stdin");

  // iso
  auto* iso = app.add_subcommand("iso", "Canonical forms and isomorphism test");
  std::vector<std::string> iso_in;
  bool iso_th = false;
  iso->add_option("inputs", iso_in, "One or two files")->required();
  iso->add_flag("--hypergraph", iso_th, "Inputs are .th");

  // hyper
  auto* hyper = app.add_subcommand("hyper", "Triangle hypergraph of a .bws, and its predicates");
  std::string hyper_in = "-";
  bool hyper_th = false, hyper_analyze = false;
  int hyper_k = 0;
  std::optional<int> hyper_link;
  hyper->add_option("input", hyper_in, "Input file, - for stdin");
  hyper->add_flag("--th", hyper_th, "Input is already a .th");
  hyper->add_flag("--analyze", hyper_analyze, "Report delta-star and tight-star kernels");
  hyper->add_option("--k-star", hyper_k, "Test for a tight k-star")->check(CLI::Range(1, kTightKStarMaxK));
  hyper->add_option("--link", hyper_link, "Print the link graph of a point");

  // metrize
  auto* metrize = app.add_subcommand("metrize", "Decide metrizability");
  std::string m_hyper, m_structure, m_cert, m_out;
  bool m_all = false;
  metrize->add_option("--hypergraph", m_hyper, ".th input");
  metrize->add_option("--structure", m_structure, ".bws input");
  metrize->add_flag("--all", m_all, "Report every realizing class");
  metrize->add_option("--certificate", m_cert, "Write the metric certificate here");
  metrize->add_option("--out-dir", m_out, "Write realizing classes and their metrics here");

  // enumerate
  EnumerateOptions eo;
  std::string filter_text = "trivial", checkpoint, e_out;
  int e_n = 0, e_cosize = 0;
  auto* enumerate = app.add_subcommand("enumerate", "Classify B(n, cosize) up to isomorphism");
  enumerate->add_option("--n", e_n, "Order")->required();
  enumerate->add_option("--cosize", e_cosize, "Number of triangles")->required();
  enumerate->add_option("--filter", filter_text, "trivial, regular or orderable");
  enumerate->add_flag("--long-run", eo.long_run, "Permit n = 8");
  enumerate->add_option("--checkpoint", checkpoint, "Resumable progress file");
  enumerate->add_option("--workers", eo.workers, "Worker threads (0 = all cores)");
  enumerate->add_option("--out-dir", e_out, "Write class representatives here");

  // tau
  int t_n = 0, t_k = 0;
  auto* tau_cmd = app.add_subcommand("tau", "Smallest nonempty co-size above k");
  tau_cmd->add_option("--n", t_n, "Order")->required();
  tau_cmd->add_option("--k", t_k, "Lower bound k")->required();
  tau_cmd->add_option("--filter", filter_text, "trivial, regular or orderable");
  tau_cmd->add_flag("--long-run", eo.long_run, "Permit n = 8");
  std::string t_witness;
  tau_cmd->add_option("--witness", t_witness, "Write a witness .bws here");

  // probe
  int p_k = 1, p_c = 0, p_from = 3, p_to = 7;
  auto* probe = app.add_subcommand("probe", "Emptiness of B(n, kn - c) over a range of n");
  probe->add_option("--k", p_k, "Slope k")->required();
  probe->add_option("--c", p_c, "Offset c")->required();
  probe->add_option("--n-from", p_from, "First order");
  probe->add_option("--n-to", p_to, "Last order");
  probe->add_flag("--long-run", eo.long_run, "Permit n = 8");

  // verify
  VerifyOptions vo;
  vo.out_dir = "bwl-verify";
  std::string claim, ledger_path, v_out = "bwl-verify";
  bool list = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run one registered claim");
  verify_cmd->add_option("claim", claim, "Claim id");
  verify_cmd->add_flag("--list", list, "List registered claims");
  verify_cmd->add_option("--max-n", vo.max_n, "Largest order examined");
  verify_cmd->add_flag("--long-run", vo.long_run, "Permit n = 8");
  verify_cmd->add_option("--out", v_out, "Witness directory");
  verify_cmd->add_option("--ledger", ledger_path, "Also write the ledger here");

  auto* verify_all_cmd = app.add_subcommand("verify-all", "Run every registered claim");
  verify_all_cmd->add_option("--max-n", vo.max_n, "Largest order examined");
  verify_all_cmd->add_flag("--long-run", vo.long_run, "Permit n = 8");
  verify_all_cmd->add_option("--out", v_out, "Witness directory");
  verify_all_cmd->add_option("--ledger", ledger_path, "Also write the ledger here");
  verify_all_cmd->add_option("--workers", vo.workers, "Claims run in parallel (0 = all cores)");

  // regen-catalog
  std::string data_dir = data_directory().string();
  auto* regen = app.add_subcommand("regen-catalog", "Rewrite data/exceptional/*.wg");
  regen->add_option("--data-dir", data_dir, "Data directory");

  // Options may follow the subcommand as well.
  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"text", "ledger"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  const Format fmt = format_text == "ledger" ? Format::Ledger : Format::Text;
  if (!checkpoint.empty()) eo.checkpoint = checkpoint;

  if (*family) {
    FamilySpec spec{parse_family_kind(kind), fn, fi, fc, fa, fb};
    if (spec.kind == FamilyKind::CompleteBipartite) spec = bipartite_spec(fa, fb);
    std::cout << write_wg(build(spec));
    return 0;
  }
  if (*induce_cmd) {
    const auto b = induce_metric ? induce(parse_input(induce_in, read_metric)) : induce_graph(parse_input(induce_in, read_wg));
    std::cout << write_bws(b);
    return 0;
  }
  if (*check) return cmd_check(check_in, fmt);
  if (*iso) return cmd_iso(iso_in, iso_th, fmt);
  if (*hyper) return cmd_hyper(hyper_in, hyper_th, hyper_analyze, hyper_k, hyper_link, fmt);
  if (*metrize) return cmd_metrize(m_hyper, m_structure, m_all, m_cert, m_out, fmt);
  if (*enumerate) return cmd_enumerate(e_n, e_cosize, parse_filter(filter_text), eo, e_out, fmt);
  if (*tau_cmd) {
    const auto t = tau(t_n, t_k, parse_filter(filter_text), eo);
    emit_pairs(fmt, {{"n", std::to_string(t_n)}, {"k", std::to_string(t_k)}, {"filter", filter_text},
                     {"tau", std::to_string(t.value)}});
    if (!t_witness.empty()) save_text(t_witness, write_bws(t.witness));
    return 0;
  }
  if (*probe) {
    for (const auto& row : probe_gamma_sigma(p_k, p_c, p_from, p_to, eo))
      emit_pairs(Format::Ledger, {{"n", std::to_string(row.n)}, {"m", std::to_string(row.m)},
                                  {"nonempty", yes_no(row.nonempty)}, {"trivial", yes_no(row.trivial)}});
    return 0;
  }
  vo.out_dir = v_out;
  if (*verify_cmd) {
    if (list) {
      for (const auto& c : claim_registry())
        std::cout << c.id << "  [" << c.range << ", " << c.runtime_class << "]  " << c.summary << "\n";
      return 0;
    }
    if (claim.empty()) throw Usage("verify needs a claim id (see verify --list)");
    return run_verify({verify(claim, vo)}, fmt, ledger_path);
  }
  if (*verify_all_cmd) return run_verify(verify_all(vo), fmt, ledger_path);
  if (*regen) {
    for (const auto& p : regenerate_catalog(data_dir)) std::cout << p.string() << "\n";
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "bwl: " << e.what() << "\n";
    return 2;
  }
}
