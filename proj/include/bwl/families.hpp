#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "bwl/core.hpp"
#include "bwl/graphs.hpp"

namespace bwl {

enum class FamilyKind { Path, Cycle, Complete, CompleteBipartite, Q, R, S, T };

/// Parameters of a named graph family. Unused fields are ignored.
///
/// Point labels: for Q, R and S the path x_1..x_{n-2} maps to 0..n-3, y to
/// n-2 and z to n-1. For T the path x_1..x_{n-4} maps to 0..n-5, then y, z, u,
/// v to n-4..n-1. For K_{a,b} the first part is 0..a-1.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Path;
  int n = 0;
  int i = 0;
  int c = 0;
  int a = 0;
  int b = 0;

  std::string name() const;
};

FamilySpec path_spec(int n);
FamilySpec cycle_spec(int n);
FamilySpec complete_spec(int n);
FamilySpec bipartite_spec(int a, int b);
FamilySpec q_spec(int n, int c);
FamilySpec r_spec(int n, int i, int c);
FamilySpec s_spec(int n, int c);
FamilySpec t_spec(int n, int i);

/// Size of the index range I_n^c: ceil((n-3)/2) for c in {2,4}, n-3 for c = 3.
int r_index_count(int n, int c);
/// Number of admissible i for T_{n,i}: ceil((n-5)/2).
int t_index_count(int n);

/// Parses "P", "C", "K", "Kab", "Q", "R", "S", "T".
FamilyKind parse_family_kind(const std::string& text);

/// Throws bwl::Error naming the violated bound when spec is out of range.
void validate(const FamilySpec& spec);

WeightedGraph build(const FamilySpec& spec);
BetweennessStructure induced_structure(const FamilySpec& spec);

/// Every in-range Q/R/S spec with n <= max_n (all c and i).
std::vector<FamilySpec> qrs_specs(int max_n);

/// Directory of shipped data files: $BWL_DATA_DIR if set, else the build-time default.
std::filesystem::path data_directory();

inline const std::vector<std::string>& exceptional_labels() {
  static const std::vector<std::string> labels = {"K_3",   "A_4_1", "A_4_2", "A_5_1",
                                                  "A_6_1", "A_6_2", "A_6_3", "A_6_4"};
  return labels;
}

/// Spanner graphs of the small exceptional quasilinear structures, read from
/// <dir>/exceptional/<label>.wg. Throws bwl::Error on a missing or malformed file.
std::vector<std::pair<std::string, WeightedGraph>> exceptional_catalog(
    const std::filesystem::path& dir = data_directory());

/// Looks up one catalog entry; accepts "A_5^1" as well as "A_5_1".
WeightedGraph exceptional_graph(const std::string& label, const std::filesystem::path& dir = data_directory());

}  // namespace bwl
