#pragma once

// Orders of invariants, dimension ledgers and integral counts for the simple
// complex Lie groups, plus the centers of their universal covers.

#include <cstdint>
#include <string>
#include <vector>

namespace spinhiggs {

enum class Series { A, B, C, D, G2, F4, E6, E7, E8 };

inline constexpr int kMaxRank = 1000;
inline constexpr int kMaxGenusOrPoints = 100000;

struct GroupType {
  Series series = Series::A;
  int rank = 1;

  // Accepts "A1", "B3", "D4", "G2", "E8", ... Throws ValidationError.
  static GroupType parse(const std::string& label);
  // Throws ValidationError on an invalid rank for the series.
  static GroupType make(Series s, int rank);
  std::string label() const;
};

// Ascending. For D_l the Pfaffian order l is merged into 2, 4, ..., 2l-2.
std::vector<int> orders(const GroupType& gt);

// Classical dimension of the complex group, independent of the orders.
std::int64_t classical_dimension(const GroupType& gt);

struct DimReport {
  GroupType type;
  std::vector<int> orders;
  std::int64_t coxeter = 0;  // h = largest order
  std::int64_t dim_G = 0;    // complex dimension of G^C
  std::int64_t dim_C = 0;    // real dimension of the compact form
  std::int64_t dim_GR = 0;   // real dimension of the split real form
  std::int64_t dim_U = 0;    // real dimension of the maximal compact of the split form
  std::int64_t dim_Uc = 0;   // complex dimension of its complexification
  std::int64_t dim_XI = 0;
  std::int64_t dim_XII = 0;
  std::int64_t dim_XIII = 0;
  std::int64_t dim_XIV = 0;
  std::int64_t dim_XV = 0;
  std::int64_t dim_Fl = 0;  // complex flag variety
  std::int64_t orbit_dim = 0;
};

DimReport dim_report(const GroupType& gt);

struct CountReport {
  GroupType type;
  int g = 0;
  int n = 0;
  std::int64_t dim_Bun_par = 0;
  std::int64_t dim_Bun_0 = 0;
  std::int64_t dim_Bun_I_II = 0;  // real dimension
  std::int64_t dim_Bun_V = 0;
  std::int64_t dim_M_V = 0;
  std::int64_t dim_M_I_II = 0;  // real dimension
  std::vector<std::int64_t> n_j;
  std::int64_t N_G = 0;
  std::int64_t N_G_R = 0;
  std::int64_t deficiency = 0;
  // n * l: the gap between the parabolic flag count n*sum(d_j - 1) and the
  // n*sum(d_j) entering N_G.
  std::int64_t parabolic_excess = 0;
};

// Throws ValidationError for g or n outside [0, kMaxGenusOrPoints].
CountReport count_report(const GroupType& gt, int g, int n);

struct CenterReport {
  std::vector<int> cyclic_factors;  // empty for the trivial group
  std::string description;          // "mu2", "mu2+mu2", "trivial", ...
  std::vector<std::string> classes;
  std::vector<std::string> admissible;  // classes with 2 zeta = 0
};

CenterReport center_admissible(const GroupType& gt);

}  // namespace spinhiggs
