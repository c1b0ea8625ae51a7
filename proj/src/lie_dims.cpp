#include "spinhiggs/lie_dims.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

#include "spinhiggs/common.hpp"

namespace spinhiggs {

namespace {

constexpr std::array<int, 2> kG2{2, 6};
constexpr std::array<int, 4> kF4{2, 6, 8, 12};
constexpr std::array<int, 6> kE6{2, 5, 6, 8, 9, 12};
constexpr std::array<int, 7> kE7{2, 6, 8, 10, 12, 14, 18};
constexpr std::array<int, 8> kE8{2, 8, 12, 14, 18, 20, 24, 30};

constexpr int fixed_rank(Series s) {
  switch (s) {
    case Series::G2: return 2;
    case Series::F4: return 4;
    case Series::E6: return 6;
    case Series::E7: return 7;
    case Series::E8: return 8;
    default: return 0;
  }
}

// j-th order (0-based, ascending) for rank l.
constexpr int order_at(Series s, int l, int j) {
  switch (s) {
    case Series::A: return j + 2;
    case Series::B:
    case Series::C: return 2 * (j + 1);
    case Series::D: {
      const int below = (l - 1) / 2;  // number of 2k < l with 1 <= k <= l-1
      if (j < below) return 2 * (j + 1);
      if (j == below) return l;
      return 2 * j;
    }
    case Series::G2: return kG2[j];
    case Series::F4: return kF4[j];
    case Series::E6: return kE6[j];
    case Series::E7: return kE7[j];
    case Series::E8: return kE8[j];
  }
  return 0;
}

constexpr long long classical_dim(Series s, long long l) {
  switch (s) {
    case Series::A: return (l + 1) * (l + 1) - 1;
    case Series::B:
    case Series::C: return l * (2 * l + 1);
    case Series::D: return l * (2 * l - 1);
    case Series::G2: return 14;
    case Series::F4: return 52;
    case Series::E6: return 78;
    case Series::E7: return 133;
    case Series::E8: return 248;
  }
  return 0;
}

constexpr long long sum_2d_minus_1(Series s, int l) {
  long long t = 0;
  for (int j = 0; j < l; ++j) t += 2 * order_at(s, l, j) - 1;
  return t;
}

constexpr bool ascending(Series s, int l) {
  for (int j = 1; j < l; ++j) {
    if (order_at(s, l, j) < order_at(s, l, j - 1)) return false;
  }
  return true;
}

constexpr bool table_consistent() {
  for (int l = 1; l <= 64; ++l) {
    if (sum_2d_minus_1(Series::A, l) != classical_dim(Series::A, l)) return false;
    if (!ascending(Series::A, l)) return false;
  }
  for (int l = 2; l <= 64; ++l) {
    if (sum_2d_minus_1(Series::B, l) != classical_dim(Series::B, l)) return false;
    if (sum_2d_minus_1(Series::C, l) != classical_dim(Series::C, l)) return false;
  }
  for (int l = 3; l <= 64; ++l) {
    if (sum_2d_minus_1(Series::D, l) != classical_dim(Series::D, l)) return false;
    if (!ascending(Series::D, l)) return false;
  }
  for (Series s : {Series::G2, Series::F4, Series::E6, Series::E7, Series::E8}) {
    if (sum_2d_minus_1(s, fixed_rank(s)) != classical_dim(s, fixed_rank(s))) return false;
    if (!ascending(s, fixed_rank(s))) return false;
  }
  return true;
}

static_assert(table_consistent(), "orders of invariants disagree with the classical dimensions");
static_assert(order_at(Series::D, 3, 0) == 2 && order_at(Series::D, 3, 1) == 3 &&
              order_at(Series::D, 3, 2) == 4);

int min_rank(Series s) {
  switch (s) {
    case Series::A: return 1;
    case Series::B:
    case Series::C: return 2;
    case Series::D: return 3;
    default: return fixed_rank(s);
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(std::string("dimension ledger inconsistency: ") + what);
}

}  // namespace

GroupType GroupType::make(Series s, int rank) {
  const int fr = fixed_rank(s);
  if (fr != 0 && rank != fr) {
    throw ValidationError("exceptional type has fixed rank " + std::to_string(fr));
  }
  if (rank < min_rank(s) || rank > kMaxRank) {
    throw ValidationError("rank " + std::to_string(rank) + " is out of range for this series");
  }
  return GroupType{s, rank};
}

GroupType GroupType::parse(const std::string& label) {
  static const std::pair<const char*, Series> kExceptional[] = {
      {"G2", Series::G2}, {"F4", Series::F4}, {"E6", Series::E6},
      {"E7", Series::E7}, {"E8", Series::E8}};
  for (const auto& [name, s] : kExceptional) {
    if (label == name) return make(s, fixed_rank(s));
  }
  if (label.size() < 2) throw ValidationError("unknown group type '" + label + "'");
  Series s;
  switch (label[0]) {
    case 'A': s = Series::A; break;
    case 'B': s = Series::B; break;
    case 'C': s = Series::C; break;
    case 'D': s = Series::D; break;
    default: throw ValidationError("unknown group type '" + label + "'");
  }
  const std::string digits = label.substr(1);
  if (digits.size() > 4 || !std::all_of(digits.begin(), digits.end(),
                                        [](unsigned char c) { return std::isdigit(c); })) {
    throw ValidationError("unknown group type '" + label + "'");
  }
  return make(s, std::stoi(digits));
}

std::string GroupType::label() const {
  switch (series) {
    case Series::A: return "A" + std::to_string(rank);
    case Series::B: return "B" + std::to_string(rank);
    case Series::C: return "C" + std::to_string(rank);
    case Series::D: return "D" + std::to_string(rank);
    case Series::G2: return "G2";
    case Series::F4: return "F4";
    case Series::E6: return "E6";
    case Series::E7: return "E7";
    case Series::E8: return "E8";
  }
  return "?";
}

std::vector<int> orders(const GroupType& gt) {
  const GroupType v = GroupType::make(gt.series, gt.rank);
  std::vector<int> out(v.rank);
  for (int j = 0; j < v.rank; ++j) out[j] = order_at(v.series, v.rank, j);
  return out;
}

std::int64_t classical_dimension(const GroupType& gt) {
  const GroupType v = GroupType::make(gt.series, gt.rank);
  return classical_dim(v.series, v.rank);
}

DimReport dim_report(const GroupType& gt) {
  DimReport r;
  r.type = GroupType::make(gt.series, gt.rank);
  r.orders = orders(r.type);
  const std::int64_t l = r.type.rank;
  std::int64_t sum_d = 0;
  for (int d : r.orders) sum_d += d;

  r.coxeter = r.orders.back();
  r.dim_G = 2 * sum_d - l;
  r.dim_C = r.dim_G;
  r.dim_GR = r.dim_G;
  r.dim_U = sum_d - l;
  r.dim_Uc = sum_d - l;
  r.dim_XI = r.dim_C;
  r.dim_XII = r.dim_C;
  r.dim_XIII = sum_d;
  r.dim_XIV = sum_d;
  r.dim_XV = r.dim_G - r.dim_Uc;
  r.dim_Fl = sum_d - l;
  r.orbit_dim = r.dim_G - l;

  require(r.dim_G == classical_dimension(r.type), "dim G");
  require(2 * r.dim_U == r.dim_C - l, "dim U");
  require(r.dim_XV == sum_d, "dim X_V");
  require(r.dim_XV == r.dim_Fl + l, "dim X_V = dim Fl + l");
  require(2 * r.dim_XIII == r.dim_XI + l && r.dim_XIV == r.dim_XIII, "dim X_III, X_IV");
  require(r.dim_XIII == r.dim_C - r.dim_U && r.dim_XIV == r.dim_GR - r.dim_U, "C/U, G_R/U");
  require(r.orbit_dim == 2 * r.dim_Fl, "regular orbit = 2 dim Fl");
  return r;
}

CountReport count_report(const GroupType& gt, int g, int n) {
  if (g < 0 || g > kMaxGenusOrPoints) throw ValidationError("genus out of range");
  if (n < 0 || n > kMaxGenusOrPoints) throw ValidationError("number of marked points out of range");
  const DimReport d = dim_report(gt);
  const std::int64_t l = d.type.rank;
  const std::int64_t gm1 = g - 1;
  std::int64_t sum_d = 0;
  for (int x : d.orders) sum_d += x;
  const std::int64_t sum_dm1 = sum_d - l;
  const std::int64_t sum_2dm1 = 2 * sum_d - l;

  CountReport r;
  r.type = d.type;
  r.g = g;
  r.n = n;
  r.dim_Bun_par = gm1 * d.dim_G + n * sum_dm1;
  r.dim_Bun_0 = (gm1 + n) * d.dim_G;
  r.dim_Bun_I_II = gm1 * 2 * d.dim_G + n * sum_2dm1;
  r.dim_Bun_V = gm1 * d.dim_G + n * sum_d;
  r.dim_M_V = 2 * r.dim_Bun_V;
  r.dim_M_I_II = 2 * gm1 * 2 * d.dim_G + 2 * n * sum_2dm1;
  for (int x : d.orders) r.n_j.push_back((2 * std::int64_t(x) - 1) * gm1 + std::int64_t(n) * x);
  r.N_G = std::accumulate(r.n_j.begin(), r.n_j.end(), std::int64_t{0});
  r.N_G_R = gm1 * 2 * d.dim_G + n * sum_d;
  r.deficiency = n * sum_dm1;
  r.parabolic_excess = n * l;

  require(r.N_G == gm1 * d.dim_G + n * sum_d, "N_G");
  require(r.dim_M_V == 2 * gm1 * d.dim_G + 2 * n * sum_d, "dim M_V");
  require(r.dim_M_I_II == 2 * r.dim_Bun_I_II, "dim M_I,II");
  require(r.dim_M_I_II - 2 * r.N_G_R == 2 * r.deficiency, "deficiency");
  require(r.N_G - r.dim_Bun_par == r.parabolic_excess, "parabolic excess");
  return r;
}

CenterReport center_admissible(const GroupType& gt) {
  const GroupType v = GroupType::make(gt.series, gt.rank);
  CenterReport r;
  switch (v.series) {
    case Series::A: r.cyclic_factors = {v.rank + 1}; break;
    case Series::B:
    case Series::C:
    case Series::E7: r.cyclic_factors = {2}; break;
    case Series::D:
      if (v.rank % 2 == 0) {
        r.cyclic_factors = {2, 2};
      } else {
        r.cyclic_factors = {4};
      }
      break;
    case Series::E6: r.cyclic_factors = {3}; break;
    case Series::G2:
    case Series::F4:
    case Series::E8: break;
  }

  if (r.cyclic_factors.empty()) {
    r.description = "trivial";
    r.classes = {"0"};
    r.admissible = {"0"};
    return r;
  }
  for (std::size_t k = 0; k < r.cyclic_factors.size(); ++k) {
    if (k) r.description += "+";
    r.description += "mu" + std::to_string(r.cyclic_factors[k]);
  }
  if (r.cyclic_factors.size() == 1) {
    const int m = r.cyclic_factors[0];
    for (int a = 0; a < m; ++a) {
      r.classes.push_back(std::to_string(a));
      if ((2 * a) % m == 0) r.admissible.push_back(std::to_string(a));
    }
  } else {
    const int m0 = r.cyclic_factors[0];
    const int m1 = r.cyclic_factors[1];
    for (int a = 0; a < m0; ++a) {
      for (int b = 0; b < m1; ++b) {
        const std::string name = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        r.classes.push_back(name);
        if ((2 * a) % m0 == 0 && (2 * b) % m1 == 0) r.admissible.push_back(name);
      }
    }
  }
  return r;
}

}  // namespace spinhiggs
