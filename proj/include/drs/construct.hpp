#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drs/gf.hpp"
#include "drs/matrix.hpp"
#include "drs/poly.hpp"
#include "drs/rs.hpp"
#include "drs/sman.hpp"

namespace drs {

enum class CaseLabel { Case1, Case2, Case3, Case4 };

std::string_view to_string(CaseLabel label);
/// Throws Parse for anything but "Case1".."Case4".
CaseLabel parse_case_label(std::string_view text);

/// Which construction applies, under which relabelling of the sources, and
/// the canonical column order that the construction's index arithmetic uses.
struct CasePlan {
  CaseLabel label = CaseLabel::Case1;
  /// Role r (0 = "source 1" of the construction) is played by original
  /// source source_perm[r]. Indices >= s denote zero-rate padding sources.
  std::array<int, 3> source_perm{0, 1, 2};
  /// Canonical position p (1-based) holds relay column_order[p - 1].
  std::vector<int> column_order;
  /// Block sizes in canonical block order (seven entries).
  std::vector<int> block_sizes;
};

/// How one row of T was made: the polynomial vanishes on alpha^i for every
/// i in roots (canonical positions or raw exponents for Case-4 V rows).
struct RowPlan {
  int owner = 0;  // original source index
  std::vector<int> roots;
  std::optional<int> pivot;  // canonical position normalized to 1
  std::optional<int> shift;  // j of p(alpha^j x), Case-4 V rows only
};

/// Case-4 bookkeeping. Index 0..2 in the arrays refers to roles 1..3.
struct CaseFourPlan {
  int nbar = 0;                 // n_1 + n_2 + n_3
  std::array<int, 3> rprime{};  // r_i - n_i
  int rprime_total = 0;
  int t = 0;                    // degree of p
  std::vector<int> c_roots;     // 1..nbar
  std::vector<int> p_roots;     // consecutive run, may exceed N
  std::array<std::vector<int>, 3> shifts;  // J_1, J_2, J_3
  Polynomial c;
  Polynomial p;
};

/// Canonical positions taken from the shared blocks by the S1/S2 rows in
/// Cases 2 and 3 (role numbering).
struct XSets {
  std::vector<int> x1_13;
  std::vector<int> x2_23;
  std::vector<int> x1_123;
  std::vector<int> x2_123;
};

struct Construction {
  SmanTopology topology;  // as given, unpadded and unpermuted
  RsCode code;
  CasePlan plan;
  Matrix T;  // R x k
  Matrix G;  // R x N, canonical column order
  std::vector<int> row_owner;  // original source of each row
  std::vector<RowPlan> rows;
  XSets xsets;
  std::optional<CaseFourPlan> case4;

  int total_rate() const { return static_cast<int>(T.rows()); }
};

/// Validates the case conditions for the given relabelling and computes the
/// canonical column order. Throws InvalidPlan if the conditions do not hold.
CasePlan make_plan(const SmanTopology& top, CaseLabel label, std::array<int, 3> perm);

/// Picks the construction: Case 1 under any relabelling, else Case 2, else
/// Case 3 (relabellings in lexicographic order), else Case 4. A Case-3
/// relabelling is only taken if source 1 has enough private columns for its
/// pivots. Throws NotInCapacityRegion or CaseClassificationFailure.
CasePlan classify(const SmanTopology& top);

Construction build_case123(const SmanTopology& top, const Field& field, const CasePlan& plan);
Construction build_case4(const SmanTopology& top, const Field& field, const CasePlan& plan);

/// The Case-4 quantities for a topology (identity relabelling).
CaseFourPlan case_four_plan(const Field& field, const SmanTopology& top);
bool shifts_pairwise_disjoint(const CaseFourPlan& plan);
/// Rank of the first R' columns of the matrix whose rows are the
/// coefficients of p(alpha^j x), j over all shift sets.
std::size_t shifted_p_rank(const Field& field, const CaseFourPlan& plan);

struct VerifyCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool ok() const;
  const VerifyCheck* find(std::string_view name) const;
};

/// Checks dimensions, G == T G_RS, the adjacency mask, rank(G) = rank(T) = R,
/// RS-subcode membership of every row (by interpolation), and row weights.
VerifyReport verify(const Construction& cons);

/// classify, dispatch, verify; throws on any failed check.
Construction build(const SmanTopology& top, const Field& field);
/// Uses the smallest field with q - 1 >= N.
Construction build(const SmanTopology& top);

}  // namespace drs
