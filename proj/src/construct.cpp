#include "drs/construct.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "drs/error.hpp"

namespace drs {

namespace {

constexpr SourceSet kN1 = 0b001;
constexpr SourceSet kN2 = 0b010;
constexpr SourceSet kN3 = 0b100;
constexpr SourceSet kN12 = 0b011;
constexpr SourceSet kN13 = 0b101;
constexpr SourceSet kN23 = 0b110;
constexpr SourceSet kN123 = 0b111;

constexpr SourceSet role_bit(int role) { return static_cast<SourceSet>(1u << role); }

std::array<SourceSet, 7> block_order(CaseLabel label) {
  switch (label) {
    case CaseLabel::Case1:
    case CaseLabel::Case2:
      return {kN1, kN2, kN12, kN23, kN123, kN3, kN13};
    case CaseLabel::Case3:
      return {kN1, kN13, kN2, kN12, kN23, kN3, kN123};
    case CaseLabel::Case4:
      return {kN1, kN2, kN3, kN12, kN13, kN23, kN123};
  }
  return {};
}

// The padded, relabelled topology laid out in canonical column order.
struct Layout {
  SmanTopology top;  // roles 0..2
  PartitionSets ps;
  std::vector<int> column_order;
  std::vector<int> block_sizes;
  std::array<std::vector<int>, 8> positions;  // canonical positions per block
  std::array<std::vector<int>, 3> zpos;       // canonical positions role i does not feed

  int n(SourceSet set) const { return ps.n(set); }
  int r(int role) const { return top.rate(role); }
  int relays() const { return top.relays(); }

  // Ascending canonical positions fed by the role.
  std::vector<int> fed_positions(int role) const {
    std::vector<int> out;
    for (int p = 1; p <= relays(); ++p) {
      if (!std::binary_search(zpos[role].begin(), zpos[role].end(), p)) out.push_back(p);
    }
    return out;
  }
};

Layout make_layout(const SmanTopology& top, CaseLabel label, std::array<int, 3> perm) {
  const SmanTopology padded = pad_to_three(top);
  Layout lay{permute_sources(padded, {perm[0], perm[1], perm[2]}), {}, {}, {}, {}, {}};
  lay.ps = partition(lay.top);
  int pos = 1;
  for (SourceSet set : block_order(label)) {
    lay.block_sizes.push_back(lay.ps.n(set));
    for (int relay : lay.ps.block(set)) {
      lay.column_order.push_back(relay);
      lay.positions[set].push_back(pos);
      for (int role = 0; role < 3; ++role) {
        if (!(set & role_bit(role))) lay.zpos[role].push_back(pos);
      }
      ++pos;
    }
  }
  return lay;
}

bool case_conditions_hold(const Layout& lay, CaseLabel label) {
  const bool r1_private = lay.r(0) <= lay.n(kN1);
  const bool r2_fits = lay.r(1) <= lay.n(kN2) + lay.n(kN12);
  switch (label) {
    case CaseLabel::Case1: return r1_private && r2_fits;
    case CaseLabel::Case2: return r1_private && !r2_fits;
    case CaseLabel::Case3: return !r1_private && !r2_fits;
    case CaseLabel::Case4:
      for (int i = 0; i < 3; ++i) {
        if (lay.r(i) <= lay.n(role_bit(i))) return false;
        for (int j = 0; j < 3; ++j) {
          if (j == i) continue;
          const auto pair = static_cast<SourceSet>(role_bit(i) | role_bit(j));
          if (lay.r(i) > lay.n(role_bit(i)) + lay.n(pair)) return false;
        }
      }
      return true;
  }
  return false;
}

// Source 1 takes its Case-3 pivots from N_1, N_13 and N_123 only.
bool case3_pivots_available(const Layout& lay) {
  return lay.r(0) <= lay.n(kN1) + lay.n(kN13) + lay.n(kN123);
}

std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::vector<int> without(const std::vector<int>& a, const std::vector<int>& drop) {
  std::vector<int> out;
  for (int v : a) {
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) out.push_back(v);
  }
  return out;
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  for (int v : a) {
    if (std::find(b.begin(), b.end(), v) != b.end()) out.push_back(v);
  }
  return out;
}

struct RowSink {
  const Field& field;
  int k;
  std::vector<std::vector<Element>> t_rows;
  std::vector<RowPlan> plans;

  void push(RowPlan plan, const Polynomial& poly) {
    t_rows.push_back(coeff_vector(poly, k));
    plans.push_back(std::move(plan));
  }
};

// Rows of one source: each vanishes on base_roots plus every other pivot and
// is normalized to 1 at its own pivot. Returns the pivots used.
std::vector<int> add_pivot_rows(RowSink& sink, int owner, const std::vector<int>& base_roots,
                                const std::vector<int>& candidates, int count) {
  if (count > static_cast<int>(candidates.size())) {
    throw Error(ErrorCode::InvalidPlan,
                "source S" + std::to_string(owner + 1) + " needs " + std::to_string(count) +
                    " pivot columns, found " + std::to_string(candidates.size()));
  }
  const std::vector<int> pivots(candidates.begin(), candidates.begin() + count);
  for (int pivot : pivots) {
    std::vector<int> roots = base_roots;
    for (int other : pivots) {
      if (other != pivot) roots.push_back(other);
    }
    std::sort(roots.begin(), roots.end());
    if (static_cast<int>(roots.size()) > sink.k - 1) {
      throw Error(ErrorCode::DegreeBoundViolation,
                  "row of S" + std::to_string(owner + 1) + " needs " +
                      std::to_string(roots.size()) + " roots, more than k - 1 = " +
                      std::to_string(sink.k - 1));
    }
    const Polynomial poly = normalize_at(sink.field, vanishing_poly(sink.field, roots), pivot);
    sink.push(RowPlan{owner, std::move(roots), pivot, std::nullopt}, poly);
  }
  return pivots;
}

Construction assemble(const SmanTopology& top, const Field& field, const CasePlan& plan,
                      RowSink& sink) {
  RsCode code(field, top.relays(), top.z());
  Matrix t(sink.t_rows.size(), static_cast<std::size_t>(code.dimension()));
  for (std::size_t r = 0; r < sink.t_rows.size(); ++r) {
    std::copy(sink.t_rows[r].begin(), sink.t_rows[r].end(), t.row(r).begin());
  }
  Matrix g = mat_mul(field, t, generator_matrix(code));
  std::vector<int> owners;
  for (const auto& rp : sink.plans) owners.push_back(rp.owner);
  return Construction{top,           std::move(code),       plan, std::move(t), std::move(g),
                      std::move(owners), std::move(sink.plans), {}, std::nullopt};
}

void require_region(const SmanTopology& top) {
  const CapacityCheck cc = in_capacity_region(top);
  if (cc.ok) return;
  std::string msg = "rate vector outside the capacity region; violated subsets:";
  for (SourceSet s : cc.violated) msg += " " + format_source_set(s);
  throw Error(ErrorCode::NotInCapacityRegion, msg);
}

}  // namespace

std::string_view to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::Case1: return "Case1";
    case CaseLabel::Case2: return "Case2";
    case CaseLabel::Case3: return "Case3";
    case CaseLabel::Case4: return "Case4";
  }
  return "?";
}

CaseLabel parse_case_label(std::string_view text) {
  for (CaseLabel l : {CaseLabel::Case1, CaseLabel::Case2, CaseLabel::Case3, CaseLabel::Case4}) {
    if (to_string(l) == text) return l;
  }
  throw Error(ErrorCode::Parse, "unknown case label '" + std::string(text) + "'");
}

CasePlan make_plan(const SmanTopology& top, CaseLabel label, std::array<int, 3> perm) {
  const Layout lay = make_layout(top, label, perm);
  if (!case_conditions_hold(lay, label)) {
    throw Error(ErrorCode::InvalidPlan, std::string("conditions of ") +
                                            std::string(to_string(label)) +
                                            " do not hold under this source order");
  }
  return CasePlan{label, perm, lay.column_order, lay.block_sizes};
}

CasePlan classify(const SmanTopology& top) {
  require_region(top);

  std::array<int, 3> perm{0, 1, 2};
  std::vector<std::array<int, 3>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (CaseLabel label : {CaseLabel::Case1, CaseLabel::Case2, CaseLabel::Case3}) {
    for (const auto& p : perms) {
      const Layout lay = make_layout(top, label, p);
      if (!case_conditions_hold(lay, label)) continue;
      if (label == CaseLabel::Case3 && !case3_pivots_available(lay)) continue;
      return CasePlan{label, p, lay.column_order, lay.block_sizes};
    }
  }
  const Layout lay = make_layout(top, CaseLabel::Case4, {0, 1, 2});
  if (case_conditions_hold(lay, CaseLabel::Case4)) {
    return CasePlan{CaseLabel::Case4, {0, 1, 2}, lay.column_order, lay.block_sizes};
  }
  std::ostringstream os;
  os << "rates (";
  for (int i = 0; i < top.sources(); ++i) os << (i ? "," : "") << top.rate(i);
  os << ") fit none of the four constructions under any source order";
  throw Error(ErrorCode::CaseClassificationFailure, os.str());
}

Construction build_case123(const SmanTopology& top, const Field& field, const CasePlan& plan) {
  if (plan.label == CaseLabel::Case4) {
    throw Error(ErrorCode::InvalidPlan, "build_case123 called with a Case4 plan");
  }
  const Layout lay = make_layout(top, plan.label, plan.source_perm);
  if (!case_conditions_hold(lay, plan.label)) {
    throw Error(ErrorCode::InvalidPlan, "case conditions do not hold for this plan");
  }
  const int k = top.relays() - 2 * top.z();
  if (k < 1) throw Error(ErrorCode::InvalidCode, "k = N - 2z must be at least 1");
  RowSink sink{field, k, {}, {}};
  const auto owner = [&](int role) { return plan.source_perm[static_cast<std::size_t>(role)]; };
  XSets xs;

  if (plan.label == CaseLabel::Case3) {
    // Source 1 pivots: N_1, then N_13, then N_123 (never N_12).
    const auto c1 = without(lay.fed_positions(0), lay.positions[kN12]);
    const auto p1 = add_pivot_rows(sink, owner(0), lay.zpos[0], c1, lay.r(0));
    xs.x1_13 = intersect(p1, lay.positions[kN13]);
    xs.x1_123 = intersect(p1, lay.positions[kN123]);

    // Source 2 also clears the N_123 columns source 1 pivots on.
    const auto c2 = without(lay.fed_positions(1), xs.x1_123);
    const auto p2 = add_pivot_rows(sink, owner(1), sorted_union(lay.zpos[1], xs.x1_123), c2,
                                   lay.r(1));
    xs.x2_23 = intersect(p2, lay.positions[kN23]);
    xs.x2_123 = intersect(p2, lay.positions[kN123]);

    std::vector<int> taken = sorted_union(xs.x1_13, xs.x1_123);
    taken = sorted_union(taken, xs.x2_23);
    taken = sorted_union(taken, xs.x2_123);
    add_pivot_rows(sink, owner(2), sorted_union(lay.zpos[2], taken),
                   without(lay.fed_positions(2), taken), lay.r(2));

    const int over1 = lay.r(0) - lay.n(kN1);
    const int over2 = lay.r(1) - lay.n(kN2) - lay.n(kN12);
    const auto size = [](const std::vector<int>& v) { return static_cast<int>(v.size()); };
    if (size(xs.x1_13) != std::min(lay.n(kN13), over1) ||
        size(xs.x2_23) != std::min(lay.n(kN23), over2) ||
        size(xs.x1_123) != over1 - size(xs.x1_13) ||
        size(xs.x2_123) != over2 - size(xs.x2_23) ||
        size(xs.x1_123) + size(xs.x2_123) > lay.n(kN123)) {
      throw Error(ErrorCode::InvalidPlan, "Case-3 shared-column bookkeeping is inconsistent");
    }
  } else {
    add_pivot_rows(sink, owner(0), lay.zpos[0], lay.fed_positions(0), lay.r(0));
    const auto p2 = add_pivot_rows(sink, owner(1), lay.zpos[1], lay.fed_positions(1), lay.r(1));
    // In Case 2 the overflow of source 2 lands in N_23 and N_123; source 3
    // must vanish there.
    xs.x2_23 = intersect(p2, lay.positions[kN23]);
    xs.x2_123 = intersect(p2, lay.positions[kN123]);
    const auto x2 = sorted_union(xs.x2_23, xs.x2_123);
    add_pivot_rows(sink, owner(2), sorted_union(lay.zpos[2], x2),
                   without(lay.fed_positions(2), x2), lay.r(2));
  }

  Construction cons = assemble(top, field, plan, sink);
  cons.xsets = std::move(xs);
  return cons;
}

CaseFourPlan case_four_plan(const Field& field, const SmanTopology& top) {
  const Layout lay = make_layout(top, CaseLabel::Case4, {0, 1, 2});
  const int k = top.relays() - 2 * top.z();
  CaseFourPlan c4;
  const int n1 = lay.n(kN1), n2 = lay.n(kN2), n3 = lay.n(kN3);
  const int n12 = lay.n(kN12), n13 = lay.n(kN13);
  c4.nbar = n1 + n2 + n3;
  c4.rprime = {lay.r(0) - n1, lay.r(1) - n2, lay.r(2) - n3};
  c4.rprime_total = c4.rprime[0] + c4.rprime[1] + c4.rprime[2];
  c4.t = k - c4.nbar - 1;
  for (int i = 1; i <= c4.nbar; ++i) c4.c_roots.push_back(i);
  for (int i = n12 + n13 + c4.nbar + 1; i <= n12 + n13 + k - 1; ++i) c4.p_roots.push_back(i);
  const std::array<int, 3> starts{0, n13, n13 + n12};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < c4.rprime[static_cast<std::size_t>(i)]; ++j) {
      c4.shifts[static_cast<std::size_t>(i)].push_back(starts[static_cast<std::size_t>(i)] + j);
    }
  }
  c4.c = vanishing_poly(field, c4.c_roots);
  c4.p = vanishing_poly(field, c4.p_roots);
  return c4;
}

bool shifts_pairwise_disjoint(const CaseFourPlan& plan) {
  std::vector<int> all;
  for (const auto& j : plan.shifts) all.insert(all.end(), j.begin(), j.end());
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

std::size_t shifted_p_rank(const Field& field, const CaseFourPlan& plan) {
  const auto cols = static_cast<std::size_t>(plan.rprime_total);
  std::vector<std::vector<Element>> rows;
  for (const auto& js : plan.shifts) {
    for (int j : js) {
      const Polynomial shifted = scale_arg(field, plan.p, field.alpha_pow(j));
      auto coeffs = coeff_vector(shifted, plan.t + 1);
      coeffs.resize(std::min(cols, coeffs.size()));
      rows.push_back(std::move(coeffs));
    }
  }
  if (rows.empty()) return 0;
  return rank(field, Matrix::from_rows(rows));
}

Construction build_case4(const SmanTopology& top, const Field& field, const CasePlan& plan) {
  if (plan.label != CaseLabel::Case4) {
    throw Error(ErrorCode::InvalidPlan, "build_case4 called with a non-Case4 plan");
  }
  const Layout lay = make_layout(top, CaseLabel::Case4, plan.source_perm);
  if (!case_conditions_hold(lay, CaseLabel::Case4)) {
    throw Error(ErrorCode::InvalidPlan, "Case-4 conditions do not hold");
  }
  const int k = top.relays() - 2 * top.z();
  const CaseFourPlan c4 = case_four_plan(field, permute_sources(pad_to_three(top),
                                                                {plan.source_perm[0],
                                                                 plan.source_perm[1],
                                                                 plan.source_perm[2]}));
  if (c4.rprime_total > c4.t + 1) {
    throw Error(ErrorCode::DegreeBoundViolation, "Case 4 needs R' <= t + 1");
  }
  if (!shifts_pairwise_disjoint(c4)) {
    throw Error(ErrorCode::InvalidPlan, "Case-4 shift sets overlap");
  }
  RowSink sink{field, k, {}, {}};
  const auto owner = [&](int role) { return plan.source_perm[static_cast<std::size_t>(role)]; };

  // S: an identity on each private block N_i.
  for (int role = 0; role < 3; ++role) {
    const auto& own = lay.positions[role_bit(role)];
    add_pivot_rows(sink, owner(role), lay.zpos[role], own, static_cast<int>(own.size()));
  }
  // V: c(x) p(alpha^j x) for j in J_i.
  for (int role = 0; role < 3; ++role) {
    for (int j : c4.shifts[static_cast<std::size_t>(role)]) {
      const Polynomial v = mul_poly(field, c4.c, scale_arg(field, c4.p, field.alpha_pow(j)));
      if (v.degree() != k - 1) {
        throw Error(ErrorCode::DegreeBoundViolation,
                    "Case-4 row polynomial has degree " + std::to_string(v.degree()) +
                        ", expected k - 1 = " + std::to_string(k - 1));
      }
      std::vector<int> roots = c4.c_roots;
      for (int i : c4.p_roots) roots.push_back(i - j);
      sink.push(RowPlan{owner(role), std::move(roots), std::nullopt, j}, v);
    }
  }

  Construction cons = assemble(top, field, plan, sink);
  cons.case4 = c4;
  return cons;
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

const VerifyCheck* VerifyReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerifyReport verify(const Construction& cons) {
  VerifyReport report;
  const Field& f = cons.code.field();
  const auto n = static_cast<std::size_t>(cons.code.length());
  const auto k = static_cast<std::size_t>(cons.code.dimension());
  const std::size_t rows = cons.T.rows();
  const auto fail = [](VerifyCheck& c, std::string detail) {
    if (c.passed) c.detail = std::move(detail);
    c.passed = false;
  };

  VerifyCheck dims{"dimensions", true, ""};
  if (cons.T.cols() != k && rows > 0) fail(dims, "T does not have k columns");
  if (cons.G.rows() != rows || (rows > 0 && cons.G.cols() != n)) fail(dims, "G is not R x N");
  if (cons.row_owner.size() != rows) fail(dims, "row_owner length differs from R");
  if (rows != static_cast<std::size_t>(cons.topology.total_rate())) {
    fail(dims, "T has " + std::to_string(rows) + " rows but the rates sum to " +
                   std::to_string(cons.topology.total_rate()));
  }
  {
    std::vector<int> order(cons.plan.column_order);
    std::sort(order.begin(), order.end());
    std::vector<int> expected(n);
    std::iota(expected.begin(), expected.end(), 1);
    if (order != expected) fail(dims, "column_order is not a permutation of 1..N");
  }
  for (int owner : cons.row_owner) {
    if (owner < 0 || owner >= cons.topology.sources()) fail(dims, "row owner out of range");
  }
  for (int s = 0; s < cons.topology.sources(); ++s) {
    const auto owned = std::count(cons.row_owner.begin(), cons.row_owner.end(), s);
    if (owned != cons.topology.rate(s)) {
      fail(dims, "S" + std::to_string(s + 1) + " owns " + std::to_string(owned) +
                     " rows but has rate " + std::to_string(cons.topology.rate(s)));
    }
  }
  report.checks.push_back(dims);
  if (!dims.passed) return report;

  VerifyCheck gen{"generator", true, ""};
  if (rows > 0 && mat_mul(f, cons.T, generator_matrix(cons.code)) != cons.G) {
    fail(gen, "G differs from T * G_RS");
  }
  report.checks.push_back(gen);

  VerifyCheck mask{"mask", true, ""};
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const int relay = cons.plan.column_order[c];
      if (!cons.topology.adjacent(cons.row_owner[r], relay) && !cons.G(r, c).is_zero()) {
        fail(mask, "row " + std::to_string(r + 1) + " (S" +
                       std::to_string(cons.row_owner[r] + 1) + ") is nonzero at relay " +
                       std::to_string(relay) + " which it does not feed");
      }
    }
  }
  report.checks.push_back(mask);

  VerifyCheck rk{"rank", true, ""};
  const std::size_t rank_g = rank(f, cons.G);
  const std::size_t rank_t = rank(f, cons.T);
  if (rank_g != rows || rank_t != rows) {
    fail(rk, "rank(G) = " + std::to_string(rank_g) + ", rank(T) = " + std::to_string(rank_t) +
                 ", expected " + std::to_string(rows));
  } else {
    rk.detail = "rank " + std::to_string(rows);
  }
  report.checks.push_back(rk);

  VerifyCheck sub{"subcode", true, ""};
  for (std::size_t r = 0; r < rows; ++r) {
    const Polynomial p = interpolate(f, cons.code.eval_points(), cons.G.row(r));
    if (p.degree() >= static_cast<int>(k)) {
      fail(sub, "row " + std::to_string(r + 1) + " interpolates to degree " +
                    std::to_string(p.degree()) + " >= k");
    }
  }
  report.checks.push_back(sub);

  VerifyCheck wt{"weight", true, ""};
  for (std::size_t r = 0; r < rows; ++r) {
    const int w = hamming_weight(cons.G.row(r));
    if (w > 0 && w < cons.code.distance()) {
      fail(wt, "row " + std::to_string(r + 1) + " has weight " + std::to_string(w) +
                   " < 2z + 1 = " + std::to_string(cons.code.distance()));
    }
  }
  report.checks.push_back(wt);
  return report;
}

Construction build(const SmanTopology& top, const Field& field) {
  const CasePlan plan = classify(top);
  Construction cons = plan.label == CaseLabel::Case4 ? build_case4(top, field, plan)
                                                     : build_case123(top, field, plan);
  const VerifyReport report = verify(cons);
  for (const auto& check : report.checks) {
    if (check.passed) continue;
    ErrorCode code = ErrorCode::DegreeBoundViolation;
    if (check.name == "mask") code = ErrorCode::MaskViolation;
    if (check.name == "rank") code = ErrorCode::RankDeficient;
    throw Error(code, "construction failed the " + check.name + " check: " + check.detail);
  }
  return cons;
}

Construction build(const SmanTopology& top) {
  return build(top, Field::for_length(top.relays()));
}

}  // namespace drs
