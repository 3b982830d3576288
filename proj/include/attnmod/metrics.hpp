#ifndef ATTNMOD_METRICS_HPP
#define ATTNMOD_METRICS_HPP

#include <algorithm>
#include <vector>

#include "attnmod/cross_mod.hpp"
#include "attnmod/field.hpp"
#include "attnmod/prompt.hpp"
#include "attnmod/softmax.hpp"
#include "attnmod/types.hpp"

namespace attnmod {

/// Order-independent compensated accumulator (Kahan).
class KahanSum {
 public:
  void add(double v) {
    const double y = v - compensation_;
    const double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Leakage and confinement proxies for one attention state.
struct LeakageReport {
  double inter_entity_overlap = 0.0;        // [0, 1]
  double mean_patch_entropy = 0.0;          // nats
  std::vector<Index> winner_region_sizes;   // patches assigned per entity
  Index top_mass_region_size = 0;           // patches holding 90% of a
                                            // reference self-attention row
};

/// Mean over patches of the attention mass that sits on non-winning entity
/// tokens, as a fraction of the patch's total entity mass. Patches with no
/// entity mass contribute 0.
template <typename Scalar>
double inter_entity_overlap(const AttentionField<Scalar>& field,
                            const ParsedPrompt& parse) {
  if (parse.entity_count() < 2) {
    throw SingleEntity("inter_entity_overlap: needs at least two entities");
  }
  detail::check_spans<Scalar>(parse, field.tokens, "inter_entity_overlap");
  const int m = parse.entity_count();
  KahanSum acc;
  for (Index p = 0; p < field.patches(); ++p) {
    double total = 0.0;
    double best = 0.0;
    for (int i = 0; i < m; ++i) {
      double mass = 0.0;
      const TokenSpan span = parse.entities[i].span;
      for (int t = span.start; t < span.end; ++t) mass += double(field.values(p, t));
      total += mass;
      if (i == 0 || mass > best) best = mass;
    }
    acc.add(total > 0.0 ? (total - best) / total : 0.0);
  }
  return acc.value() / double(field.patches());
}

/// Number of leading entries (sorted descending) needed to reach `fraction`
/// of the row's total mass.
template <typename Derived>
Index top_mass_count(const Eigen::MatrixBase<Derived>& row, double fraction = 0.9) {
  using Scalar = typename Derived::Scalar;
  std::vector<Scalar> sorted(static_cast<size_t>(row.size()));
  for (Index i = 0; i < row.size(); ++i) sorted[static_cast<size_t>(i)] = row(i);
  std::sort(sorted.begin(), sorted.end(), std::greater<Scalar>());
  Scalar total = 0;
  for (Scalar v : sorted) total += v;
  const Scalar target = Scalar(fraction) * total;
  Scalar cum = 0;
  for (size_t i = 0; i < sorted.size(); ++i) {
    cum += sorted[i];
    if (cum >= target) return static_cast<Index>(i + 1);
  }
  return static_cast<Index>(sorted.size());
}

/// Mean row entropy after per-row renormalization; zero rows are skipped.
template <typename Scalar>
double mean_patch_entropy(const AttentionField<Scalar>& field) {
  KahanSum acc;
  Index counted = 0;
  VectorX<Scalar> row(field.tokens);
  for (Index p = 0; p < field.patches(); ++p) {
    Scalar sum = 0;
    for (Index t = 0; t < field.tokens; ++t) sum += field.values(p, t);
    if (!(sum > Scalar(0))) continue;
    row = field.values.row(p).transpose() / sum;
    acc.add(double(row_entropy(row)));
    ++counted;
  }
  return counted > 0 ? acc.value() / double(counted) : 0.0;
}

/// Full metric bundle. `self_weights` supplies the reference row for the
/// confinement count; pass an empty matrix to skip it.
template <typename Scalar>
LeakageReport make_leakage_report(const AttentionField<Scalar>& field,
                                  const ParsedPrompt& parse,
                                  const MatrixX<Scalar>& self_weights) {
  LeakageReport report;
  report.inter_entity_overlap =
      parse.entity_count() >= 2 ? inter_entity_overlap(field, parse) : 0.0;
  report.mean_patch_entropy = mean_patch_entropy(field);

  report.winner_region_sizes.assign(static_cast<size_t>(parse.entity_count()), 0);
  const PatchAssignment assign = assign_patches(entity_scores(field, parse));
  for (Index p = 0; p < assign.winner.size(); ++p) {
    ++report.winner_region_sizes[static_cast<size_t>(assign.winner(p))];
  }

  if (self_weights.rows() > 0) {
    const Index reference = self_weights.rows() / 2;
    report.top_mass_region_size = top_mass_count(self_weights.row(reference));
  }
  return report;
}

}  // namespace attnmod

#endif  // ATTNMOD_METRICS_HPP
