#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstring>
#include <numeric>
#include <vector>

#include "attnmod/cross_mod.hpp"
#include "attnmod/oracle.hpp"
#include "attnmod/rng.hpp"

using namespace attnmod;

namespace {

// Synthetic parse with m disjoint spans over T token slots; leftover slots
// join other_spans with probability ~1/2, the rest stay unassigned
// (padding analog).
ParsedPrompt synthetic_parse(Rng& rng, int T, int m) {
  std::vector<int> positions(static_cast<size_t>(T));
  std::iota(positions.begin(), positions.end(), 0);
  for (size_t i = positions.size(); i > 1; --i) {
    std::swap(positions[i - 1], positions[rng.next() % i]);
  }
  std::vector<int> starts(positions.begin(), positions.begin() + m);
  std::sort(starts.begin(), starts.end());

  ParsedPrompt parse;
  for (int i = 0; i < m; ++i) {
    const int limit = (i + 1 < m) ? starts[static_cast<size_t>(i) + 1] : T;
    const int max_len = std::min(limit - starts[static_cast<size_t>(i)], 3);
    const int len = 1 + int(rng.next() % std::uint64_t(max_len));
    EntityGroup e;
    e.span = TokenSpan{starts[static_cast<size_t>(i)], starts[static_cast<size_t>(i)] + len};
    e.head_noun_index = e.span.end - 1;
    parse.entities.push_back(e);
  }
  for (int t = 0; t < T; ++t) {
    if (parse.entity_of(t) < 0 && (rng.next() & 1)) parse.other_spans.push_back(t);
  }
  return parse;
}

AttentionField<double> random_field(Rng& rng, Index H, Index W, Index T) {
  auto field = make_field<double>(H, W, T);
  for (Index p = 0; p < field.patches(); ++p) {
    for (Index t = 0; t < T; ++t) field.values(p, t) = rng.uniform(0.01, 2.0);
  }
  return field;
}

// quantized positive values: ties in entity scores become likely
AttentionField<double> quantized_field(Rng& rng, Index H, Index W, Index T) {
  static const double grid[] = {0.0625, 0.25, 0.5, 1.0, 2.0};
  auto field = make_field<double>(H, W, T);
  for (Index p = 0; p < field.patches(); ++p) {
    for (Index t = 0; t < T; ++t) field.values(p, t) = grid[rng.next() % 5];
  }
  return field;
}

bool bitwise_equal(const AttentionField<double>& a, const AttentionField<double>& b) {
  if (a.height != b.height || a.width != b.width || a.tokens != b.tokens) return false;
  return std::memcmp(a.values.data(), b.values.data(),
                     sizeof(double) * static_cast<size_t>(a.values.size())) == 0;
}

ParsedPrompt two_entity_parse() {
  // spans [0,2) and [2,4), other = {4}, slot 5 unassigned
  ParsedPrompt parse;
  parse.entities.push_back(EntityGroup{TokenSpan{0, 2}, 1, "e1"});
  parse.entities.push_back(EntityGroup{TokenSpan{2, 4}, 3, "e2"});
  parse.other_spans = {4};
  return parse;
}

}  // namespace

TEST_CASE("entity scores are span sums") {
  ParsedPrompt parse;
  parse.entities.push_back(EntityGroup{TokenSpan{0, 2}, 1, "e1"});
  parse.entities.push_back(EntityGroup{TokenSpan{2, 4}, 3, "e2"});

  auto field = make_field<double>(1, 1, 4);
  field.values << 0.1, 0.2, 0.3, 0.4;
  const auto scores = entity_scores(field, parse);
  CHECK(scores.scores(0, 0) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(scores.scores(0, 1) == doctest::Approx(0.7).epsilon(1e-12));

  field.values.setZero();
  const auto zero_scores = entity_scores(field, parse);
  CHECK(zero_scores.scores.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("entity scores match a brute-force accumulation") {
  Rng rng(3);
  auto field = random_field(rng, 4, 4, 8);
  auto parse = synthetic_parse(rng, 8, 3);
  const auto scores = entity_scores(field, parse);
  for (Index h = 0; h < 4; ++h) {
    for (Index w = 0; w < 4; ++w) {
      for (int i = 0; i < 3; ++i) {
        double expected = 0.0;
        for (int t = parse.entities[size_t(i)].span.start;
             t < parse.entities[size_t(i)].span.end; ++t) {
          expected += field.at(h, w, t);
        }
        CHECK(std::abs(scores.scores(h * 4 + w, i) - expected) <= 1e-12);
      }
    }
  }
}

TEST_CASE("out-of-range spans are rejected") {
  ParsedPrompt parse;
  parse.entities.push_back(EntityGroup{TokenSpan{0, 5}, 1, "e"});
  auto field = make_field<double>(2, 2, 4);
  CHECK_THROWS_AS(entity_scores(field, parse), SpanOutOfRange);

  parse.entities[0].span = TokenSpan{0, 2};
  parse.other_spans = {9};
  CHECK_THROWS_AS(entity_scores(field, parse), SpanOutOfRange);

  ParsedPrompt empty;
  CHECK_THROWS_AS(entity_scores(field, empty), SpanOutOfRange);
}

TEST_CASE("patch assignment takes the argmax, ties to the lowest index") {
  EntityScoreMap<double> scores;
  scores.height = 1;
  scores.width = 3;
  scores.scores.resize(3, 2);
  scores.scores << 0.3, 0.7,   // -> 1
                   0.5, 0.5,   // tie -> 0
                   0.9, 0.1;   // -> 0
  const auto assign = assign_patches(scores);
  CHECK(assign.winner(0) == 1);
  CHECK(assign.winner(1) == 0);
  CHECK(assign.winner(2) == 0);

  EntityScoreMap<double> single;
  single.height = 2;
  single.width = 2;
  single.scores = MatrixXd::Constant(4, 1, 0.25);
  CHECK(assign_patches(single).winner.cwiseAbs().maxCoeff() == 0);
}

TEST_CASE("argmax is stable under positive row scaling") {
  Rng rng(41);
  auto field = random_field(rng, 3, 3, 6);
  const auto parse = synthetic_parse(rng, 6, 3);
  const auto before = assign_patches(entity_scores(field, parse));
  for (Index p = 0; p < field.patches(); ++p) {
    field.values.row(p) *= rng.uniform(0.1, 10.0);
  }
  const auto after = assign_patches(entity_scores(field, parse));
  CHECK(before.winner == after.winner);
}

TEST_CASE("object mask keeps the winner span plus all other spans") {
  const auto parse = two_entity_parse();
  PatchAssignment assign;
  assign.height = 1;
  assign.width = 1;
  assign.winner.resize(1);
  assign.winner << 1;
  const auto mask = build_object_mask<double>(assign, parse, 6);
  MatrixXd expected(1, 6);
  expected << 0, 0, 1, 1, 1, 0;
  CHECK(mask.mask == expected);
}

TEST_CASE("single entity over all tokens and empty other spans masks nothing") {
  ParsedPrompt parse;
  parse.entities.push_back(EntityGroup{TokenSpan{0, 4}, 0, "e"});
  PatchAssignment assign;
  assign.height = 2;
  assign.width = 1;
  assign.winner = Eigen::VectorXi::Zero(2);
  const auto mask = build_object_mask<double>(assign, parse, 4);
  CHECK(mask.mask == MatrixXd::Ones(2, 4));
}

TEST_CASE("object mask matches the membership oracle") {
  Rng rng(5);
  const auto parse = synthetic_parse(rng, 6, 3);
  auto field = random_field(rng, 3, 2, 6);
  const auto assign = assign_patches(entity_scores(field, parse));
  const auto mask = build_object_mask<double>(assign, parse, 6);
  for (Index p = 0; p < 6; ++p) {
    const TokenSpan win = parse.entities[size_t(assign.winner(p))].span;
    for (int t = 0; t < 6; ++t) {
      const bool keep = win.contains(t) ||
                        std::find(parse.other_spans.begin(), parse.other_spans.end(),
                                  t) != parse.other_spans.end();
      CHECK(mask.mask(p, t) == (keep ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("apply_mask is the bare elementwise product") {
  Rng rng(9);
  auto field = random_field(rng, 2, 2, 6);
  field.normalized = false;
  const auto parse = two_entity_parse();
  const auto assign = assign_patches(entity_scores(field, parse));

  ObjectMask<double> ones;
  ones.height = 2;
  ones.width = 2;
  ones.tokens = 6;
  ones.mask = MatrixXd::Ones(4, 6);
  CHECK(bitwise_equal(apply_mask(field, ones), field));

  ObjectMask<double> zeros = ones;
  zeros.mask.setZero();
  CHECK(apply_mask(field, zeros).values.cwiseAbs().maxCoeff() == 0.0);

  // masked row sums equal S_E(winner) + sum of other-span mass
  const auto masked = apply_mask(field, build_object_mask<double>(assign, parse, 6));
  const auto scores = entity_scores(field, parse);
  for (Index p = 0; p < 4; ++p) {
    double expected = scores.scores(p, assign.winner(p));
    for (int t : parse.other_spans) expected += field.values(p, t);
    CHECK(masked.values.row(p).sum() == doctest::Approx(expected).epsilon(1e-12));
  }
  CHECK_FALSE(masked.normalized);

  ObjectMask<double> wrong = ones;
  wrong.tokens = 5;
  wrong.mask.resize(4, 5);
  CHECK_THROWS_AS(apply_mask(field, wrong), ShapeMismatch);
}

TEST_CASE("schedule weights hit the declared endpoints") {
  PhaseSchedule sched;  // linear_up (0.5, 1.5) / linear_down (1.5, 0.5)
  CHECK(schedule_weights(sched, 0.0).entity == 0.5);
  CHECK(schedule_weights(sched, 1.0).entity == 1.5);
  CHECK(schedule_weights(sched, 0.5).other == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(schedule_weights(sched, 0.0).other == 1.5);
  CHECK(schedule_weights(sched, 1.0).other == 0.5);

  PhaseSchedule constant;
  constant.entity_curve = Curve{CurveKind::Constant, 1.0, 0.0};
  constant.other_curve = Curve{CurveKind::Constant, 1.0, 0.0};
  for (double theta : {0.0, 0.3, 1.0}) {
    CHECK(schedule_weights(constant, theta).entity == 1.0);
    CHECK(schedule_weights(constant, theta).other == 1.0);
  }

  PhaseSchedule cosine;
  cosine.entity_curve = Curve{CurveKind::CosineUp, 0.5, 1.5};
  cosine.other_curve = Curve{CurveKind::CosineDown, 1.5, 0.5};
  CHECK(schedule_weights(cosine, 0.0).entity == 0.5);
  CHECK(schedule_weights(cosine, 1.0).entity == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(schedule_weights(cosine, 0.5).entity == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("shipped curves are monotone over a fine theta sweep") {
  const std::vector<Curve> entity_curves = {Curve{CurveKind::LinearUp, 0.5, 1.5},
                                            Curve{CurveKind::CosineUp, 0.0, 2.0},
                                            Curve{CurveKind::Constant, 1.0, 1.0}};
  const std::vector<Curve> other_curves = {Curve{CurveKind::LinearDown, 1.5, 0.5},
                                           Curve{CurveKind::CosineDown, 2.0, 0.0},
                                           Curve{CurveKind::Constant, 1.0, 1.0}};
  for (const Curve& e : entity_curves) {
    for (const Curve& o : other_curves) {
      PhaseSchedule sched{e, o};
      sched.validate();
      double prev_e = -1.0;
      double prev_o = 1e300;
      for (int k = 0; k <= 100; ++k) {
        const auto w = schedule_weights(sched, double(k) / 100.0);
        CHECK(w.entity >= prev_e);
        CHECK(w.other <= prev_o);
        CHECK(w.entity >= 0.0);
        CHECK(w.other >= 0.0);
        prev_e = w.entity;
        prev_o = w.other;
      }
    }
  }
}

TEST_CASE("schedule validation rejects wrong trends") {
  PhaseSchedule sched;
  sched.entity_curve = Curve{CurveKind::LinearDown, 1.5, 0.5};
  CHECK_THROWS_AS(sched.validate(), ConfigError);

  sched = PhaseSchedule{};
  sched.entity_curve.w1 = 0.1;  // linear_up with falling endpoints
  CHECK_THROWS_AS(sched.validate(), ConfigError);

  sched = PhaseSchedule{};
  sched.other_curve = Curve{CurveKind::CosineUp, 0.5, 1.5};
  CHECK_THROWS_AS(sched.validate(), ConfigError);

  sched = PhaseSchedule{};
  sched.other_curve.w0 = -0.5;
  CHECK_THROWS_AS(sched.validate(), ConfigError);

  PhaseSchedule{}.validate();
}

TEST_CASE("weighted mask takes the three declared values") {
  const auto parse = two_entity_parse();
  PatchAssignment assign;
  assign.height = 1;
  assign.width = 1;
  assign.winner.resize(1);
  assign.winner << 1;

  PhaseSchedule sched;
  sched.entity_curve = Curve{CurveKind::Constant, 2.0, 2.0};
  sched.other_curve = Curve{CurveKind::Constant, 0.5, 0.5};
  const auto wmask = build_weighted_mask<double>(assign, parse, 6, sched, 0.25);
  MatrixXd expected(1, 6);
  expected << 0, 0, 2, 2, 0.5, 0;
  CHECK(wmask.mask == expected);

  // unit weights reduce to the binary object mask
  PhaseSchedule unit;
  unit.entity_curve = Curve{CurveKind::Constant, 1.0, 1.0};
  unit.other_curve = Curve{CurveKind::Constant, 1.0, 1.0};
  const auto binary = build_object_mask<double>(assign, parse, 6);
  const auto unit_mask = build_weighted_mask<double>(assign, parse, 6, unit, 0.25);
  CHECK(unit_mask.mask == binary.mask);
}

TEST_CASE("weighted mask entries on random instances") {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const int T = 3 + int(rng.next() % 4);
    const int m = 1 + int(rng.next() % std::uint64_t(std::min(T, 3)));
    const auto parse = synthetic_parse(rng, T, m);
    auto field = random_field(rng, 2, 2, T);
    const auto assign = assign_patches(entity_scores(field, parse));
    const PhaseSchedule sched;
    const double theta = rng.uniform();
    const auto w = schedule_weights(sched, theta);
    const auto wmask = build_weighted_mask<double>(assign, parse, T, sched, theta);
    for (Index p = 0; p < wmask.mask.rows(); ++p) {
      for (Index t = 0; t < wmask.mask.cols(); ++t) {
        const double v = wmask.mask(p, t);
        CHECK((v == 0.0 || v == w.entity || v == w.other));
      }
    }
  }
}

TEST_CASE("apply_weighted_mask basics") {
  Rng rng(13);
  auto field = random_field(rng, 2, 2, 6);
  const auto parse = two_entity_parse();
  const auto assign = assign_patches(entity_scores(field, parse));

  PhaseSchedule unit;
  unit.entity_curve = Curve{CurveKind::Constant, 1.0, 1.0};
  unit.other_curve = Curve{CurveKind::Constant, 1.0, 1.0};
  const auto via_weighted = apply_weighted_mask(
      field, build_weighted_mask<double>(assign, parse, 6, unit, 0.5));
  const auto via_binary = apply_mask(field, build_object_mask<double>(assign, parse, 6));
  CHECK(bitwise_equal(via_weighted, via_binary));

  PhaseSchedule zero_other;
  zero_other.entity_curve = Curve{CurveKind::Constant, 1.0, 1.0};
  zero_other.other_curve = Curve{CurveKind::Constant, 0.0, 0.0};
  const auto suppressed = apply_weighted_mask(
      field, build_weighted_mask<double>(assign, parse, 6, zero_other, 0.5));
  for (Index p = 0; p < suppressed.values.rows(); ++p) {
    for (int t : parse.other_spans) CHECK(suppressed.values(p, t) == 0.0);
  }
}

TEST_CASE("doubling both curves doubles the output exactly") {
  Rng rng(13);
  auto field = random_field(rng, 2, 3, 6);
  const auto parse = two_entity_parse();
  const auto assign = assign_patches(entity_scores(field, parse));

  PhaseSchedule sched;  // defaults
  PhaseSchedule doubled = sched;
  doubled.entity_curve.w0 *= 2.0;
  doubled.entity_curve.w1 *= 2.0;
  doubled.other_curve.w0 *= 2.0;
  doubled.other_curve.w1 *= 2.0;

  const double theta = 0.375;  // exact in binary
  const auto a = apply_weighted_mask(
      field, build_weighted_mask<double>(assign, parse, 6, sched, theta));
  const auto b = apply_weighted_mask(
      field, build_weighted_mask<double>(assign, parse, 6, doubled, theta));
  CHECK((a.values * 2.0) == b.values);
}

TEST_CASE("pipeline: off mode returns the field unchanged") {
  Rng rng(31);
  const auto field = random_field(rng, 2, 2, 6);
  const auto parse = two_entity_parse();
  const auto out =
      modulate_cross_attention(field, parse, PhaseSchedule{}, 0.4, CrossMode::Off);
  CHECK(bitwise_equal(out, field));
  CHECK(out.normalized == field.normalized);
}

TEST_CASE("pipeline: both with unit weights equals mask-only bitwise") {
  Rng rng(32);
  const auto field = random_field(rng, 3, 3, 6);
  const auto parse = two_entity_parse();
  PhaseSchedule unit;
  unit.entity_curve = Curve{CurveKind::Constant, 1.0, 1.0};
  unit.other_curve = Curve{CurveKind::Constant, 1.0, 1.0};
  const auto both = modulate_cross_attention(field, parse, unit, 0.7, CrossMode::Both);
  const auto mask_only =
      modulate_cross_attention(field, parse, unit, 0.7, CrossMode::MaskOnly);
  CHECK(bitwise_equal(both, mask_only));
}

TEST_CASE("pipeline equals the manual composition") {
  Rng rng(3);
  const auto field = random_field(rng, 4, 4, 8);
  const auto parse = synthetic_parse(rng, 8, 3);
  const PhaseSchedule sched;
  const double theta = 0.3;

  const auto normalized = normalize_field(field);
  const auto assign = assign_patches(entity_scores(normalized, parse));
  const auto manual = apply_weighted_mask(
      normalized, build_weighted_mask<double>(assign, parse, 8, sched, theta));
  const auto pipeline =
      modulate_cross_attention(field, parse, sched, theta, CrossMode::Both);
  CHECK(bitwise_equal(pipeline, manual));
}

TEST_CASE("pipeline output matches the naive oracle bitwise") {
  Rng rng(2026);
  int tie_patches = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Index H = 1 + Index(rng.next() % 3);
    const Index W = 1 + Index(rng.next() % 3);
    const int T = 2 + int(rng.next() % 5);
    const int m = 1 + int(rng.next() % std::uint64_t(std::min(T, 3)));
    const auto parse = synthetic_parse(rng, T, m);
    const auto field = quantized_field(rng, H, W, T);

    PhaseSchedule sched;
    switch (rng.next() % 3) {
      case 0: break;
      case 1:
        sched.entity_curve = Curve{CurveKind::CosineUp, 0.25, 1.75};
        sched.other_curve = Curve{CurveKind::CosineDown, 1.75, 0.25};
        break;
      default:
        sched.entity_curve = Curve{CurveKind::Constant, 1.0, 1.0};
        sched.other_curve = Curve{CurveKind::Constant, 1.0, 1.0};
        break;
    }
    const double theta = rng.uniform();

    const auto expected = oracle_pipeline(field, parse, sched, theta);
    const auto got = modulate_cross_attention(field, parse, sched, theta, CrossMode::Both);
    REQUIRE(bitwise_equal(got, expected));

    // count genuine argmax ties so the tie-break rule is known to be hit
    const auto scores = entity_scores(normalize_field(field), parse);
    for (Index p = 0; p < scores.scores.rows(); ++p) {
      for (Index i = 1; i < scores.scores.cols(); ++i) {
        if (scores.scores(p, i) == scores.scores(p, 0)) {
          ++tie_patches;
          break;
        }
      }
    }
  }
  CHECK(tie_patches > 0);
}

TEST_CASE("mask kills every non-winning entity token exactly") {
  Rng rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    const int T = 4 + int(rng.next() % 3);
    const auto parse = synthetic_parse(rng, T, 2 + int(rng.next() % 2));
    const auto field = random_field(rng, 2, 3, T);
    const auto out =
        modulate_cross_attention(field, parse, PhaseSchedule{}, 0.5, CrossMode::MaskOnly);
    const auto assign = compute_assignment(field, parse);
    for (Index p = 0; p < out.values.rows(); ++p) {
      for (int i = 0; i < parse.entity_count(); ++i) {
        if (i == assign.winner(p)) continue;
        const TokenSpan span = parse.entities[size_t(i)].span;
        for (int t = span.start; t < span.end; ++t) {
          CHECK(out.values(p, t) == 0.0);
        }
      }
    }
  }
}

TEST_CASE("mask-only preserves other-span values of the normalized field") {
  Rng rng(56);
  const auto field = random_field(rng, 3, 3, 6);
  const auto parse = two_entity_parse();
  const auto normalized = normalize_field(field);
  const auto out =
      modulate_cross_attention(field, parse, PhaseSchedule{}, 0.2, CrossMode::MaskOnly);
  for (Index p = 0; p < out.values.rows(); ++p) {
    for (int t : parse.other_spans) {
      CHECK(out.values(p, t) == normalized.values(p, t));
    }
  }
}

TEST_CASE("reweight-only scales every entity span without selection") {
  Rng rng(57);
  const auto field = random_field(rng, 2, 2, 6);
  const auto parse = two_entity_parse();
  const PhaseSchedule sched;
  const double theta = 0.6;
  const auto w = schedule_weights(sched, theta);
  const auto normalized = normalize_field(field);
  const auto out =
      modulate_cross_attention(field, parse, sched, theta, CrossMode::ReweightOnly);
  for (Index p = 0; p < out.values.rows(); ++p) {
    for (int t = 0; t < 6; ++t) {
      double expected;
      if (parse.entity_of(t) >= 0) {
        expected = normalized.values(p, t) * w.entity;
      } else if (parse.is_other(t)) {
        expected = normalized.values(p, t) * w.other;
      } else {
        expected = 0.0;
      }
      CHECK(out.values(p, t) == expected);
    }
  }
}

TEST_CASE("renormalize_rows restores row sums and keeps zero rows") {
  auto field = make_field<double>(1, 2, 3);
  field.values << 1.0, 1.0, 2.0,
                  0.0, 0.0, 0.0;
  const auto out = renormalize_rows(field);
  CHECK(out.values(0, 0) == doctest::Approx(0.25));
  CHECK(out.values(0, 2) == doctest::Approx(0.5));
  CHECK(out.values.row(1).cwiseAbs().maxCoeff() == 0.0);
  CHECK_FALSE(out.normalized);

  auto positive = make_field<double>(1, 1, 2);
  positive.values << 3.0, 1.0;
  CHECK(renormalize_rows(positive).normalized);
}

TEST_CASE("frozen assignment is honored by the config entry point") {
  Rng rng(58);
  const auto field = random_field(rng, 2, 2, 6);
  const auto parse = two_entity_parse();

  PatchAssignment fixed;
  fixed.height = 2;
  fixed.width = 2;
  fixed.winner = Eigen::VectorXi::Ones(4);  // force entity 1 everywhere

  CrossModConfig config;
  const auto reused =
      modulate_cross_attention(field, parse, config, 0.5, &fixed);
  const auto normalized = normalize_field(field);
  const auto manual = apply_weighted_mask(
      normalized,
      build_weighted_mask<double>(fixed, parse, 6, config.schedule, 0.5));
  CHECK(bitwise_equal(reused, manual));
}

TEST_CASE("normalize_field basics") {
  auto field = make_field<double>(1, 1, 3);
  field.values << 1.0, 1.0, 2.0;
  const auto normalized = normalize_field(field);
  CHECK(normalized.values(0, 0) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(normalized.values(0, 2) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(normalized.normalized);

  const auto twice = normalize_field(normalized);
  CHECK((twice.values - normalized.values).cwiseAbs().maxCoeff() <= 1e-12);

  auto zero = make_field<double>(1, 1, 3);
  CHECK_THROWS_AS(normalize_field(zero), ZeroRow);
}
