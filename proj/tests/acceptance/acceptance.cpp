// End-to-end acceptance checks. One PASS/FAIL line per criterion; the exit
// status is non-zero when any criterion fails.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "wordspot/clustering.hpp"
#include "wordspot/dct.hpp"
#include "wordspot/error.hpp"
#include "wordspot/evaluation.hpp"
#include "wordspot/pipeline.hpp"
#include "wordspot/preprocess.hpp"
#include "wordspot/render.hpp"
#include "wordspot/segmentation.hpp"
#include "wordspot/store.hpp"
#include "wordspot/weighting.hpp"

using namespace wordspot;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kCorrelationTol = 1e-6;
constexpr double kMaxCorpusCondition = 1e6;
constexpr double kWeightSumTol = 1e-12;
constexpr double kAffineTol = 1e-9;
constexpr double kEq7Tol = 1e-15;
constexpr double kDctTol = 1e-9;
constexpr double kMinIou = 0.9;
constexpr double kSelfDistance = 1e-9;
constexpr double kRetrievalThreshold = 0.05;
constexpr double kMaxRecallDrop = 50.0;
constexpr double kAverageTol = 1e-12;
constexpr std::size_t kQueryCount = 30;
constexpr std::uint64_t kQuerySeed = 7;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const Outcome& o) {
  std::printf("criterion %2d  %s  %s: %s\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double condition_number(const oracle::Matrix& data) {
  const std::size_t d = data.front().size();
  Eigen::MatrixXd r(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) r(i, j) = i == j ? 1.0 : oracle::pearson(data, i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(r, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff() / es.eigenvalues().minCoeff();
}

std::vector<oracle::Matrix> random_corpora() {
  std::mt19937_64 rng(2024);
  std::vector<oracle::Matrix> out;
  while (out.size() < 50) {
    const std::size_t dim = 4 + out.size() % 7;
    auto m = oracle::correlated_sample(rng, 200, dim);
    if (condition_number(m) < kMaxCorpusCondition) out.push_back(std::move(m));
  }
  return out;
}

// 1 ------------------------------------------------------------------------
Outcome correlation_core(const std::vector<oracle::Matrix>& corpora) {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (const auto& m : corpora) {
    auto cm = correlation_matrix(database_from_rows(m));
    auto identity = multiple_correlations(cm);
    for (std::size_t t = 0; t < cm.dim(); ++t) {
      const double rec = multiple_correlation_recursive(cm, t);
      const double reg = oracle::regression_r(m, t);
      worst = std::max({worst, std::abs(rec - identity[t]), std::abs(rec - reg),
                        std::abs(identity[t] - reg)});
    }
  }
  const double secs = seconds_since(t0);
  return {worst <= kCorrelationTol && secs < 10.0,
          fmt("50 corpora, max pairwise gap %.3g (tol %.0e), %.2f s (limit 10 s)", worst,
              kCorrelationTol, secs)};
}

// 2 ------------------------------------------------------------------------
Outcome weighting_invariants(const std::vector<oracle::Matrix>& corpora) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> scale(0.01, 100.0), shift(-1e3, 1e3);
  std::size_t violations = 0, tested = 0;
  double worst_affine = 0.0;
  for (const auto& base : corpora) {
    // Append a constant column so every corpus also exercises the
    // zero-variance rule.
    auto m = base;
    for (auto& row : m) row.push_back(4.25);
    const std::size_t dim = m.front().size();
    auto w = compute_weights(correlation_matrix(database_from_rows(m)));
    ++tested;
    double sum = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      if (w.weight[i] < 0.0) ++violations;
      sum += w.weight[i];
      for (std::size_t j = 0; j < dim; ++j)
        if (w.active[i] && w.active[j] && w.lambda[i] > w.lambda[j] && w.weight[i] > w.weight[j])
          ++violations;
    }
    if (std::abs(sum - 1.0) > kWeightSumTol) ++violations;
    if (w.active[dim - 1] || w.weight[dim - 1] != 0.0) ++violations;

    for (std::size_t col = 0; col + 1 < dim; ++col) {
      auto moved = m;
      const double a = scale(rng) * (rng() % 2 ? -1.0 : 1.0), b = shift(rng);
      for (auto& row : moved) row[col] = a * row[col] + b;
      auto w2 = compute_weights(correlation_matrix(database_from_rows(moved)));
      std::size_t arg1 = 0, arg2 = 0;
      for (std::size_t i = 0; i < dim; ++i) {
        worst_affine = std::max(worst_affine, std::abs(w.weight[i] - w2.weight[i]));
        if (w.weight[i] > w.weight[arg1]) arg1 = i;
        if (w2.weight[i] > w2.weight[arg2]) arg2 = i;
      }
      if (arg1 != arg2) ++violations;
    }
  }
  return {violations == 0 && worst_affine <= kAffineTol,
          fmt("%zu corpora, %zu violations, max affine weight change %.3g (tol %.0e)", tested,
              violations, worst_affine, kAffineTol)};
}

// 3 ------------------------------------------------------------------------
Outcome eq7_anchor() {
  auto w = weights_from_lambdas({0.5, 0.25}, {true, true});
  const double e0 = std::abs(w.weight[0] - 1.0 / 3.0), e1 = std::abs(w.weight[1] - 2.0 / 3.0);
  return {e0 <= kEq7Tol && e1 <= kEq7Tol,
          fmt("w = (%.17g, %.17g), errors %.3g / %.3g (tol %.0e)", w.weight[0], w.weight[1], e0,
              e1, kEq7Tol)};
}

// 4 ------------------------------------------------------------------------
Outcome otsu_and_thinning() {
  std::mt19937_64 rng(404);
  int otsu_bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int w = 8 + static_cast<int>(rng() % 40), h = 8 + static_cast<int>(rng() % 40);
    const int levels = 1 + static_cast<int>(rng() % 16);
    std::vector<std::uint8_t> palette(levels);
    for (auto& p : palette) p = static_cast<std::uint8_t>(rng() % 256);
    std::vector<std::uint8_t> px(static_cast<std::size_t>(w) * h);
    for (auto& p : px) p = palette[rng() % levels];
    GrayImage img(w, h, std::move(px));
    auto hist = intensity_histogram(img);
    if (otsu_threshold(hist) != oracle::exhaustive_otsu(hist)) ++otsu_bad;
  }
  int thin_bad = 0, comp_bad = 0;
  const auto suite = oracle::thinning_suite();
  std::string broken;
  for (const auto& s : suite) {
    auto got = skeletonize(s.image);
    if (got != oracle::reference_thinning(s.image)) {
      ++thin_bad;
      broken += " " + s.name;
    }
    if (oracle::flood_fill_components(got) != oracle::flood_fill_components(s.image)) {
      ++comp_bad;
      broken += " " + s.name + "(components)";
    }
  }
  return {otsu_bad == 0 && thin_bad == 0 && comp_bad == 0 && suite.size() == 20,
          fmt("Otsu mismatches %d/1000; thinning mismatches %d/%zu, component changes %d%s",
              otsu_bad, thin_bad, suite.size(), comp_bad, broken.c_str())};
}

// 5 ------------------------------------------------------------------------
Outcome dct_oracle() {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> x(256);
    for (auto& v : x) v = u(rng);
    auto fast = dct2(x);
    auto ref = oracle::naive_dct(x);
    for (std::size_t k = 0; k < x.size(); ++k) worst = std::max(worst, std::abs(fast[k] - ref[k]));
  }
  auto c = dct2(std::vector<double>(256, 0.8));
  double leak = 0.0;
  for (std::size_t k = 1; k < c.size(); ++k) leak = std::max(leak, std::abs(c[k]));
  const double dc_err = std::abs(c[0] - 16.0 * 0.8);
  return {worst <= kDctTol && leak <= kDctTol && dc_err <= kDctTol,
          fmt("max |fast - naive| %.3g, constant signal: DC error %.3g, max AC %.3g (tol %.0e)",
              worst, dc_err, leak, kDctTol)};
}

// Shared corpora for 6-9 ---------------------------------------------------
struct Indexed {
  CorpusSpec spec;
  RenderedCorpus corpus;
  FeatureDatabase db;
  WeightVector weights;
  RelevanceJudgments judgments;
  std::vector<std::string> queries;
};

Indexed build(const CorpusSpec& spec) {
  Indexed out;
  out.spec = spec;
  out.corpus = render_corpus(spec);
  std::vector<Page> pages;
  for (const auto& p : out.corpus.pages) pages.push_back({p.doc_id, to_gray(p.image)});
  out.db = index_pages(pages);
  out.weights = compute_weights(correlation_matrix(out.db));
  // Queries always come from the 50 standard words so both corpora answer
  // the same 30-query suite.
  out.queries = sample_queries(standard_lexicon(), kQueryCount, kQuerySeed);
  out.judgments = build_judgments(out.db, out.corpus.truth, out.queries);
  return out;
}

std::vector<Query> render_queries(const Indexed& ix, Font font) {
  std::vector<Query> q;
  for (const auto& w : ix.queries) q.push_back({w, render_word(w, font, ix.spec.scale)});
  return q;
}

PRReport evaluate(const Indexed& ix, Font font, const WeightVector& w) {
  MatchConfig cfg;
  cfg.threshold = kRetrievalThreshold;
  return run_experiment(ix.db, ix.judgments, render_queries(ix, font), w, cfg);
}

void print_reports(const char* title, const PRReport& weighted, const PRReport& uniform) {
  std::printf("  %s: query / weighted P R / uniform P R\n", title);
  for (std::size_t i = 0; i < weighted.rows.size(); ++i) {
    const auto& a = weighted.rows[i];
    const auto& b = uniform.rows[i];
    std::printf("    %-12s %7.2f %7.2f   %7.2f %7.2f\n", a.query.c_str(), a.precision, a.recall,
                b.precision, b.recall);
  }
  std::printf("    %-12s %7.2f %7.2f   %7.2f %7.2f\n", "AVERAGE", weighted.average_precision,
              weighted.average_recall, uniform.average_precision, uniform.average_recall);
}

// 6 ------------------------------------------------------------------------
Outcome segmentation_recall() {
  const auto t0 = Clock::now();
  auto spec = standard_corpus_spec();
  auto corpus = render_corpus(spec);
  int bad_pages = 0;
  double min_iou = 1.0;
  std::size_t t = 0, words = 0;
  for (const auto& page : corpus.pages) {
    std::vector<BoundingBox> truth;
    while (t < corpus.truth.size() && corpus.truth[t].ref.doc_id == page.doc_id)
      truth.push_back(corpus.truth[t++].box);
    auto boxes = segment_words(preprocess(to_gray(page.image)).filtered);
    if (boxes.size() != truth.size()) {
      ++bad_pages;
      continue;
    }
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      // Every truth box is matched to its best-overlapping cut.
      double best = 0.0;
      for (const auto& b : boxes) best = std::max(best, intersection_over_union(b, truth[i]));
      min_iou = std::min(min_iou, best);
    }
    words += boxes.size();
  }
  const double secs = seconds_since(t0);
  return {bad_pages == 0 && min_iou >= kMinIou && secs < 60.0,
          fmt("%zu pages, %zu words, pages with wrong count %d, min IoU %.4f (>= %.1f), %.2f s "
              "(limit 60 s)",
              corpus.pages.size(), words, bad_pages, min_iou, kMinIou, secs)};
}

// 7 ------------------------------------------------------------------------
Outcome self_retrieval(const Indexed& ix, PRReport& out) {
  MatchConfig cfg;
  cfg.threshold = kRetrievalThreshold;
  auto labels = label_records(ix.db, ix.corpus.truth);
  int bad_rank = 0;
  for (const auto& w : ix.queries) {
    auto r = rank_query(query_features(render_word(w, Font::A, ix.spec.scale)), ix.db, ix.weights,
                        cfg);
    std::size_t idx = 0;
    for (; idx < ix.db.size(); ++idx)
      if (ix.db[idx].ref == r.entries[0].ref) break;
    if (r.entries[0].distance > kSelfDistance || !labels[idx] || *labels[idx] != w) ++bad_rank;
  }
  out = evaluate(ix, Font::A, ix.weights);
  int not_full = 0;
  for (const auto& row : out.rows)
    if (row.recall != 100.0) ++not_full;
  return {bad_rank == 0 && not_full == 0,
          fmt("%zu queries, rank-1 not an exact match %d, recall < 100%% %d; avg P %.2f R %.2f",
              ix.queries.size(), bad_rank, not_full, out.average_precision, out.average_recall)};
}

// 8 ------------------------------------------------------------------------
Outcome weighting_trend(const Indexed& conf, PRReport& weighted, PRReport& uniform) {
  weighted = evaluate(conf, Font::A, conf.weights);
  uniform = evaluate(conf, Font::A, uniform_weights(conf.db.dim()));
  print_reports("confusable corpus, font A", weighted, uniform);
  return {weighted.average_precision >= uniform.average_precision,
          fmt("%zu-word lexicon, avg precision weighted %.4f vs uniform %.4f",
              conf.spec.lexicon.size(), weighted.average_precision, uniform.average_precision)};
}

// 9 ------------------------------------------------------------------------
Outcome font_robustness(const Indexed& ix, const PRReport& font_a, PRReport& weighted,
                        PRReport& uniform) {
  weighted = evaluate(ix, Font::B, ix.weights);
  uniform = evaluate(ix, Font::B, uniform_weights(ix.db.dim()));
  print_reports("standard corpus, font B queries", weighted, uniform);
  const double drop = font_a.average_recall - weighted.average_recall;
  return {drop < kMaxRecallDrop && weighted.average_precision >= uniform.average_precision,
          fmt("avg recall %.2f -> %.2f (drop %.2f points, limit < %.0f); avg precision weighted "
              "%.2f vs uniform %.2f",
              font_a.average_recall, weighted.average_recall, drop, kMaxRecallDrop,
              weighted.average_precision, uniform.average_precision)};
}

// 10 -----------------------------------------------------------------------
// Two planted clusters (rows 0-4 and 5-9). Columns 0 and 1 carry the
// cluster; columns 2 and 3 are two noisy copies of one large-variance
// nuisance variable.
const std::vector<std::vector<double>> kPlanted{
    {0.674, 0.801, 2.956, 2.852},     {0.683, 1.178, 1.457, 1.332},
    {1.073, 1.426, 0.719, 0.294},     {1.411, 0.765, 1.121, 1.449},
    {0.658, 1.159, 0.936, 2.057},     {-0.960, -0.915, 14.209, 14.032},
    {-0.690, -0.935, -0.439, 0.070},  {-1.124, -0.832, -1.160, -0.246},
    {-0.953, -0.770, 6.698, 6.837},   {-1.000, -0.756, 6.964, 7.316},
};
constexpr double kPlantedThreshold = 0.5;

bool matches_planted(const ClusterModel& m) {
  if (m.k != 2) return false;
  for (std::size_t i = 0; i < 10; ++i)
    if (m.assignment[i] != m.assignment[i < 5 ? 0 : 5]) return false;
  return m.assignment[0] != m.assignment[5];
}

Outcome ik_means_checks() {
  const auto t0 = Clock::now();
  MatchConfig raw;
  raw.normalize = false;
  auto line = database_from_rows({{0.0, 0.0}, {0.1, 0.0}, {5.0, 0.0}, {5.1, 0.0}});
  WeightVector w0{{1, 1}, {1, 0}, {true, false}};
  auto m1 = ik_means(line, 1.0, w0, raw);
  const bool line_ok = m1.k == 2 && m1.assignment[0] == m1.assignment[1] &&
                       m1.assignment[2] == m1.assignment[3] && m1.assignment[0] != m1.assignment[2];

  auto db = database_from_rows(kPlanted);
  auto w = compute_weights(correlation_matrix(db));
  MatchConfig cfg;
  auto plain = ik_means(db, kPlantedThreshold, std::nullopt, cfg);
  auto weighted = ik_means(db, kPlantedThreshold, w, cfg);
  auto qp = cluster_quality(plain, db, std::nullopt, cfg);
  auto qw = cluster_quality(weighted, db, w, cfg);
  int misplaced = 0;
  if (plain.k == 2)
    for (std::size_t i = 5; i < 10; ++i)
      if (plain.assignment[i] == plain.assignment[0]) ++misplaced;
  const double secs = seconds_since(t0);
  const bool ok = line_ok && !matches_planted(plain) && matches_planted(weighted) &&
                  qw.ratio < qp.ratio && secs < 1.0;
  return {ok, fmt("1-D example %s; planted data: unweighted k=%zu (%d of cluster 2 joined cluster "
                  "1), weighted k=%zu %s; quality ratio %.4f weighted vs %.4f unweighted; %.3f s",
                  line_ok ? "ok" : "wrong", plain.k, misplaced, weighted.k,
                  matches_planted(weighted) ? "exact" : "wrong", qw.ratio, qp.ratio, secs)};
}

// 11 -----------------------------------------------------------------------
Outcome pr_arithmetic(const std::vector<const PRReport*>& reports) {
  auto refs = [](std::initializer_list<int> ids) {
    std::set<WordRef> s;
    for (int i : ids) s.insert({"d", i});
    return s;
  };
  auto a = precision_recall(refs({1, 2, 3, 4, 5}), refs({1, 2, 3, 6}));
  auto b = precision_recall(refs({1, 2}), refs({1, 2}));
  auto c = precision_recall({}, refs({1, 2, 3, 4}));
  const bool anchors = a.precision == 60.0 && a.recall == 75.0 && b.precision == 100.0 &&
                       b.recall == 100.0 && c.precision == 0.0 && c.recall == 0.0;
  double worst = 0.0;
  for (const auto* r : reports) {
    double sp = 0, sr = 0;
    for (const auto& row : r->rows) {
      sp += row.precision;
      sr += row.recall;
    }
    const double n = static_cast<double>(r->rows.size());
    worst = std::max({worst, std::abs(sp / n - r->average_precision),
                      std::abs(sr / n - r->average_recall)});
  }
  return {anchors && worst <= kAverageTol,
          fmt("anchors %s; %zu reports, max |average - mean of rows| %.3g (tol %.0e)",
              anchors ? "exact" : "wrong", reports.size(), worst, kAverageTol)};
}

// 12 -----------------------------------------------------------------------
bool same_bits(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same_bits(a[i], b[i])) return false;
  return true;
}

Outcome persistence() {
  std::mt19937_64 rng(1212);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  int db_bad = 0, w_bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 1 + rng() % 93;
    const std::size_t n = rng() % 40;
    FeatureDatabase db(dim);
    for (std::size_t i = 0; i < n; ++i) {
      FeatureVector f(dim);
      for (auto& v : f) v = std::ldexp(mant(rng), static_cast<int>(rng() % 200) - 100);
      db.add({{"doc_" + std::to_string(rng() % 5), static_cast<int>(i)},
              {static_cast<int>(rng() % 500), static_cast<int>(rng() % 500),
               1 + static_cast<int>(rng() % 80), 1 + static_cast<int>(rng() % 40)},
              f});
    }
    std::stringstream s;
    write_db(db, s);
    auto back = read_db(s);
    bool ok = back.size() == db.size() && back.dim() == db.dim() &&
              same_bits(back.col_min(), db.col_min()) && same_bits(back.col_max(), db.col_max());
    for (std::size_t i = 0; ok && i < db.size(); ++i)
      ok = back[i].ref == db[i].ref && back[i].box == db[i].box &&
           same_bits(back[i].features, db[i].features);
    if (!ok) ++db_bad;

    const std::size_t wd = 2 + rng() % 92;
    std::vector<double> lambda(wd);
    std::vector<bool> active(wd);
    for (std::size_t i = 0; i < wd; ++i) {
      lambda[i] = std::abs(mant(rng));
      active[i] = i < 2 || rng() % 5 != 0;
    }
    auto w = weights_from_lambdas(lambda, active);
    std::stringstream sw;
    write_weights(w, sw);
    auto wb = read_weights(sw);
    if (!(same_bits(wb.lambda, w.lambda) && same_bits(wb.weight, w.weight) && wb.active == w.active))
      ++w_bad;
  }

  int rejected = 0, right_line = 0;
  for (const auto& m : fixtures::malformed()) {
    const auto path = fixtures::dir() / m.file;
    try {
      switch (m.kind) {
        case fixtures::Kind::Database: read_db(path); break;
        case fixtures::Kind::Weights: read_weights(path); break;
        case fixtures::Kind::Truth: read_truth(path); break;
      }
    } catch (const ParseError& e) {
      ++rejected;
      if (e.unit() == ParseError::Unit::Line && e.where() == m.line) ++right_line;
    }
  }
  const int total = static_cast<int>(fixtures::malformed().size());
  return {db_bad == 0 && w_bad == 0 && rejected == total && right_line == total,
          fmt("100 databases (%d mismatches), 100 weight files (%d mismatches); malformed "
              "fixtures rejected %d/%d, correct line %d/%d",
              db_bad, w_bad, rejected, total, right_line, total)};
}

}  // namespace

int main() {
  try {
    const auto corpora = random_corpora();
    report(1, "correlation-core equivalence", correlation_core(corpora));
    report(2, "weighting invariants", weighting_invariants(corpora));
    report(3, "inverse-lambda arithmetic", eq7_anchor());
    report(4, "Otsu and Zhang-Suen oracles", otsu_and_thinning());
    report(5, "DCT-II oracle", dct_oracle());
    report(6, "segmentation recall", segmentation_recall());

    const Indexed standard = build(standard_corpus_spec());
    const Indexed confusable = build(confusable_corpus_spec());
    PRReport font_a, conf_w, conf_u, font_b_w, font_b_u;
    report(7, "self-retrieval", self_retrieval(standard, font_a));
    report(8, "weighting improves precision", weighting_trend(confusable, conf_w, conf_u));
    report(9, "font robustness", font_robustness(standard, font_a, font_b_w, font_b_u));
    report(10, "IK-means", ik_means_checks());
    report(11, "precision/recall arithmetic",
           pr_arithmetic({&font_a, &conf_w, &conf_u, &font_b_w, &font_b_u}));
    report(12, "persistence", persistence());
  } catch (const std::exception& e) {
    std::printf("acceptance aborted: %s\n", e.what());
    return 2;
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
