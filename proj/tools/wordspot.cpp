#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wordspot/clustering.hpp"
#include "wordspot/error.hpp"
#include "wordspot/evaluation.hpp"
#include "wordspot/netpbm.hpp"
#include "wordspot/pipeline.hpp"
#include "wordspot/preprocess.hpp"
#include "wordspot/render.hpp"
#include "wordspot/store.hpp"

namespace fs = std::filesystem;
using namespace wordspot;

namespace {

std::vector<std::string> read_query_words(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    words.push_back(line.substr(first, last - first + 1));
  }
  if (words.empty()) throw InvalidArgument("query list " + path.string() + " is empty");
  return words;
}

std::vector<fs::path> page_files(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw IoError(dir.string() + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".pbm" || ext == ".pgm")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InvalidArgument("no .pbm or .pgm pages in " + dir.string());
  return files;
}

BinaryImage load_query_image(const fs::path& path) {
  auto img = read_image(path);
  if (auto* bin = std::get_if<BinaryImage>(&img)) return *bin;
  return otsu_binarize(std::get<GrayImage>(img));
}

void print_lambda_table(const WeightVector& w, std::ostream& out) {
  out << "feature\tactive\tlambda\tweight\n";
  for (std::size_t i = 0; i < w.dim(); ++i) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu\t%d\t%.6f\t%.6f\n", i, w.active[i] ? 1 : 0, w.lambda[i],
                  w.weight[i]);
    out << buf;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word-image indexing and retrieval over scanned text pages"};
  app.require_subcommand(1);

  std::string spec_path, out_path, pages_dir, db_path, weights_path, truth_path, queries_path;
  std::string word, image_path, font = "A";
  double seg_gap = 0.35, threshold = 0.05, cluster_threshold = 0.0;
  int scale = 2;
  std::size_t top = 0;
  unsigned threads = 0;
  bool raw = false, uniform = false, compare_uniform = false;

  auto* render = app.add_subcommand("render", "Render a synthetic corpus from a spec file");
  render->add_option("--spec", spec_path, "Corpus spec (key=value lines)")->required();
  render->add_option("--out", out_path, "Output directory")->required();

  auto* index = app.add_subcommand("index", "Build a feature database from page images");
  index->add_option("--pages", pages_dir, "Directory of .pbm/.pgm pages")->required();
  index->add_option("--out", out_path, "Database file")->required();
  index->add_option("--seg-gap", seg_gap, "Word gap as a fraction of line height");
  index->add_option("--threads", threads, "Worker threads (0 = hardware)");

  auto* weigh = app.add_subcommand("weigh", "Derive feature weights from a database");
  weigh->add_option("--db", db_path)->required();
  weigh->add_option("--out", out_path, "Weights file")->required();

  auto* query = app.add_subcommand("query", "Rank database words against one query");
  query->add_option("--db", db_path)->required();
  auto* wopt = query->add_option("--weights", weights_path);
  auto* word_opt = query->add_option("--word", word, "Query text, rendered in --font");
  auto* image_opt = query->add_option("--image", image_path, "Query word image");
  word_opt->excludes(image_opt);
  query->add_option("--font", font, "A or B");
  query->add_option("--scale", scale);
  query->add_option("--threshold", threshold);
  query->add_option("--top", top, "Keep at most N retrieved words");
  query->add_flag("--raw", raw, "Skip min-max normalization");
  auto* uopt = query->add_flag("--uniform-weights", uniform, "Ignore learned weights");
  wopt->excludes(uopt);

  auto* eval = app.add_subcommand("eval", "Precision/recall over a query list");
  eval->add_option("--db", db_path)->required();
  eval->add_option("--weights", weights_path)->required();
  eval->add_option("--truth", truth_path)->required();
  eval->add_option("--queries", queries_path, "One query word per line")->required();
  eval->add_option("--font", font, "Font the queries are rendered in");
  eval->add_option("--scale", scale);
  eval->add_option("--threshold", threshold);
  eval->add_option("--top", top);
  eval->add_flag("--compare-uniform", compare_uniform);

  auto* cluster = app.add_subcommand("cluster", "Threshold-seeded k-means over a database");
  cluster->add_option("--db", db_path)->required();
  cluster->add_option("--weights", weights_path);
  cluster->add_option("--threshold", cluster_threshold)->required();
  cluster->add_flag("--raw", raw);

  CLI11_PARSE(app, argc, argv);

  try {
    MatchConfig cfg;
    cfg.threshold = threshold;
    cfg.normalize = !raw;
    if (top > 0) cfg.top_k = top;

    if (*render) {
      auto corpus = render_corpus(read_corpus_spec(spec_path));
      write_corpus(corpus, out_path);
      std::cout << corpus.pages.size() << " pages, " << corpus.truth.size() << " words -> "
                << out_path << "\n";
    } else if (*index) {
      SegmentationConfig seg;
      seg.word_gap_factor = seg_gap;
      seg.validate();
      std::vector<Page> pages;
      for (const auto& file : page_files(pages_dir))
        pages.push_back({file.stem().string(), read_gray(file)});
      auto db = index_pages(pages, seg, threads);
      write_db(db, fs::path(out_path));
      std::cout << db.size() << " words from " << pages.size() << " pages -> " << out_path << "\n";
    } else if (*weigh) {
      auto db = read_db(fs::path(db_path));
      auto w = compute_weights(correlation_matrix(db));
      write_weights(w, fs::path(out_path));
      print_lambda_table(w, std::cout);
    } else if (*query) {
      if (word.empty() && image_path.empty())
        throw InvalidArgument("query needs --word or --image");
      if (weights_path.empty() && !uniform)
        throw InvalidArgument("query needs --weights or --uniform-weights");
      cfg.validate();
      auto db = read_db(fs::path(db_path));
      auto w = uniform ? uniform_weights(db.dim()) : read_weights(fs::path(weights_path));
      auto img = word.empty() ? load_query_image(image_path)
                              : render_word(word, parse_font(font), scale);
      auto result = rank_query(query_features(img), db, w, cfg);
      std::cout << "rank\tdoc_id\tword_id\tdistance\n";
      for (std::size_t i = 0; i < result.retrieved; ++i) {
        const auto& e = result.entries[i];
        std::cout << i + 1 << '\t' << e.ref.doc_id << '\t' << e.ref.word_id << '\t'
                  << format_real(e.distance) << '\n';
      }
    } else if (*eval) {
      cfg.validate();
      auto db = read_db(fs::path(db_path));
      auto w = read_weights(fs::path(weights_path));
      auto words = read_query_words(queries_path);
      auto judgments = build_judgments(db, read_truth(fs::path(truth_path)), words);
      Font f = parse_font(font);
      std::vector<Query> queries;
      for (const auto& q : words) queries.push_back({q, render_word(q, f, scale)});
      auto weighted = run_experiment(db, judgments, queries, w, cfg);
      write_report_tsv(weighted, std::cout);
      write_report_summary(weighted, "weighted", std::cout);
      if (compare_uniform) {
        auto base = run_experiment(db, judgments, queries, uniform_weights(db.dim()), cfg);
        write_report_summary(base, "uniform", std::cout);
      }
    } else if (*cluster) {
      auto db = read_db(fs::path(db_path));
      std::optional<WeightVector> w;
      if (!weights_path.empty()) w = read_weights(fs::path(weights_path));
      auto model = ik_means(db, cluster_threshold, w, cfg);
      auto q = cluster_quality(model, db, w, cfg);
      write_cluster_tsv(model, db, std::cout);
      std::cout << "# k=" << model.k << " seed_clusters=" << model.seed_clusters
                << " iterations=" << model.iterations << " mean_intra=" << format_real(q.mean_intra)
                << " min_inter=" << format_real(q.min_inter) << " ratio=" << format_real(q.ratio)
                << "\n";
    }
  } catch (const ParseError& e) {
    std::cerr << "wordspot: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "wordspot: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
