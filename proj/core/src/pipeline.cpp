#include "wordspot/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "wordspot/error.hpp"

namespace wordspot {

BinaryImage word_crop(const Preprocessed& pre, const BoundingBox& box) {
  const BoundingBox tight = ink_extent(pre.skeleton, box);
  if (tight.w == 0) return {};
  return crop(pre.skeleton, tight);
}

namespace {

bool usable(const BinaryImage& word) { return !word.empty() && word.height() >= 2; }

}  // namespace

std::vector<WordRecord> index_page(const GrayImage& page, const std::string& doc_id,
                                   const SegmentationConfig& cfg) {
  const Preprocessed pre = preprocess(page);
  std::vector<WordRecord> records;
  int next_id = 0;
  for (const auto& box : segment_words(pre.filtered, cfg)) {
    const BinaryImage word = word_crop(pre, box);
    if (!usable(word)) continue;
    records.push_back({{doc_id, next_id++}, box, extract_features(word)});
  }
  return records;
}

FeatureDatabase index_pages(const std::vector<Page>& pages, const SegmentationConfig& cfg,
                            unsigned threads) {
  cfg.validate();
  std::vector<std::vector<WordRecord>> per_page(pages.size());
  std::vector<std::exception_ptr> errors(pages.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, pages.size())));

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < pages.size(); i = next++) {
      try {
        per_page[i] = index_page(pages[i].image, pages[i].doc_id, cfg);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  FeatureDatabase db(kFeatureDim);
  for (std::size_t i = 0; i < pages.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    for (auto& rec : per_page[i]) db.add(std::move(rec));
  }
  return db;
}

FeatureVector query_features(const BinaryImage& word_image, const SegmentationConfig& cfg) {
  if (word_image.empty()) throw InvalidArgument("query image is empty");
  const Preprocessed pre = preprocess(to_gray(pad(word_image, kQueryMargin)));
  const auto boxes = segment_words(pre.filtered, cfg);
  if (boxes.empty()) throw InvalidArgument("query image has no word-sized ink after preprocessing");

  BoundingBox u = boxes.front();
  for (const auto& b : boxes) {
    const int x0 = std::min(u.x, b.x), y0 = std::min(u.y, b.y);
    const int x1 = std::max(u.right(), b.right()), y1 = std::max(u.bottom(), b.bottom());
    u = {x0, y0, x1 - x0, y1 - y0};
  }
  const BinaryImage word = word_crop(pre, u);
  if (!usable(word)) throw InvalidArgument("query skeleton is degenerate");
  return extract_features(word);
}

}  // namespace wordspot
