#include "revrank/sketch_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace revrank {

namespace {

constexpr std::uint32_t kMagic = 0x4b534452;  // "RDSK"
constexpr std::uint32_t kVersion = 1;

static_assert(std::endian::native == std::endian::little,
              "sketch files assume a little-endian host");

template <typename T>
void put(std::ostream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw std::runtime_error("sketch file: truncated input");
  return value;
}

void put_lists(std::ostream& out, const EstimationSet& set) {
  put<std::uint64_t>(out, set.lists.size());
  for (const EstimationList& list : set.lists) {
    put<std::uint64_t>(out, list.pairs.size());
    for (const auto& [d, est] : list.pairs) {
      put<double>(out, d);
      put<double>(out, est);
    }
  }
}

EstimationSet get_lists(std::istream& in, Estimator estimator,
                        std::uint32_t k, std::uint64_t universe) {
  EstimationSet set;
  set.estimator = estimator;
  set.k = k;
  set.universe = universe;
  auto n = get<std::uint64_t>(in);
  set.lists.resize(n);
  for (std::uint64_t v = 0; v < n; ++v) {
    EstimationList& list = set.lists[v];
    list.node = static_cast<NodeId>(v);
    list.estimator = estimator;
    list.k = k;
    list.universe = universe;
    auto pairs = get<std::uint64_t>(in);
    list.pairs.reserve(pairs);
    for (std::uint64_t i = 0; i < pairs; ++i) {
      double d = get<double>(in);
      double est = get<double>(in);
      list.pairs.push_back({d, est});
    }
  }
  return set;
}

}  // namespace

const EstimationSet& SketchFile::lists(Estimator estimator) const {
  const auto& set = estimator == Estimator::bottom_k ? bottom_k : hip;
  if (!set)
    throw std::runtime_error(
        estimator == Estimator::bottom_k
            ? "sketch file holds no bottom-k estimation lists"
            : "sketch file holds no HIP estimation lists");
  return *set;
}

void save_sketches(std::ostream& out, const SketchFile& file) {
  const AdsSketchSet& set = file.sketches;
  put<std::uint32_t>(out, kMagic);
  put<std::uint32_t>(out, kVersion);
  put<std::uint64_t>(out, set.sketches.size());
  put<std::uint64_t>(out, set.ranks.rankee_count());
  put<std::uint32_t>(out, set.k);
  put<std::uint8_t>(out, static_cast<std::uint8_t>(set.ranks.mode()));
  put<std::uint64_t>(out, set.ranks.seed());

  // Rank assignment: rankees in increasing r order with their values.
  for (NodeId v : set.ranks.order()) {
    put<std::uint32_t>(out, v);
    put<double>(out, set.ranks.r(v));
  }

  for (const AdsSketch& sketch : set.sketches) {
    put<std::uint64_t>(out, sketch.size());
    for (const AdsEntry& e : sketch.entries()) {
      put<std::uint32_t>(out, e.node);
      put<double>(out, e.r);
      put<double>(out, e.dist);
      put<std::uint8_t>(out, e.auxiliary ? 1 : 0);
    }
  }

  std::uint8_t sections = (file.bottom_k ? 1 : 0) + (file.hip ? 1 : 0);
  put<std::uint8_t>(out, sections);
  if (file.bottom_k) {
    put<std::uint8_t>(out, static_cast<std::uint8_t>(Estimator::bottom_k));
    put_lists(out, *file.bottom_k);
  }
  if (file.hip) {
    put<std::uint8_t>(out, static_cast<std::uint8_t>(Estimator::hip));
    put_lists(out, *file.hip);
  }
  if (!out) throw std::runtime_error("sketch file: write failed");
}

void save_sketches_file(const std::string& path, const SketchFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open sketch file for writing: " + path);
  save_sketches(out, file);
}

SketchFile load_sketches(std::istream& in) {
  if (get<std::uint32_t>(in) != kMagic)
    throw std::runtime_error("sketch file: bad magic");
  if (get<std::uint32_t>(in) != kVersion)
    throw std::runtime_error("sketch file: unsupported format version");

  SketchFile file;
  auto n = get<std::uint64_t>(in);
  auto u_count = get<std::uint64_t>(in);
  auto k = get<std::uint32_t>(in);
  auto mode = static_cast<RankAssignment::Mode>(get<std::uint8_t>(in));
  auto seed = get<std::uint64_t>(in);

  std::vector<NodeId> rankees(u_count);
  std::vector<double> values(u_count);
  for (std::uint64_t i = 0; i < u_count; ++i) {
    rankees[i] = get<std::uint32_t>(in);
    values[i] = get<double>(in);
  }

  file.sketches.k = k;
  file.sketches.ranks =
      RankAssignment::from_values(rankees, values, n, mode, seed);
  file.sketches.sketches.reserve(n);
  for (std::uint64_t v = 0; v < n; ++v) {
    auto count = get<std::uint64_t>(in);
    std::vector<AdsEntry> entries;
    entries.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
      AdsEntry e;
      e.node = get<std::uint32_t>(in);
      e.r = get<double>(in);
      e.dist = get<double>(in);
      e.auxiliary = get<std::uint8_t>(in) != 0;
      entries.push_back(e);
    }
    file.sketches.sketches.push_back(
        AdsSketch::from_entries(std::move(entries), k));
  }

  auto sections = get<std::uint8_t>(in);
  for (std::uint8_t s = 0; s < sections; ++s) {
    auto tag = get<std::uint8_t>(in);
    if (tag == static_cast<std::uint8_t>(Estimator::bottom_k))
      file.bottom_k = get_lists(in, Estimator::bottom_k, k, u_count);
    else if (tag == static_cast<std::uint8_t>(Estimator::hip))
      file.hip = get_lists(in, Estimator::hip, k, u_count);
    else
      throw std::runtime_error("sketch file: unknown estimator section");
  }
  return file;
}

SketchFile load_sketches_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open sketch file: " + path);
  return load_sketches(in);
}

}  // namespace revrank
