#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "revrank/ads.hpp"
#include "revrank/estimators.hpp"

namespace revrank {

// On-disk container holding the sketches of every node, the rank
// assignment they were built from, and any estimation lists derived from
// them. The binary layout is documented in docs/sketch-format.md; loading
// the result of a save reproduces the logical content exactly.
struct SketchFile {
  AdsSketchSet sketches;
  std::optional<EstimationSet> bottom_k;
  std::optional<EstimationSet> hip;

  // Lists for the given estimator; throws std::runtime_error when the file
  // was written without them.
  const EstimationSet& lists(Estimator estimator) const;
};

void save_sketches(std::ostream& out, const SketchFile& file);
void save_sketches_file(const std::string& path, const SketchFile& file);

SketchFile load_sketches(std::istream& in);
SketchFile load_sketches_file(const std::string& path);

}  // namespace revrank
