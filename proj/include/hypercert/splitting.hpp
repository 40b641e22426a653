#pragma once

#include <memory>

#include "hypercert/system.hpp"

namespace hypercert {

enum class SplittingSource { exact, estimated };

/// Continuous frame field assigning the E^cu / E^cs line directions over
/// the phase space. Exact splittings come from the gallery; estimated ones
/// are produced by cocycle power iteration and carry their iteration count.
class Splitting {
 public:
  static std::shared_ptr<const Splitting> exact(SystemPtr sys);
  static std::shared_ptr<const Splitting> estimated(SystemPtr sys, int n_iter);

  SplittingDirs dirs(const Point& x) const;
  SplittingSource source() const { return source_; }
  int iterations() const { return n_iter_; }
  const MapSystem& system() const { return *sys_; }

  /// Max over both summands of angle(df_x E(x), E(f x)).
  double invariance_residual(const Point& x) const;

 private:
  Splitting(SystemPtr sys, SplittingSource source, int n_iter)
      : sys_(std::move(sys)), source_(source), n_iter_(n_iter) {}

  SystemPtr sys_;
  SplittingSource source_;
  int n_iter_;
};

/// One power-iteration estimate: E^cu by pushing a generic direction
/// forward along the backward orbit segment of length n_iter, E^cs by
/// pulling a generic direction back along the forward orbit segment.
SplittingDirs estimate_splitting(const MapSystem& sys, const Point& x, int n_iter);

struct ContinuityReport {
  int grid = 0;
  double max_adjacent_angle = 0.0;
  bool skipped = false;
};

/// Samples splitting directions on a grid and reports the largest angle
/// jump between adjacent cells (wrap-aware). Discrete bases are skipped.
ContinuityReport splitting_continuity_check(const MapSystem& sys,
                                            const Splitting& splitting, int grid);

}  // namespace hypercert
