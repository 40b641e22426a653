#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hypercert/box.hpp"
#include "hypercert/matrix.hpp"

namespace hypercert {

enum class Space { circle, torus, two_point };

/// Pair of unit directions spanning the unstable / stable line fields.
struct SplittingDirs {
  Vec u;
  Vec s;
};

/// A named analytic map family with pointwise and interval oracles. The
/// derivative is invertible everywhere (local diffeomorphism); interval
/// oracles contain the pointwise ones. Immutable after construction.
class MapSystem {
 public:
  virtual ~MapSystem() = default;

  const std::string& id() const { return id_; }
  const std::map<std::string, double>& params() const { return params_; }
  Space space() const { return space_; }
  /// Tangent-space dimension.
  int dim() const { return dim_; }
  /// Number of phase-space coordinates (1 for the two-point base).
  int base_dim() const { return base_dim_; }
  /// Topological degree of a circle map; 0 when not applicable.
  int degree() const { return degree_; }
  bool invertible() const { return invertible_; }

  virtual Point eval(const Point& x) const = 0;
  virtual Mat deriv(const Point& x) const = 0;
  virtual Box eval_box(const Box& b) const = 0;
  virtual IMat deriv_box(const Box& b) const = 0;

  /// Inverse branch for diffeomorphisms; throws unsupported_error otherwise.
  virtual Point inverse(const Point& x) const;

  /// Monotone lift of a circle map to the real line.
  virtual double lift(double x) const;

  virtual bool has_exact_splitting() const { return false; }
  virtual SplittingDirs exact_splitting(const Point& x) const;

 protected:
  MapSystem(std::string id, std::map<std::string, double> params, Space space,
            int dim, int base_dim, int degree, bool invertible)
      : id_(std::move(id)),
        params_(std::move(params)),
        space_(space),
        dim_(dim),
        base_dim_(base_dim),
        degree_(degree),
        invertible_(invertible) {}

 private:
  std::string id_;
  std::map<std::string, double> params_;
  Space space_;
  int dim_;
  int base_dim_;
  int degree_;
  bool invertible_;
};

using SystemPtr = std::shared_ptr<const MapSystem>;

/// Builds a gallery system by id. Throws usage_error for unknown ids or
/// parameters outside the family's validity domain.
SystemPtr make_system(const std::string& id,
                      const std::map<std::string, double>& params = {});

/// Parses "key=value" items.
std::map<std::string, double> parse_params(const std::vector<std::string>& items);

struct GalleryInfo {
  std::string id;
  std::string params_desc;
  std::string desc;
};

std::vector<GalleryInfo> gallery();

/// Orbit point f^n(x); n = 0 returns x.
Point evaluate(const MapSystem& sys, Point x, long n);

/// Ordered derivative product df_{f^{n-1}x} ... df_x, n >= 1.
Mat tangent_map(const MapSystem& sys, const Point& x, long n);

/// The two atoms of the two-point base.
Point two_point_p();
Point two_point_q();

}  // namespace hypercert
