#pragma once

#include <Eigen/Dense>
#include <string>

#include "apergo/errors.hpp"

namespace apergo {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Which norm a finite-dimensional value space carries.  Euclidean is the
// p = 2 special case and the only kind the subspace constants support.
class NormKind {
 public:
  enum class Tag { Euclidean, P, Sup };

  static NormKind euclidean() { return NormKind(Tag::Euclidean, 2.0); }
  static NormKind sup() { return NormKind(Tag::Sup, 0.0); }

  static NormKind p_norm(double p) {
    require(p >= 1.0 && std::isfinite(p), errc::invalid_input,
            "p-norm exponent must be finite and >= 1");
    if (p == 2.0) return euclidean();
    return NormKind(Tag::P, p);
  }

  // Accepts "euclidean", "sup", "inf", or "p<exponent>" (e.g. "p1.5").
  static NormKind parse(const std::string& token);

  Tag tag() const { return tag_; }
  double exponent() const { return tag_ == Tag::Euclidean ? 2.0 : p_; }
  std::string name() const;

  bool operator==(const NormKind& other) const {
    return tag_ == other.tag_ && (tag_ != Tag::P || p_ == other.p_);
  }
  bool operator!=(const NormKind& other) const { return !(*this == other); }

 private:
  NormKind(Tag tag, double p) : tag_(tag), p_(p) {}
  Tag tag_;
  double p_;
};

// Throws invalid_input on empty or non-finite vectors.
void validate_vector(const Eigen::Ref<const Vector>& x, const char* label = "vector");

double norm(const Eigen::Ref<const Vector>& x, const NormKind& kind);

// Identity inside the closed ball of the given radius, radial projection
// onto its boundary outside.  radius must be >= 0 and finite.
Vector radial_retraction(const Eigen::Ref<const Vector>& x, double radius,
                         const NormKind& kind);

// Nonnegative gap in the norm inequality bounding the distance of the two
// normalized vectors by 4 ||x1 - x2|| / (||x1|| + ||x2||).  Requires both
// inputs nonzero.
double dunkl_williams_slack(const Eigen::Ref<const Vector>& x1,
                            const Eigen::Ref<const Vector>& x2,
                            const NormKind& kind);

// ||a.col(ca) - b.col(cb)|| without materializing the difference; the
// workhorse of the shift scans.
double column_diff_norm(const Matrix& a, int ca, const Matrix& b, int cb,
                        const NormKind& kind);

}  // namespace apergo
