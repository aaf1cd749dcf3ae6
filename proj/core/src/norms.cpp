#include "apergo/norms.hpp"

#include <cmath>
#include <cstdio>

namespace apergo {

NormKind NormKind::parse(const std::string& token) {
  if (token == "euclidean" || token == "l2" || token == "2") return euclidean();
  if (token == "sup" || token == "inf" || token == "max") return sup();
  if (!token.empty() && token.front() == 'p') {
    try {
      return p_norm(std::stod(token.substr(1)));
    } catch (const std::invalid_argument&) {
      // fall through to the common error below
    }
  }
  fail(errc::invalid_input, "unrecognized norm kind '" + token + "'");
}

std::string NormKind::name() const {
  switch (tag_) {
    case Tag::Euclidean: return "euclidean";
    case Tag::Sup: return "sup";
    case Tag::P: {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "p%g", p_);
      return buf;
    }
  }
  return "euclidean";
}

void validate_vector(const Eigen::Ref<const Vector>& x, const char* label) {
  require(x.size() > 0, errc::invalid_input,
          std::string(label) + " must have at least one coordinate");
  require(x.allFinite(), errc::invalid_input,
          std::string(label) + " has non-finite coordinates");
}

double norm(const Eigen::Ref<const Vector>& x, const NormKind& kind) {
  validate_vector(x);
  switch (kind.tag()) {
    case NormKind::Tag::Euclidean:
      return x.norm();
    case NormKind::Tag::Sup:
      return x.cwiseAbs().maxCoeff();
    case NormKind::Tag::P: {
      const double p = kind.exponent();
      if (p == 1.0) return x.cwiseAbs().sum();
      double acc = 0.0;
      for (Eigen::Index i = 0; i < x.size(); ++i) {
        acc += std::pow(std::abs(x[i]), p);
      }
      return std::pow(acc, 1.0 / p);
    }
  }
  fail(errc::numerical, "unreachable norm tag");
}

Vector radial_retraction(const Eigen::Ref<const Vector>& x, double radius,
                         const NormKind& kind) {
  require(std::isfinite(radius) && radius >= 0.0, errc::invalid_input,
          "retraction radius must be finite and nonnegative");
  const double n = norm(x, kind);
  if (n <= radius) return x;
  return (radius / n) * x;
}

double column_diff_norm(const Matrix& a, int ca, const Matrix& b, int cb,
                        const NormKind& kind) {
  switch (kind.tag()) {
    case NormKind::Tag::Euclidean:
      return (a.col(ca) - b.col(cb)).norm();
    case NormKind::Tag::Sup:
      return (a.col(ca) - b.col(cb)).cwiseAbs().maxCoeff();
    case NormKind::Tag::P: {
      const double p = kind.exponent();
      if (p == 1.0) return (a.col(ca) - b.col(cb)).cwiseAbs().sum();
      double acc = 0.0;
      for (Eigen::Index i = 0; i < a.rows(); ++i) {
        acc += std::pow(std::abs(a(i, ca) - b(i, cb)), p);
      }
      return std::pow(acc, 1.0 / p);
    }
  }
  fail(errc::numerical, "unreachable norm tag");
}

double dunkl_williams_slack(const Eigen::Ref<const Vector>& x1,
                            const Eigen::Ref<const Vector>& x2,
                            const NormKind& kind) {
  require(x1.size() == x2.size(), errc::invalid_input,
          "dunkl_williams_slack needs vectors of equal dimension");
  const double n1 = norm(x1, kind);
  const double n2 = norm(x2, kind);
  require(n1 > 0.0 && n2 > 0.0, errc::domain_error,
          "dunkl_williams_slack is undefined at the zero vector");
  const Vector diff_normalized = x1 / n1 - x2 / n2;
  const Vector diff = x1 - x2;
  return 4.0 * norm(diff, kind) / (n1 + n2) - norm(diff_normalized, kind);
}

}  // namespace apergo
