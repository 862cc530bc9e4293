#pragma once

#include "lglab/laurent.hpp"
#include "lglab/upoly.hpp"

#include <string>
#include <vector>

namespace lglab {

struct PeriodSequence {
  std::vector<Rational> coefficients;
  std::string source;

  std::size_t length() const { return coefficients.size(); }
};

/// c_j = constant term of f^j for j = 0..N. Terms of partial powers that can
/// no longer reach the origin within the remaining steps are discarded.
PeriodSequence period_sequence(const LaurentPolynomial& f, int N);

/// sum_i p_i(t) D^i with D = t d/dt.
class DifferentialOperator {
 public:
  DifferentialOperator() = default;
  explicit DifferentialOperator(std::vector<UPoly> coefficients);

  static DifferentialOperator theta();
  static DifferentialOperator multiplier(const UPoly& p);

  int order() const { return static_cast<int>(p_.size()) - 1; }
  /// Largest t-degree among the coefficients.
  int degree() const;
  const std::vector<UPoly>& coefficients() const { return p_; }
  const UPoly& coefficient(int i) const { return p_.at(i); }
  bool is_zero() const { return p_.empty(); }

  /// Integer-primitive with the lowest-order nonzero coefficient of the
  /// leading polynomial positive.
  DifferentialOperator normalized() const;

  friend DifferentialOperator operator+(const DifferentialOperator& a, const DifferentialOperator& b);
  friend DifferentialOperator operator-(const DifferentialOperator& a, const DifferentialOperator& b);
  /// Composition, using D t^c = t^c (D + c).
  friend DifferentialOperator operator*(const DifferentialOperator& a, const DifferentialOperator& b);
  friend bool operator==(const DifferentialOperator& a, const DifferentialOperator& b) { return a.p_ == b.p_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<UPoly> p_;
};

/// Coefficients of L applied to the truncated series sum c_j t^j; position m
/// is sum_{i,k} p_{i,k} (m-k)^i c_{m-k}.
PeriodSequence apply_operator(const DifferentialOperator& L, const PeriodSequence& seq);

/// True when every computable coefficient of L(seq) vanishes.
bool annihilates(const DifferentialOperator& L, const PeriodSequence& seq);

struct PicardFuchsOptions {
  int max_order = 6;
  int max_degree = 12;
  int guard = 20;
};

/// Terms required by the search bounds.
int required_terms(const PicardFuchsOptions& options);

/// Minimal (order, degree) annihilator, verified on the trailing guard terms.
DifferentialOperator find_picard_fuchs(const PeriodSequence& seq, const PicardFuchsOptions& options = {});

struct StagedResult {
  DifferentialOperator op;
  PeriodSequence periods;
  PicardFuchsOptions stage;
};

/// Tries the stages in order. With period_length 0 each stage computes the
/// terms it needs; otherwise one sequence of that length is shared and stages
/// needing more terms are skipped. NotFoundError reports the last stage tried.
StagedResult search_picard_fuchs(const LaurentPolynomial& f, const std::vector<PicardFuchsOptions>& stages,
                                 int period_length = 0);

/// Whether any nonzero operator of exactly this (order, degree) grid
/// annihilates the first length - guard terms.
bool has_annihilator(const PeriodSequence& seq, int order, int degree, int guard);

}  // namespace lglab
