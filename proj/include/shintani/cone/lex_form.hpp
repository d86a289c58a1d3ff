#pragma once

#include <vector>

#include "shintani/ordered_field/linalg.hpp"

namespace shintani {

/// Finite list of rational linear forms phi_1, phi_2, ... read in order: the
/// sign at w is the sign of the first phi_k(w) that is nonzero.
struct LexLinearForm {
  std::vector<QVec> forms;

  int sign_at(const QVec& w) const {
    for (const auto& f : forms) {
      int s = sgn(dot(f, w));
      if (s != 0) return s;
    }
    return 0;
  }

  bool all_zero() const {
    for (const auto& f : forms)
      if (!is_zero_vector(f)) return false;
    return true;
  }

  /// Drops every form lying in the span of the forms before it. Such a form
  /// vanishes wherever all earlier ones do, so it never decides a sign.
  LexLinearForm reduced() const {
    LexLinearForm out;
    for (const auto& f : forms) {
      QMat rows = out.forms;
      rows.push_back(f);
      if (rank(rows) > out.forms.size()) out.forms.push_back(f);
    }
    return out;
  }
};

}  // namespace shintani
