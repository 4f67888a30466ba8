#pragma once

#include <string>
#include <variant>
#include <vector>

#include "summa/coefficient.hpp"
#include "summa/weight.hpp"

namespace summa {

// d_j = sum_{k=1}^{r} a_k d_{j-k} for the weighted sequence d_j = f_j / w_j.
struct Recursion {
  int r = 0;
  std::vector<Coefficient> a;  // a_1 ... a_r
  MomentWeight weight = MomentWeight::factorial(1);
};

enum class NotFoundReason { ZeroSequence, InsufficientWindow, NoLowOrderFit, ConvergentCase };

std::string_view to_string(NotFoundReason reason);

struct NotFound {
  NotFoundReason reason;
  std::string detail;
};

template <class T>
using Outcome = std::variant<T, NotFound>;

template <class T>
bool found(const Outcome<T>& o) {
  return std::holds_alternative<T>(o);
}

}  // namespace summa
