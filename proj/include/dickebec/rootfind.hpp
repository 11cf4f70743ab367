/* Copyright 2026 the dickebec authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef DICKEBEC_ROOTFIND_HPP
#define DICKEBEC_ROOTFIND_HPP

#include <cmath>
#include <limits>
#include <utility>

#include "dickebec/errors.hpp"

namespace dickebec {

/// Bisection on [lo, hi] where the sign of f at lo is already known to be
/// sign_lo (+1 or -1) and the sign at hi is the opposite. Only interior
/// points are evaluated, so the endpoints may be singular (f need not be
/// finite there). Iterates until the bracket collapses to adjacent
/// floating-point numbers.
template <class F>
double bisect_known_signs(F&& f, double lo, double hi, int sign_lo,
                          int max_iter = 200) {
  for (int i = 0; i < max_iter; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo) || !(mid < hi)) return mid;  // bracket collapsed
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0 ? +1 : -1) == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Bisection where both endpoint values are evaluated up front.
template <class F>
double bisect(F&& f, double lo, double hi, int max_iter = 200) {
  const double flo = f(lo);
  if (flo == 0.0) return lo;
  const double fhi = f(hi);
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw BracketError("bisect: no sign change on the given interval");
  }
  return bisect_known_signs(std::forward<F>(f), lo, hi, flo > 0.0 ? +1 : -1,
                            max_iter);
}

/// Grows hi geometrically from `start` until f(hi) changes sign relative to
/// sign_lo. Doubles at most `max_doublings` times (default 2^60 growth)
/// before giving up.
template <class F>
double grow_upper_bracket(F&& f, double start, int sign_lo,
                          int max_doublings = 60) {
  double hi = start;
  for (int i = 0; i <= max_doublings; ++i) {
    const double fh = f(hi);
    if (fh == 0.0 || (fh > 0.0 ? +1 : -1) != sign_lo) return hi;
    hi *= 2.0;
  }
  throw BracketError("grow_upper_bracket: no sign change after doubling");
}

}  // namespace dickebec

#endif  // DICKEBEC_ROOTFIND_HPP
