#pragma once

#include <gmpxx.h>

#include <json.hpp>

namespace wcd::detail {

// JSON number when the value fits an unsigned long, decimal string past
// that (invariant factors are unbounded in principle).
inline nlohmann::ordered_json mpz_to_json(const mpz_class& v) {
  if (v >= 0 && v.fits_ulong_p()) return v.get_ui();
  if (v < 0 && v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

}  // namespace wcd::detail
