#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cob {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline std::optional<std::int64_t> to_int64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min())
    return std::nullopt;
  return static_cast<std::int64_t>(x);
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

}  // namespace cob
