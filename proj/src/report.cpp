#include "remotal/report.hpp"

#include <array>
#include <charconv>
#include <system_error>

namespace remotal {

std::string format_double(double value) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

}  // namespace remotal
