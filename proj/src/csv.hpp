#ifndef OTO_SRC_CSV_HPP
#define OTO_SRC_CSV_HPP

#include <charconv>
#include <concepts>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <string_view>

#include "oto/types.hpp"

namespace oto::detail {

// Shortest round-trip representation; independent of the global locale.
inline std::string format_number(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  template <class... Fields>
  void row(const Fields&... fields) {
    bool first = true;
    ((put(fields, first), first = false), ...);
    out_ << '\n';
  }

 private:
  template <class T>
  void put(const T& value, bool first) {
    if (!first) out_ << ',';
    if constexpr (std::floating_point<T>)
      out_ << format_number(value);
    else if constexpr (std::integral<T>)
      out_ << std::to_string(value);
    else
      out_ << std::string_view(value);
  }

  std::ostream& out_;
};

template <class Fn>
void write_file(const std::filesystem::path& path, Fn&& fill) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  fill(out);
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace oto::detail

#endif  // OTO_SRC_CSV_HPP
