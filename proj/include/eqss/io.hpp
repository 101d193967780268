#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace eqss {

/// Malformed input. Line and column are 1-based, 0 when unknown; `item` is
/// the position in the input simplex list when the error concerns one.
class InputError : public std::runtime_error {
 public:
  static constexpr std::size_t kNoItem = static_cast<std::size_t>(-1);

  explicit InputError(const std::string& what, std::size_t line = 0, std::size_t column = 0,
                      std::size_t item = kNoItem)
      : std::runtime_error(what), line_(line), column_(column), item_(item) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  std::size_t item() const noexcept { return item_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::size_t item_;
};

/// Parse JSON text, converting syntax errors to InputError with line/column.
nlohmann::json parse_json_text(const std::string& text);

/// Whole file as a string; throws InputError if it cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace eqss
