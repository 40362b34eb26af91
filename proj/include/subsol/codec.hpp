#pragma once

// Certificate JSON, version 1. Keys are emitted in sorted order, exact
// scalars as "num/den" strings and golden values as {"a", "b"} pairs.

#include <string>
#include <string_view>

#include "subsol/certificate.hpp"
#include "subsol/error.hpp"

namespace subsol {

class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& what);

  // JSON pointer to the offending value; empty for the document itself.
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

std::string emit_json(const Certificate& c);
// Throws SchemaError.
Certificate parse_json(std::string_view text);

Certificate read_certificate(const std::string& file);
void write_certificate(const Certificate& c, const std::string& file);

}  // namespace subsol
