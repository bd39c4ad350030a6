#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "sdtp/model.hpp"

namespace sdtp {

/// Malformed instance text: bad problem line, counts that do not match,
/// duplicate d lines, non-integer tokens.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// DIMACS-flavored text format:
///   p sdtp <n> <m1> <m2>
///   c <comment>
///   a <i> <j> <w>                      s_i - s_j <= w
///   d <i> <k> <l1> <u1> ... <lk> <uk>
SdtpInstance parse_instance(std::istream& in);
SdtpInstance load_instance(const std::string& path);

void serialize_instance(const SdtpInstance& instance, std::ostream& out);
void save_instance(const SdtpInstance& instance, const std::string& path);

}  // namespace sdtp
