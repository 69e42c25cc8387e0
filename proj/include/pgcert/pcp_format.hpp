#pragma once

// Line-oriented text format for consistent power-commutator presentations:
//
//   pcp 1
//   prime <p>
//   ngens <m>
//   pow <i> = <word>          g_i^p = word
//   comm <j> <i> = <word>     [g_j, g_i] = word, j > i
//
// <word> is space-separated k^e factors with k ascending and 1 <= e <= p-1,
// or the literal 1. Generators are numbered from 1. Omitted relations are
// trivial. '#' starts a comment; a "# id: <name>" comment names the group.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pgcert/pc_presentation.hpp"

namespace pgcert {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

class InconsistentPresentation : public std::runtime_error {
 public:
  explicit InconsistentPresentation(ConsistencyWitness w);
  const ConsistencyWitness& witness() const { return witness_; }

 private:
  ConsistencyWitness witness_;
};

struct PcpFile {
  std::string group_id;
  PcPresentation presentation;
};

/// Parses, checks the syntactic invariants and then consistency.
/// `fallback_id` is used unless the text carries a "# id:" comment.
PcpFile parse_pcp(std::string_view text, const std::string& fallback_id = "");

/// As parse_pcp; the fallback id is the filename stem. IO failures throw std::runtime_error.
PcpFile read_pcp_file(const std::filesystem::path& path);

/// Canonical text: header, optional id comment, pow lines by i, comm lines by (j, i).
std::string serialize_pcp(const PcPresentation& P, const std::string& group_id = "");

bool same_presentation(const PcPresentation& a, const PcPresentation& b);

}  // namespace pgcert
