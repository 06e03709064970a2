#pragma once

// Command-line front end: `squeezekit <subcommand> [flags]`.

#include <iosfwd>
#include <string>
#include <vector>

#include "squeezekit/serialize.hpp"

namespace squeezekit::cli {

enum class Format { text, csv, jsonl };

/// Rows for every output format of one command.
struct Report {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<Json> records;
  std::vector<std::string> text;
};

/// Writes the report to `path` (stdout when empty). CSV uses 17 significant
/// digits and '\n' line endings; jsonl writes one object per line.
/// Returns false when the path cannot be written.
bool emit_report(const Report& report, Format format, const std::string& path, std::ostream& stdout_stream);

/// Exit codes: 0 all checks pass, 1 verification failure, 2 usage or I/O error.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace squeezekit::cli
