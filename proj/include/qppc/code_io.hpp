#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "qppc/code.hpp"

namespace qppc {

using Json = nlohmann::ordered_json;

inline constexpr int kCodeFileVersion = 1;

// Malformed document; the message names the offending field.
class CodeFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raw contents of a code file. Validation is left to the caller so invalid
// codes can still be loaded and reported on.
struct CodeFile {
  int n_exp = 0;
  IndexSet info_set;
  std::vector<Entry> precoder_offdiag;
  Json meta = Json::object();

  CodeSpec spec() const { return CodeSpec(n_exp, info_set); }
  Precoder precoder() const { return Precoder(std::size_t{1} << n_exp, precoder_offdiag); }
  // Throws std::invalid_argument if the pair fails validation.
  QuantumCode code() const { return QuantumCode(spec(), precoder()); }

  static CodeFile from_code(const QuantumCode& code, Json meta = Json::object());
};

Json code_file_to_json(const CodeFile& file);
CodeFile code_file_from_json(const Json& doc);

// Two-space indented JSON with a trailing newline.
std::string render_code_file(const CodeFile& file);
CodeFile parse_code_file(const std::string& text);

// Throw std::runtime_error naming the path on I/O failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qppc
