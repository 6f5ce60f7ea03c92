#include "qppc/code_io.hpp"

#include <fmt/format.h>

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

namespace qppc {
namespace {

const std::set<std::string> kFields{"version", "n_exp", "info_set", "precoder_offdiag", "meta"};

const Json& field(const Json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw CodeFileError(fmt::format("code file: missing field '{}'", name));
  return *it;
}

std::size_t index_value(const Json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw CodeFileError(fmt::format("code file: {} must be a non-negative integer", where));
  return v.get<std::size_t>();
}

}  // namespace

CodeFile CodeFile::from_code(const QuantumCode& code, Json meta) {
  CodeFile f;
  f.n_exp = code.n_exp();
  f.info_set = code.spec().info_set();
  f.precoder_offdiag = code.precoder().off_diag();
  f.meta = std::move(meta);
  return f;
}

Json code_file_to_json(const CodeFile& file) {
  Json doc = Json::object();
  doc["version"] = kCodeFileVersion;
  doc["n_exp"] = file.n_exp;
  doc["info_set"] = file.info_set;
  Json offdiag = Json::array();
  for (const auto& [i, j] : file.precoder_offdiag) offdiag.push_back(Json::array({i, j}));
  doc["precoder_offdiag"] = std::move(offdiag);
  doc["meta"] = file.meta;
  return doc;
}

CodeFile code_file_from_json(const Json& doc) {
  if (!doc.is_object()) throw CodeFileError("code file: top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (!kFields.count(key)) throw CodeFileError(fmt::format("code file: unknown field '{}'", key));
  }
  const Json& version = field(doc, "version");
  if (!version.is_number_integer() || version.get<int>() != kCodeFileVersion) {
    throw CodeFileError(fmt::format("code file: field 'version' must be {}", kCodeFileVersion));
  }
  CodeFile f;
  const Json& n_exp = field(doc, "n_exp");
  if (!n_exp.is_number_integer() || n_exp.get<std::int64_t>() < 0 || n_exp.get<std::int64_t>() > 24) {
    throw CodeFileError("code file: field 'n_exp' must be an integer in [0, 24]");
  }
  f.n_exp = n_exp.get<int>();
  const std::size_t n = std::size_t{1} << f.n_exp;

  const Json& info = field(doc, "info_set");
  if (!info.is_array()) throw CodeFileError("code file: field 'info_set' must be an array");
  for (std::size_t k = 0; k < info.size(); ++k) {
    const std::size_t i = index_value(info[k], fmt::format("info_set[{}]", k));
    if (i >= n) throw CodeFileError(fmt::format("code file: info_set[{}] = {} is out of range", k, i));
    if (k > 0 && i <= f.info_set.back()) {
      throw CodeFileError(fmt::format("code file: info_set must be strictly increasing (at index {})", k));
    }
    f.info_set.push_back(i);
  }

  const Json& off = field(doc, "precoder_offdiag");
  if (!off.is_array()) throw CodeFileError("code file: field 'precoder_offdiag' must be an array");
  for (std::size_t k = 0; k < off.size(); ++k) {
    const Json& e = off[k];
    if (!e.is_array() || e.size() != 2) {
      throw CodeFileError(fmt::format("code file: precoder_offdiag[{}] must be a pair [i, j]", k));
    }
    const std::size_t i = index_value(e[0], fmt::format("precoder_offdiag[{}][0]", k));
    const std::size_t j = index_value(e[1], fmt::format("precoder_offdiag[{}][1]", k));
    if (!(i < j && j < n)) {
      throw CodeFileError(fmt::format("code file: precoder_offdiag[{}] = [{}, {}] must satisfy i < j < N", k, i, j));
    }
    const Entry entry{i, j};
    if (k > 0 && !(f.precoder_offdiag.back() < entry)) {
      throw CodeFileError(fmt::format("code file: precoder_offdiag must be sorted and unique (at index {})", k));
    }
    f.precoder_offdiag.push_back(entry);
  }

  auto meta = doc.find("meta");
  if (meta != doc.end()) {
    if (!meta->is_object()) throw CodeFileError("code file: field 'meta' must be an object");
    f.meta = *meta;
  }
  return f;
}

std::string render_code_file(const CodeFile& file) { return code_file_to_json(file).dump(2) + "\n"; }

CodeFile parse_code_file(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw CodeFileError(fmt::format("code file: {}", e.what()));
  }
  return code_file_from_json(doc);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(fmt::format("cannot open '{}' for reading", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw std::runtime_error(fmt::format("error reading '{}'", path));
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(fmt::format("cannot open '{}' for writing", path));
  out << text;
  out.flush();
  if (!out) throw std::runtime_error(fmt::format("error writing '{}'", path));
}

}  // namespace qppc
