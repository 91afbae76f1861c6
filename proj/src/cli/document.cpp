#include <array>

#include <openssl/evp.h>
#include <yaml-cpp/yaml.h>

#include "json.hpp"

#include "starinv/cli.hpp"
#include "starinv/error.hpp"

namespace starinv::cli {

namespace {

[[noreturn]] void fail_at(std::string_view source, const YAML::Mark& mark, const std::string& what) {
  std::string where(source);
  if (!mark.is_null()) {
    where += ":" + std::to_string(mark.line + 1) + ":" + std::to_string(mark.column + 1);
  }
  throw Error(Errc::parse_error, where + ": " + what);
}

std::size_t read_extent(const YAML::Node& node, std::string_view source, const char* key) {
  const auto v = node[key];
  if (!v) fail_at(source, node.Mark(), std::string("missing key \"") + key + "\"");
  if (!v.IsScalar()) fail_at(source, v.Mark(), std::string("\"") + key + "\" must be an integer");
  const auto& text = v.Scalar();
  if (text.empty() || text.size() > 4 ||
      text.find_first_not_of("0123456789") != std::string::npos) {
    fail_at(source, v.Mark(), std::string("\"") + key + "\" must be an integer in [1, 9999]");
  }
  const auto n = std::stoul(text);
  if (n == 0) fail_at(source, v.Mark(), std::string("\"") + key + "\" must be positive");
  return n;
}

}  // namespace

MatrixDocument parse_document(std::string_view text, std::string_view source,
                              std::string_view default_field) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    fail_at(source, e.mark, e.msg);
  }
  if (!root.IsMap()) fail_at(source, root.Mark(), "expected a mapping with field/rows/cols/entries");

  MatrixDocument doc;
  if (const auto f = root["field"]) {
    if (!f.IsScalar()) fail_at(source, f.Mark(), "\"field\" must be a string");
    doc.field = f.Scalar();
  } else {
    doc.field = default_field;
  }
  doc.rows = read_extent(root, source, "rows");
  doc.cols = read_extent(root, source, "cols");

  const auto entries = root["entries"];
  if (!entries) fail_at(source, root.Mark(), "missing key \"entries\"");
  if (!entries.IsSequence()) fail_at(source, entries.Mark(), "\"entries\" must be a list");
  for (const auto& e : entries) {
    if (!e.IsScalar()) fail_at(source, e.Mark(), "entries must be strings or integers");
    doc.entries.push_back(e.Scalar());
  }
  if (doc.entries.size() != doc.rows * doc.cols) {
    fail_at(source, entries.Mark(),
            "expected " + std::to_string(doc.rows * doc.cols) + " entries for a " +
                std::to_string(doc.rows) + "x" + std::to_string(doc.cols) + " matrix, got " +
                std::to_string(doc.entries.size()));
  }
  // Scalars are validated now so errors carry the entry position.
  std::size_t k = 0;
  for (const auto& e : entries) {
    try {
      MatrixDocument one{doc.field, 1, 1, {doc.entries[k++]}};
      to_matrix(one, source);
    } catch (const Error& err) {
      fail_at(source, e.Mark(), err.what());
    }
  }
  return doc;
}

AnyMatrix to_matrix(const MatrixDocument& doc, std::string_view source) {
  if (doc.entries.size() != doc.rows * doc.cols) {
    throw Error(Errc::parse_error, std::string(source) + ": entry count does not match shape");
  }
  auto build = [&](const auto& field) {
    std::vector<typename std::decay_t<decltype(field)>::Scalar> e;
    e.reserve(doc.entries.size());
    for (const auto& s : doc.entries) e.push_back(field.parse(s));
    return Matrix<std::decay_t<decltype(field)>>(field, doc.rows, doc.cols, std::move(e));
  };
  if (doc.field == "rational") return build(RationalField{});
  if (doc.field.rfind("gf:", 0) == 0) {
    const auto digits = doc.field.substr(3);
    if (digits.empty() || digits.size() > 9 ||
        digits.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(Errc::parse_error, std::string(source) + ": bad field tag \"" + doc.field + "\"");
    }
    const auto p = static_cast<std::uint32_t>(std::stoul(digits));
    if (!is_prime(p)) {
      throw Error(Errc::parse_error,
                  std::string(source) + ": field modulus " + digits + " is not prime");
    }
    return build(PrimeField(p));
  }
  throw Error(Errc::parse_error, std::string(source) + ": unknown field tag \"" + doc.field +
                                     "\" (expected rational or gf:<p>)");
}

MatrixDocument to_document(const AnyMatrix& any) {
  return std::visit(
      [](const auto& m) {
        MatrixDocument doc{m.field().tag(), m.rows(), m.cols(), {}};
        for (const auto& s : m.entries()) doc.entries.push_back(m.field().format(s));
        return doc;
      },
      any);
}

std::string serialize(const MatrixDocument& doc) {
  nlohmann::ordered_json j;
  j["field"] = doc.field;
  j["rows"] = doc.rows;
  j["cols"] = doc.cols;
  j["entries"] = doc.entries;
  return j.dump();
}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    internal_failure("SHA-256 digest");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

}  // namespace starinv::cli
