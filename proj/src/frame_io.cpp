#include "opvframe/frame_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "opvframe/errors.hpp"

namespace opv {

namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;

double finite_number(const json& v, const char* where) {
  if (!v.is_number()) {
    fail(Errc::ParseError, std::string(where) + " is not a number");
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) {
    fail(Errc::ParseError, std::string(where) + " is not finite");
  }
  return x;
}

}  // namespace

std::string frame_to_json(const OpvFrame& f) {
  json blocks = json::array();
  for (std::size_t j = 0; j < f.block_count(); ++j) {
    const ComplexMatrix& b = f.block(j);
    json data = json::array();
    for (std::size_t r = 0; r < b.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (!std::isfinite(b(r, c).real()) || !std::isfinite(b(r, c).imag())) {
          fail(Errc::ParseError, "non-finite entry cannot be serialized");
        }
        row.push_back(json::array({b(r, c).real(), b(r, c).imag()}));
      }
      data.push_back(std::move(row));
    }
    blocks.push_back(json{{"rows", b.rows()}, {"data", std::move(data)}});
  }
  json doc{{"format_version", kFormatVersion},
           {"n", f.domain_dim()},
           {"blocks", std::move(blocks)}};
  return doc.dump(2) + "\n";
}

OpvFrame frame_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::ParseError, e.what());
  }
  if (!doc.is_object()) fail(Errc::ParseError, "top level is not an object");
  if (!doc.contains("format_version") ||
      !doc["format_version"].is_number_integer()) {
    fail(Errc::ParseError, "missing integer format_version");
  }
  if (doc["format_version"].get<int>() != kFormatVersion) {
    fail(Errc::VersionUnsupported,
         "format_version " + doc["format_version"].dump() + " unsupported");
  }
  if (!doc.contains("n") || !doc["n"].is_number_unsigned() ||
      doc["n"].get<std::size_t>() == 0) {
    fail(Errc::ParseError, "missing positive integer n");
  }
  const std::size_t n = doc["n"].get<std::size_t>();
  if (!doc.contains("blocks") || !doc["blocks"].is_array() ||
      doc["blocks"].empty()) {
    fail(Errc::ParseError, "missing non-empty blocks array");
  }

  std::vector<ComplexMatrix> blocks;
  blocks.reserve(doc["blocks"].size());
  for (const json& jb : doc["blocks"]) {
    if (!jb.is_object() || !jb.contains("rows") || !jb.contains("data")) {
      fail(Errc::ParseError, "block must carry rows and data");
    }
    if (!jb["rows"].is_number_unsigned() || jb["rows"].get<std::size_t>() == 0) {
      fail(Errc::ParseError, "block rows must be a positive integer");
    }
    const std::size_t rows = jb["rows"].get<std::size_t>();
    const json& data = jb["data"];
    if (!data.is_array() || data.size() != rows) {
      fail(Errc::ShapeMismatch, "data row count does not match rows");
    }
    ComplexMatrix b(rows, n);
    for (std::size_t r = 0; r < rows; ++r) {
      const json& row = data[r];
      if (!row.is_array() || row.size() != n) {
        fail(Errc::ShapeMismatch,
             "row " + std::to_string(r) + " does not have n entries");
      }
      for (std::size_t c = 0; c < n; ++c) {
        const json& pair = row[c];
        if (!pair.is_array() || pair.size() != 2) {
          fail(Errc::ParseError, "entry is not an [re, im] pair");
        }
        b(r, c) = Complex(finite_number(pair[0], "re"),
                          finite_number(pair[1], "im"));
      }
    }
    blocks.push_back(std::move(b));
  }
  return OpvFrame(n, std::move(blocks));
}

OpvFrame read_frame(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return frame_from_json(buf.str());
}

void write_frame(const OpvFrame& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::ParseError, "cannot open " + path + " for writing");
  out << frame_to_json(f);
  if (!out) fail(Errc::ParseError, "short write to " + path);
}

ComplexMatrix read_matrix(const std::string& path) {
  const OpvFrame f = read_frame(path);
  if (f.block_count() != 1 || f.block(0).rows() != f.domain_dim()) {
    fail(Errc::ShapeMismatch,
         "matrix file must hold exactly one square block");
  }
  return f.block(0);
}

void write_matrix(const ComplexMatrix& s, const std::string& path) {
  if (s.rows() != s.cols()) {
    fail(Errc::ShapeMismatch, "matrix file needs a square matrix");
  }
  write_frame(OpvFrame(s.cols(), {s}), path);
}

}  // namespace opv
