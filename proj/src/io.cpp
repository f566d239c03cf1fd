#include "strongfact/io.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "strongfact/error.hpp"
#include "strongfact/rng.hpp"

namespace strongfact {

namespace {

std::string where(const std::string& path, std::size_t line) { return path + ":" + std::to_string(line); }

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(std::string_view field, const std::string& loc) {
  const std::string text(trim(field));
  if (text.empty()) throw Error(ErrorCode::ParseError, loc + ": empty field");
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) throw Error(ErrorCode::ParseError, loc + ": not a number: '" + text + "'");
  if (!std::isfinite(v)) throw Error(ErrorCode::ParseError, loc + ": non-finite value");
  return v;
}

std::vector<double> split_numbers(std::string_view line, const std::string& loc) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(parse_number(line.substr(start, comma - start), loc));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open");
  return in;
}

// Content lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> content_lines(const std::string& path) {
  auto in = open_in(path);
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.emplace_back(no, std::string(t));
  }
  return out;
}

}  // namespace

MatrixOp read_matrix_csv(const std::string& path) {
  const auto lines = content_lines(path);
  if (lines.empty()) throw Error(ErrorCode::ParseError, path + ": empty file");
  const auto& [hno, header] = lines.front();
  if (header.rfind("N=", 0) != 0) throw Error(ErrorCode::ParseError, where(path, hno) + ": expected header N=<n>");
  const double nd = parse_number(std::string_view(header).substr(2), where(path, hno));
  if (nd < 1 || nd != std::floor(nd)) throw Error(ErrorCode::ParseError, where(path, hno) + ": bad size");
  const auto n = static_cast<std::size_t>(nd);
  if (lines.size() - 1 != n) {
    throw Error(ErrorCode::ParseError, path + ": expected " + std::to_string(n) + " rows, found " +
                                           std::to_string(lines.size() - 1));
  }
  std::vector<double> a;
  a.reserve(n * n);
  for (std::size_t r = 1; r <= n; ++r) {
    const auto& [no, text] = lines[r];
    const auto row = split_numbers(text, where(path, no));
    if (row.size() != n) {
      throw Error(ErrorCode::ParseError, where(path, no) + ": expected " + std::to_string(n) + " columns, found " +
                                             std::to_string(row.size()));
    }
    a.insert(a.end(), row.begin(), row.end());
  }
  return MatrixOp(n, std::move(a));
}

MatrixOp read_matrix_json(const std::string& path) {
  auto in = open_in(path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
  const nlohmann::json* rows = &j;
  if (j.is_object()) {
    if (!j.contains("entries")) throw Error(ErrorCode::ParseError, path + ": missing \"entries\"");
    rows = &j["entries"];
  }
  if (!rows->is_array() || rows->empty()) throw Error(ErrorCode::ParseError, path + ": entries must be a non-empty array");
  const std::size_t n = rows->size();
  if (j.is_object() && j.contains("N") && j["N"] != n) {
    throw Error(ErrorCode::ParseError, path + ": N does not match the number of rows");
  }
  std::vector<double> a;
  a.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = (*rows)[i];
    if (!row.is_array() || row.size() != n) {
      throw Error(ErrorCode::ParseError, path + ": row " + std::to_string(i + 1) + " must have " +
                                             std::to_string(n) + " numbers");
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (!row[k].is_number()) {
        throw Error(ErrorCode::ParseError, path + ": entry (" + std::to_string(i + 1) + ", " +
                                               std::to_string(k + 1) + ") is not a number");
      }
      a.push_back(row[k].get<double>());
    }
  }
  return MatrixOp(n, std::move(a));
}

MatrixOp read_matrix(const std::string& path) {
  return std::filesystem::path(path).extension() == ".json" ? read_matrix_json(path) : read_matrix_csv(path);
}

void write_matrix_csv(const std::string& path, const MatrixOp& A) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, path + ": cannot write");
  out.precision(17);
  out << "N=" << A.size() << '\n';
  for (std::size_t i = 1; i <= A.size(); ++i) {
    for (std::size_t j = 1; j <= A.size(); ++j) out << (j > 1 ? "," : "") << A(i, j);
    out << '\n';
  }
}

TruncatedSeq read_sequence_csv(const std::string& path) {
  std::vector<double> v;
  for (const auto& [no, text] : content_lines(path)) {
    const auto row = split_numbers(text, where(path, no));
    if (row.size() != 1) throw Error(ErrorCode::ParseError, where(path, no) + ": expected a single column");
    v.push_back(row[0]);
  }
  if (v.empty()) throw Error(ErrorCode::ParseError, path + ": no values");
  return TruncatedSeq(std::move(v));
}

void write_sequence_csv(const std::string& path, const TruncatedSeq& x) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, path + ": cannot write");
  out.precision(17);
  for (double v : x.values()) out << v << '\n';
}

TruncatedSeq named_sequence(const std::string& name, std::size_t N, std::uint64_t seed) {
  std::vector<double> v(N);
  for (std::size_t k = 0; k < N; ++k) {
    const double i = static_cast<double>(k + 1);
    if (name == "ones") {
      v[k] = 1.0;
    } else if (name == "harmonic") {
      v[k] = 1.0 / i;
    } else if (name == "inverse-squares") {
      v[k] = 1.0 / (i * i);
    } else if (name == "linear") {
      v[k] = i;
    } else if (name == "alternating") {
      v[k] = (k % 2 == 0) ? 1.0 : -1.0;
    } else if (name == "zero-first") {
      v[k] = k == 0 ? 0.0 : 1.0;
    } else if (name == "zero-two") {
      v[k] = k < 2 ? 0.0 : 1.0;
    } else if (name == "random") {
      break;
    } else {
      TruncatedSeq x = read_sequence_csv(name);
      if (x.size() != N) {
        throw Error(ErrorCode::LengthMismatch,
                    name + ": " + std::to_string(x.size()) + " values for N = " + std::to_string(N));
      }
      return x;
    }
  }
  if (name == "random") {
    Rng rng(seed);
    for (double& x : v) x = rng.uniform(0.5, 1.5);
  }
  return TruncatedSeq(std::move(v));
}

GridFunction read_grid_function_csv(const std::string& path, const GridPtr& grid) {
  const auto lines = content_lines(path);
  if (lines.size() != grid->size()) {
    throw Error(ErrorCode::ParseError, path + ": " + std::to_string(lines.size()) + " rows for a rule with " +
                                           std::to_string(grid->size()) + " nodes (" + grid->rule().describe() + ")");
  }
  std::vector<double> values(lines.size());
  const auto nodes = grid->nodes();
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto& [no, text] = lines[k];
    const auto row = split_numbers(text, where(path, no));
    if (row.size() != 2) throw Error(ErrorCode::ParseError, where(path, no) + ": expected node,value");
    if (std::abs(row[0] - nodes[k]) > 1e-12 * std::max(1.0, std::abs(nodes[k]))) {
      throw Error(ErrorCode::ParseError, where(path, no) + ": node does not match the declared rule");
    }
    values[k] = row[1];
  }
  return GridFunction(grid, std::move(values));
}

MatrixOp generate_matrix(const std::string& name, const GeneratorParams& p) {
  const std::size_t N = p.N;
  if (N < 1) throw Error(ErrorCode::SpecError, "generator needs N >= 1");
  auto need = [&](const TruncatedSeq& s, const char* what) {
    if (s.size() != N) throw Error(ErrorCode::SpecError, std::string("generator '") + name + "' needs --" + what);
  };
  if (name == "identity") return MatrixOp::identity(N);
  if (name == "cesaro") return cesaro_matrix(N);
  if (name == "zero") return MatrixOp::zeros(N);
  if (name == "random-lower") return random_lower(N, p.seed);
  if (name == "diagonal") {
    need(p.g, "g");
    return MatrixOp::diagonal(p.g);
  }
  if (name == "rank-one" || name == "perturbed") {
    need(p.g, "g");
    need(p.h, "h");
    MatrixOp A = diagonal_sandwich(p.g, cesaro_matrix(N), p.h);
    if (name == "perturbed") A = A.with_entry(p.row, p.col, A(p.row, p.col) + p.eps);
    return A;
  }
  throw Error(ErrorCode::SpecError, "unknown generator '" + name + "'");
}

}  // namespace strongfact
