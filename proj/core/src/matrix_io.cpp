#include "codelattice/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "codelattice/error.hpp"

namespace codelattice {
namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::kParse, what);
}

// Tokens of every non-comment line.
std::vector<std::string> tokens(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) out.push_back(tok);
  }
  return out;
}

std::size_t parse_size(const std::string& tok, const char* what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    parse_error(std::string("bad ") + what + " '" + tok + "'");
  }
  try {
    return std::stoul(tok);
  } catch (const std::exception&) {
    parse_error(std::string("bad ") + what + " '" + tok + "'");
  }
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  return in;
}

}  // namespace

ParsedMatrix parse_matrix(std::istream& in) {
  const auto toks = tokens(in);
  if (toks.size() < 3) parse_error("missing header '<rows> <cols> <F2|Z>'");
  const std::size_t rows = parse_size(toks[0], "row count");
  const std::size_t cols = parse_size(toks[1], "column count");
  const std::string& field = toks[2];
  if (field != "F2" && field != "Z") parse_error("unknown field '" + field + "'");
  if (toks.size() - 3 != rows * cols) {
    parse_error("expected " + std::to_string(rows * cols) + " entries, found " +
                std::to_string(toks.size() - 3));
  }
  if (field == "F2") {
    BinaryMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        const std::string& t = toks[3 + r * cols + c];
        if (t != "0" && t != "1") parse_error("F2 entry '" + t + "'");
        if (t == "1") m.set(r, c, true);
      }
    }
    return m;
  }
  IntMatrix m{rows, std::vector<IntVector>(cols, IntVector(rows))};
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::string& t = toks[3 + r * cols + c];
      if (m.columns[c][r].set_str(t, 10) != 0) parse_error("Z entry '" + t + "'");
    }
  }
  return m;
}

ParsedMatrix read_matrix(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_matrix(in);
}

BinaryMatrix read_binary_matrix(const std::filesystem::path& path) {
  auto parsed = read_matrix(path);
  if (auto* m = std::get_if<BinaryMatrix>(&parsed)) return std::move(*m);
  parse_error(path.string() + " is not an F2 matrix");
}

IntMatrix read_int_matrix(const std::filesystem::path& path) {
  auto parsed = read_matrix(path);
  if (auto* m = std::get_if<IntMatrix>(&parsed)) return std::move(*m);
  const auto& b = std::get<BinaryMatrix>(parsed);
  IntMatrix out{b.rows(), {}};
  for (const auto& col : b.columns()) {
    IntVector v(b.rows(), 0);
    for (std::size_t i : col.support()) v[i] = 1;
    out.columns.push_back(std::move(v));
  }
  return out;
}

std::string format_matrix(const BinaryMatrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << " F2\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      os << (c ? " " : "") << (m.get(r, c) ? '1' : '0');
    }
    os << '\n';
  }
  return os.str();
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << m.rows << ' ' << m.columns.size() << " Z\n";
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.columns.size(); ++c) {
      os << (c ? " " : "") << m.columns[c][r].get_str();
    }
    os << '\n';
  }
  return os.str();
}

std::string format_lattice(const Lattice& lattice) {
  return format_matrix(IntMatrix{lattice.dimension(), lattice.basis()});
}

CodeTower read_tower(const std::filesystem::path& manifest) {
  auto in = open(manifest);
  const auto toks = tokens(in);
  if (toks.size() < 2) parse_error("tower manifest needs '<n> <a>'");
  const std::size_t n = parse_size(toks[0], "block length");
  const std::size_t a = parse_size(toks[1], "depth");
  if (a == 0 || toks.size() != 2 + a) {
    parse_error("tower manifest lists " + std::to_string(toks.size() - 2) +
                " levels, header says " + std::to_string(a));
  }
  std::vector<Code> levels;
  for (std::size_t i = 0; i < a; ++i) {
    BinaryMatrix g = read_binary_matrix(manifest.parent_path() / toks[2 + i]);
    if (g.rows() != n) {
      parse_error("level " + std::to_string(i + 1) + " has " +
                  std::to_string(g.rows()) + " rows, expected " + std::to_string(n));
    }
    levels.emplace_back(std::move(g));
  }
  return CodeTower(std::move(levels));
}

std::map<std::string, std::filesystem::path> read_manifest(
    const std::filesystem::path& manifest) {
  auto in = open(manifest);
  const auto toks = tokens(in);
  if (toks.size() % 2 != 0) parse_error("manifest lines must be '<key> <path>'");
  std::map<std::string, std::filesystem::path> out;
  for (std::size_t i = 0; i < toks.size(); i += 2) {
    if (!out.emplace(toks[i], manifest.parent_path() / toks[i + 1]).second) {
      parse_error("duplicate manifest key '" + toks[i] + "'");
    }
  }
  return out;
}

}  // namespace codelattice
