#include "vops/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "vops/errors.hpp"

namespace vops {

namespace {

// Splits into lines, strips comments and blank lines.
std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(begin, end - begin + 1));
  }
  return lines;
}

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return value;
  } catch (const std::exception&) {
    throw IoError(std::string("expected integer for ") + what + ", got '" +
                  s + "'");
  }
}

// "key value" or "key: a b c" style access.
std::string expect_keyword_line(const std::vector<std::string>& lines,
                                std::size_t index, const std::string& key) {
  if (index >= lines.size()) throw IoError("missing '" + key + "' line");
  const std::string& line = lines[index];
  if (line.compare(0, key.size(), key) != 0 || line.size() <= key.size() ||
      !std::isspace(static_cast<unsigned char>(line[key.size()])))
    throw IoError("expected '" + key + " ...', got '" + line + "'");
  std::size_t begin = line.find_first_not_of(" \t", key.size());
  return line.substr(begin);
}

std::vector<int> parse_perm_line(const std::string& line, int color,
                                 int flags) {
  std::string prefix = "perm " + std::to_string(color) + ":";
  if (line.compare(0, prefix.size(), prefix) != 0)
    throw IoError("expected '" + prefix + " ...', got '" + line + "'");
  std::istringstream in(line.substr(prefix.size()));
  std::vector<int> perm;
  std::string tok;
  while (in >> tok) perm.push_back(parse_int(tok, "permutation entry"));
  if (static_cast<int>(perm.size()) != flags)
    throw IoError("perm " + std::to_string(color) + " must list " +
                  std::to_string(flags) + " entries");
  for (int image : perm)
    if (image < 0 || image >= flags)
      throw IoError("perm " + std::to_string(color) + " entry out of range");
  return perm;
}

std::string file_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("write failed for '" + path + "'");
}

void check_valid(const Premaniplex& p, const std::string& what) {
  ValidationReport report = validate(p);
  if (report.ok()) return;
  const Violation& v = report.violations.front();
  std::string detail =
      v.kind == Violation::Kind::NotInvolution
          ? ("color " + std::to_string(v.color) + " is not an involution at flag " +
             std::to_string(v.flag))
          : ("colors " + std::to_string(v.color) + "," +
             std::to_string(v.color2) + " do not commute at flag " +
             std::to_string(v.flag));
  throw DomainError(what + " violates the premaniplex axioms: " + detail +
                    " (+" + std::to_string(report.violations.size() - 1) +
                    " more)");
}

}  // namespace

Premaniplex read_pmx_text(const std::string& text) {
  auto lines = content_lines(text);
  std::size_t at = 0;
  if (at >= lines.size() || lines[at] != "pmx 1")
    throw IoError("not a pmx file (missing 'pmx 1' header)");
  ++at;
  int rank = parse_int(expect_keyword_line(lines, at++, "rank"), "rank");
  int flags = parse_int(expect_keyword_line(lines, at++, "flags"), "flags");
  if (rank < 1) throw IoError("rank must be >= 1");
  if (flags < 1) throw IoError("flags must be >= 1");
  std::vector<std::vector<int>> perms;
  for (int i = 0; i < rank; ++i) {
    if (at >= lines.size()) throw IoError("missing perm lines");
    perms.push_back(parse_perm_line(lines[at++], i, flags));
  }
  if (at != lines.size()) throw IoError("trailing content after perm lines");
  return Premaniplex(rank, std::move(perms));
}

Premaniplex read_pmx_file(const std::string& path) {
  return read_pmx_text(file_text(path));
}

Premaniplex read_pmx_file_validated(const std::string& path) {
  Premaniplex p = read_pmx_file(path);
  check_valid(p, "'" + path + "'");
  return p;
}

std::string write_pmx_text(const Premaniplex& p) {
  std::ostringstream out;
  out << "pmx 1\n";
  out << "rank " << p.rank() << "\n";
  out << "flags " << p.flag_count() << "\n";
  for (int i = 0; i < p.rank(); ++i) {
    out << "perm " << i << ":";
    for (int x = 0; x < p.flag_count(); ++x) out << ' ' << p.adj(x, i);
    out << "\n";
  }
  return out.str();
}

void write_pmx_file(const std::string& path, const Premaniplex& p) {
  write_file(path, write_pmx_text(p));
}

VoltageOperator read_vop_text(const std::string& text) {
  auto lines = content_lines(text);
  std::size_t at = 0;
  if (at >= lines.size() || lines[at] != "vop 1")
    throw IoError("not a vop file (missing 'vop 1' header)");
  ++at;
  int source_rank =
      parse_int(expect_keyword_line(lines, at++, "source-rank"), "source-rank");
  int rank = parse_int(expect_keyword_line(lines, at++, "rank"), "rank");
  int flags = parse_int(expect_keyword_line(lines, at++, "flags"), "flags");
  if (source_rank < 1) throw IoError("source-rank must be >= 1");
  if (rank < 1) throw IoError("rank must be >= 1");
  if (flags < 1) throw IoError("flags must be >= 1");
  std::vector<std::vector<int>> perms;
  for (int i = 0; i < rank; ++i) {
    if (at >= lines.size()) throw IoError("missing perm lines");
    perms.push_back(parse_perm_line(lines[at++], i, flags));
  }
  VoltageOperator op;
  op.source_rank = source_rank;
  op.y = Premaniplex(rank, std::move(perms));
  op.voltages.assign(rank, {});
  for (int i = 0; i < rank; ++i) {
    std::string prefix = "volt " + std::to_string(i) + ":";
    if (at >= lines.size()) throw IoError("missing volt lines");
    const std::string& line = lines[at++];
    if (line.compare(0, prefix.size(), prefix) != 0)
      throw IoError("expected '" + prefix + " ...', got '" + line + "'");
    // Words are bracketed and contain no spaces internally after writing,
    // but accept spaces after commas: tokenize on brackets.
    std::string rest = line.substr(prefix.size());
    std::vector<CoxWord> row;
    std::size_t pos = 0;
    while (true) {
      std::size_t open = rest.find_first_not_of(" \t", pos);
      if (open == std::string::npos) break;
      if (rest[open] != '[')
        throw IoError("expected '[' in volt line, got '" + rest + "'");
      std::size_t close = rest.find(']', open);
      if (close == std::string::npos)
        throw IoError("unterminated word in volt line");
      row.push_back(
          parse_word(rest.substr(open, close - open + 1), source_rank));
      pos = close + 1;
    }
    if (static_cast<int>(row.size()) != flags)
      throw IoError("volt " + std::to_string(i) + " must list " +
                    std::to_string(flags) + " words");
    op.voltages[i] = std::move(row);
  }
  op.base = 0;
  if (at < lines.size() && lines[at].compare(0, 4, "base") == 0) {
    op.base = parse_int(expect_keyword_line(lines, at, "base"), "base");
    ++at;
    if (op.base < 0 || op.base >= flags)
      throw IoError("base flag out of range");
  }
  if (at != lines.size()) throw IoError("trailing content in vop file");
  return op;
}

VoltageOperator read_vop_file(const std::string& path) {
  return read_vop_text(file_text(path));
}

VoltageOperator read_vop_file_validated(const std::string& path) {
  VoltageOperator op = read_vop_file(path);
  check_valid(op.y, "'" + path + "' (structure)");
  OperatorReport report = validate_operator(op);
  if (!report.ok()) {
    const OperatorViolation& v = report.violations.front();
    std::string kind;
    switch (v.kind) {
      case OperatorViolation::Kind::BadRank: kind = "wrong-rank voltage"; break;
      case OperatorViolation::Kind::InverseMismatch:
        kind = "inverse-inconsistent voltage"; break;
      case OperatorViolation::Kind::NotInvolution:
        kind = "non-involution semi-edge voltage"; break;
      case OperatorViolation::Kind::HomotopyBroken:
        kind = "nontrivial alternating 4-cycle voltage"; break;
    }
    throw DomainError("'" + path + "' is not a valid operator: " + kind +
                      " at flag " + std::to_string(v.flag) + ", color " +
                      std::to_string(v.color));
  }
  return op;
}

std::string write_vop_text(const VoltageOperator& op) {
  std::ostringstream out;
  out << "vop 1\n";
  out << "source-rank " << op.source_rank << "\n";
  out << "rank " << op.y.rank() << "\n";
  out << "flags " << op.y.flag_count() << "\n";
  for (int i = 0; i < op.y.rank(); ++i) {
    out << "perm " << i << ":";
    for (int x = 0; x < op.y.flag_count(); ++x) out << ' ' << op.y.adj(x, i);
    out << "\n";
  }
  for (int i = 0; i < op.y.rank(); ++i) {
    out << "volt " << i << ":";
    for (int x = 0; x < op.y.flag_count(); ++x)
      out << ' ' << to_string(op.voltage(x, i));
    out << "\n";
  }
  if (op.base != 0) out << "base " << op.base << "\n";
  return out.str();
}

void write_vop_file(const std::string& path, const VoltageOperator& op) {
  write_file(path, write_vop_text(op));
}

std::string write_dot_text(const Premaniplex& p) {
  std::ostringstream out;
  out << "graph premaniplex {\n";
  for (int x = 0; x < p.flag_count(); ++x) out << "  " << x << ";\n";
  for (int i = 0; i < p.rank(); ++i) {
    for (int x = 0; x < p.flag_count(); ++x) {
      int y = p.adj(x, i);
      if (y == x) {
        out << "  " << x << " -- " << x << " [label=\"" << i
            << "\", style=dashed];\n";
      } else if (x < y) {
        out << "  " << x << " -- " << y << " [label=\"" << i << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace vops
