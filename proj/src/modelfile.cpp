#include <cctype>
#include <charconv>

#include "sullivan/harness.hpp"

namespace sullivan {

ModelFileError::ModelFileError(const std::string& what, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// [begin, end) of s with surrounding blanks removed.
std::pair<std::size_t, std::size_t> trim(std::string_view s, std::size_t begin, std::size_t end) {
  while (begin < end && is_space(s[begin])) ++begin;
  while (end > begin && is_space(s[end - 1])) --end;
  return {begin, end};
}

bool valid_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

std::vector<std::pair<std::string, int>> parse_generators(std::string_view line, std::size_t begin,
                                                          std::size_t end, int lineno) {
  auto col = [&](std::size_t i) { return static_cast<int>(i) + 1; };
  if (begin >= end || line[begin] != '[' || line[end - 1] != ']')
    throw ModelFileError("generators must be written as [name:degree, ...]", lineno, col(begin));
  std::vector<std::pair<std::string, int>> out;
  std::size_t i = begin + 1;
  const std::size_t stop = end - 1;
  if (trim(line, i, stop).first == trim(line, i, stop).second) return out;
  while (i <= stop) {
    std::size_t comma = line.find(',', i);
    if (comma == std::string_view::npos || comma > stop) comma = stop;
    auto [a, b] = trim(line, i, comma);
    const std::size_t colon = line.find(':', a);
    if (colon == std::string_view::npos || colon >= b)
      throw ModelFileError("expected name:degree", lineno, col(a));
    auto [na, nb] = trim(line, a, colon);
    auto [da, db] = trim(line, colon + 1, b);
    const std::string name(line.substr(na, nb - na));
    if (!valid_name(name)) throw ModelFileError("invalid generator name '" + name + "'", lineno, col(na));
    int degree = 0;
    auto res = std::from_chars(line.data() + da, line.data() + db, degree);
    if (res.ec != std::errc() || res.ptr != line.data() + db)
      throw ModelFileError("invalid degree", lineno, col(da));
    out.emplace_back(name, degree);
    i = comma + 1;
  }
  return out;
}

}  // namespace

ModelFile parse_model_file(std::string_view text) {
  ModelFile file;
  std::string section;
  bool saw_model = false;
  int generators_line = 1;
  std::vector<std::pair<int, int>> diff_pos;  // (line, value column) per differential entry
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t end = line.find('#');
    if (end == std::string_view::npos) end = line.size();
    auto [a, b] = trim(line, 0, end);
    if (a == b) {
      if (nl == text.size()) break;
      continue;
    }
    auto col = [](std::size_t i) { return static_cast<int>(i) + 1; };
    if (line[a] == '[') {
      if (line[b - 1] != ']') throw ModelFileError("unterminated section header", lineno, col(a));
      auto [sa, sb] = trim(line, a + 1, b - 1);
      section = std::string(line.substr(sa, sb - sa));
      if (section != "model" && section != "differential" && section != "expected" && section != "provenance")
        throw ModelFileError("unknown section [" + section + "]", lineno, col(sa));
      if (section == "model") saw_model = true;
    } else {
      const std::size_t eq = line.find('=', a);
      if (eq == std::string_view::npos || eq >= b) throw ModelFileError("expected key = value", lineno, col(a));
      auto [ka, kb] = trim(line, a, eq);
      auto [va, vb] = trim(line, eq + 1, b);
      const std::string key(line.substr(ka, kb - ka));
      const std::string value(line.substr(va, vb - va));
      if (key.empty()) throw ModelFileError("missing key", lineno, col(a));
      if (section.empty()) throw ModelFileError("entry outside a section", lineno, col(ka));
      if (section == "model") {
        if (key == "name") {
          if (value.empty()) throw ModelFileError("empty model name", lineno, col(va));
          file.name = value;
        } else if (key == "generators") {
          file.generators = parse_generators(line, va, vb, lineno);
          generators_line = lineno;
        } else {
          throw ModelFileError("unknown key '" + key + "' in [model]", lineno, col(ka));
        }
      } else if (section == "differential") {
        if (!valid_name(key)) throw ModelFileError("invalid generator name '" + key + "'", lineno, col(ka));
        if (value.empty()) throw ModelFileError("missing polynomial", lineno, col(va));
        file.differential.emplace_back(key, value);
        diff_pos.emplace_back(lineno, col(va));
      } else if (section == "expected") {
        file.expected[key] = value;
      } else {
        file.provenance[key] = value;
      }
    }
    if (nl == text.size()) break;
  }
  if (!saw_model) throw ModelFileError("missing [model] section", 1, 1);
  if (file.name.empty()) throw ModelFileError("missing model name", 1, 1);

  // Locate polynomial and generator errors at their source position.
  std::vector<Generator> gens;
  for (const auto& [n, d] : file.generators) {
    if (d < 2) throw ModelFileError("generator '" + n + "' has degree " + std::to_string(d) + " < 2", generators_line, 1);
    gens.push_back({n, d, lambda_kind(d)});
  }
  SpacePtr space;
  try {
    space = Space::create(gens);
  } catch (const std::invalid_argument& e) {
    throw ModelFileError(e.what(), generators_line, 1);
  }
  for (std::size_t i = 0; i < file.differential.size(); ++i) {
    const auto& [gen, poly] = file.differential[i];
    const auto [line, column] = diff_pos[i];
    if (!space->index_of(gen)) throw ModelFileError("differential assigned to unknown generator '" + gen + "'", line, 1);
    try {
      parse_polynomial(space, poly);
    } catch (const ParseError& e) {
      throw ModelFileError(e.what(), line, column + e.column() - 1);
    }
  }
  return file;
}

Model ModelFile::model() const { return make_model(name, generators, differential); }

std::string ModelFile::to_text() const {
  std::string out = "[model]\nname = " + name + "\ngenerators = [";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ", ";
    out += generators[i].first + ":" + std::to_string(generators[i].second);
  }
  out += "]\n\n[differential]\n";
  for (const auto& [g, p] : differential) out += g + " = " + p + "\n";
  if (!expected.empty()) {
    out += "\n[expected]\n";
    for (const auto& [k, v] : expected) out += k + " = " + v + "\n";
  }
  if (!provenance.empty()) {
    out += "\n[provenance]\n";
    for (const auto& [k, v] : provenance) out += k + " = " + v + "\n";
  }
  return out;
}

Model parse_model(std::string_view text) {
  const ModelFile file = parse_model_file(text);
  Model m = file.model();
  auto report = validate(m);
  if (!report.ok()) {
    std::string msg = "model '" + m.name + "' is invalid";
    for (const auto& v : report.violations) msg += "; " + std::string(to_string(v.kind)) + ": " + v.message;
    throw ValidationError(msg, std::move(report));
  }
  return m;
}

}  // namespace sullivan
