#include "abduction/instance_io.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace abduction {

ParseError::ParseError(int line, const std::string& message)
    : AbductionError(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

class LineParser {
 public:
  LineParser(int line, std::vector<std::string_view> tokens)
      : line_(line), tokens_(std::move(tokens)) {}

  [[noreturn]] void error(const std::string& message) const { throw ParseError(line_, message); }

  std::int64_t integer(std::size_t i) const {
    if (i >= tokens_.size()) error("missing value");
    std::int64_t value = 0;
    const std::string_view t = tokens_[i];
    const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || end != t.data() + t.size()) {
      error("expected an integer, got '" + std::string(t) + "'");
    }
    return value;
  }

  Var variable(std::size_t i, int num_vars) const {
    const std::int64_t v = integer(i);
    if (v < 1 || v > num_vars) {
      error("variable " + std::to_string(v) + " is outside 1.." + std::to_string(num_vars));
    }
    return static_cast<Var>(v);
  }

  // Variables from token `from` up to the terminating 0.
  VarSet var_list(std::size_t from, int num_vars) const {
    if (tokens_.size() <= from || tokens_.back() != "0") error("list must end with 0");
    std::vector<Var> vs;
    for (std::size_t i = from; i + 1 < tokens_.size(); ++i) vs.push_back(variable(i, num_vars));
    return VarSet(std::move(vs));
  }

  const std::vector<std::string_view>& tokens() const { return tokens_; }

 private:
  int line_;
  std::vector<std::string_view> tokens_;
};

}  // namespace

AbductionInstance parse_instance(std::string_view text) {
  AbductionInstance raw;
  bool have_header = false;
  bool have_m = false;
  std::vector<bool> class_seen;
  std::vector<Clause> clauses;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    LineParser p(line_no, split(line));
    const auto& tok = p.tokens();
    if (tok.empty()) continue;
    const std::string_view kind = tok[0];

    if (kind == "c") {
      if (tok.size() >= 2 && tok[1] == "candidate") {
        if (!have_header) p.error("candidate before the p line");
        if (raw.candidate) p.error("second candidate line");
        raw.candidate = p.var_list(2, raw.num_vars);
      }
      continue;
    }
    if (kind == "p") {
      if (have_header) p.error("second p line");
      if (tok.size() != 3 || tok[1] != "abd") p.error("expected 'p abd <nvars>'");
      const std::int64_t n = p.integer(2);
      if (n < 0 || n > 1'000'000) p.error("variable count out of range");
      raw.num_vars = static_cast<int>(n);
      raw.names.assign(static_cast<std::size_t>(n), "");
      have_header = true;
      continue;
    }
    if (!have_header) p.error("content before the p line");
    if (kind == "n") {
      if (tok.size() != 3) p.error("expected 'n <var> <name>'");
      const Var v = p.variable(1, raw.num_vars);
      const std::string name(tok[2]);
      if (name.find_first_not_of("0123456789") == std::string::npos) {
        p.error("name '" + name + "' is all digits");
      }
      if (!raw.names[v - 1].empty()) p.error("variable " + std::to_string(v) + " named twice");
      raw.names[v - 1] = name;
    } else if (kind == "h") {
      const std::int64_t cls = p.integer(1);
      if (cls < 1 || cls > raw.num_vars + 1) p.error("class index out of range");
      const auto idx = static_cast<std::size_t>(cls - 1);
      if (class_seen.size() <= idx) {
        class_seen.resize(idx + 1, false);
        raw.classes.resize(idx + 1);
      }
      if (class_seen[idx]) p.error("class " + std::to_string(cls) + " given twice");
      class_seen[idx] = true;
      raw.classes[idx] = p.var_list(2, raw.num_vars);
    } else if (kind == "m") {
      if (have_m) p.error("second manifestation line");
      have_m = true;
      raw.manifestations = p.var_list(1, raw.num_vars);
    } else if (kind == "w") {
      if (tok.size() != 3) p.error("expected 'w <var> <weight>'");
      const Var v = p.variable(1, raw.num_vars);
      if (raw.weights.contains(v)) p.error("second weight for variable " + std::to_string(v));
      raw.weights[v] = p.integer(2);
    } else {
      if (tok.back() != "0") p.error("clause must end with 0");
      std::vector<Lit> lits;
      for (std::size_t i = 0; i + 1 < tok.size(); ++i) {
        const std::int64_t value = p.integer(i);
        if (value == 0) p.error("0 inside a clause");
        if (value > raw.num_vars || -value > raw.num_vars) {
          p.error("literal " + std::to_string(value) + " is outside the variable range");
        }
        lits.push_back(Lit::from_dimacs(static_cast<int>(value)));
      }
      clauses.emplace_back(std::move(lits));
    }
  }
  if (!have_header) throw ParseError(0, "no p line");
  if (!have_m) throw ParseError(0, "no manifestation line");
  raw.theory = Theory(std::move(clauses));
  return validate_instance(std::move(raw));
}

std::string serialize_instance(const AbductionInstance& instance) {
  std::ostringstream os;
  os << "p abd " << instance.num_vars << '\n';
  for (Var v = 1; v <= instance.num_vars; ++v) {
    const std::string& name = instance.names.size() >= static_cast<std::size_t>(v)
                                  ? instance.names[v - 1]
                                  : std::string();
    if (!name.empty()) os << "n " << v << ' ' << name << '\n';
  }
  if (instance.classes.empty()) os << "h 1 0\n";
  for (std::size_t i = 0; i < instance.classes.size(); ++i) {
    os << "h " << i + 1;
    for (Var v : instance.classes[i]) os << ' ' << v;
    os << " 0\n";
  }
  os << 'm';
  for (Var v : instance.manifestations) os << ' ' << v;
  os << " 0\n";
  for (const auto& [v, w] : instance.weights) os << "w " << v << ' ' << w << '\n';
  if (instance.candidate) {
    os << "c candidate";
    for (Var v : *instance.candidate) os << ' ' << v;
    os << " 0\n";
  }
  for (const Clause& c : instance.theory.clauses()) {
    for (Lit l : c) os << l.dimacs() << ' ';
    os << "0\n";
  }
  return os.str();
}

std::string serialize_record(const ReductionRecord& record) {
  std::ostringstream os;
  for (std::size_t v = 1; v < record.var_map.size(); ++v) {
    if (record.var_map[v] != 0) os << "c map var " << v << ' ' << record.var_map[v] << '\n';
  }
  for (const auto& [i, v] : record.c_index) os << "c map c " << i << ' ' << v << '\n';
  for (const auto& [i, v] : record.d_index) os << "c map d " << i << ' ' << v << '\n';
  for (const auto& [i, vs] : record.replicas) {
    os << "c map replicas " << i;
    for (Var v : vs) os << ' ' << v;
    os << " 0\n";
  }
  if (!record.forced.empty()) {
    os << "c map forced";
    for (Var v : record.forced) os << ' ' << v;
    os << " 0\n";
  }
  for (const auto& [role, v] : record.fresh) os << "c map fresh " << role << ' ' << v << '\n';
  return os.str();
}

AbductionInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AbductionError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw AbductionError("cannot write " + path);
  out << text;
  if (!out) throw AbductionError("write to " + path + " failed");
}

}  // namespace abduction
