#include "fest/script.hpp"

#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <typeinfo>

#include "fest/forest.hpp"
#include "fest/oracle.hpp"

namespace fest {
namespace {

// Argument kinds: n = string name, i = number, c = symbol, L = literal,
// * = count followed by that many numeric codes.
struct VerbSpec {
  Verb verb;
  std::string_view name;
  std::string_view args;
};

constexpr std::array<VerbSpec, kVerbCount> kVerbs = {{
    {Verb::kMake, "MAKE", "nL"},
    {Verb::kMakeCircular, "MAKEC", "nL"},
    {Verb::kMakeNumeric, "MAKEN", "n*"},
    {Verb::kMakeNumericCircular, "MAKENC", "n*"},
    {Verb::kAccess, "ACCESS", "ni"},
    {Verb::kRetrieve, "RETRIEVE", "nii"},
    {Verb::kSubstitute, "SUB", "nic"},
    {Verb::kInsert, "INS", "nic"},
    {Verb::kDelete, "DEL", "ni"},
    {Verb::kIntroduce, "INTRO", "nin"},
    {Verb::kExtract, "EXTRACT", "niin"},
    {Verb::kEqual, "EQUAL", "ninii"},
    {Verb::kLcp, "LCP", "nini"},
    {Verb::kReverse, "REV", "nii"},
    {Verb::kMap, "MAP", "nii"},
    {Verb::kRotate, "ROTATE", "ni"},
    {Verb::kEqualOmega, "EQW", "ninii"},
    {Verb::kEqualOmegaOmega, "EQWW", "niinii"},
    {Verb::kLcpOmega, "LCPW", "nini"},
}};

const VerbSpec& spec_of(Verb v) { return kVerbs[static_cast<std::size_t>(v)]; }

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  auto space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n' || ch == '\v' || ch == '\f'; };
  while (k < line.size()) {
    while (k < line.size() && space(line[k])) ++k;
    const std::size_t b = k;
    while (k < line.size() && !space(line[k])) ++k;
    if (k > b) out.push_back(line.substr(b, k - b));
  }
  return out;
}

Symbol parse_code(std::string_view token) {
  const std::uint64_t v = text::parse_u64(token);
  if (v > 0xFFFFFFFFull) throw UsageError("symbol code out of range: " + std::string(token));
  return static_cast<Symbol>(v);
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const RangeError*>(&e)) return "RangeError";
  if (dynamic_cast<const HandleError*>(&e)) return "HandleError";
  if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
  if (dynamic_cast<const AuditError*>(&e)) return "AuditError";
  if (dynamic_cast<const UsageError*>(&e)) return "UsageError";
  if (dynamic_cast<const Error*>(&e)) return "Error";
  return typeid(e).name();
}

/// Result of running one command on one backend.
struct Outcome {
  std::optional<std::string> output;
  std::string error_kind;  // empty on success
  std::string error;

  bool same_as(const Outcome& o) const {
    if (error_kind.empty() != o.error_kind.empty()) return false;
    if (!error_kind.empty()) return error_kind == o.error_kind;
    return output == o.output;
  }

  std::string describe() const {
    if (!error_kind.empty()) return error_kind + ": " + error;
    return output ? *output : "(no output)";
  }
};

template <class Backend>
Outcome run_one(Interpreter<Backend>& interp, const Command& c) {
  Outcome o;
  try {
    o.output = interp.execute(c);
  } catch (const Error& e) {
    o.error_kind = error_kind(e);
    o.error = e.what();
  }
  return o;
}

std::string preview(const std::vector<Symbol>& s) {
  constexpr std::size_t kMax = 64;
  if (s.size() <= kMax) return text::render(s);
  std::vector<Symbol> head(s.begin(), s.begin() + kMax);
  return text::render(head) + " ... (" + std::to_string(s.size()) + " symbols)";
}

/// Whether the command can change stored content or structure of the
/// strings it names (queries that cut or rotate included).
bool restructures(Verb v) {
  switch (v) {
    case Verb::kAccess:
    case Verb::kRetrieve:
    case Verb::kEqual:
      return false;
    default:
      return true;
  }
}

void print_stats(std::ostream& err, const Stats& s) {
  err << "rotations\t" << s.rotations << "\n";
  err << "splays\t" << s.splays << "\n";
  err << "fixes\t" << s.fixes << "\n";
  err << "lcp_calls\t" << s.lcp_calls << "\n";
  err << "lcp_squaring_probes\t" << s.lcp_squaring_probes << "\n";
  err << "lcp_equality_tests\t" << s.lcp_equality_tests << "\n";
  for (std::size_t k = 0; k < kOpKindCount; ++k) {
    const OpStats& op = s.per_op[k];
    if (op.calls == 0) continue;
    err << "op." << op_name(static_cast<OpKind>(k)) << "\t" << op.calls << "\t" << op.rotations << "\n";
  }
}

}  // namespace

std::string_view verb_name(Verb v) noexcept { return spec_of(v).name; }

std::optional<Command> parse_command(std::string_view line, std::size_t lineno) {
  const std::vector<std::string_view> tok = split(line);
  if (tok.empty() || tok[0].front() == '#') return std::nullopt;
  const VerbSpec* spec = nullptr;
  for (const VerbSpec& v : kVerbs) {
    if (v.name == tok[0]) spec = &v;
  }
  if (spec == nullptr) throw ParseError(lineno, "unknown command '" + std::string(tok[0]) + "'");

  Command c;
  c.verb = spec->verb;
  c.line = lineno;
  std::size_t k = 1;
  auto need = [&](const char* what) {
    if (k >= tok.size()) {
      throw ParseError(lineno, std::string(spec->name) + ": missing " + what);
    }
    return tok[k++];
  };
  try {
    for (char kind : spec->args) {
      switch (kind) {
        case 'n':
          c.names.emplace_back(need("string name"));
          break;
        case 'i':
          c.nums.push_back(text::parse_u64(need("number")));
          break;
        case 'c':
          c.symbols.push_back(text::parse_symbol_token(need("symbol")));
          break;
        case 'L':
          c.symbols = text::decode_utf8(need("literal"));
          break;
        case '*': {
          const std::uint64_t count = text::parse_u64(need("symbol count"));
          if (count != tok.size() - k) {
            throw ParseError(lineno, std::string(spec->name) + ": expected " + std::to_string(count) +
                                         " codes, got " + std::to_string(tok.size() - k));
          }
          for (std::size_t t = 0; t < count; ++t) c.symbols.push_back(parse_code(tok[k++]));
          break;
        }
      }
    }
  } catch (const ParseError&) {
    throw;
  } catch (const UsageError& e) {
    throw ParseError(lineno, std::string(spec->name) + ": " + e.what());
  }
  if (k != tok.size()) {
    throw ParseError(lineno, std::string(spec->name) + ": too many arguments");
  }
  return c;
}

std::vector<Command> parse_script(std::istream& in) {
  std::vector<Command> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto c = parse_command(line, lineno)) out.push_back(std::move(*c));
  }
  return out;
}

std::string format_symbol(Symbol c) {
  if (c > 0x20 && c < 0x7F && c != '#') return std::string(1, static_cast<char>(c));
  return "#" + std::to_string(c);
}

std::string format_command(const Command& c) {
  const VerbSpec& spec = spec_of(c.verb);
  std::string out(spec.name);
  std::size_t names = 0, nums = 0;
  for (char kind : spec.args) {
    out += ' ';
    switch (kind) {
      case 'n':
        out += c.names[names++];
        break;
      case 'i':
        out += std::to_string(c.nums[nums++]);
        break;
      case 'c':
        out += format_symbol(c.symbols[0]);
        break;
      case 'L':
        for (Symbol s : c.symbols) text::append_utf8(out, s);
        break;
      case '*':
        out += std::to_string(c.symbols.size());
        for (Symbol s : c.symbols) out += ' ' + std::to_string(s);
        break;
    }
  }
  return out;
}

int run_script(std::istream& in, std::ostream& out, std::ostream& err, const ScriptConfig& config) {
  std::vector<Command> script;
  try {
    script = parse_script(in);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_code::kParse;
  }

  ForestOptions options;
  options.seed = config.seed;
  options.involution = config.involution;
  options.audit = config.audit;
  std::optional<Forest> forest;
  try {
    forest.emplace(std::move(options));
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kRuntime;
  }
  Interpreter<Forest> real(*forest);

  std::optional<OracleForest> oracle;
  std::optional<Interpreter<OracleForest>> shadow;
  if (config.shadow) {
    oracle.emplace(config.involution, forest->context().modulus());
    shadow.emplace(*oracle);
  }

  auto finish = [&](int code) {
    if (config.stats) print_stats(err, forest->stats());
    return code;
  };

  for (const Command& c : script) {
    const Outcome got = run_one(real, c);
    if (shadow) {
      const Outcome want = run_one(*shadow, c);
      std::string problem;
      if (!got.same_as(want)) {
        problem = "results differ";
      } else if (got.error_kind.empty() && restructures(c.verb)) {
        for (const std::string& name : c.names) {
          auto a = real.lookup(name);
          auto b = shadow->lookup(name);
          if (a.has_value() != b.has_value() || (a && forest->retrieve(*a) != oracle->content(*b))) {
            problem = "content of '" + name + "' differs";
            break;
          }
        }
      }
      if (!problem.empty()) {
        err << "divergence at line " << c.line << ": " << format_command(c) << "\n";
        err << "  " << problem << "\n";
        err << "  forest: " << got.describe() << "\n";
        err << "  oracle: " << want.describe() << "\n";
        for (const std::string& name : c.names) {
          auto a = real.lookup(name);
          auto b = shadow->lookup(name);
          err << "  " << name << " forest: " << (a ? preview(forest->retrieve(*a)) : "(none)") << "\n";
          err << "  " << name << " oracle: " << (b ? preview(oracle->content(*b)) : "(none)") << "\n";
        }
        return finish(exit_code::kDivergence);
      }
    }
    if (!got.error_kind.empty()) {
      err << "line " << c.line << ": " << got.error_kind << ": " << got.error << "\n";
      return finish(exit_code::kRuntime);
    }
    if (got.output) out << *got.output << "\n";
  }
  out.flush();
  return finish(exit_code::kOk);
}

}  // namespace fest
