#pragma once

// Line-oriented command scripts over a Forest (or the oracle).
//
//   MAKE id literal           MAKEC id literal        (UTF-8 literal)
//   MAKEN id n c1 .. cn       MAKENC id n c1 .. cn    (numeric codes)
//   ACCESS id i               RETRIEVE id i j
//   SUB id i c                INS id i c              DEL id i
//   INTRO id1 i id2           EXTRACT id i j newid
//   EQUAL id1 i1 id2 i2 l     LCP id1 i1 id2 i2
//   REV id i j                MAP id i j              ROTATE id i
//   EQW id1 i1 id2 i2 l       EQWW id1 i1 l1 id2 i2 l2
//   LCPW id1 i1 id2 i2
//
// A symbol argument c is one UTF-8 character or '#' followed by a decimal
// code. Blank lines and lines starting with '#' are ignored.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fest/errors.hpp"
#include "fest/fingerprint.hpp"
#include "fest/involution.hpp"
#include "fest/text.hpp"
#include "fest/types.hpp"

namespace fest {

enum class Verb : std::uint8_t {
  kMake,
  kMakeCircular,
  kMakeNumeric,
  kMakeNumericCircular,
  kAccess,
  kRetrieve,
  kSubstitute,
  kInsert,
  kDelete,
  kIntroduce,
  kExtract,
  kEqual,
  kLcp,
  kReverse,
  kMap,
  kRotate,
  kEqualOmega,
  kEqualOmegaOmega,
  kLcpOmega,
};

inline constexpr std::size_t kVerbCount = 19;

std::string_view verb_name(Verb v) noexcept;

struct Command {
  Verb verb = Verb::kMake;
  std::size_t line = 0;
  /// String names in argument order.
  std::vector<std::string> names;
  /// Numeric arguments (positions, lengths) in argument order.
  std::vector<std::size_t> nums;
  /// Literal content of MAKE*, or the symbol of SUB/INS.
  std::vector<Symbol> symbols;

  friend bool operator==(const Command&, const Command&) = default;
};

class ParseError : public UsageError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : UsageError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Parses one line; returns nothing for blank and comment lines.
std::optional<Command> parse_command(std::string_view line, std::size_t lineno);
/// Parses a whole script, throwing ParseError at the first bad line.
std::vector<Command> parse_script(std::istream& in);
/// Canonical text of a command; parse_command(format_command(c)) == c up to
/// the line number.
std::string format_command(const Command& c);
/// Script-protocol spelling of a single symbol argument.
std::string format_symbol(Symbol c);

/// Executes commands against a backend with the Forest API, resolving
/// string names to handles.
template <class Backend>
class Interpreter {
 public:
  explicit Interpreter(Backend& backend) : b_(backend) {}

  /// Runs one command and returns its output line, if it is a query.
  /// Library errors propagate unchanged.
  std::optional<std::string> execute(const Command& c) {
    switch (c.verb) {
      case Verb::kMake:
      case Verb::kMakeNumeric:
        check_free(c.names[0]);
        bind(c.names[0], b_.make_string(c.symbols, Mode::kLinear));
        return std::nullopt;
      case Verb::kMakeCircular:
      case Verb::kMakeNumericCircular:
        check_free(c.names[0]);
        bind(c.names[0], b_.make_string(c.symbols, Mode::kCircular));
        return std::nullopt;
      case Verb::kAccess: {
        const Symbol s = b_.access(id(c.names[0]), c.nums[0]);
        return text::render(std::span<const Symbol>(&s, 1));
      }
      case Verb::kRetrieve:
        return text::render(b_.retrieve(id(c.names[0]), c.nums[0], c.nums[1]));
      case Verb::kSubstitute:
        b_.substitute(id(c.names[0]), c.nums[0], c.symbols[0]);
        return std::nullopt;
      case Verb::kInsert:
        b_.insert(id(c.names[0]), c.nums[0], c.symbols[0]);
        return std::nullopt;
      case Verb::kDelete:
        b_.erase(id(c.names[0]), c.nums[0]);
        return std::nullopt;
      case Verb::kIntroduce:
        b_.introduce(id(c.names[0]), c.nums[0], id(c.names[1]));
        return std::nullopt;
      case Verb::kExtract: {
        const StringId src = id(c.names[0]);
        check_free(c.names[1]);
        bind(c.names[1], b_.extract(src, c.nums[0], c.nums[1]));
        return std::nullopt;
      }
      case Verb::kEqual:
        return flag(b_.equal(id(c.names[0]), c.nums[0], id(c.names[1]), c.nums[1], c.nums[2]));
      case Verb::kLcp: {
        const LcpResult r = b_.lcp(id(c.names[0]), c.nums[0], id(c.names[1]), c.nums[1]);
        return std::to_string(r.length) + " " + std::string(to_string(r.order));
      }
      case Verb::kReverse:
        b_.reverse(id(c.names[0]), c.nums[0], c.nums[1]);
        return std::nullopt;
      case Verb::kMap:
        b_.map(id(c.names[0]), c.nums[0], c.nums[1]);
        return std::nullopt;
      case Verb::kRotate:
        b_.rotate(id(c.names[0]), c.nums[0]);
        return std::nullopt;
      case Verb::kEqualOmega:
        return flag(b_.equal_omega(id(c.names[0]), c.nums[0], id(c.names[1]), c.nums[1], c.nums[2]));
      case Verb::kEqualOmegaOmega:
        return flag(b_.equal_omega_omega(id(c.names[0]), c.nums[0], c.nums[1], id(c.names[1]), c.nums[2],
                                         c.nums[3]));
      case Verb::kLcpOmega: {
        const OmegaLcpResult r = b_.lcp_omega(id(c.names[0]), c.nums[0], id(c.names[1]), c.nums[1]);
        const std::string len = r.length.is_infinite() ? "INF" : std::to_string(r.length.value());
        return len + " " + std::string(to_string(r.order));
      }
    }
    throw UsageError("unknown command");
  }

  /// Handle currently bound to a name, if the name is bound to a live string.
  std::optional<StringId> lookup(const std::string& name) const {
    auto it = names_.find(name);
    if (it == names_.end() || !b_.contains(it->second)) return std::nullopt;
    return it->second;
  }

  Backend& backend() noexcept { return b_; }

 private:
  static std::string flag(bool v) { return v ? "TRUE" : "FALSE"; }

  StringId id(const std::string& name) const {
    auto it = names_.find(name);
    if (it == names_.end()) throw HandleError("unknown string name '" + name + "'");
    return it->second;
  }

  /// A name may be reused once the string it named is gone.
  void check_free(const std::string& name) const {
    if (lookup(name)) throw UsageError("string name '" + name + "' is already in use");
  }

  void bind(const std::string& name, StringId handle) { names_[name] = handle; }

  Backend& b_;
  std::unordered_map<std::string, StringId> names_;
};

struct ScriptConfig {
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
  InvolutionTable involution;
  /// Replay every command on the oracle too and stop at the first
  /// disagreement (exit code 3).
  bool shadow = false;
  /// Print instrumentation counters to the error stream at the end.
  bool stats = false;
  /// Run the forest in audit mode.
  bool audit = false;
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kParse = 1;
inline constexpr int kRuntime = 2;
inline constexpr int kDivergence = 3;
}  // namespace exit_code

/// Parses the whole script, then runs it. Query output goes to `out`,
/// diagnostics and stats to `err`. Returns one of the exit codes above.
int run_script(std::istream& in, std::ostream& out, std::ostream& err, const ScriptConfig& config);

}  // namespace fest
