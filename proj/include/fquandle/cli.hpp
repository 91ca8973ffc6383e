#ifndef FQUANDLE_CLI_HPP_
#define FQUANDLE_CLI_HPP_

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace fquandle::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInputError = 2;

/// One line of `--format machine` output: `kind=<kind>` followed by the
/// remaining fields in sorted key order. Values containing whitespace, quotes,
/// '=' or nothing at all are double-quoted with backslash escapes.
class Record {
 public:
  explicit Record(std::string kind) : kind_(std::move(kind)) {}

  Record& set(std::string const& key, std::string value) {
    fields_[key] = std::move(value);
    return *this;
  }

  std::string str() const;

 private:
  std::string kind_;
  std::map<std::string, std::string> fields_;
};

std::string quote_value(std::string const& value);

/// Runs one command line (args excludes the program name) and returns the
/// exit status.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

}  // namespace fquandle::cli

#endif  // FQUANDLE_CLI_HPP_
