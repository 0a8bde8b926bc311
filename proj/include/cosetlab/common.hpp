#ifndef COSETLAB_COMMON_HPP
#define COSETLAB_COMMON_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cosetlab {

// Default ceiling for every exponential enumeration (words, cosets, codewords).
inline constexpr std::uint64_t kDefaultMaxEnum = std::uint64_t{1} << 20;

// Fixture or word-literal syntax error, with the 1-based line it occurred on
// (0 when no line applies).
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "parse error at line " + std::to_string(line) + ": " + msg
                                      : "parse error: " + msg),
          raw_(msg),
          line_(line) {}
    int line() const { return line_; }
    const std::string& raw() const { return raw_; }

  private:
    std::string raw_;
    int line_;
};

// An enumeration would exceed the configured bound.
class BoundError : public std::runtime_error {
  public:
    BoundError(const std::string& what_enum, std::uint64_t requested, std::uint64_t limit)
        : std::runtime_error("enumeration bound exceeded: " + what_enum + " needs " +
                             std::to_string(requested) + " > max-enum " + std::to_string(limit)),
          requested_(requested),
          limit_(limit) {}
    std::uint64_t requested() const { return requested_; }
    std::uint64_t limit() const { return limit_; }

  private:
    std::uint64_t requested_;
    std::uint64_t limit_;
};

// Outcome of one verification pass: counted cases, capped violation samples,
// and informational notes (findings that are reported but do not fail the check).
struct CheckReport {
    static constexpr std::size_t kMaxStored = 16;

    std::string name;
    std::size_t cases = 0;
    std::size_t violation_count = 0;
    std::vector<std::string> violations;
    std::vector<std::string> notes;

    void violation(const std::string& v) {
        ++violation_count;
        if (violations.size() < kMaxStored) violations.push_back(v);
    }
    void note(const std::string& n) { notes.push_back(n); }
    bool passed() const { return violation_count == 0; }
};

}  // namespace cosetlab

#endif
