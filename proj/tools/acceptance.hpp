#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace skein::acceptance {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct Options {
  std::string filter;  // criterion id or substring of a tag; empty runs all
  std::uint64_t seed = kDefaultSeed;
  bool parallel = true;
};

struct Result {
  int id = 0;
  std::string name;
  std::string tags;
  bool passed = false;
  std::int64_t checks = 0;
  std::string detail;
  double millis = 0;
};

std::vector<Result> run(const Options& opts);

/// One line per criterion, then a summary line.
void print_text(std::ostream& out, const std::vector<Result>& results);
void print_json(std::ostream& out, const std::vector<Result>& results, std::uint64_t seed);

/// Shared entry point of `skein acceptance` and `skein_acceptance`:
/// --filter, --json, --seed, --serial. Returns 0 iff every selected
/// criterion passed.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace skein::acceptance
