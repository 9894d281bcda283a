#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace coxeter {

// A word over the generator alphabet; letters are generator indices in [0, rank).
using Word = std::vector<int>;

// A subset of generator indices, kept sorted and duplicate-free.
using GeneratorSubset = std::vector<int>;

enum class ErrorCode {
  DiagonalNotOne,
  NotSymmetric,
  OffDiagonalBelowTwo,
  LetterOutOfRange,
  SystemMismatch,
  ResourceCap,
  Undecided,
  EmptyTarget,
  NotAffineType,
  NonConvergence,
  DegenerateSample,
  DegenerateCrossing,
  DimensionNotTwo,
  UnsupportedOrder,
  ParseError,
  UsageError,
};

class CoxError : public std::runtime_error {
 public:
  CoxError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

GeneratorSubset normalize_subset(GeneratorSubset subset);
bool subset_contains(const GeneratorSubset& subset, int s);
// a \ b, both sorted
GeneratorSubset subset_difference(const GeneratorSubset& a, const GeneratorSubset& b);
bool subset_includes(const GeneratorSubset& big, const GeneratorSubset& small);
std::string subset_to_string(const GeneratorSubset& subset);
std::string word_to_string(const Word& word);

}  // namespace coxeter
