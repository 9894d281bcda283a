#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "coxeter/types.hpp"

namespace coxeter {

// In-memory marker for m(s,t) = infinity. Files use 0 instead, so the file
// format stays integer-only.
inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

// A Coxeter system (W,S): the rank |S| plus the symmetric order matrix
// m : S x S -> {1,2,3,...} u {inf} with m(s,s)=1 and m(s,t)>=2 off-diagonal.
// Immutable after construction; this is the presentation source of truth.
class CoxeterSystem {
 public:
  // Validates the three matrix conditions. Throws CoxError with code
  // DiagonalNotOne / NotSymmetric / OffDiagonalBelowTwo naming the violating
  // pair. `orders` is rank*rank row-major, kInfiniteOrder for infinity.
  CoxeterSystem(int rank, std::vector<int> orders);

  int rank() const { return rank_; }
  int order(int s, int t) const { return orders_[static_cast<size_t>(s) * rank_ + t]; }
  const std::vector<int>& orders() const { return orders_; }

  // True when every order lies in {1,2,3,4,5,6,inf}, i.e. the exact
  // root-reflection engine can run on this system.
  bool exact_orders() const { return exact_orders_; }

  void check_letter(int s) const;
  void check_word(const Word& w) const;

  bool operator==(const CoxeterSystem& other) const {
    return rank_ == other.rank_ && orders_ == other.orders_;
  }

 private:
  int rank_;
  std::vector<int> orders_;
  bool exact_orders_;
};

CoxeterSystem new_system(int rank, const std::vector<int>& orders);

// Convenience builder: off-diagonal orders given as {{s,t,m},...}; all other
// off-diagonal entries are 2. Use 0 or kInfiniteOrder for infinity.
CoxeterSystem make_system(int rank, const std::vector<std::vector<int>>& triples);

// File formats. Text: line "rank N" then N rows of N integers, 0 = infinity.
// JSON: {"rank": N, "m": [[...]]}, same 0-for-infinity convention.
CoxeterSystem parse_system(const std::string& text);
CoxeterSystem load_system(const std::string& path);
std::string format_system(const CoxeterSystem& sys);

// Stable content digest (hex FNV-1a over rank and orders), used in reports.
std::string system_digest(const CoxeterSystem& sys);

}  // namespace coxeter
