#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mahon/registry.hpp"

namespace mahon {

// ExpectedMismatchConfirmed is reported when an entry carrying the
// KnownErratum status fails verification, which is the outcome its catalog
// row predicts.
enum class Verdict { Equal, Mismatch, ExpectedMismatchConfirmed };

const char* verdict_name(Verdict v);

struct VerifyReport {
  std::string id;
  VerifyParams params;
  Verdict verdict = Verdict::Equal;
  Poly2 lhs;
  Poly2 rhs;
  Poly2 diff;                // lhs - rhs, zero exactly when the sides agree
  std::uint64_t count = 0;   // elements enumerated per pass
  double ms = 0.0;
  std::string note;
  std::optional<std::string> witness;  // first element hitting a discrepant term

  // True when the verdict matches the catalog expectation.
  bool as_expected() const;
};

// Exact weighted sum over the entry's domain for one weight. Splits the
// enumeration across threads for large groups; the result is identical to
// the single-threaded fold since all arithmetic is exact.
Poly2 lhs_bruteforce(const IdentityRecord& rec, const WeightSpec& weight,
                     const VerifyParams& params, std::uint64_t* count_out = nullptr);

VerifyReport verify(const IdentityRecord& rec, VerifyParams params);
VerifyReport verify(std::string_view id, VerifyParams params);

struct RangeOptions {
  std::string filter;  // id prefix family filter, as in list_identities
  int max_n = 4;
  int max_r = 4;       // only entries without a fixed r sweep colors
};

// Instantiates every matching catalog entry over its parameter grid, in
// catalog order with r, then n, then (a, b) ascending.
std::vector<VerifyReport> verify_range(const RangeOptions& opts);

bool all_as_expected(const std::vector<VerifyReport>& reports);

// MAHON_THREADS environment override, else the hardware concurrency.
int default_thread_count();

}  // namespace mahon
