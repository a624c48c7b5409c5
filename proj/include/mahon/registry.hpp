#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mahon/characters.hpp"
#include "mahon/elements.hpp"
#include "mahon/poly.hpp"
#include "mahon/statistics.hpp"

namespace mahon {

// Parameters a catalog entry is instantiated at. r = 0 means "take the
// entry's pinned color count"; entries over G(r, n) need an explicit r.
// (a, b) are only read by entries that sweep characters.
struct VerifyParams {
  int n = 1;
  int r = 0;
  int a = 0;
  int b = 0;
};

// Which set of elements the left-hand side sums over.
enum class DomainKind { Group, USet };

// How the entry is certified:
//   ClosedForm  brute-forced sum must equal the product formula
//   Transpose   brute-forced bivariate sum must equal its own (q,t) swap
//   Pointwise   a per-element predicate must hold everywhere
enum class CheckKind { ClosedForm, Transpose, Pointwise };

// Whether the catalog entry is expected to verify. KnownErratum marks a
// statement recorded as printed whose verification is expected to fail;
// the verifier treats the resulting mismatch as a confirmation.
enum class ExpectedStatus { Match, KnownErratum };

// One summand weight: character * (-1)^sign_stat * q^q_stat * t^t_stat.
// stat_order feeds the order-parameterized statistics (inv, maj).
struct WeightSpec {
  std::optional<CharSpec> character;
  std::optional<Stat> sign_stat;
  Stat q_stat = Stat::LenB;
  std::optional<Stat> t_stat;
  LetterOrder stat_order = LetterOrder::NaturalS;
};

struct IdentityRecord {
  std::string id;
  Family family = Family::B;
  DomainKind domain = DomainKind::Group;
  // Enumeration order used to build U-set windows (and reported witnesses).
  LetterOrder enum_order = LetterOrder::NaturalS;
  CheckKind check = CheckKind::ClosedForm;
  // Every weight listed here must produce the same certified polynomial.
  std::vector<WeightSpec> weights;
  std::function<Poly2(const VerifyParams&)> rhs;              // ClosedForm only
  std::function<bool(const ColoredPerm&)> pointwise;          // Pointwise only
  bool takes_ab = false;   // sweeps the 2r one-dimensional characters
  bool even_r_only = false;
  int fixed_r = 0;         // 0 = any r >= 1
  int min_n = 1;
  ExpectedStatus expected = ExpectedStatus::Match;
  std::string source;      // catalog column: where the statement is recorded
  std::string note;
};

const std::vector<IdentityRecord>& all_identities();

// Null when the id is not in the catalog.
const IdentityRecord* find_identity(std::string_view id);

// filter selects by id prefix: "S", "B", "D", "G" (Mahonian entries only)
// or "G5" (the equal-distribution family); empty selects everything.
std::vector<const IdentityRecord*> list_identities(std::string_view filter = "");

// Human-readable catalog columns.
std::string domain_description(const IdentityRecord& rec);
std::string constraints_description(const IdentityRecord& rec);
std::string weight_description(const WeightSpec& w);
std::string weights_description(const IdentityRecord& rec);

}  // namespace mahon
