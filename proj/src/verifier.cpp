#include "mahon/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <limits>
#include <thread>

#include "mahon/checked_int.hpp"
#include "mahon/errors.hpp"

namespace mahon {

namespace {

constexpr std::uint64_t kParallelThreshold = 100000;

long env_long(const char* name) {
  const char* s = std::getenv(name);
  if (s == nullptr || *s == '\0') return 0;
  char* end = nullptr;
  const long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || v < 1) return 0;
  return v;
}

int env_thread_override() {
  const long v = env_long("MAHON_THREADS");
  return static_cast<int>(std::min(v, 64L));
}

// Smallest group size worth splitting across threads (MAHON_PARALLEL_MIN
// overrides, mainly so tests can exercise the chunked fold cheaply).
std::uint64_t parallel_threshold() {
  const long v = env_long("MAHON_PARALLEL_MIN");
  return v > 0 ? static_cast<std::uint64_t>(v) : kParallelThreshold;
}

int stat_exponent(Stat s, const ColoredPerm& pi, LetterOrder order) {
  const std::int64_t v = stat_value(s, pi, order);
  if (v < 0 || v > std::numeric_limits<int>::max()) {
    throw DomainError("statistic value out of exponent range");
  }
  return static_cast<int>(v);
}

CharSpec resolve_character(const IdentityRecord& rec, const WeightSpec& w,
                           const VerifyParams& p) {
  CharSpec spec = *w.character;
  if (rec.takes_ab && spec.name == CharName::Chi) {
    spec.a = p.a;
    spec.b = p.b;
  }
  return spec;
}

void accumulate(Poly2& acc, const IdentityRecord& rec, const WeightSpec& w,
                const VerifyParams& p, const ColoredPerm& pi) {
  CycInt coeff(p.r, 1);
  if (w.character) coeff = char_value(resolve_character(rec, w, p), pi, p.r);
  if (w.sign_stat && stat_value(*w.sign_stat, pi, w.stat_order) % 2 != 0) coeff = -coeff;
  const int qe = stat_exponent(w.q_stat, pi, w.stat_order);
  const int te = w.t_stat ? stat_exponent(*w.t_stat, pi, w.stat_order) : 0;
  acc.add_term(qe, te, coeff);
}

std::uint64_t uset_size(const IdentityRecord& rec, const VerifyParams& p) {
  std::uint64_t size = 1;
  for (int i = 0; i < p.n; ++i) size = checked_umul(size, static_cast<std::uint64_t>(p.r));
  if (rec.family == Family::D && p.n > 0) size /= 2;
  return size;
}

VerifyParams normalized_params(const IdentityRecord& rec, VerifyParams p) {
  if (rec.fixed_r != 0) {
    if (p.r == 0) p.r = rec.fixed_r;
    if (p.r != rec.fixed_r) {
      throw ConstraintError("catalog entry " + rec.id + " is specific to r = " +
                            std::to_string(rec.fixed_r));
    }
  }
  if (p.r < 1) throw ConstraintError("catalog entry " + rec.id + " needs a color count r >= 1");
  if (rec.even_r_only && p.r % 2 != 0) {
    throw ConstraintError("catalog entry " + rec.id + " is only stated for even r");
  }
  if (p.n < rec.min_n) {
    throw ConstraintError("catalog entry " + rec.id + " needs n >= " +
                          std::to_string(rec.min_n));
  }
  if (rec.takes_ab) {
    if (p.a < 0 || p.a > 1) throw ConstraintError("character index a must be 0 or 1");
    if (p.b < 0 || p.b >= p.r) throw ConstraintError("character index b must lie in [0, r)");
  } else {
    p.a = 0;
    p.b = 0;
  }
  return p;
}

Poly2 fold_group_serial(const IdentityRecord& rec, const WeightSpec& w, const VerifyParams& p,
                        std::uint64_t& count) {
  Poly2 acc(p.r);
  GroupStream stream(rec.family, p.n, p.r);
  ColoredPerm pi;
  while (stream.next(pi)) {
    accumulate(acc, rec, w, p, pi);
    ++count;
  }
  return acc;
}

Poly2 fold_group_parallel(const IdentityRecord& rec, const WeightSpec& w, const VerifyParams& p,
                          std::uint64_t& count, int threads) {
  const std::vector<Letter> firsts = GroupStream::first_letters(rec.family, p.n, p.r);
  const int lanes = std::min<int>(threads, static_cast<int>(firsts.size()));
  std::vector<Poly2> partial(firsts.size(), Poly2(p.r));
  std::vector<std::uint64_t> counts(firsts.size(), 0);
  std::vector<std::exception_ptr> errors(static_cast<size_t>(lanes));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(lanes));
  for (int lane = 0; lane < lanes; ++lane) {
    pool.emplace_back([&, lane]() {
      try {
        for (size_t i = static_cast<size_t>(lane); i < firsts.size();
             i += static_cast<size_t>(lanes)) {
          GroupStream stream(rec.family, p.n, p.r, firsts[i]);
          ColoredPerm pi;
          while (stream.next(pi)) {
            accumulate(partial[i], rec, w, p, pi);
            ++counts[i];
          }
        }
      } catch (...) {
        errors[static_cast<size_t>(lane)] = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Poly2 acc(p.r);
  for (size_t i = 0; i < firsts.size(); ++i) {
    acc += partial[i];
    count += counts[i];
  }
  return acc;
}

Poly2 fold_uset(const IdentityRecord& rec, const WeightSpec& w, const VerifyParams& p,
                std::uint64_t& count) {
  Poly2 acc(p.r);
  USetStream stream(p.n, p.r, rec.enum_order, rec.family == Family::D);
  ColoredPerm pi;
  while (stream.next(pi)) {
    accumulate(acc, rec, w, p, pi);
    ++count;
  }
  return acc;
}

// First element, in enumeration order, whose monomial still disagrees.
std::optional<std::string> find_witness(const IdentityRecord& rec, const WeightSpec& w,
                                        const VerifyParams& p, const Poly2& diff) {
  if (p.n > 4) return std::nullopt;
  ColoredPerm pi;
  if (rec.domain == DomainKind::Group) {
    GroupStream stream(rec.family, p.n, p.r);
    while (stream.next(pi)) {
      const int qe = stat_exponent(w.q_stat, pi, w.stat_order);
      const int te = w.t_stat ? stat_exponent(*w.t_stat, pi, w.stat_order) : 0;
      if (!diff.coeff(qe, te).is_zero()) return pi.to_string();
    }
  } else {
    USetStream stream(p.n, p.r, rec.enum_order, rec.family == Family::D);
    while (stream.next(pi)) {
      const int qe = stat_exponent(w.q_stat, pi, w.stat_order);
      const int te = w.t_stat ? stat_exponent(*w.t_stat, pi, w.stat_order) : 0;
      if (!diff.coeff(qe, te).is_zero()) return pi.to_string();
    }
  }
  return std::nullopt;
}

VerifyReport verify_pointwise(const IdentityRecord& rec, const VerifyParams& p) {
  VerifyReport report;
  report.id = rec.id;
  report.params = p;
  report.lhs = Poly2(p.r);
  report.rhs = Poly2(p.r);
  const WeightSpec& w = rec.weights.front();
  const CycInt one(p.r, 1);
  GroupStream stream(rec.family, p.n, p.r);
  ColoredPerm pi;
  std::uint64_t holds = 0;
  while (stream.next(pi)) {
    ++report.count;
    const int qe = stat_exponent(w.q_stat, pi, w.stat_order);
    report.rhs.add_term(qe, 0, one);
    if (rec.pointwise(pi)) {
      ++holds;
      report.lhs.add_term(qe, 0, one);
    } else if (!report.witness) {
      report.witness = pi.to_string();
    }
  }
  report.diff = report.lhs - report.rhs;
  if (report.diff.is_zero()) {
    report.verdict = Verdict::Equal;
    report.note = "predicate holds for all " + std::to_string(report.count) + " elements";
  } else {
    report.verdict = rec.expected == ExpectedStatus::KnownErratum
                         ? Verdict::ExpectedMismatchConfirmed
                         : Verdict::Mismatch;
    report.note = "predicate fails for " + std::to_string(report.count - holds) + " of " +
                  std::to_string(report.count) + " elements";
  }
  return report;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "equal";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::ExpectedMismatchConfirmed: return "expected-mismatch-confirmed";
  }
  return "unknown";
}

bool VerifyReport::as_expected() const {
  const IdentityRecord* rec = find_identity(id);
  const ExpectedStatus expected = rec ? rec->expected : ExpectedStatus::Match;
  if (expected == ExpectedStatus::Match) return verdict == Verdict::Equal;
  return verdict == Verdict::ExpectedMismatchConfirmed;
}

int default_thread_count() {
  const int env = env_thread_override();
  if (env > 0) return env;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

Poly2 lhs_bruteforce(const IdentityRecord& rec, const WeightSpec& weight,
                     const VerifyParams& params, std::uint64_t* count_out) {
  const VerifyParams p = normalized_params(rec, params);
  std::uint64_t count = 0;
  Poly2 acc(p.r);
  if (rec.domain == DomainKind::USet) {
    acc = fold_uset(rec, weight, p, count);
    const std::uint64_t expect = uset_size(rec, p);
    if (count != expect) throw DomainError("window enumeration lost elements");
  } else {
    const std::uint64_t expect = group_order(rec.family, p.n, p.r);
    const int threads = default_thread_count();
    if (expect >= parallel_threshold() && threads > 1 && p.n > 0) {
      acc = fold_group_parallel(rec, weight, p, count, threads);
    } else {
      acc = fold_group_serial(rec, weight, p, count);
    }
    if (count != expect) throw DomainError("group enumeration lost elements");
  }
  if (count_out != nullptr) *count_out = count;
  return acc;
}

VerifyReport verify(const IdentityRecord& rec, VerifyParams params) {
  const VerifyParams p = normalized_params(rec, params);
  const auto started = std::chrono::steady_clock::now();
  VerifyReport report;
  if (rec.check == CheckKind::Pointwise) {
    report = verify_pointwise(rec, p);
  } else {
    report.id = rec.id;
    report.params = p;
    report.verdict = Verdict::Equal;
    for (size_t wi = 0; wi < rec.weights.size(); ++wi) {
      const WeightSpec& w = rec.weights[wi];
      std::uint64_t count = 0;
      Poly2 lhs = lhs_bruteforce(rec, w, p, &count);
      Poly2 rhs = rec.check == CheckKind::Transpose ? lhs.transposed() : rec.rhs(p);
      Poly2 diff = lhs - rhs;
      report.count = count;
      if (wi == 0 || !diff.is_zero()) {
        report.lhs = lhs;
        report.rhs = rhs;
        report.diff = diff;
      }
      if (!diff.is_zero()) {
        report.verdict = rec.expected == ExpectedStatus::KnownErratum
                             ? Verdict::ExpectedMismatchConfirmed
                             : Verdict::Mismatch;
        if (rec.weights.size() > 1) {
          report.note = "weight " + std::to_string(wi + 1) + " of " +
                        std::to_string(rec.weights.size()) + " (" + weight_description(w) +
                        ") disagrees";
        }
        report.witness = find_witness(rec, w, p, diff);
        break;
      }
    }
  }
  if (!rec.note.empty()) {
    report.note = report.note.empty() ? rec.note : report.note + "; " + rec.note;
  }
  const auto finished = std::chrono::steady_clock::now();
  report.ms = std::chrono::duration<double, std::milli>(finished - started).count();
  return report;
}

VerifyReport verify(std::string_view id, VerifyParams params) {
  const IdentityRecord* rec = find_identity(id);
  if (rec == nullptr) throw UnknownIdentityError("no catalog entry named " + std::string(id));
  return verify(*rec, params);
}

std::vector<VerifyReport> verify_range(const RangeOptions& opts) {
  std::vector<VerifyReport> reports;
  for (const IdentityRecord* rec : list_identities(opts.filter)) {
    std::vector<int> rs;
    if (rec->fixed_r != 0) {
      rs.push_back(rec->fixed_r);
    } else {
      for (int r = 1; r <= opts.max_r; ++r) {
        if (rec->even_r_only && r % 2 != 0) continue;
        rs.push_back(r);
      }
    }
    for (int r : rs) {
      for (int n = rec->min_n; n <= opts.max_n; ++n) {
        VerifyParams p;
        p.n = n;
        p.r = r;
        if (rec->takes_ab) {
          for (p.a = 0; p.a <= 1; ++p.a) {
            for (p.b = 0; p.b < r; ++p.b) reports.push_back(verify(*rec, p));
          }
        } else {
          reports.push_back(verify(*rec, p));
        }
      }
    }
  }
  return reports;
}

bool all_as_expected(const std::vector<VerifyReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerifyReport& r) { return r.as_expected(); });
}

}  // namespace mahon
