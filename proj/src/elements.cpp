#include "mahon/elements.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mahon/checked_int.hpp"

namespace mahon {

Family family_from_name(const std::string& name) {
  std::string s;
  for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "s") return Family::S;
  if (s == "b") return Family::B;
  if (s == "d") return Family::D;
  if (s == "g") return Family::G;
  throw ParseError("unknown family '" + name + "' (expected s, b, d or g)");
}

const char* family_name(Family f) {
  switch (f) {
    case Family::S: return "S";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::G: return "G";
  }
  return "?";
}

LetterOrder order_from_name(const std::string& name) {
  std::string s;
  for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "natural") return LetterOrder::NaturalS;
  if (s == "integer") return LetterOrder::IntegerB;
  if (s == "signblock") return LetterOrder::SignBlockB;
  if (s == "valueblock") return LetterOrder::ValueBlockG;
  if (s == "colorblock") return LetterOrder::ColorBlockG;
  throw ParseError("unknown letter order '" + name +
                   "' (expected natural, integer, signblock, valueblock or colorblock)");
}

const char* order_name(LetterOrder o) {
  switch (o) {
    case LetterOrder::NaturalS: return "natural";
    case LetterOrder::IntegerB: return "integer";
    case LetterOrder::SignBlockB: return "signblock";
    case LetterOrder::ValueBlockG: return "valueblock";
    case LetterOrder::ColorBlockG: return "colorblock";
  }
  return "?";
}

bool letter_less(LetterOrder o, const Letter& a, const Letter& b) {
  switch (o) {
    case LetterOrder::NaturalS:
      return a.value < b.value;
    case LetterOrder::IntegerB: {
      const int ia = a.color ? -a.value : a.value;
      const int ib = b.color ? -b.value : b.value;
      return ia < ib;
    }
    case LetterOrder::SignBlockB:
      if ((a.color != 0) != (b.color != 0)) return a.color != 0;
      return a.value < b.value;
    case LetterOrder::ValueBlockG:
      if ((a.color != 0) != (b.color != 0)) return a.color != 0;
      if (a.color == 0) return a.value < b.value;
      if (a.value != b.value) return a.value > b.value;
      return a.color > b.color;
    case LetterOrder::ColorBlockG:
      if (a.color != b.color) return a.color > b.color;
      return a.value < b.value;
  }
  return false;
}

int compare_letters(LetterOrder o, const Letter& a, const Letter& b) {
  if (letter_less(o, a, b)) return -1;
  if (letter_less(o, b, a)) return 1;
  return 0;
}

ColoredPerm::ColoredPerm() = default;

ColoredPerm::ColoredPerm(int r, std::vector<int> sigma, std::vector<int> z)
    : r_(r), sigma_(std::move(sigma)), z_(std::move(z)) {
  validate();
}

void ColoredPerm::validate() const {
  if (r_ < 1) throw DomainError("color count must be >= 1");
  if (sigma_.size() != z_.size()) throw DomainError("sigma and z lengths differ");
  const int n = static_cast<int>(sigma_.size());
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : sigma_) {
    if (v < 1 || v > n) throw DomainError("value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (seen[static_cast<size_t>(v - 1)]) throw DomainError("repeated value " + std::to_string(v));
    seen[static_cast<size_t>(v - 1)] = 1;
  }
  for (int c : z_) {
    if (c < 0 || c >= r_) throw DomainError("color " + std::to_string(c) + " outside 0.." + std::to_string(r_ - 1));
  }
}

ColoredPerm ColoredPerm::identity(int r, int n) {
  if (n < 0) throw DomainError("negative size");
  std::vector<int> sigma(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) sigma[static_cast<size_t>(i)] = i + 1;
  return ColoredPerm(r, std::move(sigma), std::vector<int>(static_cast<size_t>(n), 0));
}

ColoredPerm ColoredPerm::parse(int r, const std::string& text) {
  if (r < 1) throw DomainError("color count must be >= 1");
  std::istringstream in(text);
  std::vector<int> sigma, z;
  std::string tok;
  while (in >> tok) {
    int color = 0;
    std::string body = tok;
    if (body.size() > 1 && body[0] == '-') {
      if (r != 2) throw ParseError("sign alias '" + tok + "' is only valid for r = 2");
      color = 1;
      body = body.substr(1);
    }
    std::string digits = body;
    const auto lb = body.find('[');
    if (lb != std::string::npos) {
      if (color != 0) throw ParseError("both sign and color bracket in '" + tok + "'");
      if (body.back() != ']' || lb == 0) throw ParseError("malformed letter '" + tok + "'");
      digits = body.substr(0, lb);
      const std::string cstr = body.substr(lb + 1, body.size() - lb - 2);
      if (cstr.empty() || cstr.size() > 7 || cstr.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("malformed color in '" + tok + "'");
      color = std::stoi(cstr);
    }
    if (digits.empty() || digits.size() > 7 || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("malformed letter '" + tok + "'");
    sigma.push_back(std::stoi(digits));
    z.push_back(color);
  }
  return ColoredPerm(r, std::move(sigma), std::move(z));
}

std::string ColoredPerm::to_string() const {
  std::string out;
  for (int i = 0; i < n(); ++i) {
    if (i) out += " ";
    const Letter l = letter(i);
    if (r_ == 2 && l.color == 1) {
      out += "-" + std::to_string(l.value);
    } else {
      out += std::to_string(l.value);
      if (l.color != 0) out += "[" + std::to_string(l.color) + "]";
    }
  }
  return out;
}

ColoredPerm ColoredPerm::abs_perm() const {
  return ColoredPerm(1, sigma_, std::vector<int>(sigma_.size(), 0));
}

Decomposed decompose(const ColoredPerm& pi, LetterOrder order) {
  const int n = pi.n();
  std::vector<Letter> sorted(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) sorted[static_cast<size_t>(i)] = pi.letter(i);
  std::sort(sorted.begin(), sorted.end(),
            [order](const Letter& a, const Letter& b) { return letter_less(order, a, b); });

  std::vector<int> pos_of_value(static_cast<size_t>(n) + 1, 0);
  std::vector<int> tau_sigma(static_cast<size_t>(n)), tau_z(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    tau_sigma[static_cast<size_t>(k)] = sorted[static_cast<size_t>(k)].value;
    tau_z[static_cast<size_t>(k)] = sorted[static_cast<size_t>(k)].color;
    pos_of_value[static_cast<size_t>(sorted[static_cast<size_t>(k)].value)] = k + 1;
  }
  std::vector<int> rho(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) rho[static_cast<size_t>(i)] = pos_of_value[static_cast<size_t>(pi.sigma()[static_cast<size_t>(i)])];

  return Decomposed{ColoredPerm(pi.r(), std::move(tau_sigma), std::move(tau_z)),
                    ColoredPerm(1, std::move(rho), std::vector<int>(static_cast<size_t>(n), 0))};
}

ColoredPerm recompose(const ColoredPerm& tau, const ColoredPerm& rho) {
  if (tau.n() != rho.n()) throw DomainError("recompose size mismatch");
  for (int c : rho.z()) {
    if (c != 0) throw DomainError("rho must be uncolored");
  }
  const int n = tau.n();
  std::vector<int> sigma(static_cast<size_t>(n)), z(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int p = rho.sigma()[static_cast<size_t>(i)];
    sigma[static_cast<size_t>(i)] = tau.sigma()[static_cast<size_t>(p - 1)];
    z[static_cast<size_t>(i)] = tau.z()[static_cast<size_t>(p - 1)];
  }
  return ColoredPerm(tau.r(), std::move(sigma), std::move(z));
}

FixedReduction drop_fixed_points(const ColoredPerm& pi) {
  const int n = pi.n();
  FixedReduction out;
  std::vector<int> kept_values;
  std::vector<int> kept_pos;
  for (int i = 0; i < n; ++i) {
    if (pi.sigma()[static_cast<size_t>(i)] == i + 1 && pi.z()[static_cast<size_t>(i)] == 0) {
      out.fixed_positions.push_back(i + 1);
    } else {
      kept_pos.push_back(i);
      kept_values.push_back(pi.sigma()[static_cast<size_t>(i)]);
    }
  }
  std::vector<int> sorted_values = kept_values;
  std::sort(sorted_values.begin(), sorted_values.end());
  std::vector<int> rank(static_cast<size_t>(n) + 1, 0);
  for (size_t k = 0; k < sorted_values.size(); ++k) rank[static_cast<size_t>(sorted_values[k])] = static_cast<int>(k) + 1;

  std::vector<int> sigma, z;
  sigma.reserve(kept_pos.size());
  z.reserve(kept_pos.size());
  for (int i : kept_pos) {
    sigma.push_back(rank[static_cast<size_t>(pi.sigma()[static_cast<size_t>(i)])]);
    z.push_back(pi.z()[static_cast<size_t>(i)]);
  }
  out.reduced = ColoredPerm(pi.r(), std::move(sigma), std::move(z));
  return out;
}

void check_family_r(Family f, int r) {
  switch (f) {
    case Family::S:
      if (r != 1) throw DomainError("symmetric group requires r = 1");
      break;
    case Family::B:
    case Family::D:
      if (r != 2) throw DomainError("signed families require r = 2");
      break;
    case Family::G:
      if (r < 1) throw DomainError("color count must be >= 1");
      break;
  }
}

std::uint64_t group_order(Family f, int n, int r) {
  if (n < 0) throw DomainError("negative size");
  check_family_r(f, r);
  std::uint64_t fact = 1;
  for (int k = 2; k <= n; ++k) fact = checked_umul(fact, static_cast<std::uint64_t>(k));
  std::uint64_t colors = 1;
  for (int k = 0; k < n; ++k) colors = checked_umul(colors, static_cast<std::uint64_t>(r));
  std::uint64_t total = checked_umul(fact, colors);
  if (f == Family::D && n > 0) total /= 2;
  return total;
}

GroupStream::GroupStream(Family f, int n, int r) : f_(f), n_(n), r_(r) {
  if (n < 0) throw DomainError("negative size");
  check_family_r(f, r);
  sigma_.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) sigma_[static_cast<size_t>(i)] = i + 1;
  z_.assign(static_cast<size_t>(n), 0);
  settle();
}

GroupStream::GroupStream(Family f, int n, int r, Letter first) : f_(f), n_(n), r_(r), fixed_first_(true) {
  if (n < 1) throw DomainError("prefix stream needs n >= 1");
  check_family_r(f, r);
  if (first.value < 1 || first.value > n) throw DomainError("prefix value outside 1..n");
  if (first.color < 0 || first.color >= r) throw DomainError("prefix color outside 0..r-1");
  sigma_.reserve(static_cast<size_t>(n));
  sigma_.push_back(first.value);
  for (int v = 1; v <= n; ++v) {
    if (v != first.value) sigma_.push_back(v);
  }
  z_.assign(static_cast<size_t>(n), 0);
  z_[0] = first.color;
  settle();
}

bool GroupStream::z_valid() const {
  if (f_ != Family::D) return true;
  int colored = 0;
  for (int c : z_) colored += c != 0;
  return colored % 2 == 0;
}

// Little-endian odometer over the free color digits; false once wrapped back
// to all zero.
bool GroupStream::advance_z() {
  const int start = fixed_first_ ? 1 : 0;
  for (int i = n_ - 1; i >= start; --i) {
    auto& d = z_[static_cast<size_t>(i)];
    if (d + 1 < r_) {
      ++d;
      return true;
    }
    d = 0;
  }
  return false;
}

bool GroupStream::advance_sigma() {
  const auto begin = sigma_.begin() + (fixed_first_ ? 1 : 0);
  return std::next_permutation(begin, sigma_.end());
}

void GroupStream::settle() {
  while (!done_ && !z_valid()) {
    if (!advance_z()) {
      if (!advance_sigma()) done_ = true;
    }
  }
}

bool GroupStream::next(ColoredPerm& out) {
  if (done_) return false;
  out.r_ = r_;
  out.sigma_ = sigma_;
  out.z_ = z_;
  if (!advance_z()) {
    if (!advance_sigma()) done_ = true;
  }
  settle();
  return true;
}

std::vector<Letter> GroupStream::first_letters(Family f, int n, int r) {
  check_family_r(f, r);
  std::vector<Letter> out;
  const int colors = f == Family::S ? 1 : r;
  for (int v = 1; v <= n; ++v) {
    for (int c = 0; c < colors; ++c) out.push_back(Letter{v, c});
  }
  return out;
}

USetStream::USetStream(int n, int r, LetterOrder order, bool even_colored_only)
    : n_(n), r_(r), order_(order), even_only_(even_colored_only) {
  if (n < 0) throw DomainError("negative size");
  if (r < 1) throw DomainError("color count must be >= 1");
  colors_.assign(static_cast<size_t>(n), 0);
}

bool USetStream::colors_valid() const {
  if (!even_only_) return true;
  int colored = 0;
  for (int c : colors_) colored += c != 0;
  return colored % 2 == 0;
}

bool USetStream::advance_colors() {
  for (int i = n_ - 1; i >= 0; --i) {
    auto& d = colors_[static_cast<size_t>(i)];
    if (d + 1 < r_) {
      ++d;
      return true;
    }
    d = 0;
  }
  return false;
}

void USetStream::emit(ColoredPerm& out) const {
  std::vector<Letter> letters(static_cast<size_t>(n_));
  for (int v = 1; v <= n_; ++v) {
    letters[static_cast<size_t>(v - 1)] = Letter{v, colors_[static_cast<size_t>(v - 1)]};
  }
  std::sort(letters.begin(), letters.end(),
            [this](const Letter& a, const Letter& b) { return letter_less(order_, a, b); });
  out.r_ = r_;
  out.sigma_.resize(static_cast<size_t>(n_));
  out.z_.resize(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    out.sigma_[static_cast<size_t>(i)] = letters[static_cast<size_t>(i)].value;
    out.z_[static_cast<size_t>(i)] = letters[static_cast<size_t>(i)].color;
  }
}

bool USetStream::next(ColoredPerm& out) {
  while (!done_ && !colors_valid()) {
    if (!advance_colors()) done_ = true;
  }
  if (done_) return false;
  emit(out);
  if (!advance_colors()) done_ = true;
  return true;
}

}  // namespace mahon
