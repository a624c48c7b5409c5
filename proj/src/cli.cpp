#include "mahon/cli.hpp"

#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mahon/errors.hpp"
#include "mahon/json_io.hpp"
#include "mahon/selftest.hpp"
#include "mahon/verifier.hpp"

namespace mahon {

namespace {

using nlohmann::json;

enum class Format { Human, Json, Tsv };

Format format_from_name(const std::string& name) {
  if (name == "human") return Format::Human;
  if (name == "json") return Format::Json;
  if (name == "tsv") return Format::Tsv;
  throw ParseError("unknown format '" + name + "'");
}

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const std::string& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

// Smallest color count the window can live in: colors written as [c] need
// r > c, a sign needs r = 2, otherwise r = 1. An explicit --r wins.
int infer_r(const std::vector<std::string>& tokens) {
  int r = 1;
  for (const std::string& t : tokens) {
    if (t.find('-') != std::string::npos) r = std::max(r, 2);
    for (size_t open = t.find('['); open != std::string::npos; open = t.find('[', open + 1)) {
      const size_t close = t.find(']', open + 1);
      if (close == std::string::npos) break;
      try {
        r = std::max(r, std::stoi(t.substr(open + 1, close - open - 1)) + 1);
      } catch (const std::exception&) {
        // leave it to the window parser to report
      }
    }
  }
  return r;
}

Stat stat_or_throw(const std::string& name) {
  const std::optional<Stat> s = stat_from_name(name);
  if (!s) throw ParseError("unknown statistic '" + name + "'");
  return *s;
}

bool order_sensitive(Stat s) { return s == Stat::Inv || s == Stat::Maj; }

std::int64_t evaluate(Stat s, const ColoredPerm& pi, LetterOrder order) {
  return order_sensitive(s) ? stat_value(s, pi, order) : stat_value(s, pi);
}

int default_family_r(Family f) {
  switch (f) {
    case Family::S: return 1;
    case Family::B:
    case Family::D: return 2;
    case Family::G: return 0;  // must be given explicitly
  }
  return 0;
}

std::string trimmed_ms(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << ms << " ms";
  return os.str();
}

// ---------------------------------------------------------------- stat ----

int run_stat(const std::string& stat_text, const std::vector<std::string>& window,
             int r_opt, const std::string& order_text, Format format, std::ostream& out) {
  const Stat s = stat_or_throw(stat_text);
  if (window.empty()) throw ParseError("no element given");
  const int r = r_opt > 0 ? r_opt : infer_r(window);
  const ColoredPerm pi = ColoredPerm::parse(r, join(window));
  const LetterOrder order = order_from_name(order_text);
  const std::int64_t value = evaluate(s, pi, order);
  switch (format) {
    case Format::Human:
      out << value << "\n";
      break;
    case Format::Json: {
      json j{{"stat", stat_name(s)}, {"element", perm_to_json(pi)}, {"value", value}};
      if (order_sensitive(s)) j["order"] = order_name(order);
      out << j.dump() << "\n";
      break;
    }
    case Format::Tsv:
      out << stat_name(s) << "\t" << value << "\n";
      break;
  }
  return 0;
}

// ---------------------------------------------------------------- dist ----

int run_dist(const std::string& stat_text, const std::string& family_text, int n, int r_opt,
             const std::string& order_text, Format format, std::ostream& out) {
  const Stat s = stat_or_throw(stat_text);
  const Family family = family_from_name(family_text);
  int r = r_opt > 0 ? r_opt : default_family_r(family);
  if (r == 0) throw ConstraintError("family g needs an explicit --r");
  check_family_r(family, r);
  if (n < 0) throw ConstraintError("n must be >= 0");
  const LetterOrder order = order_from_name(order_text);

  Poly2 dist(r);
  const CycInt one(r, 1);
  GroupStream stream(family, n, r);
  ColoredPerm pi;
  std::uint64_t count = 0;
  while (stream.next(pi)) {
    dist.add_term(static_cast<int>(evaluate(s, pi, order)), 0, one);
    ++count;
  }

  switch (format) {
    case Format::Human:
      out << dist.to_string() << "\n";
      break;
    case Format::Json: {
      json j{{"family", family_name(family)}, {"n", n},     {"r", r},
             {"stat", stat_name(s)},          {"count", count}, {"poly", poly_to_json(dist)}};
      if (order_sensitive(s)) j["order"] = order_name(order);
      out << j.dump() << "\n";
      break;
    }
    case Format::Tsv:
      for (const auto& [qt, c] : dist.terms()) {
        out << qt.q << "\t" << qt.t << "\t" << c.to_string() << "\n";
      }
      break;
  }
  return 0;
}

// -------------------------------------------------------------- verify ----

std::string describe_params(const VerifyReport& rep) {
  std::string s = "n=" + std::to_string(rep.params.n) + " r=" + std::to_string(rep.params.r);
  const IdentityRecord* rec = find_identity(rep.id);
  if (rec != nullptr && rec->takes_ab) {
    s += " a=" + std::to_string(rep.params.a) + " b=" + std::to_string(rep.params.b);
  }
  return s;
}

void print_report_human(const VerifyReport& rep, std::ostream& out) {
  std::string tag;
  if (rep.verdict == Verdict::Equal) {
    tag = "ok  ";
  } else if (rep.verdict == Verdict::ExpectedMismatchConfirmed) {
    tag = "ok* ";
  } else {
    tag = "FAIL";
  }
  out << tag << "  " << std::left << std::setw(24) << rep.id << "  " << std::setw(20)
      << describe_params(rep) << "  " << std::right << std::setw(9) << rep.count
      << " elements  " << trimmed_ms(rep.ms);
  if (rep.verdict == Verdict::ExpectedMismatchConfirmed) out << "  (mismatch was expected)";
  out << "\n";
  if (!rep.as_expected() || rep.verdict == Verdict::ExpectedMismatchConfirmed) {
    out << "      lhs:  " << rep.lhs.to_string() << "\n";
    out << "      rhs:  " << rep.rhs.to_string() << "\n";
    out << "      diff: " << rep.diff.to_string() << "\n";
    if (rep.witness) out << "      witness: " << *rep.witness << "\n";
  }
  if (!rep.note.empty()) out << "      note: " << rep.note << "\n";
}

void print_report_tsv(const VerifyReport& rep, std::ostream& out) {
  out << rep.id << "\t" << rep.params.n << "\t" << rep.params.r << "\t" << rep.params.a
      << "\t" << rep.params.b << "\t" << verdict_name(rep.verdict) << "\t"
      << (rep.as_expected() ? 1 : 0) << "\t" << rep.count << "\t" << rep.ms << "\n";
}

int emit_reports(const std::vector<VerifyReport>& reports, Format format, std::ostream& out) {
  const bool ok = all_as_expected(reports);
  switch (format) {
    case Format::Human: {
      for (const VerifyReport& rep : reports) print_report_human(rep, out);
      size_t unexpected = 0;
      for (const VerifyReport& rep : reports) {
        if (!rep.as_expected()) ++unexpected;
      }
      out << reports.size() << (reports.size() == 1 ? " instance" : " instances")
          << " checked, ";
      if (unexpected == 0) {
        out << "all as expected\n";
      } else {
        out << unexpected << " unexpected\n";
      }
      break;
    }
    case Format::Json: {
      json arr = json::array();
      for (const VerifyReport& rep : reports) arr.push_back(report_to_json(rep));
      out << arr.dump() << "\n";
      break;
    }
    case Format::Tsv:
      for (const VerifyReport& rep : reports) print_report_tsv(rep, out);
      break;
  }
  return ok ? 0 : 1;
}

int run_verify(const std::string& id, bool n_given, int n, int r, int a, int b, bool sweep_all,
               const std::string& filter, int max_n, int max_r, Format format,
               std::ostream& out) {
  if (!id.empty()) {
    if (!n_given) throw ParseError("verifying one entry needs --n");
    VerifyParams p;
    p.n = n;
    p.r = r;
    p.a = a;
    p.b = b;
    return emit_reports({verify(id, p)}, format, out);
  }
  if (!sweep_all && filter.empty()) {
    throw ParseError("give an entry id, or --all / --filter for a sweep");
  }
  RangeOptions opts;
  opts.filter = sweep_all ? "" : filter;
  opts.max_n = max_n;
  opts.max_r = max_r;
  return emit_reports(verify_range(opts), format, out);
}

// ---------------------------------------------------------------- list ----

int run_list(const std::string& filter, Format format, std::ostream& out) {
  const std::vector<const IdentityRecord*> records = list_identities(filter);
  switch (format) {
    case Format::Human:
      for (const IdentityRecord* rec : records) {
        out << std::left << std::setw(24) << rec->id << "  " << std::setw(44)
            << weights_description(*rec) << "  over " << std::setw(14)
            << domain_description(*rec) << "  " << std::setw(30)
            << constraints_description(*rec) << "  " << rec->source << "\n";
        if (!rec->note.empty()) out << std::setw(26) << "" << "note: " << rec->note << "\n";
      }
      break;
    case Format::Json: {
      json arr = json::array();
      for (const IdentityRecord* rec : records) {
        json j{{"id", rec->id},
               {"family", family_name(rec->family)},
               {"domain", domain_description(*rec)},
               {"weights", weights_description(*rec)},
               {"constraints", constraints_description(*rec)},
               {"source", rec->source},
               {"expected", rec->expected == ExpectedStatus::Match ? "match" : "known-erratum"}};
        if (!rec->note.empty()) j["note"] = rec->note;
        arr.push_back(std::move(j));
      }
      out << arr.dump() << "\n";
      break;
    }
    case Format::Tsv:
      for (const IdentityRecord* rec : records) {
        out << rec->id << "\t" << family_name(rec->family) << "\t" << domain_description(*rec)
            << "\t" << constraints_description(*rec) << "\t" << rec->source << "\n";
      }
      break;
  }
  return 0;
}

// ------------------------------------------------------------ selftest ----

int run_selftest_cmd(Format format, std::ostream& out) {
  const std::vector<SelfCheck> checks = run_selftest();
  switch (format) {
    case Format::Human:
      for (const SelfCheck& c : checks) {
        out << (c.passed ? "PASS" : "FAIL") << "  " << std::left << std::setw(30) << c.name
            << "  " << c.detail << "\n";
      }
      break;
    case Format::Json: {
      json arr = json::array();
      for (const SelfCheck& c : checks) {
        arr.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      }
      out << arr.dump() << "\n";
      break;
    }
    case Format::Tsv:
      for (const SelfCheck& c : checks) {
        out << c.name << "\t" << (c.passed ? 1 : 0) << "\t" << c.detail << "\n";
      }
      break;
  }
  return all_passed(checks) ? 0 : 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of signed Mahonian identities over the classical "
               "reflection groups and wreath products"};
  app.name("mahon");
  app.require_subcommand(1);

  std::string format_text = "human";
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "output format")
        ->check(CLI::IsMember({"human", "json", "tsv"}))
        ->capture_default_str();
  };

  int exit_code = 0;

  // stat
  std::string stat_text;
  std::vector<std::string> window;
  int stat_r = 0;
  std::string stat_order = "natural";
  CLI::App* stat_cmd =
      app.add_subcommand("stat", "Evaluate one statistic of one element in window notation");
  stat_cmd->add_option("stat", stat_text, "statistic name, e.g. lenb, fmaj, rinv")->required();
  stat_cmd->add_option("window", window, "element letters, e.g. -3 1 -2 or 2[1] 1[3] 3")
      ->required()
      ->expected(-1);
  stat_cmd->add_option("--r", stat_r, "color count (default: smallest that fits the window)");
  stat_cmd->add_option("--order", stat_order, "letter order for inv and maj")
      ->check(CLI::IsMember({"natural", "integer", "signblock", "valueblock", "colorblock"}))
      ->capture_default_str();
  add_format(stat_cmd);
  stat_cmd->callback([&]() {
    exit_code = run_stat(stat_text, window, stat_r, stat_order,
                         format_from_name(format_text), out);
  });

  // dist
  std::string dist_stat;
  std::string dist_family = "b";
  int dist_n = 0;
  int dist_r = 0;
  std::string dist_order = "natural";
  CLI::App* dist_cmd =
      app.add_subcommand("dist", "Brute-force the distribution of a statistic over a group");
  dist_cmd->add_option("stat", dist_stat, "statistic name")->required();
  dist_cmd->add_option("--family", dist_family, "group family: s, b, d or g")
      ->check(CLI::IsMember({"s", "b", "d", "g", "S", "B", "D", "G"}))
      ->capture_default_str();
  dist_cmd->add_option("--n", dist_n, "number of letters")->required();
  dist_cmd->add_option("--r", dist_r, "color count (s: 1, b/d: 2, g: required)");
  dist_cmd->add_option("--order", dist_order, "letter order for inv and maj")
      ->check(CLI::IsMember({"natural", "integer", "signblock", "valueblock", "colorblock"}))
      ->capture_default_str();
  add_format(dist_cmd);
  dist_cmd->callback([&]() {
    exit_code = run_dist(dist_stat, dist_family, dist_n, dist_r, dist_order,
                         format_from_name(format_text), out);
  });

  // verify
  std::string verify_id;
  int verify_n = 1;
  int verify_r = 0;
  int verify_a = 0;
  int verify_b = 0;
  bool verify_all = false;
  std::string verify_filter;
  int verify_max_n = 4;
  int verify_max_r = 4;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Certify catalog entries exactly; nonzero exit on unexpected results");
  verify_cmd->add_option("id", verify_id, "catalog entry id (see: mahon list)");
  CLI::Option* n_opt = verify_cmd->add_option("--n", verify_n, "number of letters");
  verify_cmd->add_option("--r", verify_r, "color count (default: the entry's own)");
  verify_cmd->add_option("--a", verify_a, "character index a in {0,1}");
  verify_cmd->add_option("--b", verify_b, "character index b in [0,r)");
  verify_cmd->add_flag("--all", verify_all, "sweep the whole catalog");
  verify_cmd->add_option("--filter", verify_filter, "sweep one family: S, B, D, G or G5");
  verify_cmd->add_option("--max-n", verify_max_n, "sweep bound on n")->capture_default_str();
  verify_cmd->add_option("--max-r", verify_max_r, "sweep bound on r")->capture_default_str();
  add_format(verify_cmd);
  verify_cmd->callback([&]() {
    exit_code = run_verify(verify_id, n_opt->count() > 0, verify_n, verify_r, verify_a,
                           verify_b, verify_all, verify_filter, verify_max_n, verify_max_r,
                           format_from_name(format_text), out);
  });

  // list
  std::string list_filter;
  CLI::App* list_cmd = app.add_subcommand("list", "Print the identity catalog");
  list_cmd->add_option("--filter", list_filter, "family prefix: S, B, D, G or G5");
  add_format(list_cmd);
  list_cmd->callback(
      [&]() { exit_code = run_list(list_filter, format_from_name(format_text), out); });

  // selftest
  CLI::App* self_cmd = app.add_subcommand("selftest", "Run the built-in health checks");
  add_format(self_cmd);
  self_cmd->callback([&]() { exit_code = run_selftest_cmd(format_from_name(format_text), out); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    const std::vector<CLI::App*> parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConstraintError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownIdentityError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace mahon
