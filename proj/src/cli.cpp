#include "rkit/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rkit/additive.hpp"
#include "rkit/bfile.hpp"
#include "rkit/cache.hpp"
#include "rkit/derivation.hpp"
#include "rkit/error.hpp"
#include "rkit/report_io.hpp"
#include "rkit/verification.hpp"

namespace rkit {

namespace {

struct Options {
  u64 limit = 0;
  int level = 1;
  u64 terms = ~u64{0};
  std::string cache;
  std::string c = "1/2";
  u64 n = 1;
  u64 number = 0;
  u64 scan_limit = 500;
  std::string case_name;
  std::optional<u64> x_max;
  std::optional<u64> n_max;
  std::optional<u64> sieve_limit;
  bool full = false;
  std::string format = "json";
  std::string bfile;
  u64 max_n = ~u64{0};
  std::string output;
};

// Ramanujan primes certified at least up to x.
MonotoneCounter ramanujan_through(u64 x) {
  return as_counter(ramanujan_primes(std::max<u64>(2 * x + 2, 1024), ~u64{0}));
}

std::pair<u64, u64> parse_ratio(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw Error(Errc::InvalidArgument, "c must look like A/B");
  u64 a = 0;
  u64 b = 0;
  const char* s = text.data();
  const auto r1 = std::from_chars(s, s + slash, a);
  const auto r2 = std::from_chars(s + slash + 1, s + text.size(), b);
  if (r1.ec != std::errc() || r1.ptr != s + slash || r2.ec != std::errc() ||
      r2.ptr != s + text.size()) {
    throw Error(Errc::InvalidArgument, "c must look like A/B");
  }
  return {a, b};
}

std::string join_parts(const std::vector<u64>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(parts[i]);
  }
  return s;
}

int run_sieve(const Options& o, std::ostream& out) {
  const PrimeSet ps(o.limit);
  out << "pi(" << o.limit << ") = " << ps.count() << '\n';
  if (ps.count() > 0) out << "largest prime " << ps.nth_prime(ps.count()) << '\n';
  return kExitOk;
}

int run_seq(const Options& o, std::ostream& out, std::ostream& err) {
  std::filesystem::path path = o.cache;
  if (path.empty() && !default_cache_dir().empty()) {
    path = cache_file_name(default_cache_dir(), o.level, o.limit);
  }
  DerivedSequence seq;
  bool from_cache = false;
  if (!path.empty() && std::filesystem::exists(path)) {
    seq = cache_read(path);
    from_cache = seq.level == o.level;
    if (!from_cache) err << "cache " << path.string() << " holds level " << seq.level
                         << ", recomputing\n";
  }
  if (!from_cache) {
    seq = level_k_sequence(o.limit, o.level, ~u64{0});
    if (!path.empty()) cache_write(seq, path);
  }
  const u64 shown = std::min<u64>(o.terms, seq.certified_count);
  out << "# level " << seq.level << ", certified " << seq.certified_count << ", source_limit "
      << seq.source_limit << (seq.heuristic ? ", heuristic" : "")
      << (from_cache ? ", from cache" : "") << '\n';
  for (u64 i = 0; i < shown; ++i) out << i + 1 << ' ' << seq.elements[i] << '\n';
  if (o.terms != ~u64{0} && o.terms > seq.certified_count) {
    err << "only " << seq.certified_count << " terms certified at limit " << o.limit << '\n';
  }
  return kExitOk;
}

int run_cram(const Options& o, std::ostream& out) {
  const auto [a, b] = parse_ratio(o.c);
  const auto q = make_c_query(a, b, o.n);
  const u64 limit = o.limit ? o.limit : 1'000'000;
  out << "R_{" << q.c_num << "/" << q.c_den << "," << q.n << "} = " << c_ramanujan(q, limit)
      << '\n';
  return kExitOk;
}

int run_represent(const Options& o, std::ostream& out, std::ostream& err) {
  const auto rep = richert_represent(o.number, ramanujan_through(o.number));
  if (!rep) {
    err << o.number << " has no representation as a sum of distinct Ramanujan primes\n";
    return kExitDomain;
  }
  out << o.number << " = " << join_parts(rep->parts) << '\n';
  return kExitOk;
}

int run_unrep(const Options& o, std::ostream& out) {
  out << largest_unrepresentable(o.scan_limit, ramanujan_through(o.scan_limit)) << '\n';
  return kExitOk;
}

int run_pair(const Options& o, std::ostream& out, std::ostream& err) {
  const auto p = greenfield_pairing(o.number, ramanujan_through(4 * o.number));
  if (!p) {
    err << "k = " << o.number << ": infeasible\n";
    return kExitDomain;
  }
  for (std::size_t i = 0; i < p->pairs.size(); ++i) {
    out << p->pairs[i].first << '+' << p->pairs[i].second << '=' << p->sums[i] << '\n';
  }
  return kExitOk;
}

void emit(const Options& o, std::span<const VerificationReport> reports, std::ostream& out) {
  if (o.format == "csv") {
    write_csv(out, reports);
  } else {
    out << (reports.size() == 1 ? to_json(reports.front()) : to_json(reports)).dump(2) << '\n';
  }
}

int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto id = parse_case_id(o.case_name);
  if (!id) {
    err << "unknown case '" << o.case_name << "'; known:";
    for (const auto& c : inequality_registry()) err << ' ' << to_string(c.id);
    err << '\n';
    return kExitUsage;
  }
  const CaseParams params{o.x_max, o.n_max, o.full};
  const VerificationContext ctx(o.sieve_limit.value_or(required_sieve_limit(*id, params)));
  VerificationReport report;
  if (*id == CaseId::T6_REPORT && o.format == "json") {
    const auto p = resolve_params(*id, params);
    const auto g = theorem6_growth_report(ctx.primes(), 3, 4, *p.x_max, *p.n_max);
    out << to_json(g).dump(2) << '\n';
    report = g.check;
  } else {
    report = run_case(*id, ctx, params);
    emit(o, std::span(&report, 1), out);
  }
  return report.passed() ? kExitOk : kExitCounterexample;
}

int run_crosscheck(const Options& o, std::ostream& out) {
  const auto bfile = read_bfile(o.bfile);
  const u64 limit = o.limit ? o.limit : 1'000'000;
  const auto seq = level_k_sequence(limit, o.level, ~u64{0});
  const auto rep = crosscheck(seq, bfile, o.max_n);
  out << "compared " << rep.compared << " terms";
  if (rep.compared) out << " (n = " << rep.first_index << ".." << rep.last_index << ")";
  out << ", " << rep.mismatches.size() << " mismatches\n";
  for (const auto& m : rep.mismatches) {
    out << "n = " << m.index << ": b-file " << m.expected << ", computed " << m.actual << '\n';
  }
  return rep.ok() ? kExitOk : kExitDomain;
}

int run_report(const Options& o, std::ostream& out) {
  const CaseParams params{std::nullopt, std::nullopt, o.full};
  u64 limit = 0;
  for (const auto& c : inequality_registry()) {
    limit = std::max(limit, required_sieve_limit(c.id, params));
  }
  const VerificationContext ctx(o.sieve_limit.value_or(limit));
  std::vector<VerificationReport> reports;
  for (const auto& c : inequality_registry()) reports.push_back(run_case(c.id, ctx, params));

  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) throw Error(Errc::IoError, "cannot open " + o.output + " for writing");
  }
  emit(o, reports, o.output.empty() ? out : file);
  const bool clean = std::all_of(reports.begin(), reports.end(),
                                 [](const auto& r) { return r.passed(); });
  return clean ? kExitOk : kExitCounterexample;
}

int run_trend(const Options& o, std::ostream& out) {
  const VerificationContext ctx(o.sieve_limit.value_or(kDeskSieveLimit));
  out << to_json(derived_ratio_trend(ctx)).dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramanujan primes, derived sequences and inequality checks", "rkit"};
  app.require_subcommand(1);
  Options o;

  auto* sieve = app.add_subcommand("sieve", "count primes up to a limit");
  sieve->add_option("--limit", o.limit, "sieve limit")->required();

  auto* seq = app.add_subcommand("seq", "print a level-k sequence");
  seq->add_option("--level", o.level, "derivation level (1 = Ramanujan primes)")
      ->check(CLI::Range(1, 0xffff));
  seq->add_option("--limit", o.limit, "sieve limit")->required();
  seq->add_option("--terms", o.terms, "number of terms to print");
  seq->add_option("--cache", o.cache, "cache file (default: $RKIT_CACHE_DIR)");

  auto* cram = app.add_subcommand("cram", "c-Ramanujan prime");
  cram->add_option("--c", o.c, "c as A/B")->required();
  cram->add_option("--n", o.n, "index")->required();
  cram->add_option("--limit", o.limit, "sieve limit (default 10^6)");

  auto* represent = app.add_subcommand("represent", "sum of distinct Ramanujan primes");
  represent->add_option("N", o.number)->required();

  auto* unrep = app.add_subcommand("unrep", "largest integer with no representation");
  unrep->add_option("--scan-limit", o.scan_limit, "scan limit (>= 500)");

  auto* pair = app.add_subcommand("pair", "pair {1..2k} into Ramanujan-prime sums");
  pair->add_option("K", o.number)->required();

  auto* verify = app.add_subcommand("verify", "sweep one registered inequality");
  verify->add_option("CASE", o.case_name)->required();
  verify->add_option("--x-max", o.x_max, "upper end of an x sweep");
  verify->add_option("--n-max", o.n_max, "upper end of an n sweep");
  verify->add_option("--sieve-limit", o.sieve_limit, "override the sieve size");
  verify->add_flag("--full", o.full, "full-range defaults");
  verify->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* cross = app.add_subcommand("crosscheck", "compare with an OEIS b-file");
  cross->add_option("--level", o.level)->check(CLI::Range(1, 0xffff));
  cross->add_option("--bfile", o.bfile)->required();
  cross->add_option("--limit", o.limit, "sieve limit (default 10^6)");
  cross->add_option("--max-n", o.max_n);

  auto* report = app.add_subcommand("report", "run every registered case");
  report->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  report->add_flag("--full", o.full, "full-range defaults");
  report->add_option("--sieve-limit", o.sieve_limit, "override the sieve size");
  report->add_option("--output", o.output, "write to a file instead of stdout");

  auto* trend = app.add_subcommand("trend", "R'_n / p_4n over dyadic blocks");
  trend->add_option("--sieve-limit", o.sieve_limit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sieve->parsed()) return run_sieve(o, out);
    if (seq->parsed()) return run_seq(o, out, err);
    if (cram->parsed()) return run_cram(o, out);
    if (represent->parsed()) return run_represent(o, out, err);
    if (unrep->parsed()) return run_unrep(o, out);
    if (pair->parsed()) return run_pair(o, out, err);
    if (verify->parsed()) return run_verify(o, out, err);
    if (cross->parsed()) return run_crosscheck(o, out);
    if (report->parsed()) return run_report(o, out);
    if (trend->parsed()) return run_trend(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::InvalidArgument || e.code() == Errc::InvalidLimit ? kExitUsage
                                                                               : kExitDomain;
  }
  return kExitUsage;
}

}  // namespace rkit
