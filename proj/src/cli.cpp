#include "avoid1324/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "avoid1324/cache.hpp"
#include "avoid1324/codec.hpp"
#include "avoid1324/enumerate.hpp"
#include "avoid1324/words.hpp"

namespace avoid1324::cli {

namespace {

std::string real_string(const Real& x) { return x.str(30, std::ios_base::fmtflags(0)); }

const char* flag(bool b) { return b ? "true" : "false"; }

struct CountOptions {
  std::string pattern = "1324";
  std::size_t max = 8;
  std::string format = "csv";
  std::string cache_path;
  bool no_cache = false;
  unsigned jobs = 1;
};

// Counts S_n(pattern) through the cache unless disabled.
class CountSource {
 public:
  CountSource(const CountOptions& opts, std::ostream& err) : opts_(opts), err_(err) {
    if (!opts.no_cache)
      cache_ = CountCache::load(opts.cache_path.empty() ? CountCache::default_path()
                                                        : std::filesystem::path(opts.cache_path));
  }

  BigInt count(const Permutation& pattern, std::size_t n) {
    const auto key = pattern.to_string();
    if (cache_) {
      if (auto hit = cache_->lookup(key, n)) return *hit;
    }
    EnumerationLimits limits;
    limits.jobs = opts_.jobs;
    BigInt c = count_avoiders(n, pattern, limits);
    if (cache_) cache_->store(key, n, c);
    return c;
  }

  void flush() {
    if (!cache_ || !cache_->dirty()) return;
    try {
      cache_->save();
    } catch (const std::exception& e) {
      err_ << "warning: " << e.what() << '\n';
    }
  }

 private:
  const CountOptions& opts_;
  std::ostream& err_;
  std::optional<CountCache> cache_;
};

void add_count_flags(CLI::App* cmd, CountOptions& opts, bool with_pattern) {
  if (with_pattern) cmd->add_option("--pattern", opts.pattern, "pattern in one-line notation");
  cmd->add_option("--max", opts.max, "largest length")->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  cmd->add_option("--format", opts.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--cache", opts.cache_path, "count cache file");
  cmd->add_flag("--no-cache", opts.no_cache, "neither read nor write the count cache");
  cmd->add_option("--jobs", opts.jobs, "enumeration threads")->check(CLI::Range(1u, 256u));
}

int cmd_count(const CountOptions& opts, std::ostream& out, std::ostream& err) {
  const auto pattern = Permutation::parse(opts.pattern);
  if (opts.max > EnumerationLimits{}.max_length)
    throw LimitExceeded("--max " + std::to_string(opts.max) + " exceeds enumeration cap " +
                        std::to_string(EnumerationLimits{}.max_length));
  CountSource source(opts, err);
  std::vector<BigInt> counts;
  for (std::size_t n = 1; n <= opts.max; ++n) counts.push_back(source.count(pattern, n));
  source.flush();

  if (opts.format == "json") {
    auto rows = nlohmann::json::array();
    for (std::size_t n = 1; n <= opts.max; ++n)
      rows.push_back({{"n", n}, {"pattern", pattern.to_string()}, {"count", counts[n - 1].str()}});
    out << rows.dump(2) << '\n';
  } else {
    out << "n,count\n";
    for (std::size_t n = 1; n <= opts.max; ++n) out << n << ',' << counts[n - 1] << '\n';
  }
  return kSuccess;
}

std::vector<CountReport> build_reports(const CountOptions& opts, std::ostream& err) {
  if (opts.max > EnumerationLimits{}.max_length)
    throw LimitExceeded("--max " + std::to_string(opts.max) + " exceeds enumeration cap " +
                        std::to_string(EnumerationLimits{}.max_length));
  CountSource source(opts, err);
  const Permutation pattern{1, 3, 2, 4};
  std::vector<CountReport> reports;
  for (std::size_t n = 1; n <= opts.max; ++n) reports.push_back(make_report(n, source.count(pattern, n)));
  source.flush();
  return reports;
}

int verdict(const std::vector<CountReport>& reports, std::ostream& err) {
  int status = kSuccess;
  for (const auto& r : reports) {
    if (r.n == 1 && !r.corollary_holds())
      err << "note: n=1 Corollary comparison " << r.s_n << " < " << r.h_prev_sq
          << " is false (not asserted)\n";
    if (!r.asserted_pass()) {
      err << "FAIL: assertion failed at n=" << r.n << '\n';
      status = kAssertionFailed;
    }
  }
  return status;
}

int cmd_verify(const CountOptions& opts, std::ostream& out, std::ostream& err) {
  const auto reports = build_reports(opts, err);
  if (opts.format == "csv") {
    out << kReportCsvHeader << '\n';
    for (const auto& r : reports) out << to_csv_row(r) << '\n';
  } else {
    auto arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out << arr.dump(2) << '\n';
  }
  return verdict(reports, err);
}

int cmd_report(const std::string& path, const CountOptions& opts, std::ostream& out, std::ostream& err) {
  const auto reports = build_reports(opts, err);
  nlohmann::json doc;
  doc["reports"] = nlohmann::json::array();
  for (const auto& r : reports) doc["reports"].push_back(to_json(r));
  doc["growth"] = nlohmann::json::array();
  for (const auto& r : reports) {
    const double root = std::pow(static_cast<double>(r.s_n), 1.0 / static_cast<double>(r.n));
    doc["growth"].push_back({{"n", r.n}, {"s_n", r.s_n.str()}, {"nth_root", root}});
  }
  doc["lower_bound_growth_reference"] = kLowerBoundGrowthReference;
  const auto h = count_cb_free(opts.max);
  doc["words"] = nlohmann::json::array();
  for (std::size_t n = 0; n < h.size(); ++n) doc["words"].push_back({{"n", n}, {"h_n", h[n].str()}});

  std::ofstream file(path, std::ios::trunc);
  if (!file) {
    err << "error: cannot write " << path << '\n';
    return kUsageError;
  }
  file << doc.dump(2) << '\n';
  err << "wrote " << path << '\n';
  (void)out;
  return verdict(reports, err);
}

int cmd_words(std::size_t max, const std::string& format, std::ostream& out) {
  const auto h = count_cb_free(max);
  if (format == "json") {
    auto rows = nlohmann::json::array();
    for (std::size_t n = 0; n < h.size(); ++n) rows.push_back({{"n", n}, {"h_n", h[n].str()}});
    out << rows.dump(2) << '\n';
  } else {
    out << "n,h_n\n";
    for (std::size_t n = 0; n < h.size(); ++n) out << n << ',' << h[n] << '\n';
  }
  return kSuccess;
}

}  // namespace

nlohmann::json to_json(const CountReport& r) {
  return {
      {"n", r.n},
      {"s_n", r.s_n.str()},
      {"h_prev_sq", r.h_prev_sq.str()},
      {"bound_16", r.bound_16.str()},
      {"headline", real_string(r.headline)},
      {"headline_exact", {{"a", r.headline_exact.rational().str()}, {"b", r.headline_exact.irrational().str()}}},
      {"ratio_to_h_prev_sq", r.ratio_to_h_prev_sq()},
      {"ratio_to_16", r.ratio_to_16()},
      {"ratio_to_headline", r.ratio_to_headline()},
      {"corollary_holds", r.corollary_holds()},
      {"corollary_asserted", r.n >= 2},
      {"below_16", r.below_16()},
      {"below_headline", r.below_headline()},
      {"h_prev_sq_below_headline", r.h_prev_sq_below_headline()},
  };
}

std::string to_csv_row(const CountReport& r) {
  std::ostringstream row;
  row << r.n << ',' << r.s_n << ',' << r.h_prev_sq << ',' << r.bound_16 << ',' << real_string(r.headline)
      << ',' << flag(r.corollary_holds()) << ',' << flag(r.below_16()) << ',' << flag(r.below_headline())
      << ',' << flag(r.h_prev_sq_below_headline());
  return row.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exhaustive checks for 1324-avoiding permutations and their word encodings", "avoid1324"};
  app.require_subcommand(1);

  CountOptions count_opts;
  auto* count = app.add_subcommand("count", "print S_n(pattern) for n = 1..max");
  add_count_flags(count, count_opts, true);

  std::size_t enum_n = 0;
  std::string enum_pattern = "1324";
  unsigned enum_jobs = 1;
  auto* enumerate = app.add_subcommand("enumerate", "list Av_n(pattern) in lexicographic order");
  enumerate->add_option("n", enum_n, "length")->required()->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  enumerate->add_option("--pattern", enum_pattern, "pattern in one-line notation");
  enumerate->add_option("--jobs", enum_jobs, "enumeration threads")->check(CLI::Range(1u, 256u));

  std::string encode_input;
  auto* encode_cmd = app.add_subcommand("encode", "print the code pair w(p) z(p)");
  encode_cmd->add_option("permutation", encode_input, "e.g. 3612745 or 3,6,1,2,7,4,5")->required();

  std::string decode_w, decode_z;
  auto* decode_cmd = app.add_subcommand("decode", "rebuild the permutation from w and z");
  decode_cmd->add_option("w", decode_w, "position word over ABCD")->required();
  decode_cmd->add_option("z", decode_z, "value word over ABCD")->required();

  std::size_t words_max = 10;
  std::string words_format = "csv";
  auto* words = app.add_subcommand("words", "print h_n, the number of CB-free words");
  words->add_option("--max", words_max, "largest length")->check(CLI::Range(std::size_t{0}, std::size_t{100000}));
  words->add_option("--format", words_format, "output format")->check(CLI::IsMember({"csv", "json"}));

  CountOptions verify_opts;
  verify_opts.format = "json";
  auto* verify = app.add_subcommand("verify", "check the counting bounds for n = 1..max");
  add_count_flags(verify, verify_opts, false);

  CountOptions report_opts;
  std::string report_path;
  auto* report = app.add_subcommand("report", "write a JSON report with bounds, growth and word counts");
  report->add_option("path", report_path, "output file")->required();
  add_count_flags(report, report_opts, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*count) return cmd_count(count_opts, out, err);
    if (*enumerate) {
      EnumerationLimits limits;
      limits.jobs = enum_jobs;
      const auto pattern = Permutation::parse(enum_pattern);
      for_each_avoider(enum_n, pattern, [&](const Permutation& p) { out << p.to_string() << '\n'; }, limits);
      return kSuccess;
    }
    if (*encode_cmd) {
      const auto code = encode(Permutation::parse(encode_input));
      out << code.w.to_string() << ' ' << code.z.to_string() << '\n';
      return kSuccess;
    }
    if (*decode_cmd) {
      const CodePair code{TypeWord::parse(decode_w), TypeWord::parse(decode_z)};
      const auto result = decode(code);
      if (!result) {
        err << "decode failed [" << to_string(result.failure().stage) << "]: " << result.failure().detail
            << '\n';
        return kAssertionFailed;
      }
      out << result.value().to_string() << '\n';
      return kSuccess;
    }
    if (*words) return cmd_words(words_max, words_format, out);
    if (*verify) return cmd_verify(verify_opts, out, err);
    if (*report) return cmd_report(report_path, report_opts, out, err);
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace avoid1324::cli
