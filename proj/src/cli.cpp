#include "semiquad/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "semiquad/cache.hpp"
#include "semiquad/census.hpp"
#include "semiquad/certificate.hpp"
#include "semiquad/constructions.hpp"
#include "semiquad/hilbert.hpp"
#include "semiquad/io.hpp"

namespace semiquad {

namespace {

struct Context {
  EngineLimits limits;
  bool class_size_given = false;
  std::unique_ptr<RunCache> cache;
  std::ostream* out;
  std::ostream* err;
};

struct Options {
  std::size_t max_class_size = EngineLimits{}.max_class_size;
  unsigned workers = 1;
  std::string cache_dir;
  bool no_cache = false;

  std::string file;
  std::string out_file;
  int n = 0;
  std::size_t degree = 0;
  std::size_t cap = 0;
  std::size_t d_max = 0;
  std::size_t witness_k = 0;
  bool json = false;
  bool csv = false;
  bool presentations = false;
  bool count_only = false;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

std::string presentation_output(const Presentation& p, bool json) {
  return json ? presentation_to_json(p).dump(2) + "\n" : render_presentation(p);
}

/// Runs `compute` unless the cache already holds a matching record.
Json cached(Context& ctx, const Presentation& p, const std::string& op, const Json& params,
            const std::function<Json()>& compute) {
  const std::string hash = content_hash(p);
  if (ctx.cache) {
    if (auto hit = ctx.cache->lookup(hash, op, params)) {
      *ctx.err << "cache hit: " << op << " " << hash << "\n";
      return hit->result;
    }
  }
  const auto t0 = std::chrono::steady_clock::now();
  Json result = compute();
  if (ctx.cache) {
    RunRecord r;
    r.presentation_hash = hash;
    r.operation = op;
    r.parameters = params;
    r.result = result;
    r.wall_seconds = seconds_since(t0);
    ctx.cache->store(r);
  }
  return result;
}

int cmd_validate(Context& ctx, const Options& o) {
  const Presentation p = read_presentation_file(o.file);
  const QhsReport rep = validate_qhs(p);
  if (o.json) {
    Json v = Json::array();
    for (const auto& x : rep.violations) v.push_back({{"kind", to_string(x.kind)}, {"detail", x.detail}});
    Json j{{"n", p.n()}, {"d", p.size()}, {"qhs", rep.valid()}, {"violations", v}};
    if (rep.valid()) j["all_pure"] = all_pure(p);
    *ctx.out << j.dump(2) << "\n";
  } else {
    const auto [lo, hi] = qhs_cardinality_bounds(p.n());
    *ctx.out << "n=" << p.n() << " d=" << p.size() << " qhs_range=[" << lo << "," << hi << "]\n";
    if (rep.valid()) {
      *ctx.out << "valid QHS" << (all_pure(p) ? ", all generators pure" : "") << "\n";
    } else {
      *ctx.out << "invalid QHS\n";
      for (const auto& x : rep.violations) *ctx.out << "  " << to_string(x.kind) << ": " << x.detail << "\n";
    }
  }
  return rep.valid() ? kExitOk : kExitInputError;
}

int cmd_build(Context& ctx, const Options& o) {
  write_output(o.out_file, presentation_output(build_regular_qhs(o.n), o.json), *ctx.out);
  return kExitOk;
}

int cmd_extend(Context& ctx, const Options& o) {
  write_output(o.out_file, presentation_output(extend(read_presentation_file(o.file)), o.json),
               *ctx.out);
  return kExitOk;
}

HilbertProfile cached_profile(Context& ctx, const Presentation& p, std::size_t max_degree) {
  const Json params{{"max_degree", max_degree}, {"max_class_size", ctx.limits.max_class_size}};
  return profile_from_json(cached(ctx, p, "hilbert", params, [&] {
    return profile_to_json(hilbert_profile(p, max_degree, ctx.limits));
  }));
}

int cmd_hilbert(Context& ctx, const Options& o) {
  const Presentation p = read_presentation_file(o.file);
  const HilbertProfile h = cached_profile(ctx, p, o.degree);
  if (o.json) {
    *ctx.out << profile_to_json(h).dump(2) << "\n";
  } else if (o.csv) {
    *ctx.out << profile_to_csv(h);
  } else {
    for (std::size_t m = 0; m < h.dims.size(); ++m) *ctx.out << "dim R_" << m << " = " << h.dims[m] << "\n";
    if (h.finite()) {
      *ctx.out << "finite dimensional: nilpotency index " << h.nilpotency_index
               << ", total dimension " << *total_dimension(h) << "\n";
    } else {
      *ctx.out << "unknown up to degree " << h.truncated_at;
      if (!h.note.empty()) *ctx.out << " (" << h.note << ")";
      *ctx.out << "\n";
    }
  }
  return h.finite() ? kExitOk : kExitInconclusive;
}

int cmd_nilpotency(Context& ctx, const Options& o) {
  const Presentation p = read_presentation_file(o.file);
  const HilbertProfile h = cached_profile(ctx, p, o.cap);
  if (o.json) {
    Json j{{"cap", o.cap}, {"verdict", h.finite() ? "finite_dimensional" : "unknown_up_to"},
           {"nilpotency_index", nullptr}, {"truncated_at", h.truncated_at}};
    if (h.finite()) j["nilpotency_index"] = h.nilpotency_index;
    *ctx.out << j.dump(2) << "\n";
  } else if (h.finite()) {
    *ctx.out << "nilpotency index " << h.nilpotency_index << "\n";
  } else {
    *ctx.out << "unknown up to degree " << h.truncated_at << "\n";
  }
  return h.finite() ? kExitOk : kExitInconclusive;
}

int cmd_singular(Context& ctx, const Options& o) {
  const Presentation p = read_presentation_file(o.file);
  if (!is_qhs(p)) throw UsageError("singular: the presentation is not a QHS");
  if (o.degree < 1) throw UsageError("singular: --degree must be at least 1");
  MinimalBasis b = initial_basis(p, IdealMode::WithoutTop);
  bool truncated = false;
  try {
    while (b.degree < o.degree) b = next_minimal_basis(b, p, ctx.limits);
  } catch (const ResourceExhausted& e) {
    truncated = true;
    *ctx.err << e.what() << "\n";
  }
  if (o.json) {
    *ctx.out << basis_to_json(b, truncated).dump(2) << "\n";
  } else {
    for (const auto& w : b.singular) *ctx.out << w.render() << "\n";
    *ctx.out << b.singular.size() << " singular of " << b.minimals.size()
             << " minimal monomials at degree " << b.degree << (truncated ? " (truncated)" : "")
             << "\n";
  }
  return truncated ? kExitInconclusive : kExitOk;
}

int cmd_regularity(Context& ctx, const Options& o) {
  const Presentation p = read_presentation_file(o.file);
  if (!is_qhs(p)) throw UsageError("regularity: the presentation is not a QHS");
  EngineLimits limits = ctx.limits;
  limits.max_degree = o.cap;
  const Json params{{"cap", o.cap}, {"max_class_size", limits.max_class_size}};
  const RegularityResult r = regularity_from_json(cached(
      ctx, p, "regularity", params, [&] { return regularity_to_json(regularity_degree(p, limits)); }));
  if (o.json) {
    *ctx.out << regularity_to_json(r).dump(2) << "\n";
  } else {
    *ctx.out << "singular counts:";
    for (std::size_t m = 1; m < r.singular_counts.size(); ++m) *ctx.out << " " << r.singular_counts[m];
    *ctx.out << "\n";
    switch (r.status) {
      case RegularityResult::Status::Regular:
        *ctx.out << "regular at degree " << r.degree << ", nilpotent of index at most "
                 << r.nilpotency_bound() << "\n";
        break;
      case RegularityResult::Status::IrregularUpTo:
        *ctx.out << "singular monomials persist up to degree " << r.degree << "\n";
        break;
      case RegularityResult::Status::Inconclusive:
        *ctx.out << "inconclusive at degree " << r.degree << ": " << r.note << "\n";
        break;
    }
  }
  return r.status == RegularityResult::Status::Regular ? kExitOk : kExitInconclusive;
}

int cmd_certify(Context& ctx, const Options& o) {
  const Presentation p = read_presentation_file(o.file);
  const Certificate c = find_certificate(p);
  std::optional<bool> witness;
  if (o.witness_k > 0 && c.type == Certificate::Type::SePair) {
    witness = verify_witness(c, p, o.witness_k, ctx.limits);
  }
  if (o.json) {
    Json j = certificate_to_json(c);
    if (witness) j["witness"] = {{"k", o.witness_k}, {"nonzero", *witness}};
    *ctx.out << j.dump(2) << "\n";
  } else {
    *ctx.out << "n=" << p.n() << " d=" << p.size()
             << (within_relation_bound(p) ? " within" : " above") << " the (n^2+n)/4 bound\n";
    switch (c.type) {
      case Certificate::Type::SePair:
        *ctx.out << "certificate: se_pair x" << int(c.a) << " x" << int(c.b) << "\n";
        break;
      case Certificate::Type::ZeroSum: *ctx.out << "certificate: zero_sum\n"; break;
      case Certificate::Type::None: *ctx.out << "certificate: none (" << c.reason << ")\n"; break;
    }
    for (const auto& line : c.transcript) *ctx.out << "  " << line << "\n";
    if (witness) {
      *ctx.out << "witness (x" << int(c.a) << "*x" << int(c.b) << ")^" << o.witness_k << ": "
               << (*witness ? "nonzero" : "ZERO") << "\n";
    }
  }
  return witness && !*witness ? kExitInputError : kExitOk;
}

int cmd_top_suffix(Context& ctx, const Options& o) {
  const int q = top_suffix_word_length(o.n);
  const bool found = top_suffix_witness(o.n, ctx.limits);
  if (o.json) {
    *ctx.out << Json{{"n", o.n}, {"q", q}, {"reaches_top_suffix", found}}.dump(2) << "\n";
  } else {
    *ctx.out << "n=" << o.n << " q=" << q << ": class of x1^" << q << " without the top monomial "
             << (found ? "contains" : "does not contain") << " a word ending in x" << o.n << "\n";
  }
  return kExitOk;
}

int cmd_enumerate(Context& ctx, const Options& o) {
  std::size_t count = 0;
  auto emit = [&](const Presentation& p) {
    ++count;
    if (o.count_only) return;
    if (o.json) {
      *ctx.out << presentation_to_json(p).dump() << "\n";
    } else {
      *ctx.out << (count > 1 ? "\n" : "") << render_presentation(p);
    }
  };
  if (o.presentations) {
    for_each_presentation(o.n, o.d_max, emit);
  } else {
    for_each_qhs(o.n, emit);
  }
  if (o.count_only) *ctx.out << count << "\n";
  return kExitOk;
}

int cmd_delta_table(Context& ctx, const Options& o) {
  if (o.n < 1) throw UsageError("delta-table: --max-n must be positive");
  std::ostringstream s;
  s << "n,delta,wisliceny,(n^2+n)/4\n";
  for (std::int64_t n = 1; n <= o.n; ++n) {
    const std::int64_t twice = (n * n + n) / 2;
    s << n << ',' << min_relation_count(n) << ',' << wisliceny_count(n) << ',' << twice / 2
      << (twice % 2 ? ".5" : "") << '\n';
  }
  *ctx.out << s.str();
  return kExitOk;
}

int cmd_census(Context& ctx, const Options& o) {
  CensusCaps caps;
  if (o.cap) caps.max_degree = o.cap;
  if (ctx.class_size_given) caps.max_class_size = ctx.limits.max_class_size;
  const auto records =
      o.presentations ? presentation_census(o.n, o.d_max, caps) : qhs_census(o.n, caps);
  std::ostringstream csv;
  write_census_csv(csv, records);
  write_output(o.out_file, csv.str(), *ctx.out);
  std::size_t unknown = 0;
  for (const auto& r : records) unknown += r.verdict.rfind("unknown", 0) == 0;
  *ctx.err << records.size() << " records, " << unknown << " inconclusive\n";
  return kExitOk;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Quadratic semigroup algebras and QHS presentations", "semiquad"};
  app.set_version_flag("--version", std::string(kEngineVersion));
  app.require_subcommand(1);
  app.fallthrough();
  auto* class_opt = app.add_option("--max-class-size", o.max_class_size,
                                   "Abort a class search after this many words")
                        ->check(CLI::PositiveNumber);
  app.add_option("--workers", o.workers, "Worker threads per degree")->check(CLI::PositiveNumber);
  app.add_option("--cache", o.cache_dir,
                 std::string("Result cache directory (default: $") + kCacheDirEnv + ")");
  app.add_flag("--no-cache", o.no_cache, "Disable the result cache");

  auto file_arg = [&](CLI::App* sub) {
    sub->add_option("FILE", o.file, "Presentation file")->required()->check(CLI::ExistingFile);
  };
  auto json_flag = [&](CLI::App* sub) { return sub->add_flag("--json", o.json, "JSON output"); };

  auto* validate = app.add_subcommand("validate", "Check the QHS conditions");
  file_arg(validate);
  json_flag(validate);

  auto* build = app.add_subcommand("build", "Write a regular QHS on n generators with the fewest relations");
  build->add_option("--n", o.n, "Number of generators")->required()->check(CLI::Range(1, 249));
  build->add_option("--out", o.out_file, "Output file");
  json_flag(build);

  auto* ext = app.add_subcommand("extend", "Apply the four-generator extension to a QHS");
  file_arg(ext);
  ext->add_option("--out", o.out_file, "Output file");
  json_flag(ext);

  auto* hilbert = app.add_subcommand("hilbert", "Graded dimensions of the quotient algebra");
  file_arg(hilbert);
  hilbert->add_option("--max-degree", o.degree, "Degree cap")->required();
  auto* hj = json_flag(hilbert);
  auto* hc = hilbert->add_flag("--csv", o.csv, "CSV output");
  hj->excludes(hc);

  auto* nilp = app.add_subcommand("nilpotency", "Nilpotency index of the quotient algebra");
  file_arg(nilp);
  nilp->add_option("--cap", o.cap, "Degree cap")->required();
  json_flag(nilp);

  auto* singular = app.add_subcommand("singular", "Singular monomials of one degree");
  file_arg(singular);
  singular->add_option("--degree", o.degree, "Degree")->required();
  json_flag(singular);

  auto* regularity = app.add_subcommand("regularity", "First degree without singular monomials");
  file_arg(regularity);
  regularity->add_option("--cap", o.cap, "Degree cap")->required();
  json_flag(regularity);

  auto* certify = app.add_subcommand("certify", "Search an infinite-dimensionality certificate");
  file_arg(certify);
  certify->add_option("--witness", o.witness_k, "Also check (ab)^k for an se_pair");
  json_flag(certify);

  auto* m1 = app.add_subcommand("top-suffix", "Check that x1^q reaches a word ending in x_n");
  m1->add_option("--n", o.n, "Number of generators")->required()->check(CLI::Range(5, 249));
  json_flag(m1);

  auto* enumerate = app.add_subcommand("enumerate", "List all QHS or all small presentations");
  enumerate->add_option("--n", o.n, "Number of generators")->required();
  auto* pres = enumerate->add_flag("--presentations", o.presentations,
                                   "General presentations instead of QHS");
  enumerate->add_option("--d-max", o.d_max, "Largest relation count")->needs(pres);
  enumerate->add_flag("--count", o.count_only, "Print only the count");
  json_flag(enumerate);

  auto* table = app.add_subcommand("delta-table", "CSV of delta, Wisliceny count and (n^2+n)/4");
  table->add_option("--max-n", o.n, "Largest n")->required();

  auto* census = app.add_subcommand("census", "Classify every enumerated presentation");
  census->add_option("--n", o.n, "Number of generators")->required();
  census->add_option("--out", o.out_file, "CSV file, '-' for stdout")->required();
  auto* cpres = census->add_flag("--presentations", o.presentations,
                                 "General presentations instead of QHS");
  census->add_option("--d-max", o.d_max, "Largest relation count")->needs(cpres);
  census->add_option("--max-degree", o.cap, "Degree cap for verdicts (default 12)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  Context ctx;
  ctx.out = &out;
  ctx.err = &err;
  ctx.limits.max_class_size = o.max_class_size;
  ctx.limits.workers = o.workers;
  ctx.class_size_given = class_opt->count() > 0;
  std::string cache_dir = o.cache_dir;
  if (cache_dir.empty()) {
    if (const char* env = std::getenv(kCacheDirEnv)) cache_dir = env;
  }
  if (!o.no_cache && !cache_dir.empty()) ctx.cache = std::make_unique<RunCache>(cache_dir);

  try {
    if (*validate) return cmd_validate(ctx, o);
    if (*build) return cmd_build(ctx, o);
    if (*ext) return cmd_extend(ctx, o);
    if (*hilbert) return cmd_hilbert(ctx, o);
    if (*nilp) return cmd_nilpotency(ctx, o);
    if (*singular) return cmd_singular(ctx, o);
    if (*regularity) return cmd_regularity(ctx, o);
    if (*certify) return cmd_certify(ctx, o);
    if (*m1) return cmd_top_suffix(ctx, o);
    if (*enumerate) return cmd_enumerate(ctx, o);
    if (*table) return cmd_delta_table(ctx, o);
    if (*census) return cmd_census(ctx, o);
  } catch (const ResourceExhausted& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace semiquad
