#include "cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cuberep/counting.hpp"
#include "cuberep/cube.hpp"
#include "cuberep/embedding.hpp"
#include "cuberep/error.hpp"
#include "cuberep/extremal.hpp"
#include "cuberep/generators.hpp"
#include "cuberep/io.hpp"
#include "cuberep/representation.hpp"

namespace cuberep::cli {

namespace {

enum class Format { text, structured };

struct GlobalFlags {
  std::string format = "text";
  int threads = 1;
  Format mode() const { return format == "structured" ? Format::structured : Format::text; }
};

// Emits an artifact either to `path` or, when empty, to `out`.
void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) out << content;
  else write_file(path, content);
}

int cmd_verify_rep(const GlobalFlags& flags, const std::string& path, std::ostream& out) {
  const Representation r = parse_representation(read_file(path));
  const VerificationReport report = verify_representation(r);
  if (flags.mode() == Format::structured) {
    out << "verdict=" << (report.pass ? "pass" : "fail") << "\n";
    out << "violations=" << report.violations.size() << "\n";
    out << "collisions=" << report.collisions.size() << "\n";
    for (const auto& v : report.violations)
      out << "violation edge=" << render_edge(v.edge) << " rule=" << rule_id(v.rule) << " detail=" << v.detail << "\n";
    for (const auto& c : report.collisions)
      out << "collision first=" << render_edge(c.first) << " second=" << render_edge(c.second)
          << " tau=" << render_set(c.image) << "\n";
  } else {
    out << (report.pass ? "pass" : "fail") << "\n";
    for (const auto& v : report.violations)
      out << "  rule (" << rule_id(v.rule) << ") " << render_edge(v.edge) << ": " << v.detail << "\n";
    if (!report.collisions.empty())
      out << "  note: " << report.collisions.size() << " pair(s) of host edges share a tau-image\n";
  }
  return report.pass ? kExitOk : kExitNegative;
}

int cmd_find_rep(const GlobalFlags& flags, const std::string& path, int k, int lmax, const std::string& output,
                 std::ostream& out) {
  const AbstractGraph h = parse_graph(read_file(path));
  const RepresentationSearchResult result = search_representation(h, k, lmax);
  if (flags.mode() == Format::structured) {
    out << "# result=" << (result.found() ? "found" : "none") << " k=" << k << " l_max=" << lmax
        << " nodes=" << result.nodes << "\n";
  } else {
    out << result.summary() << "\n";
  }
  if (!result.found()) return kExitNegative;
  emit(output, write_representation(*result.representation), out);
  return kExitOk;
}

int cmd_embed(const GlobalFlags& flags, const std::string& cube_path, const std::string& rep_path, bool exhaustive,
              const std::string& output, std::ostream& out) {
  const CubeSubgraph g = parse_cube_subgraph(read_file(cube_path));
  const Representation r = parse_representation(read_file(rep_path));
  if (!verify_representation(r).pass) throw InvalidArgument("representation in '" + rep_path + "' does not verify");
  FindCopyOptions options;
  options.exhaustive = exhaustive;
  const FindCopyResult result = find_copy(g, r, options);
  if (flags.mode() == Format::structured) {
    out << "# result=" << outcome_name(result.outcome) << " level=" << result.level
        << " attempts=" << result.attempts << " heuristic=" << (result.heuristic ? "true" : "false")
        << " outside_middle_band=" << (result.outside_middle_band ? "true" : "false") << "\n";
    if (!result.reason.empty()) out << "# reason=" << result.reason << "\n";
  } else if (result.certificate) {
    out << "found: level " << result.level << ", anchor S=" << render_set(result.certificate->anchor) << "\n";
  } else {
    out << "none (" << outcome_name(result.outcome) << "): " << result.reason << "\n";
  }
  if (!result.certificate) return kExitNegative;
  emit(output, write_certificate(*result.certificate), out);
  return kExitOk;
}

int cmd_profile(const GlobalFlags& flags, const std::string& path, std::ostream& out) {
  const CubeSubgraph g = parse_cube_subgraph(read_file(path));
  const LevelProfile p = level_profile(g);
  std::optional<LevelChoice> choice;
  if (p.total > 0) choice = select_level(p);
  out << std::fixed << std::setprecision(6);
  if (flags.mode() == Format::structured) {
    out << "n=" << p.n << " edges=" << p.total << " middle_density=" << p.middle_density << "\n";
    for (int j = 0; j < p.n; ++j)
      out << "level=" << j << " count=" << p.counts[j] << " capacity=" << level_capacity(p.n, j)
          << " density=" << p.densities[j] << " middle=" << (in_middle_band(p.n, j) ? "true" : "false") << "\n";
    if (choice)
      out << "selected=" << choice->level << " outside_middle_band=" << (choice->outside_middle_band ? "true" : "false")
          << "\n";
    else
      out << "selected=none\n";
  } else {
    out << "Q_" << p.n << " subgraph with " << p.total << " edges\n";
    out << std::setw(6) << "level" << std::setw(12) << "edges" << std::setw(12) << "capacity" << std::setw(12)
        << "density" << "\n";
    for (int j = 0; j < p.n; ++j)
      out << std::setw(6) << j << std::setw(12) << p.counts[j] << std::setw(12) << level_capacity(p.n, j)
          << std::setw(12) << p.densities[j] << (in_middle_band(p.n, j) ? "  *" : "") << "\n";
    out << "middle band (*) density " << p.middle_density << "\n";
    if (choice)
      out << "selected level " << choice->level << (choice->outside_middle_band ? " (outside the middle band)" : "")
          << "\n";
    else
      out << "no level has an edge\n";
  }
  return kExitOk;
}

ExtremalOptions extremal_options(const GlobalFlags& flags, double budget) {
  ExtremalOptions o;
  o.threads = flags.threads;
  if (budget > 0) o.time_budget_seconds = budget;
  return o;
}

template <typename Result>
void print_extremal(const GlobalFlags& flags, const Result& r, const std::string& output, std::ostream& out) {
  const std::string body = write_extremal(r);
  if (output.empty()) {
    const std::size_t nl = body.find('\n');
    out << body.substr(0, nl + 1);
    if (flags.mode() == Format::structured) out << "# nodes=" << r.nodes << " copies=" << r.copies << "\n";
    out << body.substr(nl + 1);
  } else {
    write_file(output, body);
    out << body.substr(0, body.find('\n') + 1);
  }
}

int cmd_ex_cube(const GlobalFlags& flags, int n, const std::string& path, double budget, const std::string& output,
                std::ostream& out) {
  const AbstractGraph h = parse_graph(read_file(path));
  const CubeExtremalResult r = ex_cube(n, h, extremal_options(flags, budget));
  print_extremal(flags, r, output, out);
  return kExitOk;
}

int cmd_ex_hyper(const GlobalFlags& flags, int m, const std::string& path, double budget, const std::string& output,
                 std::ostream& out) {
  const KUniformHypergraph pattern = parse_hypergraph(read_file(path));
  const HypergraphExtremalResult r = ex_hypergraph(m, pattern, extremal_options(flags, budget));
  print_extremal(flags, r, output, out);
  return kExitOk;
}

struct GenArgs {
  std::string family;
  int t = 0;
  int n = 0;
  double p = -1.0;
  std::optional<std::uint64_t> seed;
  std::string output;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw InvalidArgument(what);
  };
  std::string body;
  switch (parse_family(a.family)) {
    case GeneratorFamily::cycle_graph:
      require(a.t > 0, "cycle-graph needs --t");
      body = write_graph(gen_cycle_graph(a.t));
      break;
    case GeneratorFamily::even_rep:
      require(a.t > 0, "even-rep needs --t");
      body = write_representation(gen_even_cycle_representation(a.t));
      break;
    case GeneratorFamily::odd_rep:
      require(a.t > 0, "odd-rep needs --t");
      body = write_representation(gen_odd_cycle_representation(a.t));
      break;
    case GeneratorFamily::c14_diag:
      body = write_representation(gen_c14_with_diagonal());
      break;
    case GeneratorFamily::cycle_in_cube:
      require(a.t > 0 && a.n > 0, "cycle-in-cube needs --t and --n");
      body = write_cube_subgraph(gen_cycle_in_cube(a.t, a.n));
      break;
    case GeneratorFamily::random:
      require(a.n > 0, "random needs --n");
      require(a.p >= 0.0, "random needs --p");
      require(a.seed.has_value(), "random needs an explicit --seed");
      body = write_cube_subgraph(random_subgraph(a.n, a.p, *a.seed));
      break;
  }
  emit(a.output, body, out);
  return kExitOk;
}

int cmd_check_identity(const GlobalFlags& flags, int n, int j, int k, std::ostream& out) {
  const IdentityReport r = count_identity_check(n, j, k);
  if (flags.mode() == Format::structured)
    out << "n=" << n << " j=" << j << " k=" << k << " lhs=" << r.lhs << " rhs=" << r.rhs
        << " ok=" << (r.ok ? "true" : "false") << "\n";
  else
    out << "C(" << n << "," << j + 1 << ")*C(" << j + 1 << "," << k << ") = " << r.lhs << "\n"
        << "C(" << n << "," << j + 1 - k << ")*C(" << n - j - 1 + k << "," << k << ") = " << r.rhs << "\n"
        << (r.ok ? "ok" : "MISMATCH") << "\n";
  return r.ok ? kExitOk : kExitNegative;
}

int cmd_check_lemma1(const GlobalFlags& flags, int n, std::ostream& out) {
  const MiddleMassReport r = middle_mass_bound(n);
  std::ostringstream bound;
  bound << std::setprecision(12) << r.bound;
  if (flags.mode() == Format::structured)
    out << "n=" << n << " count=" << r.count << " bound=" << bound.str() << " ok=" << (r.ok ? "true" : "false") << "\n";
  else
    out << "subsets of [" << n << "] with size < n/4 or > 3n/4: " << r.count << "\n"
        << "1.9^n * n = " << bound.str() << "\n"
        << (r.ok ? "ok" : "bound violated") << "\n";
  return r.ok ? kExitOk : kExitNegative;
}

std::string render_rational(const Rational& q) {
  return std::to_string(q.numerator()) + (q.denominator() == 1 ? "" : "/" + std::to_string(q.denominator()));
}

int cmd_exponent(const GlobalFlags& flags, const std::string& path, std::ostream& out) {
  const Representation r = parse_representation(read_file(path));
  if (!verify_representation(r).pass) {
    out << "fail: representation does not verify\n";
    return kExitNegative;
  }
  const CorollaryExponent ce = corollary_exponent(r);
  std::string sizes;
  for (int s : ce.sorted_sizes) sizes += (sizes.empty() ? "" : ",") + std::to_string(s);
  if (flags.mode() == Format::structured)
    out << "sizes=" << sizes << " delta=" << render_rational(ce.delta) << " exponent=" << render_rational(ce.exponent)
        << "\n";
  else
    out << "partite sizes (ascending) " << sizes << "\n"
        << "delta = " << render_rational(ce.delta) << "\n"
        << "ex(Q_n, H) = O(2^n n^" << render_rational(ce.exponent) << ")\n";
  return kExitOk;
}

int cmd_erdos(const GlobalFlags& flags, const std::vector<int>& sizes, int m_min, int m_max, double budget,
              std::ostream& out) {
  const ErdosReport report = erdos_bound_check(sizes, m_min, m_max, extremal_options(flags, budget));
  out << std::setprecision(6);
  if (flags.mode() == Format::text)
    out << "k=" << report.k << " delta=" << render_rational(report.delta) << "\n"
        << std::setw(4) << "m" << std::setw(8) << "ex" << std::setw(8) << "status" << std::setw(14) << "m^(k-delta)"
        << std::setw(12) << "ratio" << "\n";
  else
    out << "k=" << report.k << " delta=" << render_rational(report.delta) << "\n";
  for (const auto& row : report.rows) {
    if (flags.mode() == Format::structured)
      out << "m=" << row.m << " value=" << row.value << " status=" << status_name(row.status)
          << " scale=" << row.scale << " ratio=" << row.ratio << "\n";
    else
      out << std::setw(4) << row.m << std::setw(8) << row.value << std::setw(8) << status_name(row.status)
          << std::setw(14) << row.scale << std::setw(12) << row.ratio << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-partite representations of hypercube subgraphs", "cuberep"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags flags;
  app.add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--threads", flags.threads, "Worker threads for the extremal searches")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();

  std::string path1, path2, output;
  int k = 0, lmax = 0, n = 0, m = 0, j = 0;
  double budget = 0.0;
  bool exhaustive = false;
  GenArgs gen;
  std::vector<int> sizes;
  int m_min = 0, m_max = 0;

  auto* verify = app.add_subcommand("verify-rep", "Check a representation file");
  verify->add_option("rep-file", path1)->required();

  auto* find = app.add_subcommand("find-rep", "Search for a k-partite representation of a graph");
  find->add_option("graph-file", path1)->required();
  find->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  find->add_option("--lmax", lmax)->required()->check(CLI::PositiveNumber);
  find->add_option("-o", output, "Write the representation here");

  auto* embed = app.add_subcommand("embed", "Run the embedding pipeline on a cube subgraph");
  embed->add_option("cube-file", path1)->required();
  embed->add_option("rep-file", path2)->required();
  embed->add_flag("--exhaustive", exhaustive, "Retry over all levels and anchors");
  embed->add_option("-o", output, "Write the certificate here");

  auto* profile = app.add_subcommand("profile", "Per-level edge counts and densities");
  profile->add_option("cube-file", path1)->required();

  auto* excube = app.add_subcommand("ex-cube", "ex(Q_n, H) by branch and bound");
  excube->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  excube->add_option("graph-file", path1)->required();
  excube->add_option("--budget", budget, "Wall-clock budget in seconds (0 = exact mode)")->check(CLI::NonNegativeNumber);
  excube->add_option("-o", output, "Write the result here");

  auto* exhyper = app.add_subcommand("ex-hyper", "ex(K_m^(k), pattern) by branch and bound");
  exhyper->add_option("--m", m)->required()->check(CLI::NonNegativeNumber);
  exhyper->add_option("hyp-file", path1)->required();
  exhyper->add_option("--budget", budget, "Wall-clock budget in seconds (0 = exact mode)")->check(CLI::NonNegativeNumber);
  exhyper->add_option("-o", output, "Write the result here");

  auto* genc = app.add_subcommand("gen", "Generate an object");
  genc->add_option("family", gen.family, "cycle-graph | even-rep | odd-rep | c14-diag | cycle-in-cube | random")
      ->required();
  genc->add_option("--t", gen.t);
  genc->add_option("--n", gen.n);
  genc->add_option("--p", gen.p);
  genc->add_option("--seed", gen.seed);
  genc->add_option("-o", gen.output, "Output path (stdout if omitted)");

  auto* identity = app.add_subcommand("check-identity", "Check C(n,j+1)C(j+1,k) = C(n,j+1-k)C(n-j-1+k,k)");
  identity->add_option("--n", n)->required();
  identity->add_option("--j", j)->required();
  identity->add_option("--k", k)->required();

  auto* lemma = app.add_subcommand("check-lemma1", "Count subsets of [n] far from the middle against 1.9^n n");
  lemma->add_option("--n", n)->required()->check(CLI::PositiveNumber);

  auto* exponent = app.add_subcommand("exponent", "Exponent 1 - delta/k from a representation's partite sizes");
  exponent->add_option("rep-file", path1)->required();

  auto* erdos = app.add_subcommand("erdos", "Exact ex(K_m^(k), K_k^(k)(s_1..s_k)) over a range of m");
  erdos->add_option("--sizes", sizes)->required()->delimiter(',');
  erdos->add_option("--mmin", m_min)->required();
  erdos->add_option("--mmax", m_max)->required();
  erdos->add_option("--budget", budget)->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*verify) return cmd_verify_rep(flags, path1, out);
    if (*find) return cmd_find_rep(flags, path1, k, lmax, output, out);
    if (*embed) return cmd_embed(flags, path1, path2, exhaustive, output, out);
    if (*profile) return cmd_profile(flags, path1, out);
    if (*excube) return cmd_ex_cube(flags, n, path1, budget, output, out);
    if (*exhyper) return cmd_ex_hyper(flags, m, path1, budget, output, out);
    if (*genc) return cmd_gen(gen, out);
    if (*identity) return cmd_check_identity(flags, n, j, k, out);
    if (*lemma) return cmd_check_lemma1(flags, n, out);
    if (*exponent) return cmd_exponent(flags, path1, out);
    if (*erdos) return cmd_erdos(flags, sizes, m_min, m_max, budget, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace cuberep::cli
