#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "skw/cache.hpp"
#include "skw/config.hpp"
#include "skw/dsl.hpp"
#include "skw/error.hpp"
#include "skw/grassmann.hpp"
#include "skw/report.hpp"
#include "skw/scenarios.hpp"

namespace skw::cli {

namespace {

struct Options {
  std::string config_path;
  std::string cache_path;
  std::string format = "human";
  std::optional<int> window;
  int threads = 1;
};

// Informational rows print before the checks of the same verb.
struct Output {
  std::string verb;
  std::vector<std::pair<std::string, std::string>> info;
  Report report;

  explicit Output(std::string v) : verb(std::move(v)) { report.scenario = verb; }
  void put(std::string key, std::string value) { info.emplace_back(std::move(key), std::move(value)); }

  int emit(std::ostream& out, const std::string& format) const {
    if (format == "records") {
      for (const auto& [k, v] : info) out << verb << '\t' << k << "\t-\t" << v << "\tinfo\t-\n";
      out << format_records({report});
    } else {
      for (const auto& [k, v] : info) out << k << ": " << v << '\n';
      if (!report.checks.empty()) out << format_human({report});
    }
    return report.passed() ? kOk : kCheckFailed;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_input_error(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::ValidationError:
    case Errc::UnknownPoint:
    case Errc::CorruptCache:
    case Errc::IoError:
    case Errc::InvalidModulus:
    case Errc::DegenerateParams:
      return true;
    default:
      return false;
  }
}

class Context {
 public:
  Context(const Options& opt, std::ostream& err) {
    if (opt.config_path.empty()) {
      // Without a config file P, Q and R are available as seeded points.
      for (const char* name : {"P", "Q", "R"}) config_.points[name] = PointSpec{};
    } else {
      config_ = parse_config(read_file(opt.config_path));
    }
    if (opt.window) {
      if (*opt.window < 4 || *opt.window > 40) throw Error(Errc::ValidationError, "--window must be in [4, 40]");
      config_.params.window_s = *opt.window;
    }
    std::optional<GradedAlgebraModel> cached;
    CacheKey key;
    if (!opt.cache_path.empty()) {
      key = cache_key(config_.params, make_session_curve(config_.params));
      CacheLoad load = load_cache(opt.cache_path, key);
      if (!load.warning.empty()) err << "warning: " << load.warning << '\n';
      cached = std::move(load.model);
    }
    bool rebuilt = !cached.has_value();
    session_ = Session::create(config_.params, std::move(cached));
    if (!opt.cache_path.empty() && rebuilt) save_cache(opt.cache_path, session_->model(), key);
    points_ = resolve_points(*session_, config_);
  }

  const Session& session() const { return *session_; }
  const SessionConfig& config() const { return config_; }
  const std::map<std::string, Point>& points() const { return points_; }
  ScenarioContext scenario_context() const { return {*session_, points_}; }
  Divisor divisor(const std::string& expr) const { return parse_divisor(expr, points_, session_->curve()); }
  Point point(const std::string& name) const {
    auto it = points_.find(name);
    if (it == points_.end()) throw Error(Errc::UnknownPoint, "unknown point '" + name + "'");
    return it->second;
  }

 private:
  SessionConfig config_;
  std::shared_ptr<const Session> session_;
  std::map<std::string, Point> points_;
};

std::string dims_of(const SubalgebraWindow& R) { return join(R.hilbert()); }

std::string failing_degrees(const std::vector<bool>& v) {
  std::vector<std::size_t> bad;
  for (std::size_t n = 0; n < v.size(); ++n) {
    if (!v[n]) bad.push_back(n);
  }
  return bad.empty() ? "none" : join(bad);
}

// ---------------------------------------------------------------- verbs

int session_check(const Context& c, const Options& o, std::ostream& out) {
  const Session& s = c.session();
  const Curve& E = s.curve();
  const GradedAlgebraModel& S = s.model();
  Output res("session");
  res.put("prime", std::to_string(s.params().prime));
  res.put("a,b,c", std::to_string(E.a().residue) + "," + std::to_string(E.b().residue) + "," +
                       std::to_string(E.c().residue));
  res.put("seed", std::to_string(s.params().seed));
  res.put("window_s", std::to_string(S.window()));
  res.put("window_b", std::to_string(s.params().window_b));
  res.put("s", to_string(E.s()));
  res.put("orientation", std::to_string(E.orient()));
  const CentreReport& cr = S.centre_report();
  res.put("g source", cr.source == GSource::Printed ? "printed" : cr.source == GSource::Corrected ? "corrected" : "solved");
  for (const auto& [name, p] : c.points()) res.put("point " + name, to_string(p));
  res.report.add("dim of degree-3 centre", "1", std::to_string(cr.centre_dim));
  res.report.add_bool("g spans the degree-3 centre", cr.g_spans_centre);
  for (const auto& [name, p] : c.points()) res.report.add_bool("point " + name + " on curve", E.on_curve(p));
  return res.emit(out, o.format);
}

int hilbert(const Context& c, const Options& o, std::ostream& out) {
  const Session& s = c.session();
  const GradedAlgebraModel& S = s.model();
  Output res("hilbert");
  std::vector<std::size_t> sd, bd;
  for (int n = 0; n <= S.window(); ++n) sd.push_back(S.dim(n));
  for (int n = 1; n <= s.params().window_b; ++n) bd.push_back(s.ring().basis_words(n).size());
  res.put("dim S_n, n = 0.." + std::to_string(S.window()), join(sd));
  res.put("dim B_n, n = 1.." + std::to_string(s.params().window_b), join(bd));
  bool ok_s = true, ok_b = true;
  for (int n = 0; n <= S.window(); ++n) ok_s = ok_s && sd[n] == static_cast<std::size_t>((n + 1) * (n + 2) / 2);
  for (std::size_t i = 0; i < bd.size(); ++i) ok_b = ok_b && bd[i] == 3 * (i + 1);
  res.report.add_bool("dim S_n = (n+1)(n+2)/2", ok_s, "n<=" + std::to_string(S.window()));
  res.report.add_bool("dim B_n = 3n", ok_b, "n<=" + std::to_string(s.params().window_b));
  return res.emit(out, o.format);
}

int divisor_verb(const Context& c, const Options& o, std::ostream& out, const std::string& op,
                 const std::vector<std::string>& a, std::int64_t n, std::int64_t stride) {
  const Curve& E = c.session().curve();
  OrbitOptions opt = c.session().orbit_options(stride);
  Output res("divisor " + op);
  auto need = [&](std::size_t k) {
    if (a.size() != k) {
      throw Error(Errc::ValidationError, "divisor " + op + " takes " + std::to_string(k) + " expression(s)");
    }
  };
  if (op == "veff") {
    need(1);
    Divisor x = c.divisor(a[0]);
    res.put("divisor", to_string(x));
    res.put("virtually effective", is_virtually_effective(E, x, opt) ? "yes" : "no");
  } else if (op == "decompose") {
    need(1);
    Divisor x = c.divisor(a[0]);
    VeffDecomposition d = decompose_veff(E, x, opt);
    res.put("divisor", to_string(x));
    res.put("u", to_string(d.u));
    res.put("v", to_string(d.v));
    res.put("k", std::to_string(d.k));
    res.report.add_bool("x = u - v + v^sigma", x == d.u - d.v + twist(E, d.v, 1));
  } else if (op == "truncate") {
    need(1);
    Divisor x = c.divisor(a[0]);
    res.put("divisor", to_string(x));
    res.put("[x]_" + std::to_string(n), to_string(truncated(E, x, n, stride)));
  } else if (op == "normalize") {
    need(2);
    Divisor x = c.divisor(a[0]), y = c.divisor(a[1]);
    res.put("normalized", to_string(normalized_divisor(E, x, y, n, opt)));
  } else if (op == "sigma-equiv") {
    need(2);
    Divisor x = c.divisor(a[0]), y = c.divisor(a[1]);
    res.put("sigma-equivalent", sigma_equivalent(E, x, y, opt) ? "yes" : "no");
  } else {
    throw Error(Errc::ValidationError, "unknown divisor operation '" + op + "'");
  }
  return res.emit(out, o.format);
}

void describe(Output& res, const GradedAlgebraModel& S, const SubalgebraWindow& R, bool gdiv) {
  res.put("hilbert", dims_of(R));
  res.put("image in B", join(image_dims(S, R)));
  res.report.add_bool("closed under products", is_closed(S, R, R.window), "n<=" + std::to_string(R.window));
  if (gdiv) {
    res.report.add("g-divisible, failing degrees", "none", failing_degrees(check_g_divisible(S, R)),
                   "n<=" + std::to_string(R.closed_to));
  } else {
    res.put("g-divisibility fails in degrees", failing_degrees(check_g_divisible(S, R)));
  }
}

int blowup(const Context& c, const Options& o, std::ostream& out, const std::string& expr, bool t_ring) {
  const Session& s = c.session();
  Divisor d = c.divisor(expr);
  Output res(t_ring ? "blowup T" : "blowup");
  res.put("divisor", to_string(d));
  SubalgebraWindow R = t_ring ? construct_T_blowup(s, d, s.model().window())
                              : construct_blowup(s, d, s.model().window());
  describe(res, s.model(), R, !t_ring);
  return res.emit(out, o.format);
}

int subalg(const Context& c, const Options& o, std::ostream& out, const std::string& path) {
  const GradedAlgebraModel& S = c.session().model();
  std::vector<Generator> gens = parse_generators(read_file(path), S);
  Output res("subalg");
  std::vector<std::size_t> gd;
  for (const auto& g : gens) gd.push_back(static_cast<std::size_t>(g.degree));
  res.put("generator degrees", join(gd));
  describe(res, S, generate(S, gens, S.window()), false);
  return res.emit(out, o.format);
}

int end_verb(const Context& c, const Options& o, std::ostream& out, const std::string& name) {
  const Session& s = c.session();
  const GradedAlgebraModel& S = s.model();
  Point p = c.point(name);
  int W = S.window();
  SubalgebraWindow R = construct_blowup(s, Divisor::point(p), W);
  ModuleWindow M = vblow_module(s, R, p);
  SubalgebraWindow End = windowed_end(S, M, W);
  VblowExample ex = construct_vblow_example(s, p, W);
  Output res("end");
  res.put("point", to_string(p));
  std::vector<std::size_t> md;
  for (const auto& m : M.pieces) md.push_back(m.dim());
  res.put("dim M_n", join(md));
  res.put("dim End_n", dims_of(End));
  res.put("dim U_n", dims_of(ex.u));
  bool eq = true;
  for (int n = 0; n <= W - 4; ++n) eq = eq && End[n] == ex.u[n];
  res.report.add_bool("End = U", eq, "n<=" + std::to_string(W - 4));
  return res.emit(out, o.format);
}

int verify(const Context& c, const Options& o, std::ostream& out, const std::vector<std::string>& ids) {
  std::vector<Report> reports = run_scenarios(ids, c.scenario_context(), o.threads);
  out << (o.format == "records" ? format_records(reports) : format_human(reports));
  bool ok = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); });
  return ok ? kOk : kCheckFailed;
}

int grassmann_sample(const Context& c, const Options& o, std::ostream& out, int trials) {
  if (trials < 1) throw Error(Errc::ValidationError, "--trials must be positive");
  const PrimeField& F = c.session().field();
  std::uint64_t seed = c.session().params().seed ^ 0x67a55ULL;
  std::map<std::size_t, int> hist;
  for (int t = 0; t < trials; ++t) {
    SubspaceTuple tup;
    for (std::uint64_t i = 0; i < 3; ++i) tup.push_back(random_subspace(F, 7, 6, seed + 3 * static_cast<std::uint64_t>(t) + i));
    ++hist[psi3(F, tup).dim()];
  }
  Output res("grassmann sample");
  for (const auto& [dim, count] : hist) res.put("dim " + std::to_string(dim), std::to_string(count));
  int generic = hist.count(4) ? hist[4] : 0;
  // Same threshold as the grass scenario: at most one failure in 200.
  res.report.add_bool("dim 4 on all but 1/200 of trials", 200 * (trials - generic) <= trials,
                      std::to_string(generic) + "/" + std::to_string(trials));
  return res.emit(out, o.format);
}

}  // namespace

std::vector<Generator> parse_generators(const std::string& text, const GradedAlgebraModel& S) {
  const PrimeField& F = S.field();
  std::map<int, Matrix> rows;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    line = line.substr(0, line.find('#'));
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(no, "expected 'degree: coefficients'");
    int degree = 0;
    std::istringstream head(line.substr(0, colon));
    if (!(head >> degree) || !(head >> std::ws).eof()) throw ParseError(no, "bad degree");
    if (degree < 1 || degree > S.window()) throw ParseError(no, "degree outside 1.." + std::to_string(S.window()));
    std::string body = line.substr(colon + 1);
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream vals(body);
    Vec v;
    std::string tok;
    while (vals >> tok) {
      std::size_t used = 0;
      long long x = 0;
      try {
        x = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError(no, "bad coefficient '" + tok + "'");
      v.push_back(F.from_int(x));
    }
    if (v.size() != S.dim(degree)) {
      throw ParseError(no, "expected " + std::to_string(S.dim(degree)) + " coefficients for degree " +
                               std::to_string(degree));
    }
    rows[degree].push_back(std::move(v));
  }
  std::vector<Generator> gens;
  for (auto& [degree, m] : rows) gens.push_back({degree, Subspace::span(F, m, S.dim(degree))});
  return gens;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Blowups and virtual blowups of the Sklyanin algebra, checked in finite windows", "skw"};
  app.require_subcommand(1);
  // Global flags may follow the verb.
  app.fallthrough();
  Options opt;
  app.add_option("--config", opt.config_path, "session config file")->check(CLI::ExistingFile);
  app.add_option("--cache", opt.cache_path, "multiplication-tensor cache file");
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"human", "records"}));
  app.add_option("--window", opt.window, "override window_s");
  app.add_option("--threads", opt.threads, "scenario worker threads")->check(CLI::Range(1, 256));

  auto* session = app.add_subcommand("session", "session information");
  auto* session_check_cmd = session->add_subcommand("check", "curve, orientation and centre checks");
  session->require_subcommand(1);

  auto* hilbert_cmd = app.add_subcommand("hilbert", "dimensions of S_n and B_n");

  auto* divisor = app.add_subcommand("divisor", "divisor calculus");
  divisor->require_subcommand(1);
  std::vector<std::string> div_args;
  std::int64_t div_n = 1, div_stride = 1;
  std::string div_op;
  for (const char* op : {"veff", "decompose", "truncate", "normalize", "sigma-equiv"}) {
    auto* sub = divisor->add_subcommand(op, std::string("divisor ") + op);
    sub->add_option("expr", div_args, "divisor expressions")->required();
    sub->add_option("--stride", div_stride, "twist stride")->check(CLI::PositiveNumber);
    if (std::string(op) == "truncate") sub->add_option("-n,--n", div_n, "number of terms")->required();
    if (std::string(op) == "normalize") sub->add_option("-k,--k", div_n, "truncation length")->required();
    sub->callback([&div_op, op] { div_op = op; });
  }

  std::string blowup_expr;
  bool t_ring = false;
  auto* blowup_cmd = app.add_subcommand("blowup", "the blowup S(d), or T(d) with --T");
  blowup_cmd->add_option("divisor", blowup_expr, "effective divisor")->required();
  blowup_cmd->add_flag("--T", t_ring, "blow up T = S^(3) at d of degree <= 7");

  std::string gen_path;
  auto* subalg_cmd = app.add_subcommand("subalg", "subalgebra generated by a generator file");
  subalg_cmd->add_option("file", gen_path, "generator file")->required()->check(CLI::ExistingFile);

  std::string end_point = "P";
  auto* end_cmd = app.add_subcommand("end", "windowed End of R + S(p)_1 S_1 R for R = S(p)");
  end_cmd->add_option("point", end_point, "point name");

  std::vector<std::string> ids;
  auto* verify_cmd = app.add_subcommand("verify", "run verification scenarios");
  verify_cmd->add_option("ids", ids, "scenario ids or 'all'")->required();

  int trials = 200;
  auto* grass = app.add_subcommand("grassmann", "Grassmannian probes");
  grass->require_subcommand(1);
  auto* sample_cmd = grass->add_subcommand("sample", "psi3 on random triples");
  sample_cmd->add_option("--trials", trials, "number of triples");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    Context ctx(opt, err);
    if (session_check_cmd->parsed()) return session_check(ctx, opt, out);
    if (hilbert_cmd->parsed()) return hilbert(ctx, opt, out);
    if (divisor->parsed()) return divisor_verb(ctx, opt, out, div_op, div_args, div_n, div_stride);
    if (blowup_cmd->parsed()) return blowup(ctx, opt, out, blowup_expr, t_ring);
    if (subalg_cmd->parsed()) return subalg(ctx, opt, out, gen_path);
    if (end_cmd->parsed()) return end_verb(ctx, opt, out, end_point);
    if (verify_cmd->parsed()) return verify(ctx, opt, out, ids);
    if (sample_cmd->parsed()) return grassmann_sample(ctx, opt, out, trials);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_input_error(e.code()) ? kInputError : kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kInputError;
}

}  // namespace skw::cli
