#include "plovkit/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <sstream>

#include "plovkit/abelian.hpp"
#include "plovkit/acceptance.hpp"
#include "plovkit/exact_linalg.hpp"
#include "plovkit/incidence.hpp"
#include "plovkit/lefschetz.hpp"
#include "plovkit/parallel.hpp"
#include "plovkit/partitions.hpp"
#include "plovkit/report.hpp"

namespace plovkit {

namespace {

struct Globals {
  std::string format = "text";
  std::uint64_t seed = 1;
  int jobs = 1;
  int samples = 8;
  std::string out_path;
  bool timing = false;
  int max_dk = 40;
  int max_dim = 6;
};

struct Grade {
  int k = 0;
  int d = 0;
  int n = 0;
};

struct ModelSource {
  std::string jordan;
  std::string matrix_file;
};

struct Output {
  Report report;
  std::string text;  // replaces the generic record listing in text format when set
};

std::string partition_str(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.parts.size(); ++i) s += (i ? "," : "") + std::to_string(p.parts[i]);
  return s;
}

Json partitions_json(const PartitionList& l) {
  Json a = Json::array();
  for (const auto& p : l.items) a.push_back(partition_str(p));
  return a;
}

void require_cell(const Globals& g, int k, int d) {
  if (k < 1 || d < 1) throw std::invalid_argument("need k >= 1 and d >= 1");
  if (d * k > g.max_dk)
    throw std::invalid_argument("dk=" + std::to_string(d * k) + " exceeds the ceiling " + std::to_string(g.max_dk) +
                                " (raise it with --max-dk)");
}

Json base_config(const Globals& g, const std::string& command) {
  Json c;
  c["command"] = command;
  c["seed"] = std::to_string(g.seed);
  c["samples"] = std::to_string(g.samples);
  return c;
}

AbelianModel load_model(const ModelSource& src, const Globals& g, Json& config) {
  if (src.jordan.empty() == src.matrix_file.empty())
    throw std::invalid_argument("give exactly one of --jordan r0,d0,m0 or --matrix FILE");
  AbelianModel m;
  if (!src.jordan.empty()) {
    std::vector<int> v;
    std::stringstream ss(src.jordan);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      int x = 0;
      try {
        x = std::stoi(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != item.size()) throw std::invalid_argument("--jordan expects three integers r0,d0,m0");
      v.push_back(x);
    }
    if (v.size() != 3) throw std::invalid_argument("--jordan expects three integers r0,d0,m0");
    if (v[1] >= 1 && v[0] >= 0 && v[2] >= 0 && v[2] * v[1] + v[0] > g.max_dim)
      throw std::invalid_argument("model dimension exceeds --max-dim " + std::to_string(g.max_dim));
    m = jordan_model(v[0], v[1], v[2]);
    config["jordan"] = src.jordan;
  } else {
    std::ifstream in(src.matrix_file);
    if (!in) throw std::invalid_argument("cannot open " + src.matrix_file);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    m = model_from_json(j);
    config["matrix"] = src.matrix_file;
  }
  if (m.d > g.max_dim) throw std::invalid_argument("model dimension exceeds --max-dim " + std::to_string(g.max_dim));
  config["d"] = std::to_string(m.d);
  return m;
}

Record value_record(std::string name, std::string anchor, Json values, Status status = Status::pass) {
  Record r;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.status = status;
  r.values = std::move(values);
  return r;
}

Output cmd_partition_list(const Globals& g, const Grade& a) {
  require_cell(g, a.k, a.d);
  if (a.n < 0) throw std::invalid_argument("need n >= 0");
  Output o;
  o.report.config = base_config(g, "partition list");
  o.report.config["k"] = std::to_string(a.k);
  o.report.config["d"] = std::to_string(a.d);
  o.report.config["n"] = std::to_string(a.n);
  const auto list = enumerate(a.k, a.d, a.n);
  Json v;
  v["count"] = std::to_string(list.size());
  v["partitions"] = partitions_json(list);
  o.report.add(value_record("partitions", "P(k,d,n) in decreasing lexicographic order", std::move(v)));
  for (const auto& p : list.items) o.text += partition_str(p) + "\n";
  return o;
}

Output cmd_partition_count(const Globals& g, const Grade& a) {
  if (a.k < 0 || a.d < 0 || a.n < 0) throw std::invalid_argument("need k, d, n >= 0");
  if (a.d * a.k > g.max_dk) require_cell(g, a.k, a.d);
  Output o;
  o.report.config = base_config(g, "partition count");
  o.report.config["k"] = std::to_string(a.k);
  o.report.config["d"] = std::to_string(a.d);
  o.report.config["n"] = std::to_string(a.n);
  const BigInt c = count(a.k, a.d, a.n);
  Json v;
  v["count"] = to_json(c);
  o.report.add(value_record("count", "p(k,d,n)", std::move(v)));
  o.text = c.get_str() + "\n";
  return o;
}

Output cmd_matrix(const Globals& g, const Grade& a) {
  require_cell(g, a.k, a.d);
  const auto m = build_matrix(a.k, a.d, a.n);
  Output o;
  o.report.config = base_config(g, "matrix");
  o.report.config["k"] = std::to_string(a.k);
  o.report.config["d"] = std::to_string(a.d);
  o.report.config["n"] = std::to_string(a.n);
  Json v;
  v["rows"] = partitions_json(m.rows);
  v["cols"] = partitions_json(m.cols);
  v["entries"] = to_json(m.entries);
  o.report.add(value_record("incidence_matrix", "A_{k,d,n} with rows P(k,d,n-1) and columns P(k,d,n)", std::move(v)));
  std::ostringstream os;
  for (std::size_t r = 0; r < m.entries.rows(); ++r) {
    for (std::size_t c = 0; c < m.entries.cols(); ++c) os << (c ? " " : "") << m.entries(r, c).get_str();
    os << '\n';
  }
  o.text = os.str();
  return o;
}

Output cmd_rank(const Globals& g, const Grade& a) {
  require_cell(g, a.k, a.d);
  const auto m = build_matrix(a.k, a.d, a.n);
  const std::size_t r = rank(to_rational(m.entries));
  Output o;
  o.report.config = base_config(g, "rank");
  o.report.config["k"] = std::to_string(a.k);
  o.report.config["d"] = std::to_string(a.d);
  o.report.config["n"] = std::to_string(a.n);
  Json v;
  v["rank"] = std::to_string(r);
  v["rows"] = std::to_string(m.rows.size());
  v["cols"] = std::to_string(m.cols.size());
  o.report.add(value_record("rank", "rank of A_{k,d,n} over Q", std::move(v)));
  o.text = std::to_string(r) + "\n";
  return o;
}

struct LefschetzFlags {
  bool hard = false;
  bool brackets = false;
  bool symfun = false;
};

Output cmd_lefschetz(const Globals& g, int k, int d, const LefschetzFlags& f) {
  require_cell(g, k, d);
  Output o;
  o.report.config = base_config(g, "lefschetz verify");
  o.report.config["k"] = std::to_string(k);
  o.report.config["d"] = std::to_string(d);
  const auto table = verify_full_rank(k, d);
  for (const auto& row : table.rows) {
    Json v;
    v["n"] = std::to_string(row.n);
    v["rows"] = std::to_string(row.rows);
    v["cols"] = std::to_string(row.cols);
    v["rank"] = std::to_string(row.rank);
    v["expected"] = std::to_string(row.expected);
    o.report.add(value_record("rank n=" + std::to_string(row.n), "A_{k,d,n} has full rank on its side of dk/2",
                              std::move(v), row.ok ? Status::pass : Status::fail));
  }
  const auto uni = unimodality_report(table);
  Json counts = Json::array();
  for (const auto& c : uni.counts) counts.push_back(c.get_str());
  Json uv;
  uv["counts"] = std::move(counts);
  o.report.add(value_record("unimodality", "p(k,d,n) rises to dk/2 and falls after", std::move(uv),
                            uni.ok() ? Status::pass : Status::fail));
  if (f.hard) {
    const int top = d * k;
    const auto verdicts = parallel_map(static_cast<std::size_t>((top + 1) / 2), g.jobs, [&](std::size_t n) {
      return verify_hard_lefschetz(k, d, static_cast<int>(n));
    });
    for (const auto& h : verdicts) {
      Json v;
      v["n"] = std::to_string(h.n);
      v["size"] = std::to_string(h.size);
      v["det"] = to_json(h.determinant);
      o.report.add(value_record("window n=" + std::to_string(h.n), "A_{n+1} ... A_{dk-n} is invertible", std::move(v),
                                h.invertible ? Status::pass : Status::fail));
    }
  }
  if (f.brackets) {
    const auto br = verify_bracket(k, d);
    Json v = Json::object();
    if (!br.ok) {
      v["identity"] = *br.failed_identity;
      v["n"] = std::to_string(*br.failed_grade);
    }
    o.report.add(value_record("sl2_brackets", "[X,Y]=H, [H,X]=2X, [H,Y]=-2Y and the weight formula", std::move(v),
                              br.ok ? Status::pass : Status::fail));
  }
  if (f.symfun) {
    for (int n = 1; n <= d * k; ++n) {
      const bool eq = symfun_lefschetz_matrix(k, d, n) == to_rational(build_matrix(k, d, n).entries).transpose();
      Json v;
      v["n"] = std::to_string(n);
      o.report.add(value_record("symfun n=" + std::to_string(n), "multiplication by the power sum equals A^T",
                                std::move(v), eq ? Status::pass : Status::fail));
    }
  }
  return o;
}

Json model_json(const AbelianModel& m) {
  Json v;
  v["A"] = to_json(m.automorphism);
  v["H"] = to_json(m.polarization);
  v["iterate"] = std::to_string(m.iterate);
  return v;
}

Output cmd_plov(const Globals& g, const ModelSource& src) {
  Output o;
  o.report.config = base_config(g, "plov");
  const AbelianModel model = reduce(load_model(src, g, o.report.config));
  const auto nil = nilpotent_data(model);
  const auto pv = plov(model);
  Json v;
  v["plov"] = std::to_string(pv.plov);
  v["gkdim"] = std::to_string(pv.gkdim);
  v["k"] = std::to_string(nil.k);
  v["leading_coefficient"] = to_json(pv.leading_coefficient);
  v["volume"] = to_json(pv.volume);
  Json sizes = Json::array();
  for (int s : nil.jordan_sizes) sizes.push_back(std::to_string(s));
  v["jordan_sizes"] = std::move(sizes);
  v["model"] = model_json(model);
  o.report.add(value_record("plov", "degree of Delta_n^d", std::move(v),
                            pv.leading_coefficient > 0 ? Status::pass : Status::fail));
  o.text = "plov=" + std::to_string(pv.plov) + " gkdim=" + std::to_string(pv.gkdim) + " k=" + std::to_string(nil.k) +
           "\n";
  return o;
}

Output cmd_degrees(const Globals& g, const ModelSource& src) {
  Output o;
  o.report.config = base_config(g, "degrees");
  const AbelianModel model = reduce(load_model(src, g, o.report.config));
  std::ostringstream os;
  for (int i = 0; i <= model.d; ++i) {
    const auto seq = degree_sequence(model, i);
    const int bound = 2 * (model.d - 1) * std::min(i, model.d - i);
    const bool ok = seq.exponent >= 0 && seq.exponent % 2 == 0 && seq.exponent <= bound &&
                    seq.polynomial.leading_coefficient() > 0;
    Json v;
    v["i"] = std::to_string(i);
    v["polynomial"] = to_json(seq.polynomial);
    v["exponent"] = std::to_string(seq.exponent);
    v["bound"] = std::to_string(bound);
    o.report.add(value_record("deg_" + std::to_string(i), "deg_i(f^n): even degree <= 2(d-1)min(i,d-i)", std::move(v),
                              ok ? Status::pass : Status::fail));
    os << "deg_" << i << "(f^n) = " << seq.polynomial.to_string('n') << "  exponent=" << seq.exponent
       << " bound=" << bound << '\n';
  }
  o.text = os.str();
  return o;
}

Output cmd_verify(const Globals& g, const ModelSource& src) {
  Output o;
  o.report.config = base_config(g, "verify");
  const AbelianModel model = load_model(src, g, o.report.config);
  append(o.report, verify_bounds(model, {g.seed, g.samples}));
  return o;
}

Output cmd_verify_all(const Globals& g, const std::vector<int>& only, int sweep_dk) {
  if (sweep_dk < 1 || sweep_dk > g.max_dk)
    throw std::invalid_argument("--sweep-dk must lie in [1, " + std::to_string(g.max_dk) + "]");
  Output o;
  o.report.config = base_config(g, "verify-all");
  o.report.config["sweep_dk"] = std::to_string(sweep_dk);
  std::vector<int> ids = only;
  if (ids.empty())
    for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
  AcceptanceOptions opt;
  opt.seed = g.seed;
  opt.samples = g.samples;
  opt.jobs = g.jobs;
  opt.sweep_dk = sweep_dk;
  std::ostringstream os;
  for (int id : ids) {
    if (id < 1 || id > kCriterionCount) throw std::invalid_argument("no criterion " + std::to_string(id));
    const auto res = run_criterion(id, opt);
    Json v;
    v["detail"] = res.detail;
    if (g.timing) v["seconds"] = res.seconds;
    o.report.add(value_record("criterion " + std::to_string(id), res.title, std::move(v),
                              res.pass ? Status::pass : Status::fail));
    os << (res.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << res.title << " (" << res.detail << ")";
    if (g.timing) os << " [" << res.seconds << " s]";
    os << '\n';
  }
  o.text = os.str();
  return o;
}

std::string render(const Output& o, const Globals& g) {
  if (g.format == "json") return o.report.to_json().dump(2) + "\n";
  if (g.format == "csv") return o.report.to_csv();
  std::string text = o.text.empty() ? o.report.to_text() : o.text;
  if (g.timing && o.report.seconds) text += "seconds=" + std::to_string(*o.report.seconds) + "\n";
  return text;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations around polynomial volume growth and restricted partitions", "plovkit"};
  app.require_subcommand(1);
  // subcommands inherit this, so global options may follow the subcommand
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", g.seed, "Seed for sampled positivity checks");
  app.add_option("--samples", g.samples, "Random ample tuples per sampled check")->check(CLI::Range(1, 1000));
  app.add_option("--jobs", g.jobs, "Worker threads for sweeps")->check(CLI::Range(1, 256));
  app.add_option("--out", g.out_path, "Write the report to this file instead of stdout");
  app.add_flag("--timing", g.timing, "Include wall-clock timing (makes output nondeterministic)");
  app.add_option("--max-dk", g.max_dk, "Safety ceiling on dk")->check(CLI::PositiveNumber);
  app.add_option("--max-dim", g.max_dim, "Safety ceiling on the model dimension")->check(CLI::PositiveNumber);

  Grade grade;
  auto add_grade = [&](CLI::App* sub, bool with_n) {
    sub->add_option("--k", grade.k, "Largest part")->required();
    sub->add_option("--d", grade.d, "Number of parts")->required();
    if (with_n) sub->add_option("--n", grade.n, "Degree")->required();
  };

  auto* partition = app.add_subcommand("partition", "Restricted partitions P(k,d,n)");
  partition->require_subcommand(1);
  auto* plist = partition->add_subcommand("list", "List P(k,d,n) in canonical order");
  add_grade(plist, true);
  auto* pcount = partition->add_subcommand("count", "Count p(k,d,n)");
  add_grade(pcount, true);

  auto* matrix = app.add_subcommand("matrix", "Weighted incidence matrix A_{k,d,n}");
  add_grade(matrix, true);
  auto* rank_cmd = app.add_subcommand("rank", "Rank of A_{k,d,n}");
  add_grade(rank_cmd, true);

  auto* lefschetz = app.add_subcommand("lefschetz", "Rank and hard Lefschetz checks");
  lefschetz->require_subcommand(1);
  auto* lverify = lefschetz->add_subcommand("verify", "Verify the rank table for one (k,d)");
  add_grade(lverify, false);
  LefschetzFlags lflags;
  lverify->add_flag("--hard", lflags.hard, "Also certify every window product");
  lverify->add_flag("--brackets", lflags.brackets, "Also check the sl2 bracket relations");
  lverify->add_flag("--symfun", lflags.symfun, "Also compare with the symmetric-function realization");

  ModelSource src;
  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--jordan", src.jordan, "Jordan model r0,d0,m0");
    sub->add_option("--matrix", src.matrix_file, "JSON file {\"d\", \"A\", \"H\"}");
  };
  auto* plov_cmd = app.add_subcommand("plov", "plov, GK dimension and nilpotency exponent of a model");
  add_model(plov_cmd);
  auto* degrees_cmd = app.add_subcommand("degrees", "Degree sequences deg_i(f^n) of a model");
  add_model(degrees_cmd);
  auto* verify_cmd = app.add_subcommand("verify", "Every bound and positivity check for one model");
  add_model(verify_cmd);

  auto* all_cmd = app.add_subcommand("verify-all", "Run the acceptance suite");
  std::vector<int> only;
  int sweep_dk = 24;
  all_cmd->add_option("--criterion", only, "Run only these criteria (1-12)");
  all_cmd->add_option("--sweep-dk", sweep_dk, "Largest dk in the rank and unimodality sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    Output o;
    if (partition->parsed()) {
      o = plist->parsed() ? cmd_partition_list(g, grade) : cmd_partition_count(g, grade);
    } else if (matrix->parsed()) {
      o = cmd_matrix(g, grade);
    } else if (rank_cmd->parsed()) {
      o = cmd_rank(g, grade);
    } else if (lefschetz->parsed()) {
      o = cmd_lefschetz(g, grade.k, grade.d, lflags);
    } else if (plov_cmd->parsed()) {
      o = cmd_plov(g, src);
    } else if (degrees_cmd->parsed()) {
      o = cmd_degrees(g, src);
    } else if (verify_cmd->parsed()) {
      o = cmd_verify(g, src);
    } else {
      o = cmd_verify_all(g, only, sweep_dk);
    }
    if (g.timing)
      o.report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string text = render(o, g);
    if (g.out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(g.out_path);
      if (!f) throw std::invalid_argument("cannot write " + g.out_path);
      f << text;
    }
    return o.report.ok() ? kExitOk : kExitCheckFailed;
  } catch (const PositiveEntropyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPositiveEntropy;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace plovkit
