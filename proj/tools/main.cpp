// schmidt: command-line driver for the (alpha, beta)-game toolkit.
#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "pipeline.hpp"
#include "schmidt/certify.hpp"
#include "schmidt/errors.hpp"

namespace fs = std::filesystem;
using namespace schmidt;
using schmidt::cli::ConfigError;

namespace {

constexpr int kConfigExit = 2;
constexpr int kRunExit = 3;

std::string default_out_dir() {
  const char* env = std::getenv("SCHMIDT_OUT_DIR");
  return env && *env ? env : "schmidt_out";
}

void write_file(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path().empty() ? fs::path(".") : path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << text;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Flags that were given on the command line override the config file.
struct Overrides {
  std::vector<std::pair<CLI::Option*, std::function<void(Json&)>>> items;

  template <class T>
  void add(CLI::App* app, const std::string& flag, const char* key, T& storage, const std::string& help) {
    CLI::Option* opt = app->add_option(flag, storage, help);
    items.emplace_back(opt, [key, &storage](Json& c) { c[key] = storage; });
  }

  void apply(Json& config) const {
    for (const auto& [opt, set] : items) {
      if (opt->count() > 0) set(config);
    }
  }
};

struct PlayFlags {
  std::string config_path;
  std::string alpha, beta, M, theta, lambda, sizes, center, radius, adversary, opening;
  std::int64_t tmax = 0;
  std::int64_t N = 0;
  int blocks = 0;
  int k = 0;
  std::uint64_t seed = 0;
  Overrides overrides;

  void attach(CLI::App* app) {
    app->add_option("--config", config_path, "JSON config file; flags override its keys");
    overrides.add(app, "--alpha", "alpha", alpha, "White's ratio, in (0, 1/2)");
    overrides.add(app, "--beta", "beta", beta, "Black's ratio, in (0, 1)");
    overrides.add(app, "--M", "M", M, "lacunarity constant");
    overrides.add(app, "--theta", "theta", theta, "'golden' or a theta JSON file");
    overrides.add(app, "--lambda", "lambda", lambda, "resonance sequence JSON file");
    overrides.add(app, "--tmax", "tmax", tmax, "search bound for best approximations");
    overrides.add(app, "--center", "center", center, "opening center, comma-separated rationals");
    overrides.add(app, "--radius", "radius", radius, "opening radius");
    overrides.add(app, "--blocks", "blocks", blocks, "number of strategy blocks");
    overrides.add(app, "--adversary", "adversary", adversary, "random|greedy|pullback|concentric");
    overrides.add(app, "--seed", "seed", seed, "seed for the adversary and cap sampling");
    overrides.add(app, "--opening", "opening", opening, "driver|adversarial");
    overrides.add(app, "--k", "k", k, "override the derived k");
    overrides.add(app, "--N", "N", N, "brute-force bound for the certified point (0 skips)");
    CLI::Option* s = app->add_option("--sizes", sizes, "axis resonance sizes, comma-separated");
    overrides.items.emplace_back(s, [this](Json& c) {
      Json list = Json::array();
      for (const auto& x : split(sizes)) list.push_back(x);
      c["sizes"] = list;
      c["theta"] = nullptr;
    });
  }

  Json build() const {
    Json config = cli::default_play_config();
    if (!config_path.empty()) {
      Json file;
      try {
        file = read_json_file(config_path);
      } catch (const Error& e) {
        throw ConfigError(e.what());
      }
      if (!file.is_object()) throw ConfigError("config file must hold a JSON object");
      for (const auto& [key, value] : file.items()) {
        if (!config.contains(key)) throw ConfigError("unknown config key '" + key + "'");
        config[key] = value;
      }
    }
    overrides.apply(config);
    return config;
  }
};

int cmd_play(const PlayFlags& flags, const std::string& out_dir) {
  const Json config = flags.build();
  cli::PlayResult r = cli::run_play(config);
  const fs::path dir(out_dir);
  write_file(dir / "report.json", r.report.dump(2) + "\n");
  if (!r.trace.moves.empty()) write_file(dir / "trace.json", to_json(r.trace).dump(2) + "\n");
  if (r.certificate) write_file(dir / "certificate.json", to_json(*r.certificate).dump(2) + "\n");
  if (!r.ok) {
    std::cerr << "play failed: " << r.report.value("error", std::string("unknown error")) << "\n";
    return kRunExit;
  }
  const Certificate& c = *r.certificate;
  std::cout << "certified " << c.handled.size() << " resonances with epsilon " << to_string(c.epsilon)
            << "; enclosure radius " << to_string(c.enclosure.radius) << "\n"
            << "wrote " << (dir / "report.json").string() << "\n";
  return 0;
}

struct CertifyFlags {
  std::string theta = "golden";
  std::string eta;
  std::int64_t N = 1000;
  std::string functional = "theorem1";
  std::string psi = "power:c=1,sigma=1";
  std::string out;
};

int cmd_certify(const CertifyFlags& f) {
  const ThetaMatrix theta = cli::load_theta(Json(f.theta));
  if (f.eta.empty()) throw ConfigError("--eta is required");
  const Point eta = cli::parse_point(f.eta);
  if (f.N < 1) throw ConfigError("--N must be >= 1");
  Functional kind;
  try {
    kind = parse_functional(f.functional);
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  BadnessReport rep;
  try {
    rep = kind == Functional::kTheorem1 ? theorem1_constant(theta, eta, f.N)
                                        : jarnik_constant(theta, eta, cli::load_psi(f.psi), f.N);
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  Json j = to_json(rep);
  j["theta"] = to_json(theta);
  j["eta"] = to_json(eta);
  if (kind == Functional::kJarnik) j["psi"] = f.psi;
  const std::string text = j.dump(2) + "\n";
  if (!f.out.empty()) write_file(f.out, text);
  std::cout << text;
  return 0;
}

struct PsiFlags {
  std::string theta = "golden";
  std::int64_t tmax = 1000;
  std::string psi;
};

int cmd_psi(const PsiFlags& f) {
  const ThetaMatrix theta = cli::load_theta(Json(f.theta));
  if (f.tmax < 1) throw ConfigError("--tmax must be >= 1");
  Json steps = Json::array();
  for (const auto& [t, v] : psi_theta_steps(theta, f.tmax)) steps.push_back(Json{{"t", t}, {"psi_theta", to_json(v)}});
  Json records = Json::array();
  for (const auto& b : best_approximations(theta, f.tmax)) {
    records.push_back(Json{{"u", to_json(b.u)}, {"t_sq", b.norm_sq.str()}, {"quality", to_json(b.quality)}});
  }
  Json j{{"theta", to_json(theta)}, {"tmax", f.tmax}, {"steps", steps}, {"records", records}};
  if (!f.psi.empty()) j["hypothesis"] = to_json(verify_hypothesis(theta, cli::load_psi(f.psi), f.tmax));
  std::cout << j.dump(2) << "\n";
  return 0;
}

struct ResonanceFlags {
  std::string theta = "golden";
  std::int64_t tmax = 1000;
  std::string M = "3";
};

int cmd_resonance(const ResonanceFlags& f) {
  const ThetaMatrix theta = cli::load_theta(Json(f.theta));
  Rational M;
  try {
    M = parse_rational(f.M);
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  if (!(M > 1)) throw ConfigError("--M must exceed 1");
  const ResonanceSequence lambda = lacunary_normalize(best_approximations(theta, f.tmax), M);
  std::cout << to_json(lambda).dump(2) << "\n";
  return 0;
}

struct SweepFlags {
  PlayFlags base;
  std::string alphas = "1/4";
  std::string betas = "1/2";
  std::string adversaries = "random";
  std::string seeds = "0";
  unsigned jobs = 0;
  std::string out;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

int cmd_sweep(const SweepFlags& f) {
  const Json base = f.base.build();
  std::vector<Json> configs;
  for (const auto& a : split(f.alphas)) {
    for (const auto& b : split(f.betas)) {
      for (const auto& adv : split(f.adversaries)) {
        for (const auto& s : split(f.seeds)) {
          Json c = base;
          c["alpha"] = a;
          c["beta"] = b;
          c["adversary"] = adv;
          try {
            c["seed"] = std::stoull(s);
          } catch (const std::exception&) {
            throw ConfigError("bad seed '" + s + "'");
          }
          configs.push_back(std::move(c));
        }
      }
    }
  }
  if (configs.empty()) throw ConfigError("empty sweep grid");
  // Validate everything up front so config errors exit 2 before any work.
  for (const auto& c : configs) {
    const Rational a = parse_rational(c["alpha"].get<std::string>());
    const Rational b = parse_rational(c["beta"].get<std::string>());
    if (!(a > 0 && a < Rational(1, 2)) || !(b > 0 && b < 1)) {
      throw ConfigError("alpha " + to_string(a) + ", beta " + to_string(b) + " out of range");
    }
  }

  std::vector<std::string> rows(configs.size());
  std::vector<std::string> errors(configs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < configs.size(); i = next++) {
      const Json& c = configs[i];
      std::ostringstream row;
      row << c["alpha"].get<std::string>() << ',' << c["beta"].get<std::string>() << ','
          << c["adversary"].get<std::string>() << ',' << c["seed"].get<std::uint64_t>() << ',';
      try {
        const cli::PlayResult r = cli::run_play(c);
        const Json& rep = r.report;
        const Json params = rep.value("params", Json::object());
        row << params.value("k", 0) << ',' << params.value("tau_k", 0) << ','
            << params.value("epsilon", std::string()) << ',';
        if (r.ok) {
          const Certificate& cert = *r.certificate;
          Rational min_lb;
          for (std::size_t h = 0; h < cert.handled.size(); ++h) {
            if (h == 0 || cert.handled[h].residual_lb < min_lb) min_lb = cert.handled[h].residual_lb;
          }
          row << cert.handled.size() << ',' << (cert.handled.empty() ? "" : to_string(min_lb)) << ','
              << rep.value("resonance_margin", std::string()) << ',';
          if (rep.contains("theorem1")) {
            row << rep["theorem1"]["value"].get<std::string>() << ',' << rep["theorem1"]["N"].get<std::int64_t>();
          } else {
            row << ',';
          }
          row << ",ok,";
        } else {
          row << ",,,,,error," << csv_field(rep.value("error", std::string()));
        }
      } catch (const std::exception& e) {
        errors[i] = e.what();
        row << ",,,,,,,,error," << csv_field(e.what());
      }
      rows[i] = row.str();
    }
  };
  unsigned jobs = f.jobs ? f.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(configs.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::ostringstream csv;
  csv << "alpha,beta,adversary,seed,k,tau_k,epsilon,certified,min_residual_lb,resonance_margin,"
         "theorem1_value,theorem1_N,status,error\n";
  for (const auto& r : rows) csv << r << "\n";
  const std::string out = f.out.empty() ? (fs::path(default_out_dir()) / "sweep.csv").string() : f.out;
  write_file(out, csv.str());
  std::cout << "wrote " << rows.size() << " rows to " << out << "\n";
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i].empty()) std::cerr << "row " << i << ": " << errors[i] << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schmidt (alpha, beta)-game toolkit with exact rational arithmetic"};
  app.require_subcommand(1);

  std::string out_dir = default_out_dir();
  PlayFlags play;
  CLI::App* play_cmd = app.add_subcommand("play", "run White's strategy against an adversary and certify the result");
  play.attach(play_cmd);
  play_cmd->add_option("--out", out_dir, "output directory (default $SCHMIDT_OUT_DIR or ./schmidt_out)");

  CertifyFlags cert;
  CLI::App* cert_cmd = app.add_subcommand("certify", "brute-force badness functional for (theta, eta)");
  cert_cmd->add_option("--theta", cert.theta, "'golden' or a theta JSON file");
  cert_cmd->add_option("--eta", cert.eta, "comma-separated rationals")->required();
  cert_cmd->add_option("--N", cert.N, "enumeration bound on max|x_i|");
  cert_cmd->add_option("--functional", cert.functional, "theorem1|jarnik");
  cert_cmd->add_option("--psi", cert.psi, "'power:c=..,sigma=..' or 'table:<file>'");
  cert_cmd->add_option("--out", cert.out, "also write the report to this file");

  PsiFlags psi;
  CLI::App* psi_cmd = app.add_subcommand("psi", "psi_theta change points and best approximations");
  psi_cmd->add_option("--theta", psi.theta, "'golden' or a theta JSON file");
  psi_cmd->add_option("--tmax", psi.tmax, "largest t");
  psi_cmd->add_option("--check", psi.psi, "also check psi_theta <= psi for this psi spec");

  ResonanceFlags res;
  CLI::App* res_cmd = app.add_subcommand("resonance", "lacunary resonance sequence from best approximations");
  res_cmd->add_option("--theta", res.theta, "'golden' or a theta JSON file");
  res_cmd->add_option("--tmax", res.tmax, "search bound");
  res_cmd->add_option("--M", res.M, "lacunarity constant");

  SweepFlags sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "grid of play runs, tabulated as CSV");
  sweep.base.attach(sweep_cmd);
  sweep_cmd->add_option("--alphas", sweep.alphas, "comma-separated alpha values");
  sweep_cmd->add_option("--betas", sweep.betas, "comma-separated beta values");
  sweep_cmd->add_option("--adversaries", sweep.adversaries, "comma-separated adversary names");
  sweep_cmd->add_option("--seeds", sweep.seeds, "comma-separated seeds");
  sweep_cmd->add_option("--jobs", sweep.jobs, "worker threads (0 = hardware concurrency)");
  sweep_cmd->add_option("--out", sweep.out, "CSV path (default <out dir>/sweep.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigExit;
  }

  try {
    if (*play_cmd) return cmd_play(play, out_dir);
    if (*cert_cmd) return cmd_certify(cert);
    if (*psi_cmd) return cmd_psi(psi);
    if (*res_cmd) return cmd_resonance(res);
    if (*sweep_cmd) return cmd_sweep(sweep);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigExit;
  } catch (const InvalidArgument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRunExit;
  }
  return kConfigExit;
}
