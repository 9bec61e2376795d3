#include "pipeline.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "schmidt/adversaries.hpp"
#include "schmidt/certify.hpp"
#include "schmidt/errors.hpp"
#include "schmidt/white_strategy.hpp"

namespace schmidt::cli {

Json default_play_config() {
  return Json{{"alpha", "1/4"},    {"beta", "1/2"},       {"M", "3"},      {"theta", "golden"},
              {"lambda", nullptr}, {"sizes", nullptr},    {"tmax", 1000},  {"center", nullptr},
              {"radius", "1/2"},   {"blocks", 2},         {"adversary", "greedy"},
              {"seed", 0},         {"opening", "driver"}, {"k", nullptr},  {"N", 0}};
}

std::string content_hash(const std::string& content) {
  const std::string blob = "blob " + std::to_string(content.size()) + '\0' + content;
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(blob.data(), blob.size(), digest, &len, EVP_sha1(), nullptr) != 1) {
    throw std::runtime_error("sha1 failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool names_file(const Json& v) { return v.is_string() && v.get<std::string>() != "golden"; }

}  // namespace

std::string input_hash(const Json& config) {
  std::string content = config.dump();
  for (const char* key : {"theta", "lambda"}) {
    if (config.contains(key) && names_file(config[key])) content += slurp(config[key].get<std::string>());
  }
  return content_hash(content);
}

ThetaMatrix load_theta(const Json& value) {
  try {
    if (value.is_string() && value.get<std::string>() != "golden") {
      return theta_from_json(read_json_file(value.get<std::string>()));
    }
    return theta_from_json(value);
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("theta: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("theta: ") + e.what());
  }
}

PsiSpec load_psi(const std::string& text) {
  try {
    if (text.rfind("power:", 0) == 0) return parse_power_law(text);
    if (text.rfind("table:", 0) == 0) return psi_table_from_json(read_json_file(text.substr(6)));
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("psi: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("psi: ") + e.what());
  }
  throw ConfigError("psi must be 'power:c=..,sigma=..' or 'table:<file>'");
}

Point parse_point(const std::string& text) {
  Point p;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      p.push_back(parse_rational(item));
    } catch (const InvalidArgument& e) {
      throw ConfigError(e.what());
    }
  }
  if (p.empty()) throw ConfigError("empty point '" + text + "'");
  return p;
}

namespace {

struct Inputs {
  StrategyConfig strategy;
  std::optional<ThetaMatrix> theta;
  ResonanceSequence lambda;
  Ball opening;
  std::string adversary;
  std::uint64_t seed = 0;
  std::int64_t N = 0;
};

Rational rational_key(const Json& c, const char* key) {
  try {
    return rational_from_json(c.at(key));
  } catch (const std::exception& e) {
    throw ConfigError(std::string(key) + ": " + e.what());
  }
}

template <class T>
T number_key(const Json& c, const char* key) {
  try {
    return c.at(key).get<T>();
  } catch (const std::exception& e) {
    throw ConfigError(std::string(key) + ": " + e.what());
  }
}

Inputs parse_inputs(const Json& c) {
  Inputs in;
  in.strategy.alpha = rational_key(c, "alpha");
  in.strategy.beta = rational_key(c, "beta");
  in.strategy.M = rational_key(c, "M");
  in.strategy.blocks = number_key<int>(c, "blocks");
  if (!c.at("k").is_null()) in.strategy.k_override = number_key<int>(c, "k");
  const std::string opening = number_key<std::string>(c, "opening");
  if (opening == "driver") {
    in.strategy.opening = OpeningMode::kDriver;
  } else if (opening == "adversarial") {
    in.strategy.opening = OpeningMode::kAdversarial;
  } else {
    throw ConfigError("opening must be driver or adversarial");
  }
  in.seed = number_key<std::uint64_t>(c, "seed");
  in.strategy.cap.seed = in.seed;
  in.adversary = number_key<std::string>(c, "adversary");
  in.N = number_key<std::int64_t>(c, "N");
  if (!(in.strategy.alpha > 0 && in.strategy.alpha < Rational(1, 2))) throw ConfigError("alpha must lie in (0, 1/2)");
  if (!(in.strategy.beta > 0 && in.strategy.beta < 1)) throw ConfigError("beta must lie in (0, 1)");
  if (!(in.strategy.M > 1)) throw ConfigError("M must exceed 1");
  if (in.strategy.blocks < 0) throw ConfigError("blocks must be >= 0");
  if (in.N < 0) throw ConfigError("N must be >= 0");
  if (in.adversary != "random" && in.adversary != "greedy" && in.adversary != "pullback" &&
      in.adversary != "concentric") {
    throw ConfigError("unknown adversary '" + in.adversary + "'");
  }

  try {
    if (!c.at("lambda").is_null()) {
      in.lambda = resonance_from_json(read_json_file(c.at("lambda").get<std::string>()), in.strategy.M);
    } else if (!c.at("sizes").is_null()) {
      std::vector<Integer> sizes;
      for (const auto& s : c.at("sizes")) sizes.push_back(integer_from_json(s));
      in.lambda = ResonanceSequence::from_sizes(sizes, in.strategy.M);
    }
    if (!c.at("theta").is_null()) in.theta = load_theta(c.at("theta"));
    if (in.lambda.size() == 0) {
      if (!in.theta) throw ConfigError("need theta, lambda or sizes");
      in.lambda = lacunary_normalize(best_approximations(*in.theta, number_key<std::int64_t>(c, "tmax")),
                                     in.strategy.M);
    }
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  } catch (const Json::exception& e) {
    throw ConfigError(e.what());
  }
  const std::size_t n = in.lambda.dimension();
  in.opening.radius = rational_key(c, "radius");
  if (!(in.opening.radius > 0)) throw ConfigError("radius must be positive");
  in.opening.center = c.at("center").is_null() ? Point(n, Rational(0))
                                                : parse_point(number_key<std::string>(c, "center"));
  if (in.opening.center.size() != n) {
    throw ConfigError("center has " + std::to_string(in.opening.center.size()) + " coordinates, resonances live in R^" +
                      std::to_string(n));
  }
  return in;
}

}  // namespace

PlayResult run_play(const Json& config) {
  Inputs in = parse_inputs(config);
  PlayResult result;
  Json& report = result.report;
  report["config"] = config;
  report["input_hash"] = input_hash(config);
  report["lambda"] = to_json(in.lambda);
  try {
    // Derived up front so failed runs still report their constants.
    report["params"] = to_json(derive_params(in.strategy.alpha, in.strategy.beta, in.strategy.M,
                                             static_cast<int>(in.lambda.dimension()), in.strategy.k_override));
    auto white = build_strategy(in.lambda, in.opening, in.strategy);
    const StrategyState& state = white->state();
    report["schedule"] = to_json(state.schedule);
    report["opening"] = to_json(state.opening);
    auto black = make_adversary(in.adversary, in.seed, &in.lambda, in.lambda.dimension());
    const GameParams params{in.strategy.alpha, in.strategy.beta, static_cast<int>(in.lambda.dimension())};
    const int rounds = std::max(white->rounds(), 1);
    result.trace = run_game(params, state.opening.initial, *white, *black, rounds);
    white->finish(result.trace.final_ball());
    report["dangerous_counts"] = state.dangerous_counts;
    report["plane_counts"] = state.plane_counts;
    result.certificate = certificate(state, result.trace);
    const Certificate& cert = *result.certificate;
    report["certificate"] = to_json(cert);
    if (state.certified_up_to() > 0) {
      report["resonance_margin"] =
          to_json(resonance_margin(in.lambda, cert.enclosure.center, static_cast<std::size_t>(state.certified_up_to())));
    }
    if (in.N > 0 && in.theta) {
      report["theorem1"] = to_json(theorem1_constant(*in.theta, cert.enclosure.center, in.N));
    }
    report["status"] = "ok";
    result.ok = true;
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  } catch (const Error& e) {
    report["status"] = "error";
    report["error"] = e.what();
    if (const auto* ea = dynamic_cast<const EscapeAssertionFailed*>(&e); ea && !ea->trace_json.empty()) {
      report["failed_trace"] = Json::parse(ea->trace_json);
    }
  }
  return result;
}

}  // namespace schmidt::cli
