#include "schmidt/serialization.hpp"

#include <fstream>
#include <limits>

#include "schmidt/errors.hpp"

namespace schmidt {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max()) {
    return z.convert_to<std::int64_t>();
  }
  return z.str();
}

Json to_json(const Point& p) {
  Json out = Json::array();
  for (const auto& x : p) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntVector& u) {
  Json out = Json::array();
  for (const auto& x : u) out.push_back(to_json(x));
  return out;
}

Json to_json(const Ball& b) { return Json{{"center", to_json(b.center)}, {"radius", to_json(b.radius)}}; }

Json to_json(const GameParams& p) {
  return Json{{"alpha", to_json(p.alpha)}, {"beta", to_json(p.beta)}, {"dimension", p.dimension},
              {"gamma", to_json(p.gamma())}};
}

Json to_json(const GameTrace& trace) {
  Json moves = Json::array();
  for (const auto& m : trace.moves) {
    moves.push_back(Json{{"player", player_code(m.player)},
                         {"center", to_json(m.ball.center)},
                         {"radius", to_json(m.ball.radius)},
                         {"note", m.note}});
  }
  return Json{{"params", to_json(trace.params)},
              {"initial", to_json(trace.initial)},
              {"moves", std::move(moves)},
              {"final", to_json(trace.final_ball())}};
}

Json to_json(const StrategyParams& p) {
  return Json{{"alpha", to_json(p.alpha)},
              {"beta", to_json(p.beta)},
              {"M", to_json(p.M)},
              {"dimension", p.dimension},
              {"gamma", to_json(p.gamma)},
              {"omega", static_cast<double>(p.omega)},
              {"omega_lb", to_json(p.omega_lb)},
              {"t_escape", p.t_escape},
              {"subblocks", p.subblocks},
              {"k", p.k},
              {"tau_k", p.tau_k},
              {"epsilon", to_json(p.epsilon)}};
}

Json to_json(const BlockSchedule& s) {
  return Json{{"rho0", to_json(s.rho0)}, {"blocks", s.blocks}, {"r", s.r}, {"q", s.q}};
}

Json to_json(const OpeningPlan& plan) {
  return Json{{"initial", to_json(plan.initial)},
              {"wait_rounds", plan.wait_rounds},
              {"halvings", plan.halvings},
              {"rho_start", to_json(plan.rho_start)},
              {"notes", plan.notes}};
}

Json to_json(const Certificate& c) {
  Json handled = Json::array();
  for (const auto& h : c.handled) {
    handled.push_back(Json{{"r", h.r}, {"u", to_json(h.u)}, {"a", to_json(h.a)}, {"residual_lb", to_json(h.residual_lb)}});
  }
  Json out{{"eta_center", to_json(c.enclosure.center)},
           {"eta_radius", to_json(c.enclosure.radius)},
           {"epsilon", to_json(c.epsilon)},
           {"handled", std::move(handled)}};
  if (c.params) out["params"] = to_json(*c.params);
  return out;
}

Json to_json(const ResonanceSequence& lambda) {
  Json out = Json::array();
  for (std::size_t r = 1; r <= lambda.size(); ++r) {
    Json e{{"u", to_json(lambda.u(r))}, {"t_sq", lambda.t_sq(r).str()}};
    const auto& q = r - 1 < lambda.qualities.size() ? lambda.qualities[r - 1] : std::nullopt;
    e["quality"] = q ? to_json(*q) : Json(nullptr);
    out.push_back(std::move(e));
  }
  return out;
}

Json to_json(const BadnessReport& r) {
  Json out{{"functional", functional_name(r.kind)},
           {"N", r.N},
           {"minimizer", r.minimizer},
           {"value", to_json(r.value)},
           {"power", to_json(r.power)},
           {"enumerated", r.enumerated},
           {"beyond_validity", r.beyond_validity},
           {"warnings", r.warnings}};
  out["validity_bound"] = r.validity_bound ? to_json(*r.validity_bound) : Json(nullptr);
  return out;
}

Json to_json(const HypothesisReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"t", c.t}, {"psi_theta", to_json(c.psi_theta)}, {"holds", c.holds}});
  }
  return Json{{"checks", std::move(checks)},
              {"violations", r.violations},
              {"psi_theta_hits_zero", r.psi_theta_hits_zero},
              {"checked_up_to", r.checked_up_to},
              {"warnings", r.warnings}};
}

Json to_json(const PsiSpec& psi) {
  if (const auto* law = std::get_if<PowerLaw>(&psi)) {
    return Json{{"kind", "power"}, {"c", to_json(law->c)}, {"sigma", to_json(law->sigma)}};
  }
  Json pts = Json::array();
  for (const auto& [t, v] : std::get<PsiTable>(psi).points) pts.push_back(Json::array({to_json(t), to_json(v)}));
  return Json{{"kind", "table"}, {"points", std::move(pts)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw InvalidArgument("expected a rational string, got " + j.dump());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const Rational q = parse_rational(j.get<std::string>());
    if (boost::multiprecision::denominator(q) != 1) throw InvalidArgument("expected an integer, got " + j.dump());
    return boost::multiprecision::numerator(q);
  }
  throw InvalidArgument("expected an integer, got " + j.dump());
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("expected a list of rationals, got " + j.dump());
  Point p;
  for (const auto& x : j) p.push_back(rational_from_json(x));
  return p;
}

IntVector int_vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("expected a list of integers, got " + j.dump());
  IntVector u;
  for (const auto& x : j) u.push_back(integer_from_json(x));
  return u;
}

Ball ball_from_json(const Json& j) {
  return Ball{point_from_json(j.at("center")), rational_from_json(j.at("radius"))};
}

GameTrace trace_from_json(const Json& j) {
  GameTrace t;
  const Json& p = j.at("params");
  t.params = GameParams{rational_from_json(p.at("alpha")), rational_from_json(p.at("beta")), p.at("dimension").get<int>()};
  t.initial = ball_from_json(j.at("initial"));
  for (const auto& m : j.at("moves")) {
    const std::string code = m.at("player").get<std::string>();
    if (code != "W" && code != "B") throw InvalidArgument("bad player code '" + code + "'");
    t.moves.push_back(Move{code == "W" ? Player::kWhite : Player::kBlack,
                           Ball{point_from_json(m.at("center")), rational_from_json(m.at("radius"))},
                           m.value("note", std::string{})});
  }
  return t;
}

ResonanceSequence resonance_from_json(const Json& j, const Rational& M) {
  const Json& list = j.is_object() ? j.at("vectors") : j;
  ResonanceSequence lambda;
  lambda.M = M;
  for (const auto& e : list) {
    IntVector u = int_vector_from_json(e.is_object() ? e.at("u") : e);
    lambda.norms_sq.push_back(norm_sq(u));
    if (e.is_object() && e.contains("t_sq") && integer_from_json(e.at("t_sq")) != lambda.norms_sq.back()) {
      throw InvalidArgument("t_sq does not match |u|^2 for " + e.dump());
    }
    lambda.vectors.push_back(std::move(u));
    if (e.is_object() && e.contains("quality") && !e.at("quality").is_null()) {
      lambda.qualities.emplace_back(rational_from_json(e.at("quality")));
    } else {
      lambda.qualities.emplace_back(std::nullopt);
    }
  }
  lambda.validate();
  return lambda;
}

ThetaMatrix theta_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "golden") return ThetaMatrix::golden();
    throw InvalidArgument("unknown theta name " + j.dump());
  }
  if (j.contains("cf")) {
    std::vector<Integer> cf = int_vector_from_json(j.at("cf"));
    if (j.contains("period")) {
      const IntVector period = int_vector_from_json(j.at("period"));
      if (period.empty()) throw InvalidArgument("empty continued fraction period");
      const std::size_t depth = j.value("depth", std::size_t{30});
      for (std::size_t i = 0; cf.size() < depth + 1; ++i) cf.push_back(period[i % period.size()]);
    }
    ThetaMatrix theta = ThetaMatrix::from_continued_fraction(cf);
    if (j.contains("surrogate")) theta.surrogate = j.at("surrogate").get<bool>();
    return theta;
  }
  ThetaMatrix theta;
  theta.m = j.at("m").get<int>();
  theta.n = j.at("n").get<int>();
  for (const auto& e : j.at("entries")) {
    if (e.is_array()) {
      for (const auto& x : e) theta.entries.push_back(rational_from_json(x));
    } else {
      theta.entries.push_back(rational_from_json(e));
    }
  }
  theta.surrogate = j.value("surrogate", false);
  theta.validate();
  return theta;
}

Json to_json(const ThetaMatrix& theta) {
  Json out{{"m", theta.m}, {"n", theta.n}, {"entries", to_json(theta.entries)}, {"surrogate", theta.surrogate}};
  if (!theta.continued_fraction.empty()) out["cf"] = to_json(theta.continued_fraction);
  return out;
}

PsiTable psi_table_from_json(const Json& j) {
  const Json& pts = j.is_object() ? j.at("points") : j;
  PsiTable table;
  for (const auto& e : pts) {
    if (!e.is_array() || e.size() != 2) throw InvalidArgument("psi table entries are [t, psi] pairs");
    table.points.emplace_back(integer_from_json(e[0]), rational_from_json(e[1]));
  }
  validate(PsiSpec{table});
  return table;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

}  // namespace schmidt
