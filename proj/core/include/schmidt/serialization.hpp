#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "schmidt/certify.hpp"
#include "schmidt/game.hpp"
#include "schmidt/psi_spec.hpp"
#include "schmidt/resonance.hpp"
#include "schmidt/schedule.hpp"
#include "schmidt/white_strategy.hpp"

namespace schmidt {

using Json = nlohmann::json;

// Rationals are always "p/q" strings. Integers are JSON numbers when they
// fit in 64 bits and decimal strings otherwise; readers accept both.
Json to_json(const Rational& q);
Json to_json(const Integer& z);
Json to_json(const Point& p);
Json to_json(const IntVector& u);
Json to_json(const Ball& b);
Json to_json(const GameParams& p);
Json to_json(const GameTrace& trace);
Json to_json(const StrategyParams& p);
Json to_json(const BlockSchedule& s);
Json to_json(const OpeningPlan& plan);
Json to_json(const Certificate& c);
Json to_json(const ResonanceSequence& lambda);
Json to_json(const BadnessReport& r);
Json to_json(const HypothesisReport& r);
Json to_json(const PsiSpec& psi);

Rational rational_from_json(const Json& j);
Integer integer_from_json(const Json& j);
Point point_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j);
Ball ball_from_json(const Json& j);
GameTrace trace_from_json(const Json& j);
ResonanceSequence resonance_from_json(const Json& j, const Rational& M);

// {"m", "n", "entries"} with entries flat row-major or nested by row, or a
// continued fraction {"cf": [a0, a1, ...]} optionally with "period": [...]
// and "depth" (partial quotients after a0) for n == m == 1. The string
// "golden" names the built-in golden-mean surrogate.
ThetaMatrix theta_from_json(const Json& j);
Json to_json(const ThetaMatrix& theta);

// {"points": [[t, psi], ...]} or a bare list of pairs.
PsiTable psi_table_from_json(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace schmidt
