#include "schmidt/psi_spec.hpp"

#include <string>

#include "schmidt/errors.hpp"

namespace schmidt {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

void validate(const PsiSpec& psi) {
  if (const auto* law = std::get_if<PowerLaw>(&psi)) {
    if (!(law->c > 0) || !(law->sigma > 0)) {
      throw InvalidArgument("power law needs c > 0 and sigma > 0");
    }
    return;
  }
  const auto& table = std::get<PsiTable>(psi);
  if (table.points.empty()) throw InvalidArgument("psi table is empty");
  for (std::size_t i = 0; i < table.points.size(); ++i) {
    const auto& [t, value] = table.points[i];
    if (t < 1 || !(value > 0)) throw InvalidArgument("psi table needs t >= 1 and psi(t) > 0");
    if (i > 0) {
      if (t <= table.points[i - 1].first) throw InvalidArgument("psi table abscissae must increase");
      if (value > table.points[i - 1].second) throw InvalidArgument("psi table must be non-increasing");
    }
  }
}

PowerLaw parse_power_law(std::string_view text) {
  constexpr std::string_view prefix = "power:";
  if (text.substr(0, prefix.size()) != prefix) {
    throw InvalidArgument("psi spec must start with 'power:'");
  }
  text.remove_prefix(prefix.size());
  PowerLaw law;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw InvalidArgument("malformed psi spec item");
    std::string_view key = item.substr(0, eq);
    Rational value = parse_rational(item.substr(eq + 1));
    if (key == "c") {
      law.c = value;
    } else if (key == "sigma") {
      law.sigma = value;
    } else {
      throw InvalidArgument("unknown psi spec key '" + std::string(key) + "'");
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  validate(PsiSpec{law});
  return law;
}

bool psi_bounds(const PsiSpec& psi, const Integer& t, const Rational& value) {
  if (value < 0) return true;
  if (const auto* law = std::get_if<PowerLaw>(&psi)) {
    // value <= c t^(-p/q)  <=>  value^q t^p <= c^q
    const auto p = numerator(law->sigma).convert_to<std::uint64_t>();
    const auto q = denominator(law->sigma).convert_to<std::uint64_t>();
    return pow(value, q) * Rational(pow(t, p)) <= pow(law->c, q);
  }
  const auto& points = std::get<PsiTable>(psi).points;
  const Rational* bound = &points.front().second;
  for (const auto& [abscissa, v] : points) {
    if (abscissa > t) break;
    bound = &v;
  }
  return value <= *bound;
}

bool covers(const PsiSpec& psi, const Integer& t) {
  if (std::holds_alternative<PowerLaw>(psi)) return true;
  return t <= std::get<PsiTable>(psi).points.back().first;
}

}  // namespace schmidt
