#include "schmidt/certify.hpp"

#include <numeric>

#include "schmidt/errors.hpp"

namespace schmidt {

namespace {

// Integer form of L_j(x) - eta_j over a common denominator D:
// L_j(x) - eta_j = (sum_i A_{i,j} x_i - E_j) / D.
struct Scaled {
  Integer D;
  std::vector<Integer> A;  // row-major m x n
  std::vector<Integer> E;
};

Scaled scale_inputs(const ThetaMatrix& theta, const Point& eta) {
  Scaled s;
  Integer d(1);
  auto fold = [&](const Rational& q) {
    const Integer den = boost::multiprecision::denominator(q);
    d = d / boost::multiprecision::gcd(d, den) * den;
  };
  for (const auto& q : theta.entries) fold(q);
  for (const auto& q : eta) fold(q);
  s.D = d;
  for (const auto& q : theta.entries) s.A.push_back(boost::multiprecision::numerator(q) * (d / boost::multiprecision::denominator(q)));
  for (const auto& q : eta) s.E.push_back(boost::multiprecision::numerator(q) * (d / boost::multiprecision::denominator(q)));
  return s;
}

// Visits every x in [-N, N]^m except 0 in lexicographic order, passing
// (x, max_j numerator of ||L_j(x) - eta_j||, max_i |x_i|).
template <class Visit>
void enumerate(const ThetaMatrix& theta, const Scaled& s, std::int64_t N, Visit&& visit) {
  const int m = theta.m;
  const int n = theta.n;
  std::vector<std::int64_t> x(static_cast<std::size_t>(m), -N);
  std::vector<Integer> acc(static_cast<std::size_t>(n));
  Integer num;
  Integer rem;
  while (true) {
    std::int64_t size = 0;
    for (auto xi : x) size = std::max<std::int64_t>(size, xi < 0 ? -xi : xi);
    if (size > 0) {
      Integer worst(0);
      for (int j = 0; j < n; ++j) {
        num = -s.E[static_cast<std::size_t>(j)];
        for (int i = 0; i < m; ++i) num += s.A[static_cast<std::size_t>(i * n + j)] * x[static_cast<std::size_t>(i)];
        rem = num % s.D;
        if (rem < 0) rem += s.D;
        Integer other = s.D - rem;
        const Integer& dist = rem < other ? rem : other;
        if (dist > worst) worst = dist;
      }
      visit(x, worst, size);
    }
    int i = m - 1;
    while (i >= 0 && x[static_cast<std::size_t>(i)] == N) {
      x[static_cast<std::size_t>(i)] = -N;
      --i;
    }
    if (i < 0) break;
    ++x[static_cast<std::size_t>(i)];
  }
}

Rational dist_to_int(const Rational& q) {
  const Rational f = q - Rational(floor(q));
  return f <= Rational(1, 2) ? f : 1 - f;
}

void check_inputs(const ThetaMatrix& theta, const Point& eta, std::int64_t N) {
  theta.validate();
  if (N < 1) throw InvalidArgument("N must be >= 1");
  if (eta.size() != static_cast<std::size_t>(theta.n)) {
    throw DimensionMismatch("eta has " + std::to_string(eta.size()) + " entries, theta has n = " +
                            std::to_string(theta.n));
  }
}

void note_validity(const ThetaMatrix& theta, BadnessReport& report) {
  report.validity_bound = theta.validity_bound();
  if (report.validity_bound && Integer(report.N) > *report.validity_bound) {
    report.beyond_validity = true;
    report.warnings.push_back("N = " + std::to_string(report.N) + " exceeds the surrogate validity bound " +
                              report.validity_bound->str() + "; values describe the rational surrogate");
  }
}

}  // namespace

const char* functional_name(Functional f) { return f == Functional::kTheorem1 ? "theorem1" : "jarnik"; }

Functional parse_functional(const std::string& name) {
  if (name == "theorem1") return Functional::kTheorem1;
  if (name == "jarnik") return Functional::kJarnik;
  throw InvalidArgument("unknown functional '" + name + "' (theorem1|jarnik)");
}

BadnessReport theorem1_constant(const ThetaMatrix& theta, const Point& eta, std::int64_t N) {
  check_inputs(theta, eta, N);
  const Scaled s = scale_inputs(theta, eta);
  const auto n = static_cast<std::uint64_t>(theta.n);
  const auto m = static_cast<std::uint64_t>(theta.m);
  BadnessReport report;
  report.kind = Functional::kTheorem1;
  report.N = N;
  std::optional<Integer> best;
  enumerate(theta, s, N, [&](const std::vector<std::int64_t>& x, const Integer& d, std::int64_t size) {
    ++report.enumerated;
    Integer key = pow(d, n) * pow(Integer(size), m);
    if (!best || key < *best) {
      best = std::move(key);
      report.minimizer = x;
    }
  });
  report.value = Rational(*best) / Rational(pow(s.D, n));
  note_validity(theta, report);
  return report;
}

Integer table_rho(const PsiTable& table, const Integer& s) {
  const auto& pts = table.points;
  if (pts.empty()) throw InvalidArgument("empty psi table");
  // psi(t) >= 1/s  <=>  s psi(t) >= 1.
  auto ok = [&](const Rational& v) { return Rational(s) * v >= 1; };
  if (ok(pts.back().second)) {
    throw TableRangeExceeded("psi table ends at t = " + pts.back().first.str() + " with psi still >= 1/" +
                             s.str());
  }
  if (!ok(pts.front().second)) return pts.front().first;
  std::size_t i = 0;
  while (ok(pts[i + 1].second)) ++i;
  return pts[i + 1].first - 1;
}

BadnessReport jarnik_constant(const ThetaMatrix& theta, const Point& eta, const PsiSpec& psi,
                              std::int64_t N) {
  check_inputs(theta, eta, N);
  validate(psi);
  const Scaled s = scale_inputs(theta, eta);
  BadnessReport report;
  report.kind = Functional::kJarnik;
  report.N = N;
  std::optional<Rational> best;
  if (const auto* law = std::get_if<PowerLaw>(&psi)) {
    const Integer p = boost::multiprecision::numerator(law->sigma);
    const Integer q = boost::multiprecision::denominator(law->sigma);
    const auto pe = p.convert_to<std::uint64_t>();
    const auto qe = q.convert_to<std::uint64_t>();
    report.power = p;
    // Cache (c s)^q per shell size.
    std::vector<Rational> shell(static_cast<std::size_t>(N) + 1);
    for (std::int64_t k = 1; k <= N; ++k) shell[static_cast<std::size_t>(k)] = pow(law->c * Rational(k), qe);
    const Rational dp = pow(Rational(s.D), pe);
    enumerate(theta, s, N, [&](const std::vector<std::int64_t>& x, const Integer& d, std::int64_t size) {
      ++report.enumerated;
      Rational v = Rational(pow(d, pe)) / dp * shell[static_cast<std::size_t>(size)];
      if (!best || v < *best) {
        best = std::move(v);
        report.minimizer = x;
      }
    });
  } else {
    const auto& table = std::get<PsiTable>(psi);
    std::vector<Integer> rho(static_cast<std::size_t>(N) + 1);
    for (std::int64_t k = 1; k <= N; ++k) rho[static_cast<std::size_t>(k)] = table_rho(table, Integer(k));
    enumerate(theta, s, N, [&](const std::vector<std::int64_t>& x, const Integer& d, std::int64_t size) {
      ++report.enumerated;
      Rational v = Rational(d * rho[static_cast<std::size_t>(size)]) / Rational(s.D);
      if (!best || v < *best) {
        best = std::move(v);
        report.minimizer = x;
      }
    });
  }
  report.value = *best;
  note_validity(theta, report);
  return report;
}

Rational resonance_margin(const ResonanceSequence& lambda, const Point& eta, std::size_t r_max) {
  if (r_max < 1 || r_max > lambda.size()) throw InvalidArgument("resonance_margin: need 1 <= r_max <= |Lambda|");
  if (eta.size() != lambda.dimension()) throw DimensionMismatch("resonance_margin: eta dimension");
  Rational best = dist_to_int(dot(lambda.u(1), eta));
  for (std::size_t r = 2; r <= r_max; ++r) {
    Rational d = dist_to_int(dot(lambda.u(r), eta));
    if (d < best) best = std::move(d);
  }
  return best;
}

}  // namespace schmidt
