#include "zetaform/heights.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace zetaform {

long AsymptoticParams::h(int j) const {
  long v = alpha[group_begin(j)];
  for (int i = group_begin(j); i < group_ends[j]; ++i) v = std::min(v, alpha[i]);
  return v;
}

long AsymptoticParams::H(int j) const {
  long v = beta[group_begin(j)];
  for (int i = group_begin(j); i < group_ends[j]; ++i) v = std::max(v, beta[i]);
  return v;
}

void AsymptoticParams::check_well_formed() const {
  if (group_ends.empty()) throw std::invalid_argument("AsymptoticParams: no groups");
  const int m = vars();
  if (static_cast<int>(alpha.size()) != m || static_cast<int>(alpha_p.size()) != m ||
      static_cast<int>(beta.size()) != m || static_cast<int>(beta_p.size()) != m ||
      static_cast<int>(gamma.size()) != levels() ||
      static_cast<int>(gamma_p.size()) != levels())
    throw std::invalid_argument("AsymptoticParams: size mismatch");
  for (int i = 0; i < m; ++i)
    if (alpha[i] < 1 || beta[i] < 1)
      throw std::invalid_argument("AsymptoticParams: slopes must be positive");
  for (long g : gamma)
    if (g < 1)
      throw std::invalid_argument("AsymptoticParams: gamma slopes must be positive");
}

IntegralParams AsymptoticParams::instantiate(long n) const {
  check_well_formed();
  IntegralParams p;
  p.m = vars();
  p.group_ends = group_ends;
  for (int i = 0; i < p.m; ++i) {
    p.a.push_back(alpha[i] * n + alpha_p[i]);
    p.b.push_back(beta[i] * n + beta_p[i]);
  }
  for (int j = 0; j < levels(); ++j) p.c.push_back(gamma[j] * n + gamma_p[j]);
  p.check_well_formed();
  return p;
}

ValidationReport AsymptoticParams::lemma6_preconditions(long n) const {
  ValidationReport rep;
  IntegralParams p = instantiate(n);
  if (p.c[0] > p.q(0)) rep.fail("c_1 > q_1");
  for (int j = 1; j < levels(); ++j)
    if (p.c[j - 1] + p.c[j] > p.q(j))
      rep.fail("c_" + std::to_string(j) + " + c_" + std::to_string(j + 1) +
               " > q_" + std::to_string(j + 1));
  return rep;
}

AsymptoticParams vasilyev_profile(int l) {
  if (l < 1) throw std::invalid_argument("vasilyev_profile: l must be >= 1");
  AsymptoticParams p;
  for (int j = 1; j <= l; ++j) p.group_ends.push_back(2 * j);
  p.group_ends.push_back(2 * l + 1);
  const int m = 2 * l + 1;
  p.alpha.assign(m, 1);
  p.alpha_p.assign(m, 1);
  p.beta.assign(m, 2);
  p.beta_p.assign(m, 2);
  p.gamma.assign(l + 1, 1);
  p.gamma_p.assign(l + 1, 1);
  return p;
}

FactorialPowerBounds factorial_power_bounds(long a, long b) {
  if (a < 0 || b < 0)
    throw std::invalid_argument("factorial_power_bounds: negative argument");
  // (a+b)^{a+b} / (a^a b^b), with 0^0 = 1.
  Rat upper = Rat(pow_int(Int(a + b), a + b)) /
              Rat(pow_int(Int(a), a) * pow_int(Int(b), b));
  FactorialPowerBounds r;
  r.upper = upper;
  r.lower = upper / Rat(a + b + 1);
  r.exact = binomial(a + b, a);
  return r;
}

double phi(double x, double y) {
  auto pw = [](double t) { return t == 0 ? 1.0 : std::pow(std::fabs(t), t); };
  return pw(x + y) / pw(x);
}

double F(const std::vector<double>& x, const AsymptoticParams& p) {
  p.check_well_formed();
  const int l = p.levels();
  if (static_cast<int>(x.size()) != l)
    throw std::invalid_argument("F: dimension mismatch");
  for (double v : x)
    if (v < 0 || v > 1) throw std::invalid_argument("F: point outside the cube");

  auto k = [&](int j) { return p.h(j) + (p.H(j) - p.h(j)) * x[j]; };

  double f = 1;
  for (int j = 0; j < l; ++j)
    for (int i = p.group_begin(j); i < p.group_ends[j]; ++i) {
      const double d = static_cast<double>(p.beta[i] - p.alpha[i]);
      f *= std::pow(d, d) / phi(p.alpha[i] - k(j), d);
    }
  for (int j = 0; j + 1 < l; ++j) {
    const double g = static_cast<double>(p.gamma[j]);
    f *= phi(k(j + 1) - k(j), g) / std::pow(g, g);
  }
  const double gl = static_cast<double>(p.gamma[l - 1]);
  f *= phi(k(l - 1) - gl, gl) / std::pow(gl, gl);
  return f;
}

MaximizeResult maximize_F(const AsymptoticParams& p, int grid, double tol) {
  if (grid < 2) throw std::invalid_argument("maximize_F: grid too coarse");
  const int l = p.levels();

  MaximizeResult best;
  best.value = -1;
  best.argmax.assign(l, 0.0);

  // Exhaustive grid.
  std::vector<int> idx(l, 0);
  std::vector<double> x(l, 0.0);
  for (;;) {
    for (int j = 0; j < l; ++j) x[j] = static_cast<double>(idx[j]) / (grid - 1);
    const double v = F(x, p);
    if (v > best.value) {
      best.value = v;
      best.argmax = x;
    }
    int j = l - 1;
    while (j >= 0 && ++idx[j] == grid) idx[j--] = 0;
    if (j < 0) break;
  }

  // Coordinate pattern search from the incumbent; never decreases it.
  double step = 1.0 / (grid - 1);
  while (step >= tol) {
    bool improved = false;
    for (int j = 0; j < l; ++j) {
      for (double dir : {-1.0, 1.0}) {
        std::vector<double> cand = best.argmax;
        cand[j] = std::min(1.0, std::max(0.0, cand[j] + dir * step));
        const double v = F(cand, p);
        if (v > best.value) {
          best.value = v;
          best.argmax = std::move(cand);
          improved = true;
        }
      }
    }
    if (!improved) step /= 2;
  }
  return best;
}

std::vector<HeightRow> empirical_height_growth(int l, long n_min, long n_max,
                                               int grid, double tol) {
  if (n_min < 1 || n_max < n_min)
    throw std::invalid_argument("empirical_height_growth: bad n range");
  const double m_bound = maximize_F(vasilyev_profile(l), grid, tol).value;
  std::vector<HeightRow> rows;
  for (long n = n_min; n <= n_max; ++n) {
    auto [p, d] = vasilyev_params(l, n);
    LinearForm form = decompose_integral(p, d);
    HeightRow row;
    row.n = n;
    row.height = form.max_height();
    const double log_h = std::log(row.height.get_d() < 1 ? 1.0 : row.height.get_d());
    row.nth_root = std::exp(log_h / static_cast<double>(n));
    row.m_bound = m_bound;
    row.ratio_log = log_h / (static_cast<double>(n) * std::log(m_bound));
    rows.push_back(row);
  }
  return rows;
}

std::string height_table_csv(const std::vector<HeightRow>& rows) {
  std::ostringstream out;
  out << "n,height,height_nth_root,M,ratio_log\n";
  for (const HeightRow& r : rows) {
    out << r.n << "," << rat_to_string(r.height) << "," << r.nth_root << ","
        << r.m_bound << "," << r.ratio_log << "\n";
  }
  return out.str();
}

}  // namespace zetaform
