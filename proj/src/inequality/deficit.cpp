#include "hardy/inequality/deficit.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>

#include "hardy/calculus/horizontal.hpp"
#include "hardy/errors.hpp"
#include "hardy/symbolic/horner.hpp"

namespace hardy::inequality {

using numerics::BoxRegion;
using sym::HornerPoly;

double min_weight_on_support(const HardySpec& spec, const TestFunction& f) {
  const MultiPoly w = weight_function(spec);
  const std::size_t n = spec.frame.dim_n();
  if (f.dim() != n) throw StructuralError("test function dimension does not match the frame");
  if (w.total_degree() > 1) throw StructuralError("closed-form support minimum needs an affine weight");
  double value = sym::to_double(w.constant_term());
  double spread = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = sym::to_double(w.partial(i).constant_term());
    value += a * f.center()[i];
    spread += (a * f.radii()[i]) * (a * f.radii()[i]);
  }
  return value - std::sqrt(spread);
}

bool admissible(const TestFunction& f, const HardySpec& spec, double margin) {
  return min_weight_on_support(spec, f) > margin;
}

FunctionParams FunctionParams::of(const TestFunction& f) {
  return {numerics::to_string(f.kind()), f.center(), f.radii(), f.poly_exponent()};
}

namespace {

constexpr std::size_t kMaxCoords = 16;
constexpr unsigned kMaxDegree = 15;

/// Polynomial in the coordinates only, flattened to terms evaluated
/// against a per-point table of coordinate powers.
class CoordPoly {
 public:
  CoordPoly() = default;
  CoordPoly(const MultiPoly& q, std::size_t n) {
    for (std::size_t v = n; v < q.vars().size(); ++v)
      if (q.depends_on(v)) throw StructuralError("integrand polynomial depends on symbol '" + q.vars().name(v) + "'");
    offsets_.push_back(0);
    for (const auto& [mono, coeff] : q.terms()) {
      coeffs_.push_back(sym::to_double(coeff));
      for (std::size_t i = 0; i < n; ++i) {
        if (mono[i] == 0) continue;
        if (mono[i] > kMaxDegree) throw StructuralError("integrand polynomial degree too high");
        slots_.push_back(static_cast<std::uint16_t>(i * (kMaxDegree + 1) + mono[i]));
        max_degree_ = std::max<unsigned>(max_degree_, mono[i]);
      }
      offsets_.push_back(static_cast<std::uint32_t>(slots_.size()));
    }
  }

  bool is_zero() const { return coeffs_.empty(); }
  unsigned max_degree() const { return max_degree_; }

  /// powers[i * (kMaxDegree + 1) + e] = x_i^e.
  double operator()(const double* powers) const {
    double s = 0.0;
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
      double v = coeffs_[t];
      for (std::uint32_t f = offsets_[t]; f < offsets_[t + 1]; ++f) v *= powers[slots_[f]];
      s += v;
    }
    return s;
  }

 private:
  std::vector<double> coeffs_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint16_t> slots_;
  unsigned max_degree_ = 0;
};

/// y^(p/2) for y >= 0, via square roots when 2p is a small integer.
double pow_half(double y, double p) {
  const double k = 2.0 * p;
  if (k == std::floor(k) && k <= 16.0) {
    const double r = std::sqrt(std::sqrt(y));
    double out = 1.0;
    for (int i = 0; i < static_cast<int>(k); ++i) out *= r;
    return out;
  }
  return std::pow(y, 0.5 * p);
}

/// Pointwise integrand of the Hardy functionals with every polynomial
/// precompiled. For each exponent p it produces
///   |grad_X f|^p,  W1 |f|^p,  W2 |f|^p.
/// Polynomials that do not involve the last coordinate are cached per
/// thread while the leading coordinates stay fixed, which is the case along
/// the innermost quadrature axis.
class HardyIntegrand {
 public:
  HardyIntegrand(const HardySpec& spec, const WeightData& data, const TestFunction& f, std::vector<double> ps)
      : f_(f), ps_(std::move(ps)), n_(spec.frame.dim_n()), dim_N_(spec.frame.dim_N()) {
    static std::atomic<std::uint64_t> next_id{1};
    id_ = next_id++;
    const auto& frame = spec.frame;
    if (n_ > kMaxCoords || dim_N_ > kMaxCoords) throw StructuralError("frame too large for the Hardy integrand");

    // Slot layout: frame entries, g_l = X_l w, M_kl = X_k g_l, w.
    // With these, ns = sum g_l^2, L = sum_k M_kk, T = sum_k g_k X_k(ns) =
    // 2 sum_kl g_k g_l M_kl and q = ns * L + (p - 2)/2 * T.
    for (std::size_t k = 0; k < dim_N_; ++k)
      for (std::size_t j = 0; j < n_; ++j)
        if (!frame.coefficient(k, j).is_zero()) {
          entries_.push_back({k, j});
          add(frame.coefficient(k, j));
        }
    g_slot_ = polys_.size();
    for (std::size_t l = 0; l < dim_N_; ++l) add(data.lp.gradient[l]);
    has_lp_ = !data.lp.q_poly.is_zero();
    m_slot_ = polys_.size();
    if (has_lp_)
      for (std::size_t k = 0; k < dim_N_; ++k)
        for (std::size_t l = 0; l < dim_N_; ++l) add(frame.apply(k, data.lp.gradient[l]));
    w_slot_ = polys_.size();
    add(data.w);
    if (polys_.size() > kMaxSlots) throw StructuralError("frame too large for the Hardy integrand");
  }

  std::size_t components() const { return 3 * ps_.size(); }

  void operator()(std::span<const double> x, std::span<double> out) const {
    thread_local Cache cache;
    double grad[kMaxCoords];
    const double fv = f_.value_and_gradient(x, std::span<double>(grad, n_));
    if (fv == 0.0) {
      for (auto& o : out) o = 0.0;
      return;
    }
    bool same_line = cache.owner == id_;
    for (std::size_t i = 0; same_line && i + 1 < n_; ++i) same_line = cache.prefix[i] == x[i];
    double* powers = cache.powers;
    auto fill_row = [&](std::size_t i) {
      double* row = powers + i * (kMaxDegree + 1);
      row[0] = 1.0;
      for (unsigned e = 1; e <= degree_; ++e) row[e] = row[e - 1] * x[i];
    };
    fill_row(n_ - 1);
    double* v = cache.values;
    if (!same_line) {
      cache.owner = id_;
      for (std::size_t i = 0; i + 1 < n_; ++i) {
        cache.prefix[i] = x[i];
        fill_row(i);
      }
      for (std::size_t s = 0; s < polys_.size(); ++s)
        if (!uses_last_[s]) v[s] = polys_[s](powers);
    }
    for (std::size_t s : last_dependent_) v[s] = polys_[s](powers);

    double xf[kMaxCoords] = {};
    for (std::size_t e = 0; e < entries_.size(); ++e) xf[entries_[e].k] += v[e] * grad[entries_[e].j];
    double g2 = 0.0;
    for (std::size_t k = 0; k < dim_N_; ++k) g2 += xf[k] * xf[k];

    const double* gw = v + g_slot_;
    const double wv = v[w_slot_];
    double ns = 0.0;
    for (std::size_t l = 0; l < dim_N_; ++l) ns += gw[l] * gw[l];
    double q0 = 0.0, q1 = 0.0;
    if (has_lp_) {
      const double* m = v + m_slot_;
      double lap = 0.0, t = 0.0;
      for (std::size_t k = 0; k < dim_N_; ++k) {
        lap += m[k * dim_N_ + k];
        double row = 0.0;
        for (std::size_t l = 0; l < dim_N_; ++l) row += gw[l] * m[k * dim_N_ + l];
        t += 2.0 * gw[k] * row;
      }
      q0 = ns * lap - t;
      q1 = 0.5 * t;
    }

    // W1 |f|^p = (ns f^2 / w^2)^(p/2) and W2 |f|^p = q |w| / ns^2 * W1 |f|^p.
    const double base1 = ns * fv * fv / (wv * wv);
    const double scale2 = has_lp_ ? std::fabs(wv) / (ns * ns) : 0.0;
    for (std::size_t i = 0; i < ps_.size(); ++i) {
      const double p = ps_[i];
      const double q = q0 + p * q1;
      const double w1 = p == 2.0 ? base1 : pow_half(base1, p);
      out[3 * i] = p == 2.0 ? g2 : pow_half(g2, p);
      out[3 * i + 1] = w1;
      out[3 * i + 2] = q == 0.0 ? 0.0 : q * scale2 * w1;
    }
  }

 private:
  static constexpr std::size_t kMaxSlots = 512;
  struct Entry {
    std::size_t k, j;
  };
  struct Cache {
    std::uint64_t owner = 0;
    double prefix[kMaxCoords];
    double powers[kMaxCoords * (kMaxDegree + 1)];
    double values[kMaxSlots];
  };

  void add(const MultiPoly& q) {
    const std::size_t slot = polys_.size();
    polys_.emplace_back(q, n_);
    degree_ = std::max(degree_, polys_.back().max_degree());
    const bool uses_last = q.depends_on(n_ - 1);
    uses_last_.push_back(uses_last);
    if (uses_last) last_dependent_.push_back(slot);
  }

  const TestFunction& f_;
  std::vector<double> ps_;
  std::size_t n_, dim_N_;
  std::uint64_t id_ = 0;
  std::vector<Entry> entries_;
  std::vector<CoordPoly> polys_;
  std::vector<bool> uses_last_;
  std::vector<std::size_t> last_dependent_;
  std::size_t g_slot_ = 0, m_slot_ = 0, w_slot_ = 0;
  unsigned degree_ = 0;
  bool has_lp_ = false;
};

void require_admissible(const HardySpec& spec, const TestFunction& f) {
  const double m = min_weight_on_support(spec, f);
  if (!(m > kAdmissibilityMargin))
    throw PreconditionError("test function support touches the boundary: min weight on support " +
                            std::to_string(m) + " <= " + std::to_string(kAdmissibilityMargin));
}

}  // namespace

std::vector<HardyIntegrals> hardy_integrals(const HardySpec& spec, const TestFunction& f,
                                            const std::vector<double>& ps, const QuadratureRule& rule) {
  rule.validate();
  for (double p : ps)
    if (!(p > 1.0)) throw DomainError("p must exceed 1");
  const HardySpec base = spec.with_p(ps.empty() ? spec.p : ps.front());
  base.validate();
  require_admissible(base, f);
  const WeightData data = weight_data(base);

  std::vector<HardyIntegrals> out(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) out[i].p = ps[i];
  if (f.amplitude() == 0.0 || ps.empty()) return out;

  const HardyIntegrand integrand(base, data, f, ps);
  const auto support = f.support();
  const auto results = numerics::integrate_components(
      f.support_box(), rule, integrand.components(),
      [&integrand](std::span<const double> x, std::span<double> o) { integrand(x, o); }, &support);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    out[i].lhs = results[3 * i];
    out[i].w1 = results[3 * i + 1];
    out[i].w2 = results[3 * i + 2];
  }
  return out;
}

HardyReport assemble_report(const HardySpec& spec, const TestFunction& f, const HardyIntegrals& I, double gamma) {
  const auto c = gamma_coefficients(gamma, I.p);
  HardyReport r;
  r.lhs = I.lhs.value;
  r.rhs_gradient_term = c.c1 * I.w1.value;
  r.rhs_lp_term = (c.c2 == 0.0 || I.w2.value == 0.0) ? 0.0 : c.c2 * I.w2.value;
  r.deficit = r.lhs - r.rhs_total();
  r.gamma = gamma;
  r.p = I.p;
  r.quad_error = I.lhs.error_estimate + std::fabs(c.c1) * I.w1.error_estimate + std::fabs(c.c2) * I.w2.error_estimate;
  r.group = spec.frame.name();
  r.label = spec.label;
  r.mode = spec.mode;
  r.n = spec.normal.n_double();
  if (spec.mode == WeightMode::HalfSpace && spec.normal.d) r.d = sym::to_double(*spec.normal.d);
  r.f_params = FunctionParams::of(f);
  return r;
}

std::vector<HardyReport> evaluate_deficits(const HardySpec& spec, const TestFunction& f,
                                           const std::vector<double>& ps,
                                           const std::vector<std::optional<double>>& gammas,
                                           const QuadratureRule& rule) {
  const auto integrals = hardy_integrals(spec, f, ps, rule);
  std::vector<HardyReport> out;
  for (const auto& I : integrals) {
    const HardySpec at_p = spec.with_p(I.p);
    const WeightData data = weight_data(at_p);
    for (const auto& g : gammas) out.push_back(assemble_report(at_p, f, I, resolve_gamma(at_p.with_gamma(g), data)));
  }
  return out;
}

HardyReport evaluate_deficit(const HardySpec& spec, const TestFunction& f, const QuadratureRule& rule) {
  spec.validate();
  const double gamma = resolve_gamma(spec);
  const auto integrals = hardy_integrals(spec, f, {spec.p}, rule);
  return assemble_report(spec, f, integrals.front(), gamma);
}

DivergenceBound general_divergence_bound(const Frame& frame, const sym::VectorField& g, const TestFunction& f,
                                         double p, const QuadratureRule& rule) {
  if (!(p > 1.0)) throw DomainError("p must exceed 1");
  if (g.size() != frame.dim_N()) throw StructuralError("divergence field needs one component per frame field");
  rule.validate();
  const std::size_t n = frame.dim_n();
  if (f.dim() != n) throw StructuralError("test function dimension does not match the frame");
  const auto& vars = frame.vars();
  for (const auto& c : g.components)
    for (std::size_t v = n; v < vars.size(); ++v)
      if (c.depends_on(v)) throw StructuralError("divergence field depends on symbol '" + vars.name(v) + "'");

  const sym::ScalarField div = calculus::horizontal_divergence(frame, g);
  std::vector<HornerPoly> coeffs;
  for (std::size_t k = 0; k < frame.dim_N(); ++k)
    for (std::size_t j = 0; j < n; ++j) coeffs.emplace_back(frame.coefficient(k, j));
  const double conj = p / (p - 1.0);
  const std::size_t N = frame.dim_N(), ring = vars.size();

  auto integrand = [&](std::span<const double> x, std::span<double> out) {
    std::vector<double> grad(n);
    const double fv = f.value_and_gradient(x, grad);
    if (fv == 0.0) {
      out[0] = out[1] = 0.0;
      return;
    }
    std::vector<double> buf(ring, 0.0);
    for (std::size_t i = 0; i < n; ++i) buf[i] = x[i];
    double g2 = 0.0, gg2 = 0.0;
    for (std::size_t k = 0; k < N; ++k) {
      double xf = 0.0;
      for (std::size_t j = 0; j < n; ++j) xf += coeffs[k * n + j](buf) * grad[j];
      g2 += xf * xf;
      const double gk = g.components[k].evaluate(buf);
      gg2 += gk * gk;
    }
    const double fp = std::pow(std::fabs(fv), p);
    out[0] = std::pow(g2, 0.5 * p);
    out[1] = (div.evaluate(buf) - (p - 1.0) * std::pow(gg2, 0.5 * conj)) * fp;
  };
  const auto support = f.support();
  const auto r = numerics::integrate_components(f.support_box(), rule, 2, integrand, &support);
  return {r[0].value, r[1].value, r[0].value - r[1].value, r[0].error_estimate + r[1].error_estimate};
}

}  // namespace hardy::inequality
