#include "vallab/zeta.hpp"

#include <algorithm>
#include <cmath>

namespace vallab {

namespace {

bool integral(double p) { return p >= 0 && std::floor(p) == p; }

Scalar eval_table(const std::vector<std::pair<Scalar, Scalar>>& knots, const Scalar& t) {
  if (t <= knots.front().first) return knots.front().second;
  if (t >= knots.back().first) return knots.back().second;
  auto hi = std::upper_bound(knots.begin(), knots.end(), t,
                             [](const Scalar& v, const auto& k) { return v < k.first; });
  auto lo = std::prev(hi);
  const Scalar w = (t - lo->first) / (hi->first - lo->first);
  return lo->second + w * (hi->second - lo->second);
}

double eval_table(const std::vector<std::pair<Scalar, Scalar>>& knots, double t) {
  if (t <= knots.front().first.to_double()) return knots.front().second.to_double();
  if (t >= knots.back().first.to_double()) return knots.back().second.to_double();
  for (std::size_t i = 1; i < knots.size(); ++i) {
    const double x1 = knots[i].first.to_double();
    if (t <= x1) {
      const double x0 = knots[i - 1].first.to_double();
      const double y0 = knots[i - 1].second.to_double();
      const double y1 = knots[i].second.to_double();
      return y0 + (t - x0) / (x1 - x0) * (y1 - y0);
    }
  }
  return knots.back().second.to_double();
}

UnaryFunction::Term power_term(UnaryFunction::Kind kind, double p) {
  if (!(p >= 0) || !std::isfinite(p)) throw DomainError("exponent must be a finite number >= 0");
  UnaryFunction::Term term;
  term.kind = kind;
  term.exponent = p;
  return term;
}

}  // namespace

UnaryFunction UnaryFunction::constant(const Scalar& c) { return polynomial({c}); }

UnaryFunction UnaryFunction::polynomial(const std::vector<Scalar>& coeffs) {
  UnaryFunction f;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    Term term = power_term(Kind::power, static_cast<double>(k));
    term.coeff = coeffs[k];
    f.terms_.push_back(std::move(term));
  }
  return f;
}

UnaryFunction UnaryFunction::abs_power(double p) {
  UnaryFunction f;
  f.terms_.push_back(power_term(Kind::abs_power, p));
  return f;
}

UnaryFunction UnaryFunction::plus_power(double p) {
  UnaryFunction f;
  f.terms_.push_back(power_term(Kind::plus_power, p));
  return f;
}

UnaryFunction UnaryFunction::minus_power(double p) {
  UnaryFunction f;
  f.terms_.push_back(power_term(Kind::minus_power, p));
  return f;
}

UnaryFunction UnaryFunction::table(std::vector<std::pair<Scalar, Scalar>> knots) {
  if (knots.empty()) throw InputError("table function needs at least one knot");
  for (std::size_t i = 1; i < knots.size(); ++i)
    if (!(knots[i - 1].first < knots[i].first)) throw InputError("table knots must be strictly increasing");
  UnaryFunction f;
  Term term;
  term.kind = Kind::table;
  term.knots = std::move(knots);
  f.terms_.push_back(std::move(term));
  return f;
}

UnaryFunction UnaryFunction::oracle(std::function<Scalar(const Scalar&)> fn, std::string label) {
  UnaryFunction f;
  Term term;
  term.kind = Kind::oracle;
  term.oracle = std::make_shared<const std::function<Scalar(const Scalar&)>>(std::move(fn));
  term.label = std::move(label);
  f.terms_.push_back(std::move(term));
  return f;
}

bool UnaryFunction::exact() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& term) {
    switch (term.kind) {
      case Kind::table:
      case Kind::oracle:
        return true;
      default:
        return integral(term.exponent);
    }
  });
}

Scalar UnaryFunction::operator()(const Scalar& t) const {
  Scalar total(0);
  for (const auto& term : terms_) {
    Scalar v;
    switch (term.kind) {
      case Kind::table:
        v = eval_table(term.knots, t);
        break;
      case Kind::oracle:
        v = (*term.oracle)(t);
        break;
      default: {
        if (!integral(term.exponent)) throw DomainError("non-integer exponent has no exact value");
        const auto k = static_cast<unsigned>(term.exponent);
        Scalar base = t;
        if (term.kind == Kind::abs_power) base = abs(t);
        if (term.kind == Kind::plus_power) base = t.sign() > 0 ? t : Scalar(0);
        if (term.kind == Kind::minus_power) base = t.sign() < 0 ? -t : Scalar(0);
        v = pow(base, k);
      }
    }
    total += term.coeff * v;
  }
  return total;
}

double UnaryFunction::approx(double t) const {
  double total = 0;
  for (const auto& term : terms_) {
    double v = 0;
    switch (term.kind) {
      case Kind::table:
        v = eval_table(term.knots, t);
        break;
      case Kind::oracle:
        v = (*term.oracle)(Scalar(Rational(t))).to_double();
        break;
      case Kind::power:
        v = std::pow(t, term.exponent);
        break;
      case Kind::abs_power:
        v = std::pow(std::abs(t), term.exponent);
        break;
      case Kind::plus_power:
        v = std::pow(std::max(t, 0.0), term.exponent);
        break;
      case Kind::minus_power:
        v = std::pow(std::max(-t, 0.0), term.exponent);
        break;
    }
    total += term.coeff.to_double() * v;
  }
  return total;
}

UnaryFunction operator+(UnaryFunction f, const UnaryFunction& g) {
  f.terms_.insert(f.terms_.end(), g.terms_.begin(), g.terms_.end());
  return f;
}

UnaryFunction operator*(const Scalar& c, UnaryFunction f) {
  if (c.is_zero()) return {};
  for (auto& term : f.terms_) term.coeff = c * term.coeff;
  return f;
}

ZetaSpec ZetaSpec::from_eta(const UnaryFunction& eta) { return {eta, Scalar::sqrt2() * eta}; }

ZetaSpec ZetaSpec::non_additive(std::string label, std::function<Scalar(const Scalar&, const Scalar&)> f) {
  ZetaSpec z;
  z.custom_ = std::make_shared<const std::function<Scalar(const Scalar&, const Scalar&)>>(std::move(f));
  z.label_ = std::move(label);
  return z;
}

bool ZetaSpec::exact() const { return custom_ != nullptr || (eta_a_.exact() && eta_b_.exact()); }

Scalar ZetaSpec::operator()(const Scalar& t, const Scalar& s) const {
  if (custom_) return (*custom_)(t, s);
  Scalar v(0);
  if (!s.a().is_zero()) v += eta_a_(t) * Scalar(s.a());
  if (!s.b().is_zero()) v += eta_b_(t) * Scalar(s.b());
  return v;
}

double ZetaSpec::approx(double t, const Scalar& s) const {
  if (custom_) return (*custom_)(Scalar(Rational(t)), s).to_double();
  double v = 0;
  if (!s.a().is_zero()) v += eta_a_.approx(t) * s.a().convert_to<double>();
  if (!s.b().is_zero()) v += eta_b_.approx(t) * s.b().convert_to<double>();
  return v;
}

ZetaSpec operator+(const ZetaSpec& x, const ZetaSpec& y) {
  if (!x.additive() || !y.additive()) throw DomainError("sum of non-additive zeta specs");
  return {x.eta_a_ + y.eta_a_, x.eta_b_ + y.eta_b_};
}

}  // namespace vallab
