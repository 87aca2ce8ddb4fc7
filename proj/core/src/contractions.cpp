#include "gfix/contractions.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "gfix/errors.hpp"
#include "gfix/sampling.hpp"

namespace gfix {

namespace {

constexpr std::array<std::pair<ConditionKind, std::string_view>, 6> kConditionNames = {{
    {ConditionKind::FourTerm, "four-term"},
    {ConditionKind::FourTermAlt, "four-term-alt"},
    {ConditionKind::Sum, "sum"},
    {ConditionKind::Max, "max"},
    {ConditionKind::ThreeTerm, "three-term"},
    {ConditionKind::KSum, "k-sum"},
}};

Point apply(const GSpace& space, const Mapping& mapping, const Point& x) {
  Point tx = mapping(x);
  if (!space.contains(tx)) {
    throw InputError("mapping " + mapping.name + " sends " + to_string(x) + " outside " +
                     space.name);
  }
  return tx;
}

ApplicabilityVerdict verdict(std::string theorem,
                             std::vector<std::pair<std::string, double>> residuals) {
  ApplicabilityVerdict v;
  v.theorem = std::move(theorem);
  v.residuals = std::move(residuals);
  v.satisfied = std::all_of(v.residuals.begin(), v.residuals.end(),
                            [](const auto& r) { return r.second > 0.0; });
  return v;
}

}  // namespace

std::string_view condition_name(ConditionKind kind) {
  for (const auto& [k, name] : kConditionNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

ConditionKind parse_condition(std::string_view name) {
  for (const auto& [k, n] : kConditionNames) {
    if (n == name) return k;
  }
  throw InputError("unknown condition '" + std::string(name) + "'");
}

std::vector<char> coefficient_names(ConditionKind kind) {
  switch (kind) {
    case ConditionKind::FourTerm:
    case ConditionKind::FourTermAlt:
      return {'a', 'b', 'c', 'd'};
    case ConditionKind::Sum:
    case ConditionKind::Max:
      return {'a', 'b'};
    case ConditionKind::ThreeTerm:
      return {'a', 'b', 'c'};
    case ConditionKind::KSum:
      return {'k'};
  }
  return {};
}

void ContractionSpec::set(char name, double value) {
  const auto names = coefficient_names(kind);
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw InputError(std::string("condition ") + std::string(condition_name(kind)) +
                     " has no coefficient '" + name + "'");
  }
  if (!std::isfinite(value) || value < 0.0) {
    throw InputError(std::string("coefficient ") + name + " must be a finite nonnegative real");
  }
  switch (name) {
    case 'a': a = value; break;
    case 'b': b = value; break;
    case 'c': c = value; break;
    case 'd': d = value; break;
    case 'k': k = value; break;
    default: break;
  }
}

double ContractionSpec::get(char name) const {
  switch (name) {
    case 'a': return a;
    case 'b': return b;
    case 'c': return c;
    case 'd': return d;
    case 'k': return k;
    default: throw InputError(std::string("no coefficient '") + name + "'");
  }
}

void ContractionSpec::validate() const {
  for (char n : {'a', 'b', 'c', 'd', 'k'}) {
    const double v = get(n);
    if (!std::isfinite(v) || v < 0.0) {
      throw InputError(std::string("coefficient ") + n + " must be a finite nonnegative real");
    }
  }
}

Mapping make_affine_contraction(const Point& center, double factor) {
  if (!std::isfinite(factor) || factor < 0.0) {
    throw InputError("affine factor must be a finite nonnegative real");
  }
  Mapping m;
  m.name = "affine(k=" + format_real(factor) + ", center=" + to_string(center) + ")";
  m.t = [center, factor](const Point& x) {
    if (x.dim() != center.dim()) throw InputError("affine map applied to a point of wrong dimension");
    std::vector<double> out(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) out[i] = center[i] + factor * (x[i] - center[i]);
    return Point(std::move(out));
  };
  if (factor < 1.0) m.known_fixed_point = center;
  return m;
}

Mapping make_translation(const Point& shift) {
  Mapping m;
  m.name = "translate(" + to_string(shift) + ")";
  m.t = [shift](const Point& x) {
    if (x.dim() != shift.dim()) throw InputError("translation applied to a point of wrong dimension");
    std::vector<double> out(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) out[i] = x[i] + shift[i];
    return Point(std::move(out));
  };
  return m;
}

Mapping make_constant_map(const Point& value) {
  Mapping m;
  m.name = "constant(" + to_string(value) + ")";
  m.t = [value](const Point&) { return value; };
  m.known_fixed_point = value;
  return m;
}

Mapping make_identity_map() {
  Mapping m;
  m.name = "identity";
  m.t = [](const Point& x) { return x; };
  return m;
}

bool fixed_point_consistent(const GSpace& space, const Mapping& mapping) {
  if (!mapping.known_fixed_point) return true;
  const Point& u = *mapping.known_fixed_point;
  return eval_g(space, apply(space, mapping, u), u, u) <= 1e-9;
}

double rhs_value(const ContractionSpec& spec, const GSpace& space, const Mapping& mapping,
                 const Point& x, const Point& y, const Point& z) {
  spec.validate();
  const Point tx = apply(space, mapping, x);
  const Point ty = apply(space, mapping, y);
  const Point tz = apply(space, mapping, z);
  const auto g = [&](const Point& p, const Point& q, const Point& r) {
    return eval_g(space, p, q, r);
  };

  switch (spec.kind) {
    case ConditionKind::FourTerm:
      return spec.a * g(x, y, z) + spec.b * g(x, tx, tx) + spec.c * g(y, ty, ty) +
             spec.d * g(z, tz, tz);
    case ConditionKind::FourTermAlt:
      return spec.a * g(x, y, z) + spec.b * g(x, x, tx) + spec.c * g(y, y, ty) +
             spec.d * g(z, z, tz);
    case ConditionKind::Sum:
      return spec.a * g(x, y, z) + spec.b * (g(x, tx, tx) + g(y, ty, ty) + g(z, tz, tz));
    case ConditionKind::Max:
      return spec.a * g(x, y, z) + spec.b * std::max({g(x, tx, tx), g(y, ty, ty), g(z, tz, tz)});
    case ConditionKind::ThreeTerm:
      return spec.a * g(x, tx, tx) + spec.b * g(y, ty, ty) + spec.c * g(z, tz, tz);
    case ConditionKind::KSum:
      return spec.k * (g(x, tx, tx) + g(y, ty, ty) + g(z, tz, tz));
  }
  throw InputError("unhandled condition kind");
}

CheckReport check_condition(const ContractionSpec& spec, const GSpace& space,
                            const Mapping& mapping, const SamplePlan& plan, double tol) {
  plan.validate();
  spec.validate();
  ReportBuilder rb;

  for_each_tuple(space, plan, 3, [&](const SampledTuple& t) {
    const Point& x = t.points[0];
    const Point& y = t.points[1];
    const Point& z = t.points[2];
    const double lhs =
        eval_g(space, apply(space, mapping, x), apply(space, mapping, y), apply(space, mapping, z));
    const double rhs = rhs_value(spec, space, mapping, x, y, z);
    rb.note_ratio(lhs, rhs);
    rb.check_le("C", lhs, rhs, tol, {x, y, z});
  });

  return std::move(rb).finish();
}

ApplicabilityVerdict check_applicability(const ContractionSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case ConditionKind::FourTerm:
    case ConditionKind::FourTermAlt: {
      auto v = verdict("four-term Mann convergence (delta = (a+b)/(1-2b))",
                       {{"1-(a+3b)", 1.0 - (spec.a + 3.0 * spec.b)}, {"1-2b", 1.0 - 2.0 * spec.b}});
      v.informational = {{"1-(a+b+c+d)", 1.0 - (spec.a + spec.b + spec.c + spec.d)}};
      if (spec.kind == ConditionKind::FourTermAlt) {
        v.caveat =
            "the G(x,x,Tx) orientation has no dedicated convergence result; the four-term "
            "constraint is applied by analogy";
      }
      return v;
    }
    case ConditionKind::Sum:
      return verdict("sum-condition Mann convergence (b = c = d reduction)",
                     {{"a+3b", spec.a + 3.0 * spec.b}, {"1-(a+3b)", 1.0 - (spec.a + 3.0 * spec.b)}});
    case ConditionKind::Max:
      return verdict("max-condition Mann convergence",
                     {{"a+3b", spec.a + 3.0 * spec.b}, {"1-(a+3b)", 1.0 - (spec.a + 3.0 * spec.b)}});
    case ConditionKind::ThreeTerm:
      return verdict("three-term Mann convergence (delta = a/(1-2a))",
                     {{"1-(a+b+c)", 1.0 - (spec.a + spec.b + spec.c)}, {"1/2-a", 0.5 - spec.a}});
    case ConditionKind::KSum:
      return verdict("k-sum Mann convergence (a = b = c = k reduction)",
                     {{"k", spec.k}, {"1/3-k", 1.0 / 3.0 - spec.k}});
  }
  throw InputError("unhandled condition kind");
}

}  // namespace gfix
