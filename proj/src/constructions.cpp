// Copyright 2026 The tercodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tercodes/constructions.hpp"

#include <sstream>

namespace tercodes {

std::string to_string(ConstructionKind k) { return k == ConstructionKind::kFG ? "fg" : "traceg"; }

std::vector<std::string> admission_failures(const SpectrumProfile& p, bool require_dual_homogeneous) {
  std::vector<std::string> out;
  if (!p.plateaued) {
    out.push_back("not plateaued");
  } else if (!p.weakly_regular) {
    out.push_back("not weakly regular with sign in {+1,-1}");
  }
  if (p.balanced) out.push_back("balanced (W(0) = 0)");
  if (p.values[0] != 0) out.push_back("value at 0 is nonzero");
  bool symmetric = true;
  for (std::uint32_t i = 0; symmetric && i < p.values.size(); ++i) {
    symmetric = p.values[i] == p.values[(Trit{2} * p.field->element(i)).index()];
  }
  if (!symmetric) out.push_back("f(2x) != f(x) for some x");
  if (require_dual_homogeneous && p.weakly_regular && !p.dual_homogeneous) {
    out.push_back("dual function not homogeneous on the support");
  }
  return out;
}

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& r : v) {
    if (!s.empty()) s += "; ";
    s += r;
  }
  return s;
}

}  // namespace

AdmissionError::AdmissionError(const std::string& which, std::vector<std::string> reasons)
    : std::invalid_argument(which + " rejected: " + join(reasons)), reasons_(std::move(reasons)) {}

DefiningSet build_defining_set(const TernaryFunction& f, const TernaryFunction& g, Trit lambda, bool check_admission) {
  if (lambda == 0 || lambda > 2) throw std::invalid_argument("lambda must be 1 or 2");
  if (check_admission) {
    if (auto r = admission_failures(analyze(f), true); !r.empty()) throw AdmissionError("f", r);
    if (auto r = admission_failures(analyze(g), true); !r.empty()) throw AdmissionError("g", r);
  }
  DefiningSet ds;
  ds.kind = ConstructionKind::kFG;
  ds.lambda = lambda;
  ds.x_field = f.field_ptr();
  ds.y_field = g.field_ptr();
  for (std::uint32_t i = 0; i < f.field().size(); ++i) {
    for (std::uint32_t j = 0; j < g.field().size(); ++j) {
      if (add3(add3(f.at(i), g.at(j)), lambda) == 0) ds.pairs.emplace_back(i, j);
    }
  }
  if (ds.pairs.empty()) throw std::logic_error("empty defining set");
  return ds;
}

DefiningSet build_trace_defining_set(std::shared_ptr<const Field> x_field, const TernaryFunction& g, Trit lambda,
                                     bool check_admission) {
  if (lambda == 0 || lambda > 2) throw std::invalid_argument("lambda must be 1 or 2");
  if (check_admission) {
    if (auto r = admission_failures(analyze(g), false); !r.empty()) throw AdmissionError("g", r);
  }
  DefiningSet ds;
  ds.kind = ConstructionKind::kTraceG;
  ds.lambda = lambda;
  ds.x_field = std::move(x_field);
  ds.y_field = g.field_ptr();
  for (std::uint32_t i = 0; i < ds.x_field->size(); ++i) {
    const Trit tx = ds.x_field->trace(ds.x_field->element(i));
    for (std::uint32_t j = 0; j < g.field().size(); ++j) {
      if (add3(add3(tx, g.at(j)), lambda) == 0) ds.pairs.emplace_back(i, j);
    }
  }
  if (ds.pairs.empty()) throw std::logic_error("empty defining set");
  return ds;
}

Gf3Matrix augmented_generator(const DefiningSet& ds) {
  const Field& fx = *ds.x_field;
  const Field& fy = *ds.y_field;
  const std::size_t rows = static_cast<std::size_t>(fx.degree() + fy.degree() + 1);
  Gf3Matrix g(rows, ds.size());
  std::size_t r = 0;
  FieldElement p = fx.one();
  for (int i = 0; i < fx.degree(); ++i, ++r) {
    for (std::size_t j = 0; j < ds.size(); ++j) g.set(r, j, fx.trace(p * fx.element(ds.pairs[j].first)));
    p = p * fx.primitive_element();
  }
  p = fy.one();
  for (int i = 0; i < fy.degree(); ++i, ++r) {
    for (std::size_t j = 0; j < ds.size(); ++j) g.set(r, j, fy.trace(p * fy.element(ds.pairs[j].second)));
    p = p * fy.primitive_element();
  }
  for (std::size_t j = 0; j < ds.size(); ++j) g.set(r, j, 1);
  return g;
}

namespace {

bool duals_vanish_at_zero(const SpectrumProfile& p) { return !p.in_support[0] || p.dual_table[0] == 0; }

}  // namespace

PredictionContext make_context(const SpectrumProfile& f, const SpectrumProfile& g, Trit lambda) {
  if (!f.weakly_regular || !g.weakly_regular) throw std::invalid_argument("profiles must be weakly regular");
  PredictionContext c;
  c.kind = ConstructionKind::kFG;
  c.n = f.n();
  c.m = g.n();
  c.k_f = *f.k;
  c.eps_f = f.epsilon;
  c.k_g = *g.k;
  c.eps_g = g.epsilon;
  c.lambda = lambda;
  c.duals_vanish_at_zero = duals_vanish_at_zero(f) && duals_vanish_at_zero(g);
  return c;
}

PredictionContext make_trace_context(int n, const SpectrumProfile& g, Trit lambda) {
  if (!g.weakly_regular) throw std::invalid_argument("profile must be weakly regular");
  PredictionContext c;
  c.kind = ConstructionKind::kTraceG;
  c.n = n;
  c.m = g.n();
  c.k_g = *g.k;
  c.eps_g = g.epsilon;
  c.lambda = lambda;
  c.duals_vanish_at_zero = duals_vanish_at_zero(g);
  return c;
}

namespace {

mpq_class pow_q(long base, long e) {
  mpz_class p;
  const long b = base < 0 ? -base : base;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e < 0 ? -e : e));
  if (base < 0 && (e % 2 != 0)) p = -p;
  return e < 0 ? mpq_class(1, 1) / mpq_class(p) : mpq_class(p);
}

// (-3)^e for an integer exponent e (may be negative).
mpq_class neg3(long e) { return pow_q(-3, e); }
mpq_class three(long e) { return pow_q(3, e); }
long sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

Prediction predict(const PredictionContext& c, TableReading reading) {
  Prediction out;
  if (c.lambda == 0) {
    out.unmet = "lambda must be nonzero";
    return out;
  }
  if (!c.duals_vanish_at_zero) {
    out.unmet = "dual function is nonzero at 0";
    return out;
  }
  PredictedCode p;
  const long n = c.n;
  const long m = c.m;
  const long s = n + m;
  p.dimension = static_cast<std::size_t>(s + 1);
  std::vector<std::pair<mpq_class, mpq_class>> rows;
  mpq_class length;

  if (c.kind == ConstructionKind::kFG) {
    const long K = c.k_f + c.k_g;
    const long e = c.eps_f * c.eps_g;
    if (!(K < s - 3)) {
      out.unmet = "k_f + k_g < s - 3 does not hold";
      return out;
    }
    if ((s + K) % 2 == 0) {
      p.source = "table1";
      const mpq_class a = e * neg3((s + K - 2) / 2);
      const mpq_class b = sign_pow(s + 1) * e * neg3((s - K - 2) / 2);
      const mpq_class base = 2 * three(s - 2);
      length = three(s - 1) + a;
      rows = {
          {base + 2 * a, three(s - K - 1) - b},
          {base + a, 4 * three(s - K - 1) + 2 * b - 2},
          {base, 4 * three(s - K - 1) - b - 1},
          {three(s - 1) + a, 2},
      };
      const mpq_class last = reading == TableReading::kAsPrinted ? base - 2 * a : base - 2 * e * neg3((s + K - 4) / 2);
      rows.emplace_back(last, three(s + 1) - three(s - K + 1));
    } else {
      const mpq_class a = e * neg3((s + K - 3) / 2);
      const mpq_class cc = e * neg3((s + K - 1) / 2);
      const mpq_class b1 = sign_pow(s) * e * neg3((s - K + 1) / 2);
      const mpq_class b = sign_pow(s) * e * neg3((s - K - 1) / 2);
      const mpq_class base = 2 * three(s - 2);
      const mpq_class t = three(s - K - 1);
      if (c.lambda == 1) {
        p.source = "table2";
        length = three(s - 1) - cc;
        rows = {
            {base + 2 * a, three(s + 1) - 2 * three(s - K) + b1},
            {base, t - 1},
            {base + 4 * a, t + b},
            {base - cc, 2 * t - 2},
            {base + a, 2 * t + 2 * b},
            {three(s - 1) - cc, 2},
        };
      } else {
        p.source = "table3";
        length = three(s - 1) + cc;
        rows = {
            {base - 2 * a, three(s + 1) - 2 * three(s - K) - b1},
            {base - 4 * a, t - b},
            {base, t - 1},
            {base - a, 2 * t - 2 * b},
            {base + cc, 2 * t - 2},
            {three(s - 1) + cc, 2},
        };
      }
    }
  } else {
    const long k = c.k_g;
    const long eg = c.eps_g;
    // k_g = m means g is constant on GF(3^m); then Tr(x) is constant on the
    // defining set and the all-ones row is already in the span.
    if (!(k < m)) {
      out.unmet = "k_g < m does not hold";
      return out;
    }
    const mpq_class base = 2 * three(s - 2);
    const mpq_class t = three(m - k);
    length = three(s - 1);
    if ((m + k) % 2 == 0) {
      p.source = "table4";
      const mpq_class a = three(n - 2) * eg * neg3((m + k) / 2);
      rows = {
          {base - 2 * a, 2 * t},
          {base + a, 4 * t},
          {base, three(s + 1) - 2 * three(m - k + 1) - 3},
          {three(s - 1), 2},
      };
    } else {
      p.source = "table5";
      const mpq_class a = three(n - 2) * eg * neg3((m + k + 1) / 2);
      rows = {
          {base - a, 2 * t},
          {base + a, 2 * t},
          {base, three(s + 1) - 4 * t - 3},
          {three(s - 1), 2},
      };
    }
  }

  p.rows.push_back({0, 1});
  for (auto& [w, a] : rows) p.rows.push_back({w, a});

  bool integral = length.get_den() == 1;
  p.length = length.get_num();
  mpz_class total = 0;
  mpz_class moment = 0;
  for (const auto& r : p.rows) {
    if (r.weight.get_den() != 1 || r.multiplicity.get_den() != 1 || r.multiplicity < 0 || r.weight < 0) {
      integral = false;
      continue;
    }
    const mpz_class w = r.weight.get_num();
    const mpz_class a = r.multiplicity.get_num();
    total += a;
    moment += w * a;
    if (a != 0) p.merged[w] += a;
  }
  mpz_class full;
  mpz_ui_pow_ui(full.get_mpz_t(), 3, p.dimension);
  p.consistent = integral && total == full;
  p.first_moment_holds = integral && moment == 2 * (full / 3) * p.length;
  p.dual_length = p.length;
  p.dual_dimension = p.length - static_cast<long>(p.dimension);
  for (const auto& [w, a] : p.merged) {
    if (w > 0) {
      p.lcd_distance_lower_bound = w + 1;
      break;
    }
  }
  out.code = std::move(p);
  return out;
}

bool matches(const PredictedCode& p, const WeightDistribution& actual) {
  if (p.merged.size() != actual.counts.size()) return false;
  auto it = actual.counts.begin();
  for (const auto& [w, a] : p.merged) {
    if (w != static_cast<unsigned long>(it->first) || a != static_cast<unsigned long>(it->second)) return false;
    ++it;
  }
  return true;
}

Gf3Matrix lcd_generator(const DefiningSet& ds) {
  const Gf3Matrix g = augmented_generator(ds);
  return Gf3Matrix::hconcat(Gf3Matrix::identity(g.rows()), g);
}

namespace {

std::string mz(const mpz_class& v) { return v.get_str(); }

}  // namespace

VerificationReport verify_construction(const DefiningSet& ds, const SpectrumProfile* f_profile,
                                       const SpectrumProfile& g_profile, const VerifyOptions& opts) {
  VerificationReport rep;
  rep.kind = ds.kind;
  if (ds.kind == ConstructionKind::kFG) {
    if (!f_profile) throw std::invalid_argument("fg construction needs the profile of f");
    rep.f_profile = *f_profile;
  }
  rep.g_profile = g_profile;
  rep.context.kind = ds.kind;
  rep.context.lambda = ds.lambda;
  auto& bad = rep.mismatches;

  const LinearCode code(augmented_generator(ds));
  rep.length = code.length();
  rep.dimension = code.dimension();
  rep.distribution = weight_distribution(code, opts.jobs);
  rep.d = rep.distribution.min_nonzero();
  rep.self_orthogonal = is_self_orthogonal(code, &rep.distribution);
  rep.dual = dual_min_distance_upto3(code);
  rep.pless = pless_check(rep.length, rep.dimension, rep.distribution);
  if (!rep.self_orthogonal.agree()) bad.push_back("self-orthogonality methods disagree");

  const bool regular = g_profile.weakly_regular && (ds.kind == ConstructionKind::kTraceG || f_profile->weakly_regular);
  if (regular) {
    rep.context = ds.kind == ConstructionKind::kFG ? make_context(*f_profile, g_profile, ds.lambda)
                                                   : make_trace_context(ds.n(), g_profile, ds.lambda);
    rep.prediction = predict(rep.context, opts.reading);
  } else {
    rep.prediction.unmet = "functions are not weakly regular";
  }

  if (rep.prediction.code) {
    const PredictedCode& p = *rep.prediction.code;
    if (p.length != static_cast<unsigned long>(rep.length)) {
      bad.push_back("length: predicted " + mz(p.length) + ", actual " + std::to_string(rep.length));
    }
    if (p.dimension != rep.dimension) {
      bad.push_back("dimension: predicted " + std::to_string(p.dimension) + ", actual " +
                    std::to_string(rep.dimension));
    }
    if (!matches(p, rep.distribution)) {
      std::ostringstream os;
      os << "weight distribution: predicted ";
      bool first = true;
      for (const auto& [w, a] : p.merged) {
        os << (first ? "" : "+") << a << (w == 0 ? "" : "x^" + mz(w));
        first = false;
      }
      os << ", actual " << rep.distribution.enumerator();
      bad.push_back(os.str());
    }
    if (!rep.self_orthogonal.gram_zero) bad.push_back("code is not self-orthogonal");
    if (rep.dual.verdict != DualDistance::kThree) bad.push_back("dual distance: predicted 3, actual " + to_string(rep.dual.verdict));
    if (!(rep.pless.dual_a1 == 0 && rep.pless.dual_a2 == 0 && rep.pless.dual_a3 > 0)) {
      bad.push_back("power moments do not give A1 = A2 = 0 < A3 for the dual");
    }
  }

  if (opts.lcd) {
    LcdReport lr;
    if (!rep.self_orthogonal.gram_zero) bad.push_back("LCD lift requires a self-orthogonal input");
    const LinearCode lcd(lcd_generator(ds));
    lr.length = lcd.length();
    lr.dimension = lcd.dimension();
    lr.distribution = weight_distribution(lcd, opts.jobs);
    lr.d = lr.distribution.min_nonzero();
    lr.gram_nonsingular = is_lcd(lcd);
    lr.dual = dual_min_distance_upto3(lcd);
    lr.dual_dimension = lr.length - lr.dimension;
    lr.bound_max_d = sphere_packing_max_d(lr.length, lr.dual_dimension);
    if (lr.dual.verdict == DualDistance::kThree) {
      lr.dual_class = classify_against_bound(lr.length, lr.dual_dimension, 3);
    }
    if (!lr.gram_nonsingular) bad.push_back("LCD lift: G G^T is singular");
    if (rep.prediction.code) {
      lr.d_lower_bound = rep.prediction.code->lcd_distance_lower_bound;
      if (lr.d && mpz_class(static_cast<unsigned long>(*lr.d)) < *lr.d_lower_bound) {
        bad.push_back("LCD lift: distance " + std::to_string(*lr.d) + " below bound " + mz(*lr.d_lower_bound));
      }
      if (lr.dual.verdict != DualDistance::kThree) {
        bad.push_back("LCD dual distance: predicted 3, actual " + to_string(lr.dual.verdict));
      } else if (lr.dual_class != BoundClass::kOptimal && lr.dual_class != BoundClass::kAlmostOptimal) {
        bad.push_back("LCD dual is " + to_string(lr.dual_class) + " against the sphere-packing bound");
      }
    }
    if (rep.d && lr.d && *lr.d < *rep.d + 1) bad.push_back("LCD lift: distance below d(SO code) + 1");
    rep.lcd = std::move(lr);
  }
  return rep;
}

}  // namespace tercodes
