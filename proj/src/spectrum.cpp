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

#include "tercodes/spectrum.hpp"

#include <sstream>
#include <stdexcept>

#include "tercodes/function_spec.hpp"

namespace tercodes {

Trit evaluate_trace_polynomial(const Field& field, const std::vector<TraceTerm>& terms, const FieldElement& x) {
  FieldElement acc = field.zero();
  for (const auto& t : terms) acc = acc + t.coeff * x.pow(t.exponent);
  return field.trace(acc);
}

TernaryFunction TernaryFunction::from_terms(std::shared_ptr<const Field> field, std::vector<TraceTerm> terms) {
  for (const auto& t : terms) {
    if (&t.coeff.field() != field.get()) throw std::invalid_argument("term coefficient from a different field");
    if (t.exponent == 0) throw std::invalid_argument("exponents must be positive");
  }
  std::vector<Trit> table;
  table.reserve(field->size());
  for (std::uint32_t i = 0; i < field->size(); ++i) {
    table.push_back(evaluate_trace_polynomial(*field, terms, field->element(i)));
  }
  return TernaryFunction(std::move(field), std::move(terms), std::move(table));
}

TernaryFunction TernaryFunction::absolute_trace(std::shared_ptr<const Field> field) {
  std::vector<TraceTerm> terms{{field->one(), 1}};
  return from_terms(std::move(field), std::move(terms));
}

TernaryFunction TernaryFunction::from_table(std::shared_ptr<const Field> field, std::vector<Trit> table) {
  if (table.size() != field->size()) throw std::invalid_argument("function table has wrong length");
  for (Trit v : table) {
    if (v > 2) throw std::invalid_argument("function values must be in {0,1,2}");
  }
  return TernaryFunction(std::move(field), {}, std::move(table));
}

std::string TernaryFunction::description() const {
  if (terms_.empty()) return "<table> @ " + format_field_spec(*field_);
  return format_function_spec(*this);
}

EisensteinInt walsh_transform(const TernaryFunction& f, const FieldElement& alpha) {
  const Field& field = f.field();
  ZetaCounter acc;
  for (std::uint32_t i = 0; i < field.size(); ++i) {
    const FieldElement x = field.element(i);
    acc.add(sub3(f.at(i), field.trace(alpha * x)));
  }
  return acc.value();
}

namespace {

// Small exact Z[zeta] value for the butterfly; |coords| <= 3^n fits easily.
struct SmallEis {
  long long a = 0;
  long long b = 0;
};

SmallEis times_zeta_pow(SmallEis v, int c) {
  switch (c % 3) {
    case 0: return v;
    case 1: return {-v.b, v.a - v.b};   // (a + b z) z
    default: return {v.b - v.a, -v.a};  // (a + b z) z^2
  }
}

}  // namespace

std::vector<EisensteinInt> walsh_spectrum(const TernaryFunction& f) {
  const Field& field = f.field();
  const int n = field.degree();
  const std::uint64_t q = field.size();

  // F(v) = sum_x zeta^{f(x) - v.x} over coordinate vectors, digit i of the
  // index being coordinate i.
  std::vector<SmallEis> data(q);
  for (std::uint64_t i = 0; i < q; ++i) {
    data[i] = times_zeta_pow(SmallEis{1, 0}, f.at(static_cast<std::uint32_t>(i)));
  }
  for (int coord = 0; coord < n; ++coord) {
    const std::uint64_t stride = pow3(n - 1 - coord);
    for (std::uint64_t base = 0; base < q; base += 3 * stride) {
      for (std::uint64_t off = 0; off < stride; ++off) {
        const std::uint64_t i0 = base + off;
        const SmallEis in[3] = {data[i0], data[i0 + stride], data[i0 + 2 * stride]};
        for (int v = 0; v < 3; ++v) {
          SmallEis acc;
          for (int xi = 0; xi < 3; ++xi) {
            const SmallEis t = times_zeta_pow(in[xi], (3 - (v * xi) % 3) % 3);
            acc.a += t.a;
            acc.b += t.b;
          }
          data[i0 + static_cast<std::uint64_t>(v) * stride] = acc;
        }
      }
    }
  }

  // Tr(alpha x) = sum_i x_i Tr(alpha b_i) with b_i = x^i the basis.
  std::vector<FieldElement> basis;
  for (int i = 0; i < n; ++i) {
    std::vector<Trit> c(static_cast<std::size_t>(n), 0);
    c[static_cast<std::size_t>(i)] = 1;
    basis.push_back(field.from_coeffs(c));
  }
  std::vector<EisensteinInt> out(q);
  for (std::uint32_t ai = 0; ai < q; ++ai) {
    const FieldElement alpha = field.element(ai);
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i) v = v * 3 + field.trace(alpha * basis[static_cast<std::size_t>(i)]);
    out[ai] = EisensteinInt(mpz_class(static_cast<long>(data[v].a)), mpz_class(static_cast<long>(data[v].b)));
  }
  return out;
}

namespace {

// Writes u = eps * zeta^j for a unit u of Z[zeta]; every unit has this form.
bool decompose_unit(const EisensteinInt& u, int& eps, Trit& j) {
  for (Trit c = 0; c < 3; ++c) {
    const EisensteinInt z = zeta_power(c);
    if (u == z) {
      eps = 1;
      j = c;
      return true;
    }
    if (u == -z) {
      eps = -1;
      j = c;
      return true;
    }
  }
  return false;
}

}  // namespace

SpectrumProfile analyze(const TernaryFunction& f) {
  SpectrumProfile p;
  p.field = f.field_ptr();
  p.values = f.table();
  p.spectrum = walsh_spectrum(f);
  const Field& field = f.field();
  const int n = field.degree();
  const std::uint64_t q = field.size();

  p.in_support.assign(q, false);
  p.dual_table.assign(q, 0);
  p.balanced = p.spectrum[0].is_zero();

  std::optional<mpz_class> level;
  bool uniform = true;
  for (std::uint32_t i = 0; i < q; ++i) {
    if (p.spectrum[i].is_zero()) continue;
    p.in_support[i] = true;
    p.support.push_back(i);
    const mpz_class nrm = p.spectrum[i].norm();
    if (!level) {
      level = nrm;
    } else if (*level != nrm) {
      uniform = false;
    }
  }
  if (uniform && level) {
    mpz_class target = 1;
    for (int e = 0; e <= 2 * n; ++e) {
      if (target == *level && e >= n) {
        p.k = e - n;
        break;
      }
      target *= 3;
    }
  }
  p.plateaued = p.k.has_value();

  const Trit two = 2;
  bool even = f.at(0) == 0;
  for (std::uint32_t i = 0; even && i < q; ++i) {
    even = f.at(i) == f.at((two * field.element(i)).index());
  }
  p.even_homogeneous = even;

  if (!p.plateaued) return p;

  const EisensteinInt scale = sqrt_neg3_power(static_cast<unsigned>(n + *p.k));
  int common_eps = 0;
  bool regular = true;
  for (std::uint32_t i : p.support) {
    auto u = p.spectrum[i].divide(scale);
    int eps = 0;
    Trit j = 0;
    if (!u || !decompose_unit(*u, eps, j)) {
      regular = false;
      break;
    }
    if (common_eps == 0) common_eps = eps;
    if (eps != common_eps) {
      regular = false;
      break;
    }
    p.dual_table[i] = j;
  }
  if (!regular) {
    p.dual_table.assign(q, 0);
    return p;
  }
  p.weakly_regular = true;
  p.epsilon = common_eps;
  p.in_wrp = !p.balanced && p.even_homogeneous;

  bool dual_even = true;
  for (std::uint32_t i : p.support) {
    const std::uint32_t j = (two * field.element(i)).index();
    if (!p.in_support[j] || p.dual_table[j] != p.dual_table[i]) {
      dual_even = false;
      break;
    }
  }
  p.dual_homogeneous = dual_even;
  return p;
}

EisensteinInt reconstruct_walsh_value(const SpectrumProfile& p, std::uint32_t alpha_index) {
  if (!p.weakly_regular) throw std::invalid_argument("profile is not weakly regular");
  if (!p.in_support[alpha_index]) return EisensteinInt(0);
  return EisensteinInt(p.epsilon) * sqrt_neg3_power(static_cast<unsigned>(p.n() + *p.k)) *
         zeta_power(p.dual_table[alpha_index]);
}

}  // namespace tercodes
