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

#include "tercodes/charsums.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>
#include <thread>

namespace tercodes {

PairContext make_pair_context(const SpectrumProfile& f, const SpectrumProfile& g, Trit lambda, Trit mu) {
  if (!f.weakly_regular || !g.weakly_regular) throw std::invalid_argument("both functions must be weakly regular");
  if (lambda > 2 || mu > 2) throw std::invalid_argument("lambda and mu must lie in GF(3)");
  return PairContext{&f, &g, lambda, mu};
}

TraceContext make_trace_sum_context(std::shared_ptr<const Field> x_field, const SpectrumProfile& g, Trit lambda,
                                    Trit mu) {
  if (!g.weakly_regular) throw std::invalid_argument("g must be weakly regular");
  if (lambda > 2 || mu > 2) throw std::invalid_argument("lambda and mu must lie in GF(3)");
  return TraceContext{std::move(x_field), &g, lambda, mu};
}

namespace {

using Hist = std::array<std::array<std::uint64_t, 3>, 3>;

mpq_class pow_signed(long base, long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base),
                static_cast<unsigned long>(e < 0 ? -e : e));
  if (base < 0 && e % 2 != 0) p = -p;
  return e < 0 ? mpq_class(1) / mpq_class(p) : mpq_class(p);
}

mpq_class m3pow(long e) { return pow_signed(-3, e); }
mpq_class three(long e) { return pow_signed(3, e); }
long sgn(long e) { return e % 2 == 0 ? 1 : -1; }

ClosedForm<mpz_class> integral(const mpq_class& q) {
  if (q.get_den() != 1) return ClosedForm<mpz_class>::fail("closed form is not an integer here");
  return ClosedForm<mpz_class>::of(q.get_num());
}

std::string wrp_gap(const SpectrumProfile& p, const char* name) {
  if (!p.weakly_regular) return std::string(name) + " is not weakly regular";
  if (!p.in_wrp) return std::string(name) + " is not in the WRP class";
  return {};
}

std::string pair_gap(const PairContext& c) {
  if (auto w = wrp_gap(*c.f, "f"); !w.empty()) return w;
  return wrp_gap(*c.g, "g");
}

// Counts (value, Tr(scale * x)) over the whole field.
Hist joint_histogram(const Field& field, const std::vector<Trit>& values, std::uint32_t scale) {
  Hist h{};
  const FieldElement a = field.element(scale);
  for (std::uint32_t i = 0; i < field.size(); ++i) {
    const FieldElement x = field.element(i);
    ++h[values[i]][field.trace(a * x)];
  }
  return h;
}

std::vector<Trit> trace_table(const Field& field) {
  std::vector<Trit> t(field.size());
  for (std::uint32_t i = 0; i < field.size(); ++i) t[i] = field.trace(field.element(i));
  return t;
}

// sum_{t,u in T x U} sum zeta^{t^tp (a + c + lambda) + u (b + d + mu)} over the joint histograms.
EisensteinInt double_sum(const Hist& hx, const Hist& hy, Trit lambda, Trit mu, bool t_squared) {
  ZetaCounter z;
  for (Trit t = 1; t <= 2; ++t) {
    const Trit tt = t_squared ? mul3(t, t) : t;
    for (Trit u = 1; u <= 2; ++u) {
      for (Trit a = 0; a < 3; ++a) {
        for (Trit b = 0; b < 3; ++b) {
          if (hx[a][b] == 0) continue;
          for (Trit c = 0; c < 3; ++c) {
            for (Trit d = 0; d < 3; ++d) {
              if (hy[c][d] == 0) continue;
              const Trit e = add3(mul3(tt, add3(add3(a, c), lambda)), mul3(u, add3(add3(b, d), mu)));
              z.add(e, static_cast<long long>(hx[a][b] * hy[c][d]));
            }
          }
        }
      }
    }
  }
  return z.value();
}

// Embedded GF(3)* scalar of alpha, or 0 when alpha is not 1 or 2.
Trit embedded_scalar(const Field& field, std::uint32_t alpha) {
  if (alpha == field.embed(1).index()) return 1;
  if (alpha == field.embed(2).index()) return 2;
  return 0;
}

}  // namespace

std::uint64_t dual_level_count(const PairContext& c, Trit target) {
  std::uint64_t count = 0;
  for (std::uint32_t a : c.f->support) {
    for (std::uint32_t b : c.g->support) {
      if (add3(add3(c.f->dual_table[a], c.g->dual_table[b]), c.lambda) == target) ++count;
    }
  }
  return count;
}

ClosedForm<mpz_class> dual_level_closed(const PairContext& c, Trit target) {
  if (auto gap = pair_gap(c); !gap.empty()) return ClosedForm<mpz_class>::fail(gap);
  if (target != 0 && c.lambda == 0) return ClosedForm<mpz_class>::fail("lambda must be nonzero for target 1 or 2");
  const long s = c.s();
  const long K = c.k_sum();
  const long e = c.eps();
  const mpq_class base = three(s - K - 1);
  if ((s + K) % 2 == 0) {
    if (target == 0) {
      const mpq_class t = sgn(s + 1) * e * m3pow((s - K - 2) / 2);
      return integral(c.lambda == 0 ? mpq_class(base + 2 * t) : mpq_class(base - t));
    }
    const int eta = quadratic_character(c.lambda);
    const mpq_class coeff = target == 1 ? mpq_class(1 + 3 * eta) / 6 : mpq_class(1 - 3 * eta) / 6;
    return integral(base + coeff * sgn(s) * e * m3pow((s - K) / 2));
  }
  if (target == 0) {
    if (c.lambda == 0) return integral(base);
    const mpq_class t = sgn(s + 1) * e * m3pow((s - K - 1) / 2);
    return integral(c.lambda == 1 ? mpq_class(base + t) : mpq_class(base - t));
  }
  const int eta = quadratic_character(neg3(c.lambda));
  const mpq_class t = sgn(s) * e * m3pow((s - K - 1) / 2);
  if (target == 1) return integral(base - (mpq_class(1 + eta) / 2) * t);
  return integral(base + (mpq_class(1 - eta) / 2) * t);
}

std::uint64_t scaled_dual_level_count(const SpectrumProfile& g, Trit lambda, Trit mu) {
  const Field& field = *g.field;
  std::uint64_t count = 0;
  for (Trit a = 1; a <= 2; ++a) {
    const Trit ai = inv3(a);
    for (std::uint32_t b : g.support) {
      const std::uint32_t scaled = (ai * field.element(b)).index();
      if (!g.in_support[scaled]) continue;
      if (sub3(add3(g.dual_table[scaled], lambda), mul3(mu, ai)) == 0) ++count;
    }
  }
  return count;
}

ClosedForm<mpz_class> scaled_dual_level_closed(const SpectrumProfile& g, Trit lambda, Trit mu) {
  if (auto gap = wrp_gap(g, "g"); !gap.empty()) return ClosedForm<mpz_class>::fail(gap);
  if (lambda == 0) return ClosedForm<mpz_class>::fail("lambda must be nonzero");
  const long m = g.n();
  const long k = *g.k;
  const long e = g.epsilon;
  const mpq_class base = 2 * three(m - k - 1);
  if ((m + k) % 2 == 0) {
    const mpq_class t = sgn(m + 1) * e * m3pow((m - k - 2) / 2);
    return integral(mu == 0 ? mpq_class(base - 2 * t) : mpq_class(base + t));
  }
  const mpq_class t = sgn(m + 1) * e * m3pow((m - k - 1) / 2);
  if (mu == 0) return integral(base + 2 * t * quadratic_character(lambda));
  return integral(base + t * quadratic_character(mul3(2, lambda)));
}

EisensteinInt s1_oracle(const PairContext& c) {
  std::array<std::uint64_t, 3> hf{}, hg{};
  for (Trit v : c.f->values) ++hf[v];
  for (Trit v : c.g->values) ++hg[v];
  ZetaCounter z;
  for (Trit t = 1; t <= 2; ++t) {
    for (Trit a = 0; a < 3; ++a) {
      for (Trit b = 0; b < 3; ++b) z.add(mul3(t, add3(add3(a, b), c.lambda)), static_cast<long long>(hf[a] * hg[b]));
    }
  }
  return z.value();
}

ClosedForm<EisensteinInt> s1_closed(const PairContext& c) {
  if (auto gap = pair_gap(c); !gap.empty()) return ClosedForm<EisensteinInt>::fail(gap);
  if (c.lambda == 0) return ClosedForm<EisensteinInt>::fail("lambda must be nonzero");
  if (c.f->dual_table[0] != 0 || c.g->dual_table[0] != 0) {
    return ClosedForm<EisensteinInt>::fail("dual functions must vanish at 0");
  }
  const long S = c.s() + c.k_sum();
  mpq_class v;
  if (S % 2 == 0) {
    v = -c.eps() * m3pow(S / 2);
  } else {
    v = c.eps() * m3pow((S + 1) / 2) * quadratic_character(c.lambda);
  }
  return ClosedForm<EisensteinInt>::of(EisensteinInt(v.get_num()));
}

EisensteinInt s2_oracle(const Field& x_field, const Field& y_field, std::uint32_t alpha, std::uint32_t beta, Trit mu) {
  const Hist hx = joint_histogram(x_field, std::vector<Trit>(x_field.size(), 0), alpha);
  const Hist hy = joint_histogram(y_field, std::vector<Trit>(y_field.size(), 0), beta);
  ZetaCounter z;
  for (Trit u = 1; u <= 2; ++u) {
    for (Trit b = 0; b < 3; ++b) {
      for (Trit d = 0; d < 3; ++d) z.add(mul3(u, add3(add3(b, d), mu)), static_cast<long long>(hx[0][b] * hy[0][d]));
    }
  }
  return z.value();
}

EisensteinInt s2_closed(int s, bool alpha_beta_zero, Trit mu) {
  if (!alpha_beta_zero) return EisensteinInt(0);
  const mpz_class p = three(s).get_num();
  return mu == 0 ? EisensteinInt(2 * p) : EisensteinInt(-p);
}

EisensteinInt s3_oracle(const PairContext& c, std::uint32_t alpha, std::uint32_t beta) {
  const Hist hx = joint_histogram(*c.f->field, c.f->values, alpha);
  const Hist hy = joint_histogram(*c.g->field, c.g->values, beta);
  return double_sum(hx, hy, c.lambda, c.mu, false);
}

ClosedForm<EisensteinInt> s3_closed(const PairContext& c, std::uint32_t alpha, std::uint32_t beta) {
  if (auto gap = pair_gap(c); !gap.empty()) return ClosedForm<EisensteinInt>::fail(gap);
  if (c.lambda == 0) return ClosedForm<EisensteinInt>::fail("lambda must be nonzero");
  if (!c.f->dual_homogeneous || !c.g->dual_homogeneous) {
    return ClosedForm<EisensteinInt>::fail("dual functions must be even-homogeneous");
  }
  if (!c.f->in_support[alpha] || !c.g->in_support[beta]) return ClosedForm<EisensteinInt>::of(EisensteinInt(0));
  const long S = c.s() + c.k_sum();
  const Trit v = add3(add3(c.f->dual_table[alpha], c.g->dual_table[beta]), c.lambda);
  mpq_class r;
  if (S % 2 == 0) {
    const mpq_class t = c.eps() * m3pow(S / 2);
    if (v == 0) {
      r = c.mu == 0 ? mpq_class(4 * t) : mpq_class(-2 * t);
    } else {
      r = c.mu == 0 ? mpq_class(-2 * t) : t;
    }
  } else {
    const mpq_class t = c.eps() * m3pow((S + 1) / 2);
    if (v == 0) {
      r = 0;
    } else {
      r = (c.mu == 0 ? 2 : -1) * t * quadratic_character(v);
    }
  }
  return ClosedForm<EisensteinInt>::of(EisensteinInt(r.get_num()));
}

namespace {

Hist trace_histogram(const TraceContext& c, std::uint32_t alpha) {
  return joint_histogram(*c.x_field, trace_table(*c.x_field), alpha);
}

std::string trace_gap(const TraceContext& c, std::uint32_t alpha, std::uint32_t beta) {
  if (auto gap = wrp_gap(*c.g, "g"); !gap.empty()) return gap;
  if (c.lambda == 0) return "lambda must be nonzero";
  if (alpha == 0 && beta == 0) return "(alpha, beta) must be nonzero";
  return {};
}

// Level g*(beta / a) + lambda - mu / a for embedded a, when it is defined.
std::optional<Trit> trace_level(const TraceContext& c, std::uint32_t alpha, std::uint32_t beta) {
  const Trit a = embedded_scalar(*c.x_field, alpha);
  if (a == 0) return std::nullopt;
  const Trit ai = inv3(a);
  const std::uint32_t scaled = (ai * c.g->field->element(beta)).index();
  if (!c.g->in_support[scaled]) return std::nullopt;
  return sub3(add3(c.g->dual_table[scaled], c.lambda), mul3(c.mu, ai));
}

}  // namespace

EisensteinInt s4_oracle(const TraceContext& c, std::uint32_t alpha, std::uint32_t beta) {
  return double_sum(trace_histogram(c, alpha), joint_histogram(*c.g->field, c.g->values, beta), c.lambda, c.mu, false);
}

ClosedForm<EisensteinInt> s4_closed(const TraceContext& c, std::uint32_t alpha, std::uint32_t beta) {
  if (auto gap = trace_gap(c, alpha, beta); !gap.empty()) return ClosedForm<EisensteinInt>::fail(gap);
  const auto w = trace_level(c, alpha, beta);
  if (!w) return ClosedForm<EisensteinInt>::of(EisensteinInt(0));
  const long n = c.n();
  const long mk = c.m() + *c.g->k;
  mpq_class r;
  if (mk % 2 == 0) {
    const mpq_class t = three(n) * c.g->epsilon * m3pow(mk / 2);
    r = *w == 0 ? mpq_class(2 * t) : mpq_class(-t);
  } else {
    const mpq_class t = three(n) * c.g->epsilon * m3pow((mk + 1) / 2);
    r = *w == 0 ? mpq_class(0) : t * quadratic_character(*w);
  }
  return ClosedForm<EisensteinInt>::of(EisensteinInt(r.get_num()));
}

EisensteinInt s5_oracle(const TraceContext& c, std::uint32_t alpha, std::uint32_t beta) {
  return double_sum(trace_histogram(c, alpha), joint_histogram(*c.g->field, c.g->values, beta), c.lambda, c.mu, true);
}

ClosedForm<EisensteinInt> s5_closed(const TraceContext& c, std::uint32_t alpha, std::uint32_t beta) {
  if (auto gap = trace_gap(c, alpha, beta); !gap.empty()) return ClosedForm<EisensteinInt>::fail(gap);
  const auto w = trace_level(c, alpha, beta);
  if (!w) return ClosedForm<EisensteinInt>::of(EisensteinInt(0));
  const unsigned mk = static_cast<unsigned>(c.m() + *c.g->k);
  const EisensteinInt scale(2 * three(c.n()).get_num() * c.g->epsilon);
  return ClosedForm<EisensteinInt>::of(scale * sqrt_neg3_power(mk) * zeta_power(*w));
}

ClosedForm<EisensteinInt> s5_closed_as_printed(const TraceContext& c, std::uint32_t alpha, std::uint32_t beta) {
  if (auto gap = trace_gap(c, alpha, beta); !gap.empty()) return ClosedForm<EisensteinInt>::fail(gap);
  const long mk = c.m() + *c.g->k;
  if (mk % 2 != 0) return ClosedForm<EisensteinInt>::fail("(m + k) / 2 is not an integer");
  const auto w = trace_level(c, alpha, beta);
  if (!w) return ClosedForm<EisensteinInt>::of(EisensteinInt(0));
  const EisensteinInt t(mpq_class(three(c.n()) * c.g->epsilon * m3pow(mk / 2)).get_num());
  if (*w == 0) return ClosedForm<EisensteinInt>::of(EisensteinInt(2) * t);
  if (*w == 1) return ClosedForm<EisensteinInt>::of((sqrt_neg3() - EisensteinInt(1)) * t);
  return ClosedForm<EisensteinInt>::of((sqrt_neg3() + EisensteinInt(1)) * t);
}

std::uint64_t ng0_count(const TraceContext& c, std::uint32_t alpha, std::uint32_t beta) {
  const Hist hx = trace_histogram(c, alpha);
  const Hist hy = joint_histogram(*c.g->field, c.g->values, beta);
  std::uint64_t count = 0;
  for (Trit a = 0; a < 3; ++a) {
    for (Trit b = 0; b < 3; ++b) {
      const Trit cc = neg3(add3(a, c.lambda));
      const Trit d = neg3(add3(b, c.mu));
      count += hx[a][b] * hy[cc][d];
    }
  }
  return count;
}

ClosedForm<mpz_class> ng0_closed(const TraceContext& c, std::uint32_t alpha, std::uint32_t beta) {
  const auto s4 = s4_closed(c, alpha, beta);
  if (!s4.value) return ClosedForm<mpz_class>::fail(s4.unmet);
  const EisensteinInt s2 = s2_closed(c.s(), alpha == 0 && beta == 0, c.mu);
  const mpq_class total = three(c.s() - 2) + mpq_class(s2.real_part()) / 9 + mpq_class(s4.value->real_part()) / 9;
  return integral(total);
}

namespace {

std::string str(const mpz_class& v) { return v.get_str(); }
std::string str(const EisensteinInt& v) { return v.to_string(); }
std::string str(std::uint64_t v) { return std::to_string(v); }

template <class C, class O>
LemmaRow make_row(std::string inputs, const ClosedForm<C>& closed, const O& oracle) {
  LemmaRow r;
  r.inputs = std::move(inputs);
  r.oracle = str(oracle);
  if (closed.value) {
    r.closed = str(*closed.value);
    r.match = r.closed == r.oracle;
  } else {
    r.closed = "unmet: " + closed.unmet;
    r.applicable = false;
  }
  return r;
}

std::string lm(Trit lambda, Trit mu) {
  return "lambda=" + std::to_string(lambda) + " mu=" + std::to_string(mu);
}

std::string ab(std::uint32_t a, std::uint32_t b) { return " alpha=" + std::to_string(a) + " beta=" + std::to_string(b); }

// Runs body(alpha, out) for every alpha index, splitting across jobs and
// concatenating in index order.
std::vector<LemmaRow> over_alpha(std::uint32_t count, unsigned jobs,
                                 const std::function<void(std::uint32_t, std::vector<LemmaRow>&)>& body) {
  std::vector<std::vector<LemmaRow>> parts(count);
  jobs = std::max(1u, std::min<unsigned>(jobs, count));
  std::vector<std::thread> pool;
  for (unsigned id = 0; id < jobs; ++id) {
    pool.emplace_back([&, id] {
      for (std::uint32_t a = id; a < count; a += jobs) body(a, parts[a]);
    });
  }
  for (auto& t : pool) t.join();
  std::vector<LemmaRow> rows;
  for (auto& p : parts) {
    for (auto& r : p) rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

LemmaSweep sweep_lemma(int lemma, const SpectrumProfile* f, const SpectrumProfile& g, int x_degree, unsigned jobs) {
  LemmaSweep out;
  out.lemma = lemma;
  const bool pair_lemma = lemma == 2 || lemma == 3 || lemma == 5 || lemma == 7;
  if (lemma < 2 || lemma > 10) throw std::invalid_argument("lemma must be between 2 and 10");
  if (pair_lemma && f == nullptr) throw std::invalid_argument("this lemma needs both f and g");
  if (!g.weakly_regular || (pair_lemma && !f->weakly_regular)) {
    throw std::invalid_argument("functions must be weakly regular");
  }
  std::shared_ptr<const Field> x_field = f != nullptr && !(lemma >= 8) ? f->field : make_field(x_degree);
  const Field& yf = *g.field;

  switch (lemma) {
    case 2:
      for (Trit lambda = 0; lambda < 3; ++lambda) {
        const auto c = make_pair_context(*f, g, lambda);
        out.rows.push_back(make_row(lm(lambda, 0) + " target=0", dual_level_closed(c, 0), dual_level_count(c, 0)));
      }
      break;
    case 3:
      for (Trit lambda = 1; lambda < 3; ++lambda) {
        const auto c = make_pair_context(*f, g, lambda);
        for (Trit target = 1; target < 3; ++target) {
          out.rows.push_back(make_row(lm(lambda, 0) + " target=" + std::to_string(target),
                                      dual_level_closed(c, target), dual_level_count(c, target)));
        }
      }
      break;
    case 4:
      for (Trit lambda = 1; lambda < 3; ++lambda) {
        for (Trit mu = 0; mu < 3; ++mu) {
          out.rows.push_back(make_row(lm(lambda, mu), scaled_dual_level_closed(g, lambda, mu),
                                      scaled_dual_level_count(g, lambda, mu)));
        }
      }
      break;
    case 5:
      for (Trit lambda = 1; lambda < 3; ++lambda) {
        const auto c = make_pair_context(*f, g, lambda);
        out.rows.push_back(make_row(lm(lambda, 0), s1_closed(c), s1_oracle(c)));
      }
      break;
    case 6:
      out.rows = over_alpha(static_cast<std::uint32_t>(x_field->size()), jobs, [&](std::uint32_t a, auto& rows) {
        for (std::uint32_t b = 0; b < yf.size(); ++b) {
          for (Trit mu = 0; mu < 3; ++mu) {
            const auto closed = ClosedForm<EisensteinInt>::of(s2_closed(x_field->degree() + yf.degree(), a == 0 && b == 0, mu));
            rows.push_back(make_row("mu=" + std::to_string(mu) + ab(a, b), closed, s2_oracle(*x_field, yf, a, b, mu)));
          }
        }
      });
      break;
    case 7:
      out.rows = over_alpha(static_cast<std::uint32_t>(x_field->size()), jobs, [&](std::uint32_t a, auto& rows) {
        for (std::uint32_t b = 0; b < yf.size(); ++b) {
          for (Trit lambda = 1; lambda < 3; ++lambda) {
            for (Trit mu = 0; mu < 3; ++mu) {
              const auto c = make_pair_context(*f, g, lambda, mu);
              rows.push_back(make_row(lm(lambda, mu) + ab(a, b), s3_closed(c, a, b), s3_oracle(c, a, b)));
            }
          }
        }
      });
      break;
    default:
      out.rows = over_alpha(static_cast<std::uint32_t>(x_field->size()), jobs, [&](std::uint32_t a, auto& rows) {
        for (std::uint32_t b = 0; b < yf.size(); ++b) {
          if (a == 0 && b == 0) continue;
          for (Trit lambda = 1; lambda < 3; ++lambda) {
            for (Trit mu = 0; mu < 3; ++mu) {
              const auto c = make_trace_sum_context(x_field, g, lambda, mu);
              const std::string in = lm(lambda, mu) + ab(a, b);
              if (lemma == 8) rows.push_back(make_row(in, s4_closed(c, a, b), s4_oracle(c, a, b)));
              if (lemma == 9) rows.push_back(make_row(in, s5_closed(c, a, b), s5_oracle(c, a, b)));
              if (lemma == 10) rows.push_back(make_row(in, ng0_closed(c, a, b), ng0_count(c, a, b)));
            }
          }
        }
      });
      break;
  }
  for (const auto& r : out.rows) {
    if (!r.applicable) continue;
    ++out.compared;
    if (!r.match) ++out.mismatches;
  }
  return out;
}

}  // namespace tercodes
