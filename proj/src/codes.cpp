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

#include "tercodes/codes.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "tercodes/packed_row.hpp"

namespace tercodes {

Gf3Matrix::Gf3Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Gf3Matrix Gf3Matrix::from_rows(const std::vector<std::vector<Trit>>& rows) {
  if (rows.empty()) return {};
  Gf3Matrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Gf3Matrix Gf3Matrix::identity(std::size_t n) {
  Gf3Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void Gf3Matrix::set(std::size_t r, std::size_t c, Trit v) {
  if (v > 2) throw std::invalid_argument("matrix entries must be in {0,1,2}");
  data_[r * cols_ + c] = v;
}

std::vector<Trit> Gf3Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Trit> Gf3Matrix::column(std::size_t c) const {
  std::vector<Trit> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

Gf3Matrix Gf3Matrix::gram() const {
  Gf3Matrix g(rows_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i; j < rows_; ++j) {
      unsigned acc = 0;
      for (std::size_t c = 0; c < cols_; ++c) acc += static_cast<unsigned>(at(i, c) * at(j, c));
      const Trit v = static_cast<Trit>(acc % 3);
      g.set(i, j, v);
      g.set(j, i, v);
    }
  }
  return g;
}

Gf3Matrix Gf3Matrix::hconcat(const Gf3Matrix& a, const Gf3Matrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hconcat: row counts differ");
  Gf3Matrix m(a.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < a.cols_; ++c) m.set(r, c, a.at(r, c));
    for (std::size_t c = 0; c < b.cols_; ++c) m.set(r, a.cols_ + c, b.at(r, c));
  }
  return m;
}

Gf3Matrix Gf3Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Gf3Matrix m(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) m.set(r, j, at(r, cols[j]));
  }
  return m;
}

bool Gf3Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Trit t) { return t == 0; });
}

void write_matrix(std::ostream& out, const Gf3Matrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::string line(m.cols(), '0');
    for (std::size_t c = 0; c < m.cols(); ++c) line[c] = static_cast<char>('0' + m.at(r, c));
    out << line << '\n';
  }
}

Gf3Matrix read_matrix(std::istream& in) {
  long long rows = -1;
  long long cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0) throw std::invalid_argument("matrix header must be 'rows cols'");
  Gf3Matrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (long long r = 0; r < rows; ++r) {
    std::string line;
    if (!(in >> line)) throw std::invalid_argument("matrix file ends early at row " + std::to_string(r));
    if (line.size() != static_cast<std::size_t>(cols)) {
      throw std::invalid_argument("row " + std::to_string(r) + " has " + std::to_string(line.size()) +
                                  " symbols, expected " + std::to_string(cols));
    }
    for (long long c = 0; c < cols; ++c) {
      const char ch = line[static_cast<std::size_t>(c)];
      if (ch < '0' || ch > '2') throw std::invalid_argument("matrix symbols must be 0, 1 or 2");
      m.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), static_cast<Trit>(ch - '0'));
    }
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("trailing data after matrix rows");
  return m;
}

RrefResult rank_and_rref(const Gf3Matrix& m) {
  RrefResult res;
  res.reduced = m;
  Gf3Matrix& a = res.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a.at(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        const Trit t = a.at(row, c);
        a.set(row, c, a.at(piv, c));
        a.set(piv, c, t);
      }
    }
    const Trit inv = inv3(a.at(row, col));
    for (std::size_t c = 0; c < a.cols(); ++c) a.set(row, c, mul3(a.at(row, c), inv));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a.at(r, col) == 0) continue;
      const Trit f = a.at(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c) a.set(r, c, sub3(a.at(r, c), mul3(f, a.at(row, c))));
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

std::uint64_t WeightDistribution::total() const {
  std::uint64_t t = 0;
  for (const auto& [w, c] : counts) t += c;
  return t;
}

std::optional<std::size_t> WeightDistribution::min_nonzero() const {
  for (const auto& [w, c] : counts) {
    if (w > 0 && c > 0) return w;
  }
  return std::nullopt;
}

std::string WeightDistribution::enumerator() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : counts) {
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (w == 0) {
      os << c;
    } else {
      os << c << "x^" << w;
    }
  }
  return os.str();
}

LinearCode::LinearCode(Gf3Matrix generator) : gen_(std::move(generator)) {
  const RrefResult r = rank_and_rref(gen_);
  basis_ = Gf3Matrix(r.rank, gen_.cols());
  for (std::size_t i = 0; i < r.rank; ++i) {
    for (std::size_t c = 0; c < gen_.cols(); ++c) basis_.set(i, c, r.reduced.at(i, c));
  }
}

namespace {

struct Enumerator {
  const std::vector<PackedRow>& rows;
  std::vector<PackedRow> bufs;
  std::vector<std::uint64_t> hist;

  Enumerator(const std::vector<PackedRow>& r, std::size_t length)
      : rows(r), bufs(r.size() + 1, PackedRow(length)), hist(length + 1, 0) {}

  // bufs[level] holds the partial sum of the first `level` scaled rows.
  void run(std::size_t level) {
    if (level == rows.size()) {
      ++hist[bufs[level].weight()];
      return;
    }
    bufs[level + 1] = bufs[level];
    run(level + 1);
    PackedRow::add(bufs[level], rows[level], bufs[level + 1]);
    run(level + 1);
    PackedRow::sub(bufs[level], rows[level], bufs[level + 1]);
    run(level + 1);
  }
};

}  // namespace

WeightDistribution weight_distribution(const LinearCode& c, unsigned jobs) {
  const std::size_t k = c.dimension();
  if (k > kMaxEnumerationDimension) {
    throw CapacityError("dimension " + std::to_string(k) + " exceeds enumeration limit " +
                        std::to_string(kMaxEnumerationDimension));
  }
  const std::size_t len = c.length();
  std::vector<PackedRow> rows;
  for (std::size_t i = 0; i < k; ++i) {
    const auto r = c.basis().row(i);
    rows.emplace_back(std::span<const Trit>(r));
  }
  if (jobs == 0) jobs = 1;

  // Fix the first `prefix` coefficients per task, enumerate the rest.
  std::size_t prefix = 0;
  std::uint64_t tasks = 1;
  while (prefix < k && tasks < 8ull * jobs) {
    ++prefix;
    tasks *= 3;
  }
  const std::vector<PackedRow> tail(rows.begin() + static_cast<std::ptrdiff_t>(prefix), rows.end());

  std::vector<std::vector<std::uint64_t>> hists(jobs, std::vector<std::uint64_t>(len + 1, 0));
  auto worker = [&](unsigned id) {
    Enumerator e(tail, len);
    PackedRow tmp(len);
    for (std::uint64_t t = id; t < tasks; t += jobs) {
      PackedRow start(len);
      std::uint64_t rem = t;
      for (std::size_t i = 0; i < prefix; ++i) {
        const unsigned digit = static_cast<unsigned>(rem % 3);
        rem /= 3;
        if (digit == 1) PackedRow::add(start, rows[i], tmp);
        if (digit == 2) PackedRow::sub(start, rows[i], tmp);
        if (digit != 0) start = tmp;
      }
      e.bufs[0] = start;
      e.run(0);
    }
    hists[id] = std::move(e.hist);
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
    for (auto& th : pool) th.join();
  }

  WeightDistribution d;
  for (std::size_t w = 0; w <= len; ++w) {
    std::uint64_t total = 0;
    for (const auto& h : hists) total += h[w];
    if (total) d.counts[w] = total;
  }
  return d;
}

std::optional<std::size_t> minimum_distance(const LinearCode& c, unsigned jobs) {
  return weight_distribution(c, jobs).min_nonzero();
}

std::string to_string(DualDistance d) {
  switch (d) {
    case DualDistance::kOne: return "1";
    case DualDistance::kTwo: return "2";
    case DualDistance::kThree: return "3";
    case DualDistance::kAboveThree: return ">3";
    case DualDistance::kDualTrivial: return "dual trivial";
  }
  return "?";
}

namespace {

// Column of the basis as two bit planes; dimension <= 64 is plenty here.
struct ColumnKey {
  std::uint64_t ones = 0;
  std::uint64_t twos = 0;
  friend bool operator==(const ColumnKey&, const ColumnKey&) = default;
};

struct ColumnKeyHash {
  std::size_t operator()(const ColumnKey& k) const { return std::hash<std::uint64_t>()(k.ones * 0x9E3779B97F4A7C15ull ^ k.twos); }
};

ColumnKey make_key(const std::vector<Trit>& v) {
  ColumnKey key;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 1) key.ones |= std::uint64_t{1} << i;
    if (v[i] == 2) key.twos |= std::uint64_t{1} << i;
  }
  return key;
}

// Scales v so its first nonzero entry is 1; returns the factor applied.
Trit normalize(std::vector<Trit>& v) {
  for (Trit t : v) {
    if (t != 0) {
      const Trit f = inv3(t);
      for (auto& x : v) x = mul3(x, f);
      return f;
    }
  }
  return 0;
}

}  // namespace

DualDistanceResult dual_min_distance_upto3(const LinearCode& c) {
  DualDistanceResult res;
  const Gf3Matrix& b = c.basis();
  if (c.dimension() == c.length()) {
    res.verdict = DualDistance::kDualTrivial;
    return res;
  }
  if (b.rows() > 64) throw CapacityError("column search supports dimension <= 64");

  std::vector<std::vector<Trit>> cols(b.cols());
  std::vector<Trit> scale(b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    cols[j] = b.column(j);
    scale[j] = normalize(cols[j]);
    if (scale[j] == 0) {
      res.verdict = DualDistance::kOne;
      res.columns = {j};
      res.coefficients = {1};
      return res;
    }
  }

  // After normalization col_j = scale_j * original_j.
  std::unordered_map<ColumnKey, std::size_t, ColumnKeyHash> seen;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto [it, inserted] = seen.emplace(make_key(cols[j]), j);
    if (!inserted) {
      const std::size_t i = it->second;
      res.verdict = DualDistance::kTwo;
      res.columns = {i, j};
      res.coefficients = {scale[i], neg3(scale[j])};
      return res;
    }
  }

  std::vector<std::size_t> reps;
  reps.reserve(seen.size());
  for (std::size_t j = 0; j < cols.size(); ++j) reps.push_back(j);
  std::vector<Trit> sum(b.rows());
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t bb = a + 1; bb < reps.size(); ++bb) {
      const auto& u = cols[reps[a]];
      const auto& v = cols[reps[bb]];
      for (Trit t = 1; t <= 2; ++t) {
        for (std::size_t r = 0; r < sum.size(); ++r) sum[r] = add3(u[r], mul3(t, v[r]));
        const Trit f = normalize(sum);
        auto it = seen.find(make_key(sum));
        if (it == seen.end()) continue;
        // f*(u + t v) = w, all normalized; in original columns:
        // f*s_a*o_a + f*t*s_b*o_b - s_c*o_c = 0.
        const std::size_t i = reps[a];
        const std::size_t j = reps[bb];
        const std::size_t l = it->second;
        res.verdict = DualDistance::kThree;
        res.columns = {i, j, l};
        res.coefficients = {mul3(f, scale[i]), mul3(mul3(f, t), scale[j]), neg3(scale[l])};
        return res;
      }
    }
  }
  res.verdict = DualDistance::kAboveThree;
  return res;
}

bool verify_dual_witness(const LinearCode& c, const DualDistanceResult& r) {
  if (r.columns.size() != r.coefficients.size() || r.columns.empty()) return false;
  const Gf3Matrix& g = c.generator();
  for (std::size_t i = 0; i < r.columns.size(); ++i) {
    if (r.coefficients[i] == 0 || r.columns[i] >= g.cols()) return false;
    for (std::size_t j = i + 1; j < r.columns.size(); ++j) {
      if (r.columns[i] == r.columns[j]) return false;
    }
  }
  for (std::size_t row = 0; row < g.rows(); ++row) {
    Trit acc = 0;
    for (std::size_t i = 0; i < r.columns.size(); ++i) acc = add3(acc, mul3(r.coefficients[i], g.at(row, r.columns[i])));
    if (acc != 0) return false;
  }
  return true;
}

SelfOrthogonality is_self_orthogonal(const LinearCode& c, const WeightDistribution* dist) {
  SelfOrthogonality so;
  so.gram_zero = c.generator().gram().is_zero();
  if (dist) {
    so.weights_divisible = std::all_of(dist->counts.begin(), dist->counts.end(),
                                       [](const auto& kv) { return kv.first % 3 == 0; });
  }
  return so;
}

bool is_lcd(const LinearCode& c) {
  const Gf3Matrix g = c.basis().gram();
  return rank_and_rref(g).rank == c.dimension();
}

namespace {

mpq_class pow3q(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? mpq_class(1, p) : mpq_class(p);
}

}  // namespace

PlessReport pless_check(std::size_t length, std::size_t dimension, const WeightDistribution& dist) {
  PlessReport rep;
  const long k = static_cast<long>(dimension);
  mpz_class total = 0;
  mpq_class s1 = 0;
  mpq_class s2 = 0;
  mpq_class s3 = 0;
  for (const auto& [w, a] : dist.counts) {
    const mpz_class aw(std::to_string(a));
    const mpz_class j(std::to_string(w));
    total += aw;
    s1 += j * aw;
    s2 += j * j * aw;
    s3 += j * j * j * aw;
  }
  rep.total_matches = pow3q(k) == mpq_class(total);

  const mpq_class q = 3;
  const mpq_class n(mpz_class(std::to_string(length)));
  // sum j A_j = q^(k-1) ((q-1) n - A1)
  rep.dual_a1 = (q - 1) * n - s1 / pow3q(k - 1);
  // sum j^2 A_j = q^(k-2) ((q-1) n (qn-n+1) - (2qn-q-2n+2) A1 + 2 A2)
  rep.dual_a2 = (s2 / pow3q(k - 2) - (q - 1) * n * (q * n - n + 1) + (2 * q * n - q - 2 * n + 2) * rep.dual_a1) / 2;
  // sum j^3 A_j = q^(k-3) ((q-1) n (q^2n^2-2qn^2+3qn-q+n^2-3n+2)
  //   - (3q^2n^2-3q^2n-6qn^2+12qn+q^2-6q+3n^2-9n+6) A1 + 6 (qn-q-n+2) A2 - 6 A3)
  const mpq_class c0 = (q - 1) * n * (q * q * n * n - 2 * q * n * n + 3 * q * n - q + n * n - 3 * n + 2);
  const mpq_class c1 = 3 * q * q * n * n - 3 * q * q * n - 6 * q * n * n + 12 * q * n + q * q - 6 * q + 3 * n * n - 9 * n + 6;
  const mpq_class c2 = 6 * (q * n - q - n + 2);
  rep.dual_a3 = (c0 - c1 * rep.dual_a1 + c2 * rep.dual_a2 - s3 / pow3q(k - 3)) / 6;

  auto nonneg_int = [](const mpq_class& v) { return v.get_den() == 1 && v >= 0; };
  rep.integral = nonneg_int(rep.dual_a1) && nonneg_int(rep.dual_a2) && nonneg_int(rep.dual_a3);
  return rep;
}

Gf3Matrix dual_generator(const LinearCode& c) {
  const RrefResult r = rank_and_rref(c.basis());
  const std::size_t n = c.length();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<Trit>> rows;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Trit> h(n, 0);
    h[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) h[r.pivots[i]] = neg3(r.reduced.at(i, f));
    rows.push_back(std::move(h));
  }
  if (rows.empty()) return Gf3Matrix(0, n);
  return Gf3Matrix::from_rows(rows);
}

std::string to_string(BoundClass b) {
  switch (b) {
    case BoundClass::kOptimal: return "optimal-vs-bound";
    case BoundClass::kAlmostOptimal: return "almost-optimal-vs-bound";
    case BoundClass::kNeither: return "neither";
    case BoundClass::kExceedsBound: return "exceeds-bound";
  }
  return "?";
}

std::size_t sphere_packing_max_d(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0 || k > n) throw std::invalid_argument("sphere packing needs 0 < k <= n");
  mpz_class budget;
  mpz_ui_pow_ui(budget.get_mpz_t(), 3, static_cast<unsigned long>(n - k));
  // Ball volume for radius t grows with t; find the largest feasible radius.
  mpz_class volume = 1;
  mpz_class term = 1;  // C(n,t) 2^t
  std::size_t t = 0;
  while (t < n) {
    term = term * static_cast<unsigned long>(n - t) * 2 / static_cast<unsigned long>(t + 1);
    if (volume + term > budget) break;
    volume += term;
    ++t;
  }
  // Radius t admits d = 2t+1 and 2t+2.
  return std::min<std::size_t>(2 * t + 2, n - k + 1);
}

BoundClass classify_against_bound(std::size_t n, std::size_t k, std::size_t d) {
  const std::size_t max_d = sphere_packing_max_d(n, k);
  if (d > max_d) return BoundClass::kExceedsBound;
  if (d == max_d) return BoundClass::kOptimal;
  if (d + 1 == max_d) return BoundClass::kAlmostOptimal;
  return BoundClass::kNeither;
}

}  // namespace tercodes
