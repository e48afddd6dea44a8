#include "support.hpp"

namespace skw::test {

const Session& default_session() {
  static const std::shared_ptr<const Session> s = Session::create(SessionParams{});
  return *s;
}

namespace oracle {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * a % p);
    a = static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * a % p);
    e >>= 1;
  }
  return r;
}

Row Echelon::reduce(Row v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::uint64_t f = v[pivots_[i]];
    if (!f) continue;
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (v[j] + (p_ - f) * rows_[i][j] % p_) % p_;
  }
  return v;
}

bool Echelon::insert(Row v) {
  v = reduce(std::move(v));
  std::size_t piv = 0;
  while (piv < cols_ && !v[piv]) ++piv;
  if (piv == cols_) return false;
  std::uint64_t s = inv_mod(v[piv], p_);
  for (auto& x : v) x = x * s % p_;
  // Keep rows fully reduced so reduce() is a single pass.
  for (auto& r : rows_) {
    std::uint64_t f = r[piv];
    if (!f) continue;
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (r[j] + (p_ - f) * v[j] % p_) % p_;
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool Echelon::contains(Row v) const {
  v = reduce(std::move(v));
  for (auto x : v) {
    if (x) return false;
  }
  return true;
}

std::size_t bareiss_rank(std::vector<std::vector<__int128>> m) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
  __int128 prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

std::uint64_t pow3(int n) {
  std::uint64_t r = 1;
  while (n-- > 0) r *= 3;
  return r;
}

std::size_t FreeQuotient::index(const std::vector<std::uint8_t>& w) {
  std::size_t i = 0;
  for (auto x : w) i = 3 * i + x;
  return i;
}

Row FreeQuotient::multiply(const Row& x, int, const Row& y, int n) const {
  std::size_t sy = pow3(n);
  Row out(x.size() * sy, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < sy; ++j) {
      if (y[j]) out[i * sy + j] = (out[i * sy + j] + x[i] * y[j] % p_) % p_;
    }
  }
  return out;
}

FreeQuotient::FreeQuotient(std::uint64_t p, std::int64_t a, std::int64_t b, std::int64_t c, int max_degree) : p_(p) {
  auto red = [p](std::int64_t v) { return static_cast<std::uint64_t>(((v % static_cast<std::int64_t>(p)) + p) % p); };
  std::vector<Row> rel;
  for (int i = 0; i < 3; ++i) {
    Row r(9, 0);
    auto at = [&](int u, int v) -> std::uint64_t& { return r[3 * u + v]; };
    at(i, (i + 1) % 3) = (at(i, (i + 1) % 3) + red(a)) % p;
    at((i + 1) % 3, i) = (at((i + 1) % 3, i) + red(b)) % p;
    at((i + 2) % 3, (i + 2) % 3) = (at((i + 2) % 3, (i + 2) % 3) + red(c)) % p;
    rel.push_back(r);
  }
  for (int n = 0; n <= max_degree; ++n) {
    ideal_.emplace_back(p, pow3(n));
    if (n < 2) continue;
    for (int left = 0; left + 2 <= n; ++left) {
      int right = n - 2 - left;
      for (std::uint64_t u = 0; u < pow3(left); ++u) {
        for (std::uint64_t w = 0; w < pow3(right); ++w) {
          for (const Row& r : rel) {
            Row v(pow3(n), 0);
            for (std::size_t k = 0; k < 9; ++k) v[(u * 9 + k) * pow3(right) + w] = r[k];
            ideal_[n].insert(std::move(v));
          }
        }
      }
    }
  }
}

std::size_t FreeQuotient::quotient_dim(int n) const { return pow3(n) - ideal_[n].rank(); }

Divisor brute_truncation(const Curve& E, const Divisor& x, int n) {
  Divisor out;
  for (int j = 0; j < n; ++j) {
    for (const auto& [pt, k] : x.terms()) out.add_term(E.sigma_pow(pt, j), k);
  }
  return out;
}

bool brute_eventually_effective(const Curve& E, const Divisor& x, int lo, int hi) {
  for (int n = lo; n <= hi; ++n) {
    if (!brute_truncation(E, x, n).is_effective()) return false;
  }
  return true;
}

std::vector<long long> naive_series(const std::vector<long long>& num, const std::vector<int>& ks, int terms) {
  std::vector<long long> out(static_cast<std::size_t>(terms), 0);
  for (std::size_t i = 0; i < num.size() && i < out.size(); ++i) out[i] = num[i];
  for (int k : ks) {
    for (std::size_t n = static_cast<std::size_t>(k); n < out.size(); ++n) out[n] += out[n - k];
  }
  return out;
}

}  // namespace oracle

}  // namespace skw::test
