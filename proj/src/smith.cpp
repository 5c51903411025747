// Smith normal form by pivoted elimination.
//
// The elimination runs first on int64 storage with every entry kept within
// simd::kNarrowBound, so the row kernels can use 32x32->64 multiplies. If any
// value leaves that range the narrow run is abandoned and the same algorithm
// restarts on BigInt. Pivot choices depend only on the values, so both paths
// produce identical output.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "cob/abelian.hpp"
#include "cob/simd/kernels.hpp"

namespace cob {

namespace {

struct LeftNarrowRange {};

template <class T>
struct Arith;

template <>
struct Arith<std::int64_t> {
  using T = std::int64_t;

  static T abs(T x) { return x < 0 ? -x : x; }

  static T checked(T v) {
    if (v > simd::kNarrowBound || v < -simd::kNarrowBound) throw LeftNarrowRange{};
    return v;
  }

  static void axpy(T* dst, const T* src, T q, std::size_t len) {
    if (simd::active_kernels().axpy(dst, src, q, len)) throw LeftNarrowRange{};
  }

  static simd::MinAbs min_abs(const T* row, std::size_t len) {
    return simd::active_kernels().min_abs_nonzero(row, len);
  }

  static bool abs_less(T x, std::int64_t y) { return x < y; }
  static std::int64_t key(T x) { return x; }
};

template <>
struct Arith<BigInt> {
  using T = BigInt;

  static T abs(const T& x) { return abs_big(x); }
  static T checked(T v) { return v; }

  static void axpy(T* dst, const T* src, const T& q, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i)
      if (src[i] != 0) dst[i] -= q * src[i];
  }

  struct MinAbsBig {
    T value = 0;
    std::size_t index = 0;
  };

  static MinAbsBig min_abs(const T* row, std::size_t len) {
    MinAbsBig best;
    for (std::size_t i = 0; i < len; ++i) {
      if (row[i] == 0) continue;
      T v = abs_big(row[i]);
      if (best.value == 0 || v < best.value) {
        best.value = std::move(v);
        best.index = i;
        if (best.value == 1) break;
      }
    }
    return best;
  }
};

/// Quotient of x / p rounded to nearest, ties toward zero.
template <class T>
T round_div(const T& x, const T& p) {
  T q = x / p;
  T r = x - q * p;
  if (r != 0) {
    T twice = Arith<T>::abs(r) * 2;
    if (twice > Arith<T>::abs(p)) {
      if ((r < 0) == (p < 0))
        q += 1;
      else
        q -= 1;
    }
  }
  return q;
}

template <class T>
class Eliminator {
 public:
  Eliminator(const IntegerMatrix& src, bool track)
      : m_(src.rows()), n_(src.cols()), track_(track), a_(m_ * n_) {
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if constexpr (std::is_same_v<T, std::int64_t>) {
        const BigInt& x = src.entries()[i];
        if (x > simd::kNarrowBound || x < -simd::kNarrowBound) throw LeftNarrowRange{};
        a_[i] = static_cast<std::int64_t>(x);
      } else {
        a_[i] = src.entries()[i];
      }
    }
    if (track_) {
      u_.assign(m_ * m_, T(0));
      vt_.assign(n_ * n_, T(0));
      for (std::size_t i = 0; i < m_; ++i) u_[i * m_ + i] = 1;
      for (std::size_t i = 0; i < n_; ++i) vt_[i * n_ + i] = 1;
    }
  }

  void run() {
    const std::size_t k = std::min(m_, n_);
    for (std::size_t t = 0; t < k; ++t) {
      auto [pr, pc] = find_pivot(t);
      if (pr == m_) break;  // remaining block is zero
      swap_rows(t, pr);
      swap_cols(t, pc);
      for (;;) {
        if (!clear_column(t)) {
          swap_rows(t, min_in_column(t));
          continue;
        }
        if (!clear_row(t)) {
          swap_cols(t, min_in_row(t));
          continue;
        }
        break;
      }
    }
  }

  std::vector<BigInt> diagonal() const {
    const std::size_t k = std::min(m_, n_);
    std::vector<BigInt> d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = BigInt(at(i, i));
    return d;
  }

  std::vector<BigInt> u_big() const { return {u_.begin(), u_.end()}; }
  std::vector<BigInt> vt_big() const { return {vt_.begin(), vt_.end()}; }

 private:
  T& at(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const T& at(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  // Minimal |entry| in the trailing block; lowest row, then lowest column.
  std::pair<std::size_t, std::size_t> find_pivot(std::size_t t) const {
    std::size_t best_r = m_, best_c = n_;
    T best_v = 0;
    for (std::size_t r = t; r < m_; ++r) {
      auto mm = Arith<T>::min_abs(&a_[r * n_ + t], n_ - t);
      if (mm.value == 0) continue;
      if (best_r == m_ || mm.value < best_v) {
        best_v = mm.value;
        best_r = r;
        best_c = t + mm.index;
        if (best_v == 1) break;
      }
    }
    return {best_r, best_c};
  }

  std::size_t min_in_column(std::size_t t) const {
    std::size_t best = m_;
    T best_v = 0;
    for (std::size_t r = t; r < m_; ++r) {
      if (at(r, t) == 0) continue;
      T v = Arith<T>::abs(at(r, t));
      if (best == m_ || v < best_v) {
        best_v = v;
        best = r;
      }
    }
    return best;
  }

  std::size_t min_in_row(std::size_t t) const {
    auto mm = Arith<T>::min_abs(&a_[t * n_ + t], n_ - t);
    return t + mm.index;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap_ranges(a_.begin() + i * n_, a_.begin() + (i + 1) * n_, a_.begin() + j * n_);
    if (track_)
      std::swap_ranges(u_.begin() + i * m_, u_.begin() + (i + 1) * m_, u_.begin() + j * m_);
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m_; ++r) std::swap(at(r, i), at(r, j));
    if (track_)
      std::swap_ranges(vt_.begin() + i * n_, vt_.begin() + (i + 1) * n_, vt_.begin() + j * n_);
  }

  // Row operations below the pivot. Returns true when column t is cleared.
  bool clear_column(std::size_t t) {
    const T p = at(t, t);
    bool clean = true;
    for (std::size_t r = t + 1; r < m_; ++r) {
      if (at(r, t) == 0) continue;
      const T q = round_div<T>(at(r, t), p);
      if (q != 0) {
        Arith<T>::axpy(&a_[r * n_ + t], &a_[t * n_ + t], q, n_ - t);
        if (track_) Arith<T>::axpy(&u_[r * m_], &u_[t * m_], q, m_);
      }
      if (at(r, t) != 0) clean = false;
    }
    return clean;
  }

  // Column operations right of the pivot; column t is already clear, so on A
  // they only touch row t. Returns true when row t is cleared.
  bool clear_row(std::size_t t) {
    const T p = at(t, t);
    bool clean = true;
    for (std::size_t c = t + 1; c < n_; ++c) {
      if (at(t, c) == 0) continue;
      const T q = round_div<T>(at(t, c), p);
      if (q != 0) {
        at(t, c) = Arith<T>::checked(at(t, c) - q * p);
        if (track_) Arith<T>::axpy(&vt_[c * n_], &vt_[t * n_], q, n_);
      }
      if (at(t, c) != 0) clean = false;
    }
    return clean;
  }

  std::size_t m_, n_;
  bool track_;
  std::vector<T> a_, u_, vt_;
};

struct Diagonalized {
  std::vector<BigInt> diag;
  std::vector<BigInt> u, vt;  // empty unless tracked
};

template <class T>
Diagonalized eliminate(const IntegerMatrix& a, bool track) {
  Eliminator<T> e(a, track);
  e.run();
  return {e.diagonal(), track ? e.u_big() : std::vector<BigInt>{},
          track ? e.vt_big() : std::vector<BigInt>{}};
}

Diagonalized diagonalize(const IntegerMatrix& a, bool track, SmithPrecision precision) {
  if (precision == SmithPrecision::Wide) return eliminate<BigInt>(a, track);
  try {
    return eliminate<std::int64_t>(a, track);
  } catch (const LeftNarrowRange&) {
    return eliminate<BigInt>(a, track);
  }
}

// s*a + t*b = g > 0 for a, b > 0.
void extended_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& s, BigInt& t) {
  BigInt old_r = a, r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * cur_s;
    old_s = std::move(cur_s);
    cur_s = std::move(tmp);
    tmp = old_t - q * cur_t;
    old_t = std::move(cur_t);
    cur_t = std::move(tmp);
  }
  g = old_r;
  s = old_s;
  t = old_t;
}

// Rows i and j of a row-major block of width w: (ri, rj) <- (x*ri + y*rj, z*ri + v*rj).
void combine_rows(std::vector<BigInt>& mat, std::size_t w, std::size_t i, std::size_t j,
                  const BigInt& x, const BigInt& y, const BigInt& z, const BigInt& v) {
  for (std::size_t c = 0; c < w; ++c) {
    BigInt& ri = mat[i * w + c];
    BigInt& rj = mat[j * w + c];
    if (ri == 0 && rj == 0) continue;
    BigInt ni = x * ri + y * rj;
    BigInt nj = z * ri + v * rj;
    ri = std::move(ni);
    rj = std::move(nj);
  }
}

// Signs, zeros last, then the divisibility chain by pairwise (gcd, lcm).
void finish(Diagonalized& d, std::size_t m, std::size_t n, bool track) {
  const std::size_t k = d.diag.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (d.diag[i] < 0) {
      d.diag[i] = -d.diag[i];
      if (track)
        for (std::size_t c = 0; c < m; ++c) d.u[i * m + c] = -d.u[i * m + c];
    }
  }

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_partition(order.begin(), order.end(), [&](std::size_t i) { return d.diag[i] != 0; });
  if (!std::is_sorted(order.begin(), order.end())) {
    std::vector<BigInt> diag(k);
    std::vector<BigInt> u = track ? d.u : std::vector<BigInt>{};
    std::vector<BigInt> vt = track ? d.vt : std::vector<BigInt>{};
    for (std::size_t pos = 0; pos < k; ++pos) {
      const std::size_t from = order[pos];
      diag[pos] = d.diag[from];
      if (track) {
        std::copy_n(d.u.begin() + from * m, m, u.begin() + pos * m);
        std::copy_n(d.vt.begin() + from * n, n, vt.begin() + pos * n);
      }
    }
    d.diag = std::move(diag);
    if (track) {
      d.u = std::move(u);
      d.vt = std::move(vt);
    }
  }

  std::size_t nonzero = 0;
  while (nonzero < k && d.diag[nonzero] != 0) ++nonzero;
  BigInt g, s, t;
  for (std::size_t i = 0; i < nonzero; ++i) {
    for (std::size_t j = i + 1; j < nonzero; ++j) {
      const BigInt& a = d.diag[i];
      const BigInt& b = d.diag[j];
      if (b % a == 0) continue;
      extended_gcd(a, b, g, s, t);
      const BigInt a_g = a / g;
      const BigInt b_g = b / g;
      if (track) {
        combine_rows(d.u, m, i, j, s, t, BigInt(-b_g), a_g);
        combine_rows(d.vt, n, i, j, BigInt(1), BigInt(1), BigInt(-t * b_g), BigInt(s * a_g));
      }
      BigInt lcm = a * b_g;
      d.diag[i] = g;
      d.diag[j] = std::move(lcm);
    }
  }
}

}  // namespace

std::vector<BigInt> SmithDecomposition::diagonal() const {
  const std::size_t k = std::min(D.rows(), D.cols());
  std::vector<BigInt> d(k);
  for (std::size_t i = 0; i < k; ++i) d[i] = D(i, i);
  return d;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& a, SmithPrecision precision) {
  const std::size_t m = a.rows(), n = a.cols();
  Diagonalized d = diagonalize(a, true, precision);
  finish(d, m, n, true);
  SmithDecomposition out;
  out.source_rows = m;
  out.source_cols = n;
  out.U = IntegerMatrix(m, m, std::move(d.u));
  out.V = IntegerMatrix(n, n, std::move(d.vt)).transposed();
  out.D = IntegerMatrix(m, n);
  for (std::size_t i = 0; i < d.diag.size(); ++i) out.D(i, i) = d.diag[i];
  return out;
}

std::vector<BigInt> smith_invariants(const IntegerMatrix& a, SmithPrecision precision) {
  Diagonalized d = diagonalize(a, false, precision);
  finish(d, a.rows(), a.cols(), false);
  return std::move(d.diag);
}

}  // namespace cob
