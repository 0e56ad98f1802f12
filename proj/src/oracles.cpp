#include "kbranch/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace kbranch::oracles {

namespace {

using Parts = std::vector<int>;

int part(const Parts& p, size_t i) { return i < p.size() ? p[i] : 0; }

int total(const Parts& p) { return std::accumulate(p.begin(), p.end(), 0); }

Parts trimmed(Parts p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// Every mu with lambda_{i+offset} <= mu_i <= lambda_i (offset 1: horizontal
// strips, offset 2: double strips), optionally at most max_len parts.
void for_each_below(const Parts& lambda, size_t offset, size_t max_len,
                    const std::function<void(const Parts&)>& visit) {
  Parts mu(lambda.size(), 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == lambda.size()) {
      visit(trimmed(mu));
      return;
    }
    const int hi = i == 0 ? lambda[0] : std::min(lambda[i], mu[i - 1]);
    const int lo = part(lambda, i + offset);
    for (int v = hi; v >= lo; --v) {
      if (v > 0 && i >= max_len) continue;
      mu[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

MonomialPolynomial schur_uncached(const Parts& lambda, int n);

const MonomialPolynomial& schur_cached(const Parts& lambda, int n) {
  thread_local std::map<std::pair<Parts, int>, MonomialPolynomial> cache;
  auto key = std::make_pair(lambda, n);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto poly = schur_uncached(lambda, n);
  return cache.emplace(std::move(key), std::move(poly)).first->second;
}

MonomialPolynomial schur_uncached(const Parts& lambda, int n) {
  MonomialPolynomial out;
  out.variables = n;
  if (static_cast<int>(lambda.size()) > n) return out;
  if (n == 0) {
    out.terms[{}] = 1;
    return out;
  }
  for_each_below(lambda, 1, static_cast<size_t>(n - 1), [&](const Parts& mu) {
    const int shift = total(lambda) - total(mu);
    for (const auto& [e, c] : schur_cached(mu, n - 1).terms) {
      auto ex = e;
      ex.push_back(shift);
      out.terms[ex] += c;
    }
  });
  return out;
}

Parts padded(const Parts& p, int n) {
  Parts out(static_cast<size_t>(n), 0);
  std::copy(p.begin(), p.end(), out.begin());
  return out;
}

// Partitions of m with at most n parts, lexicographically decreasing.
std::vector<Parts> dominant_exponents(int m, int n) {
  std::vector<Parts> out;
  Parts cur;
  std::function<void(int, int)> rec = [&](int rem, int cap) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == n) return;
    for (int v = std::min(rem, cap); v >= 1; --v) {
      cur.push_back(v);
      rec(rem - v, v);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

}  // namespace

Count MonomialPolynomial::coefficient(const std::vector<int>& exponents) const {
  auto it = terms.find(exponents);
  return it == terms.end() ? Count(0) : it->second;
}

MonomialPolynomial schur_polynomial(const Partition& lambda, int n) {
  return schur_cached(lambda.vec(), n);
}

std::map<Partition, Count> schur_product(const Partition& mu, const Partition& nu, int n) {
  const int m = mu.size() + nu.size();
  if (n > 12) throw ValidationError("oracle products are limited to 12 variables");
  if (n < 0) throw ValidationError("negative variable count");
  const auto& pm = schur_cached(mu.vec(), n);
  const auto& pn = schur_cached(nu.vec(), n);

  // coefficients of the dominant monomials of the product
  const auto alphas = dominant_exponents(m, n);
  std::map<Parts, Count> dominant;
  for (const auto& a : alphas) {
    const auto ex = padded(a, n);
    Count c = 0;
    for (const auto& [beta, cb] : pm.terms) {
      Parts rest(ex.size());
      bool fits = true;
      for (size_t i = 0; i < ex.size() && fits; ++i) {
        rest[i] = ex[i] - beta[i];
        fits = rest[i] >= 0;
      }
      if (fits) c += cb * pn.coefficient(rest);
    }
    dominant[a] = c;
  }

  std::map<Partition, Count> out;
  for (const auto& a : alphas) {
    const Count c = dominant[a];
    if (c == 0) continue;
    if (c < 0) throw std::logic_error("negative Schur coefficient in oracle decomposition");
    out[Partition(a)] = c;
    const auto& sa = schur_cached(a, n);
    for (const auto& b : alphas) dominant[b] -= c * sa.coefficient(padded(b, n));
  }
  return out;
}

Count lr_oracle(const Partition& lambda, const Partition& mu, const Partition& nu, int n) {
  if (lambda.length() > n) throw ValidationError("lambda needs at least l(lambda) variables");
  const auto prod = schur_product(mu, nu, n);
  auto it = prod.find(lambda);
  return it == prod.end() ? Count(0) : it->second;
}

Count gl_dimension(const std::vector<int>& w) {
  Count num = 1, den = 1;
  const long r = static_cast<long>(w.size());
  for (long i = 0; i < r; ++i)
    for (long j = i + 1; j < r; ++j) {
      num *= w[static_cast<size_t>(i)] - w[static_cast<size_t>(j)] + j - i;
      den *= j - i;
    }
  return num / den;
}

Count gl_dimension(const Partition& lambda, int rank) {
  if (lambda.length() > rank) throw ValidationError("partition longer than the rank");
  return gl_dimension(padded(lambda.vec(), rank));
}

Count gl_dimension(const GeneralizedPartition& lambda, int rank) {
  if (lambda.plus.length() + lambda.minus.length() > rank)
    throw ValidationError("generalized partition does not fit the rank");
  std::vector<int> w(static_cast<size_t>(rank), 0);
  for (int i = 0; i < lambda.plus.length(); ++i) w[static_cast<size_t>(i)] = lambda.plus.part(i);
  for (int i = 0; i < lambda.minus.length(); ++i)
    w[static_cast<size_t>(rank - 1 - i)] = -lambda.minus.part(i);
  return gl_dimension(w);
}

namespace {

// prod_{i<j} (l_i^2 - l_j^2) / (r_i^2 - r_j^2), times prod_i l_i / r_i when `linear`.
Count weyl_ratio(const std::vector<long>& l, const std::vector<long>& rho, bool linear) {
  Count num = 1, den = 1;
  for (size_t i = 0; i < l.size(); ++i) {
    for (size_t j = i + 1; j < l.size(); ++j) {
      num *= Count(l[i] * l[i] - l[j] * l[j]);
      den *= Count(rho[i] * rho[i] - rho[j] * rho[j]);
    }
    if (linear) {
      num *= l[i];
      den *= rho[i];
    }
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension is not integral");
  return num / den;
}

Count symplectic_dimension(const Parts& lambda, int k) {
  std::vector<long> l, rho;
  for (int i = 0; i < k; ++i) {
    rho.push_back(k - i);
    l.push_back(part(lambda, static_cast<size_t>(i)) + k - i);
  }
  return weyl_ratio(l, rho, true);
}

// SO_k irreducible with highest weight lambda, l(lambda) <= k/2.
Count special_orthogonal_dimension(const Parts& lambda, int k) {
  const int m = k / 2;
  std::vector<long> l, rho;
  if (k % 2 == 1) {
    // half-integral rho, doubled throughout
    for (int i = 0; i < m; ++i) {
      rho.push_back(2 * (m - i) - 1);
      l.push_back(2 * part(lambda, static_cast<size_t>(i)) + 2 * (m - i) - 1);
    }
    return weyl_ratio(l, rho, true);
  }
  // type D: rho = (m-1, ..., 1, 0), no linear factor
  for (int i = 0; i < m; ++i) {
    rho.push_back(m - 1 - i);
    l.push_back(part(lambda, static_cast<size_t>(i)) + m - 1 - i);
  }
  return weyl_ratio(l, rho, false);
}

int first_two_columns(const Parts& p) {
  int n = 0;
  for (int v : p) n += std::min(v, 2);
  return n;
}

// Flip the first column length from l to k - l.
Parts associated(const Parts& p, int k) {
  Parts rest;
  for (int v : p)
    if (v > 1) rest.push_back(v - 1);
  const int len = k - static_cast<int>(p.size());
  Parts out(static_cast<size_t>(std::max(len, static_cast<int>(rest.size()))), 1);
  for (size_t i = 0; i < rest.size(); ++i) out[i] += rest[i];
  return out;
}

}  // namespace

Count classical_dimension(const GroupType& group, const Label& lambda) {
  const int k = group.rank;
  if (group.family == Family::GeneralLinear)
    return gl_dimension(std::get<GeneralizedPartition>(lambda), k);
  Parts p = std::get<Partition>(lambda).vec();
  if (group.family == Family::Symplectic) {
    if (static_cast<int>(p.size()) > k) throw ValidationError("label not in Sp_2k-hat");
    return symplectic_dimension(p, k);
  }
  if (first_two_columns(p) > k) throw ValidationError("label not in O_k-hat");
  // E^lambda and its associate differ by det; use the shorter one
  if (2 * static_cast<int>(p.size()) > k) p = associated(p, k);
  const Count so = special_orthogonal_dimension(p, k);
  // for k even and l(lambda) = k/2 the O_k irreducible is two SO_k irreducibles
  if (k % 2 == 0 && 2 * static_cast<int>(p.size()) == k && k > 0) return 2 * so;
  return so;
}

GradedDimension howe_graded_dimensions(HoweSetting setting, int p, int q, int d) {
  GradedDimension out;
  auto binom = [](long n, long r) { return binomial(n, r); };
  switch (setting) {
    case HoweSetting::Symmetric:
    case HoweSetting::Alternating: {
      const int n = p;
      const bool sym = setting == HoweSetting::Symmetric;
      const long cells = sym ? n * (n + 1) / 2 : n * (n - 1) / 2;
      // degree-d polynomials on a space of dimension `cells`
      out.polynomial_side = cells == 0 ? Count(d == 0 ? 1 : 0) : binom(cells + d - 1, d);
      out.schur_side = 0;
      for (const auto& nu : dominant_exponents(2 * d, n)) {
        bool ok = true;
        if (sym) {
          ok = std::all_of(nu.begin(), nu.end(), [](int v) { return v % 2 == 0; });
        } else {
          // even columns: parts come in equal pairs
          for (size_t i = 0; i < nu.size() && ok; i += 2) ok = part(nu, i + 1) == nu[i];
        }
        if (ok) out.schur_side += gl_dimension(padded(nu, n));
      }
      break;
    }
    case HoweSetting::Mixed: {
      const long cells = static_cast<long>(p) * q;
      out.polynomial_side = cells == 0 ? Count(d == 0 ? 1 : 0) : binom(cells + d - 1, d);
      out.schur_side = 0;
      for (const auto& nu : dominant_exponents(d, std::min(p, q)))
        out.schur_side += gl_dimension(padded(nu, p)) * gl_dimension(padded(nu, q));
      break;
    }
  }
  return out;
}

bool howe_graded_dimension_check(HoweSetting setting, int p, int q, int d) {
  const auto g = howe_graded_dimensions(setting, p, q, d);
  return g.polynomial_side == g.schur_side;
}

namespace {

// Two-letter LR fillings of outer/inner with (#1 - #2) == weight, by trying all
// 2^cells assignments.
Count two_letter_lr_fillings(const Parts& outer, const Parts& inner, int weight) {
  struct Cell {
    size_t row;
    int col;
  };
  std::vector<Cell> cells;
  for (size_t r = 0; r < outer.size(); ++r)
    for (int c = part(inner, r); c < outer[r]; ++c) cells.push_back({r, c});
  const size_t n = cells.size();
  Count found = 0;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    std::map<std::pair<size_t, int>, int> value;
    int ones = 0;
    for (size_t i = 0; i < n; ++i) {
      const int v = (mask >> i) & 1UL ? 2 : 1;
      value[{cells[i].row, cells[i].col}] = v;
      if (v == 1) ++ones;
    }
    if (ones - (static_cast<int>(n) - ones) != weight) continue;
    bool ok = true;
    for (const auto& [rc, v] : value) {
      auto left = value.find({rc.first, rc.second - 1});
      if (left != value.end() && left->second > v) ok = false;
      if (rc.first > 0) {
        auto up = value.find({rc.first - 1, rc.second});
        if (up != value.end() && up->second >= v) ok = false;
      }
    }
    if (!ok) continue;
    // word: rows top to bottom, right to left; #2 never exceeds #1
    int c1 = 0, c2 = 0;
    for (size_t r = 0; r < outer.size() && ok; ++r)
      for (int c = outer[r] - 1; c >= part(inner, r) && ok; --c) {
        if (value[{r, c}] == 1)
          ++c1;
        else
          ok = ++c2 <= c1;
      }
    if (ok) ++found;
  }
  return found;
}

}  // namespace

Count chain_oracle(const GroupType& group, const Label& lambda, const std::vector<int>& delta) {
  const int k = group.rank;
  if (static_cast<int>(delta.size()) != k) throw ValidationError("weight length must equal k");

  if (group.family == Family::GeneralLinear) {
    const auto& g = std::get<GeneralizedPartition>(lambda);
    if (g.plus.length() + g.minus.length() > k) throw ValidationError("label not in GL_k-hat");
    std::function<Count(int, const Parts&, const Parts&)> rec = [&](int i, const Parts& plus,
                                                                   const Parts& minus) -> Count {
      if (i == 0) return plus.empty() && minus.empty() ? 1 : 0;
      Count sum = 0;
      for_each_below(plus, 1, static_cast<size_t>(i - 1), [&](const Parts& pp) {
        for_each_below(minus, 1, static_cast<size_t>(i - 1), [&](const Parts& mm) {
          if (static_cast<int>(pp.size() + mm.size()) > i - 1) return;
          const int w = (total(plus) - total(pp)) - (total(minus) - total(mm));
          if (w == delta[static_cast<size_t>(i - 1)]) sum += rec(i - 1, pp, mm);
        });
      });
      return sum;
    };
    return rec(k, g.plus.vec(), g.minus.vec());
  }

  const Parts top = std::get<Partition>(lambda).vec();
  if (group.family == Family::Orthogonal) {
    if (first_two_columns(top) > k) throw ValidationError("label not in O_k-hat");
    std::function<Count(int, const Parts&)> rec = [&](int i, const Parts& cur) -> Count {
      if (i == 0) return cur.empty() ? 1 : 0;
      Count sum = 0;
      for_each_below(cur, 1, cur.size(), [&](const Parts& prev) {
        if (first_two_columns(prev) > i - 1) return;
        if ((total(cur) - total(prev)) % 2 == delta[static_cast<size_t>(i - 1)])
          sum += rec(i - 1, prev);
      });
      return sum;
    };
    return rec(k, top);
  }

  if (static_cast<int>(top.size()) > k) throw ValidationError("label not in Sp_2k-hat");
  std::function<Count(int, const Parts&)> rec = [&](int i, const Parts& cur) -> Count {
    if (i == 0) return cur.empty() ? 1 : 0;
    Count sum = 0;
    for_each_below(cur, 2, static_cast<size_t>(i - 1), [&](const Parts& prev) {
      const Count fill = two_letter_lr_fillings(cur, prev, delta[static_cast<size_t>(i - 1)]);
      if (fill != 0) sum += fill * rec(i - 1, prev);
    });
    return sum;
  };
  return rec(k, top);
}

}  // namespace kbranch::oracles
