#include "lieforge/oracle.hpp"

#include <gmpxx.h>

#include <stdexcept>

#include "lieforge/errors.hpp"

namespace lieforge {

GeneratorCensus GeneratorCensus::of(const Presentation& p) {
  GeneratorCensus c;
  for (const auto& g : p.generators) c.add(g.degree, g.sign);
  return c;
}

void GeneratorCensus::add(int degree, int sign) {
  if (degree < 1) throw DegreeError("generator degree must be at least 1");
  auto& slot = byDegree[degree];
  (sign ? slot.second : slot.first) += 1;
}

int mobius(int n) {
  int result = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

std::vector<std::uint64_t> wittDims(unsigned generators, int maxDegree) {
  std::vector<std::uint64_t> out;
  for (int n = 1; n <= maxDegree; ++n) {
    mpz_class sum = 0;
    for (int d = 1; d <= n; ++d) {
      if (n % d) continue;
      mpz_class power;
      mpz_ui_pow_ui(power.get_mpz_t(), generators, static_cast<unsigned long>(n / d));
      sum += mobius(d) * power;
    }
    out.push_back(mpz_class(sum / n).get_ui());
  }
  return out;
}

namespace {

// a + b s with s^2 = 1
struct SuperInt {
  mpz_class even = 0;
  mpz_class odd = 0;
};

using Series = std::vector<SuperInt>;  // index = power of t

Series multiply(const Series& a, const Series& b) {
  Series out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].even == 0 && a[i].odd == 0) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j) {
      out[i + j].even += a[i].even * b[j].even + a[i].odd * b[j].odd;
      out[i + j].odd += a[i].even * b[j].odd + a[i].odd * b[j].even;
    }
  }
  return out;
}

mpz_class binomial(const mpz_class& n, unsigned long k) {
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

}  // namespace

std::vector<ParityDims> freeSuperDims(const GeneratorCensus& census, int maxDegree) {
  const std::size_t len = static_cast<std::size_t>(maxDegree) + 1;

  // Hilbert series of the tensor algebra.
  Series target(len);
  target[0].even = 1;
  for (std::size_t k = 1; k < len; ++k) {
    for (const auto& [deg, counts] : census.byDegree) {
      if (static_cast<std::size_t>(deg) > k) continue;
      const SuperInt& prev = target[k - deg];
      // even generators keep parity, odd ones swap the components
      target[k].even += counts.first * prev.even + counts.second * prev.odd;
      target[k].odd += counts.first * prev.odd + counts.second * prev.even;
    }
  }

  Series product(len);
  product[0].even = 1;
  std::vector<ParityDims> out;
  for (std::size_t d = 1; d < len; ++d) {
    mpz_class e = target[d].even - product[d].even;
    mpz_class o = target[d].odd - product[d].odd;
    if (e < 0 || o < 0) throw std::logic_error("negative dimension in PBW expansion");
    out.push_back({e.get_ui(), o.get_ui()});

    Series factor(len);
    factor[0].even = 1;
    // (1 - t^d)^(-e): coefficient of t^(dk) is C(e+k-1, k)
    for (std::size_t k = 1; d * k < len; ++k) factor[d * k].even = binomial(e + k - 1, k);
    product = multiply(product, factor);

    Series odd(len);
    // (1 + s t^d)^o: coefficient of t^(dk) is C(o, k) s^k
    for (std::size_t k = 0; d * k < len; ++k) {
      mpz_class c = binomial(o, k);
      (k % 2 ? odd[d * k].odd : odd[d * k].even) = c;
    }
    product = multiply(product, odd);
  }
  return out;
}

}  // namespace lieforge
