#include "gcond/formulas.hpp"

#include <stdexcept>

namespace gcond {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// 1 - q^e
Poly one_minus_q_pow(int e) {
  std::vector<BigInt> c(static_cast<std::size_t>(e) + 1);
  c[0] = 1;
  c[static_cast<std::size_t>(e)] -= 1;
  return Poly(std::move(c));
}

BigRat ratio(long num, long den) {
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

RingElem aztec_formula(int n) {
  require(n >= 0, "aztec_formula needs n >= 0");
  BigInt r = 1;
  r <<= static_cast<mp_bitcnt_t>(n) * static_cast<mp_bitcnt_t>(n + 1) / 2;
  return RingElem(r);
}

RingElem fibonacci(int n) {
  require(n >= 1, "fibonacci needs n >= 1");
  BigInt a = 1, b = 1;
  for (int k = 2; k < n; ++k) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return RingElem(n <= 2 ? BigInt(1) : b);
}

RingElem macmahon_P(int r, int s, int t) {
  require(r >= 0 && s >= 0 && t >= 0, "macmahon_P needs nonnegative box sides");
  Poly num(BigInt(1)), den(BigInt(1));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= s; ++j) {
      num = num * one_minus_q_pow(i + j + t - 1);
      den = den * one_minus_q_pow(i + j - 1);
    }
  return RingElem(Poly::divide_exact(num, den));
}

RingElem macmahon_N(int r, int s, int t) { return eval_at_one(macmahon_P(r, s, t)); }

RingElem tcpp_formula(int r, int t) {
  require(r >= 0 && t >= 0, "tcpp_formula needs nonnegative parameters");
  // The r = 0 box is empty and has the single empty partition; the binomial
  // below would vanish there.
  if (r == 0) return RingElem(1);
  BigRat v = 1;
  for (int k = 1; k <= r - 1; ++k) v *= ratio(t + k, k);  // C(t+r-1, r-1)
  for (int i = 1; i <= r - 2; ++i)
    for (int j = i; j <= r - 2; ++j) v *= ratio(2 * t + i + j + 1, i + j + 1);
  if (v.get_den() != 1) throw std::logic_error("tcpp product is not integral");
  return RingElem(BigInt(v.get_num()));
}

RingElem fortress_formula(FortressKind kind, int k) {
  require(k >= 1, "fortress_formula needs k >= 1");
  const BigRat five_quarters = ratio(5, 4);
  auto power = [&](unsigned e) { return pow(RingElem(five_quarters), e); };
  if (kind == FortressKind::C) return power(static_cast<unsigned>(k * k));
  RingElem base = power(static_cast<unsigned>(k * (k + 1)));
  if (k % 2 == 1) return base;
  return kind == FortressKind::A ? RingElem(BigRat(2)) * base : base * RingElem::rational(1, 2);
}

}  // namespace gcond
