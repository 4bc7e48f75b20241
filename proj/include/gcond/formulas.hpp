#pragma once

#include "gcond/exact.hpp"

namespace gcond {

struct BoxDims {
  int r = 0, s = 0, t = 0;
};

enum class FortressKind { A, B, C };

RingElem aztec_formula(int n);
RingElem fibonacci(int n);
RingElem macmahon_P(int r, int s, int t);
inline RingElem macmahon_P(const BoxDims& b) { return macmahon_P(b.r, b.s, b.t); }
RingElem macmahon_N(int r, int s, int t);
RingElem tcpp_formula(int r, int t);
// A and B at order 2k+1, C at order 2k.
RingElem fortress_formula(FortressKind kind, int k);

}  // namespace gcond
