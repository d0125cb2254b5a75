#pragma once

namespace fuzzy {

// Kahan accumulator. The running compensation recovers the low-order bits
// lost when a small term is added to a large partial sum.
//
// Requires the translation unit to be compiled without floating-point
// contraction (-ffp-contract=off), otherwise the compensation step may be
// fused away.
template <typename Value>
struct KahanSum {
  Value sum = Value{0};
  Value compensation = Value{0};

  void add(Value value) {
    const Value y = value - compensation;
    const Value t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
  }

  KahanSum& operator+=(Value value) {
    add(value);
    return *this;
  }

  Value value() const { return sum; }
};

}  // namespace fuzzy
