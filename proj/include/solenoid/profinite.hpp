#pragma once

#include "solenoid/rational.hpp"

#include <cstdint>
#include <stdexcept>

namespace solenoid {

/// K! for K >= 0.
BigInt factorial(int k);

/// A profinite integer truncated at depth K, stored as its residue mod K!.
///
/// The moduli K! are cofinal in the divisibility order, so a single residue
/// mod K! determines the residue mod n for every n dividing K!. Construction
/// normalizes any integer (including negatives) into [0, K!) by Euclidean
/// reduction. Values are immutable.
class ProfiniteInt {
public:
    ProfiniteInt(int depth, BigInt residue);

    int depth() const { return depth_; }
    const BigInt& residue() const { return residue_; }
    const BigInt& modulus() const { return modulus_; }

    /// Residue mod m for any m dividing finitely into range; m >= 1.
    int64_t residue_mod(int64_t m) const;

    ProfiniteInt project(int j) const;

    friend ProfiniteInt operator+(const ProfiniteInt& a, const ProfiniteInt& b);
    friend ProfiniteInt operator-(const ProfiniteInt& a, const ProfiniteInt& b);
    ProfiniteInt operator-() const;
    friend bool operator==(const ProfiniteInt& a, const ProfiniteInt& b) {
        return a.depth_ == b.depth_ && a.residue_ == b.residue_;
    }
    friend bool operator!=(const ProfiniteInt& a, const ProfiniteInt& b) { return !(a == b); }

private:
    int depth_;
    BigInt residue_;
    BigInt modulus_;
};

ProfiniteInt profinite_add(const ProfiniteInt& a, const ProfiniteInt& b);
ProfiniteInt profinite_project(const ProfiniteInt& a, int j);

/// True iff the residue generates Z/nZ for every n dividing K!, i.e.
/// gcd(residue, K!) = 1. This certifies generation only at the truncation
/// depth ("irrational up to depth K").
bool is_monothetic_generator(const ProfiniteInt& a);

}  // namespace solenoid
