#include "solenoid/profinite.hpp"

#include <boost/multiprecision/integer.hpp>

namespace solenoid {

BigInt factorial(int k) {
    if (k < 0) throw std::invalid_argument("factorial of a negative integer");
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

ProfiniteInt::ProfiniteInt(int depth, BigInt residue)
    : depth_(depth), residue_(std::move(residue)), modulus_(factorial(depth)) {
    if (depth < 1) throw std::invalid_argument("truncation depth must be positive");
    residue_ %= modulus_;
    if (residue_ < 0) residue_ += modulus_;
}

int64_t ProfiniteInt::residue_mod(int64_t m) const {
    if (m < 1) throw std::invalid_argument("modulus must be positive");
    return (residue_ % m).convert_to<int64_t>();
}

ProfiniteInt ProfiniteInt::project(int j) const {
    if (j > depth_) throw std::invalid_argument("cannot refine a truncation");
    if (j == depth_) return *this;
    return ProfiniteInt(j, residue_ % factorial(j));
}

ProfiniteInt operator+(const ProfiniteInt& a, const ProfiniteInt& b) {
    if (a.depth_ != b.depth_) throw std::invalid_argument("incompatible truncation depths");
    return ProfiniteInt(a.depth_, a.residue_ + b.residue_);
}

ProfiniteInt operator-(const ProfiniteInt& a, const ProfiniteInt& b) {
    if (a.depth_ != b.depth_) throw std::invalid_argument("incompatible truncation depths");
    return ProfiniteInt(a.depth_, a.residue_ - b.residue_);
}

ProfiniteInt ProfiniteInt::operator-() const { return ProfiniteInt(depth_, -residue_); }

ProfiniteInt profinite_add(const ProfiniteInt& a, const ProfiniteInt& b) { return a + b; }

ProfiniteInt profinite_project(const ProfiniteInt& a, int j) { return a.project(j); }

bool is_monothetic_generator(const ProfiniteInt& a) {
    // The residue generates Z/nZ for every n | K! iff it is coprime to K!.
    return boost::multiprecision::gcd(a.residue(), a.modulus()) == 1;
}

}  // namespace solenoid
