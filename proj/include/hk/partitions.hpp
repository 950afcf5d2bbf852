#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hk/exact.hpp"

namespace hk {

// Integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }             // |lambda|
    int length() const { return (int)parts_.size(); } // l(lambda)
    int multiplicity(int k) const;
    const std::map<int, int>& multiplicities() const { return mult_; }

    Partition conjugate() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
    std::map<int, int> mult_;
};

// All partitions of n in reverse lexicographic order ((n) first, (1^n) last).
std::vector<Partition> enum_partitions(int n);

// n(lambda,mu) = sum over all part pairs of min(lambda_i, mu_j).
long pairing_n(const Partition& lambda, const Partition& mu);

// Arm/leg statistics per cell, row-major over the Young diagram:
// cell (i,j) has arm lambda_i - j and leg lambda'_j - i (1-based i,j).
struct ArmLeg { int arm; int leg; };
std::vector<ArmLeg> cells_arm_leg(const Partition& lambda);

// p(n) via the Euler pentagonal-number recurrence (test oracle and CLI use).
ExactInt partition_count(int n);

} // namespace hk
