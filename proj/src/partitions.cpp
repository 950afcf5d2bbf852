#include "hk/partitions.hpp"

#include <algorithm>
#include <sstream>

namespace hk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        size_ += parts_[i];
        mult_[parts_[i]]++;
    }
}

int Partition::multiplicity(int k) const {
    auto it = mult_.find(k);
    return it == mult_.end() ? 0 : it->second;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> out(parts_[0]);
    for (int j = 0; j < parts_[0]; ++j) {
        int cnt = 0;
        for (int p : parts_)
            if (p > j) ++cnt;
        out[j] = cnt;
    }
    return Partition(out);
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

std::vector<Partition> enum_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enum_partitions: n >= 0 required");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Recursive descent emits reverse-lexicographic order directly.
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

long pairing_n(const Partition& lambda, const Partition& mu) {
    // sum_{i,j} min(lambda_i, mu_j) = sum_t lambda'_t mu'_t; the double loop is
    // cheap at our sizes and matches the definition literally.
    long s = 0;
    for (int a : lambda.parts())
        for (int b : mu.parts()) s += std::min(a, b);
    return s;
}

std::vector<ArmLeg> cells_arm_leg(const Partition& lambda) {
    std::vector<ArmLeg> out;
    out.reserve((size_t)lambda.size());
    const auto& parts = lambda.parts();
    std::vector<int> conj = parts.empty() ? std::vector<int>() : lambda.conjugate().parts();
    for (int i = 1; i <= (int)parts.size(); ++i)
        for (int j = 1; j <= parts[i - 1]; ++j)
            out.push_back({parts[i - 1] - j, conj[j - 1] - i});
    return out;
}

ExactInt partition_count(int n) {
    if (n < 0) return ExactInt(0);
    std::vector<ExactInt> p((size_t)n + 1);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        ExactInt acc(0);
        for (int k = 1;; ++k) {
            long g1 = (long)k * (3 * k - 1) / 2;
            long g2 = (long)k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            ExactInt s(0);
            if (g1 <= m) s += p[(size_t)(m - g1)];
            if (g2 <= m) s += p[(size_t)(m - g2)];
            if (k % 2) acc += s;
            else acc -= s;
        }
        p[(size_t)m] = acc;
    }
    return p[(size_t)n];
}

} // namespace hk
