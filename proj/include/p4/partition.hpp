#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "p4/rational.hpp"

namespace p4 {

// Integer partition: weakly decreasing sequence of positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts); // validates, drops trailing zeros
    static Partition rectangle(int rows, int width); // (width^rows)

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long weight() const;
    bool empty() const { return parts_.empty(); }
    int part(int i) const; // 1-based, 0 beyond length

    Partition conjugate() const;
    // One hook length per cell, in no particular order.
    std::vector<int> hooks() const;
    Integer hook_product() const;
    bool is_3_reduced() const;

    std::string str() const; // "(2,1,1)", "()" for empty
    static Partition parse(std::string_view s);

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

// Subset of Z containing every integer below some bound and finitely many
// above it.  Canonical form uses the largest cutoff c such that every
// integer < c is a member; heads are the members >= c, strictly decreasing.
class MayaDiagram {
public:
    MayaDiagram(long cutoff, std::vector<long> heads); // canonicalizes
    // Heads at positions lambda_i - i + slots for i = 1..slots (slots >= length).
    static MayaDiagram of_partition(const Partition& lambda, int slots);

    long cutoff() const { return cutoff_; }
    const std::vector<long>& heads() const { return heads_; }
    bool contains(long m) const;
    MayaDiagram with_added(long m) const; // m must not be a member
    MayaDiagram shifted(long k) const;

    Partition to_partition() const;
    std::string str() const;

    friend bool operator==(const MayaDiagram& a, const MayaDiagram& b) {
        return a.cutoff_ == b.cutoff_ && a.heads_ == b.heads_;
    }
    friend bool operator!=(const MayaDiagram& a, const MayaDiagram& b) { return !(a == b); }

private:
    void canonicalize();
    long cutoff_ = 0;
    std::vector<long> heads_;
};

Partition maya_to_partition(const MayaDiagram& m);

// Partition attached to the pair (m, n) through the Maya diagram built from
// the three arithmetic progressions {3k : k < m}, {3k+1 : k < n}, {3k+2 : k < 0}.
Partition lambda_mn(int m, int n);

// All partitions of the given weight / of weight up to the bound.
std::vector<Partition> partitions_of(int weight);
std::vector<Partition> partitions_up_to(int max_weight);

} // namespace p4
