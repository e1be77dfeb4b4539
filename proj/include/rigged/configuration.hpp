#pragma once

#include "rigged/partitions.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rigged {

// A configuration nu: one partition per Dynkin node, stored as multiplicity
// maps i -> m_i > 0. Immutable value semantics; mutation happens by building
// a fresh instance.
class Configuration {
public:
    explicit Configuration(int rank);
    static Configuration from_partitions(const std::vector<Partition>& parts);

    int rank() const { return static_cast<int>(mult_.size()); }

    const std::map<std::int64_t, std::int64_t>& mult(int node) const;
    std::int64_t m(int node, std::int64_t i) const;   // m_i^{(node)}
    std::int64_t size(int node) const;                // |nu^{(node)}|
    std::int64_t min_sum(int node, std::int64_t i) const; // sum_j min(i,j) m_j
    std::int64_t max_part(int node) const;            // 0 when empty
    std::int64_t max_part() const;                    // over all nodes
    Partition partition(int node) const;              // decreasing part list

    std::string to_string() const; // "(2,1)|(3)" style

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    void check_node(int node) const;
    std::vector<std::map<std::int64_t, std::int64_t>> mult_;
};

} // namespace rigged
