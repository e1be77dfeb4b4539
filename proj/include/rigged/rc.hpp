#pragma once

#include "rigged/configuration.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace rigged {

// One string of a rigged partition: a row of the partition together with its
// label (rigging).
struct RcString {
    std::int64_t length = 0;
    std::int64_t label = 0;
    friend auto operator<=>(const RcString&, const RcString&) = default;
};

// A rigged configuration (nu, J): per node a multiset of strings, kept in the
// canonical order (length descending, then label descending) so that equality
// and encodings are multiset equality. Value type; all operations on rigged
// configurations are pure.
class RiggedConfiguration {
public:
    explicit RiggedConfiguration(int rank);
    static RiggedConfiguration from_strings(std::vector<std::vector<RcString>> strings);

    int rank() const { return static_cast<int>(strings_.size()); }
    const std::vector<RcString>& strings(int node) const;
    bool empty(int node) const { return strings(node).empty(); }

    Configuration shape() const;
    std::int64_t label_sum() const; // sum of all labels, the |J| part of cocharge

    // Canonical text form, e.g. "2,-1;1,-1|3,-2" (strings "length,label"
    // joined by ';', nodes joined by '|'). Used as graph key.
    std::string encode() const;
    static RiggedConfiguration decode(const std::string& text, int rank);

    friend bool operator==(const RiggedConfiguration&, const RiggedConfiguration&) = default;
    friend auto operator<=>(const RiggedConfiguration& x, const RiggedConfiguration& y) {
        return x.strings_ <=> y.strings_;
    }

private:
    std::vector<std::vector<RcString>> strings_;
};

} // namespace rigged
