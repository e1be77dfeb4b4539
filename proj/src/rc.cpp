#include "rigged/rc.hpp"

#include "rigged/checked.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rigged {

namespace {

void canonicalize(std::vector<RcString>& v) {
    std::sort(v.begin(), v.end(), [](const RcString& x, const RcString& y) {
        if (x.length != y.length) return x.length > y.length;
        return x.label > y.label;
    });
}

} // namespace

RiggedConfiguration::RiggedConfiguration(int rank) {
    if (rank < 1) throw std::invalid_argument("rigged configuration rank must be >= 1");
    strings_.resize(static_cast<size_t>(rank));
}

RiggedConfiguration RiggedConfiguration::from_strings(std::vector<std::vector<RcString>> strings) {
    if (strings.empty()) throw std::invalid_argument("rigged configuration rank must be >= 1");
    RiggedConfiguration rc(static_cast<int>(strings.size()));
    for (auto& node : strings) {
        for (const auto& s : node)
            if (s.length < 1) throw std::invalid_argument("string lengths must be >= 1");
        canonicalize(node);
    }
    rc.strings_ = std::move(strings);
    return rc;
}

const std::vector<RcString>& RiggedConfiguration::strings(int node) const {
    if (node < 1 || node > rank())
        throw std::invalid_argument("rigged configuration node out of range");
    return strings_[static_cast<size_t>(node - 1)];
}

Configuration RiggedConfiguration::shape() const {
    std::vector<Partition> parts(strings_.size());
    for (size_t a = 0; a < strings_.size(); ++a)
        for (const auto& s : strings_[a]) parts[a].push_back(s.length);
    return Configuration::from_partitions(parts);
}

std::int64_t RiggedConfiguration::label_sum() const {
    std::int64_t s = 0;
    for (const auto& node : strings_)
        for (const auto& str : node) s = checked_add(s, str.label);
    return s;
}

std::string RiggedConfiguration::encode() const {
    std::ostringstream os;
    for (size_t a = 0; a < strings_.size(); ++a) {
        if (a) os << '|';
        for (size_t i = 0; i < strings_[a].size(); ++i) {
            if (i) os << ';';
            os << strings_[a][i].length << ',' << strings_[a][i].label;
        }
    }
    return os.str();
}

RiggedConfiguration RiggedConfiguration::decode(const std::string& text, int rank) {
    std::vector<std::vector<RcString>> strings(static_cast<size_t>(rank));
    size_t node = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t bar = text.find('|', pos);
        std::string section = text.substr(pos, bar == std::string::npos ? bar : bar - pos);
        if (node >= strings.size()) throw std::invalid_argument("encoded rc has too many nodes");
        size_t spos = 0;
        while (spos < section.size()) {
            size_t semi = section.find(';', spos);
            std::string item =
                section.substr(spos, semi == std::string::npos ? semi : semi - spos);
            size_t comma = item.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("bad string entry in encoded rc: " + item);
            RcString s;
            s.length = std::stoll(item.substr(0, comma));
            s.label = std::stoll(item.substr(comma + 1));
            strings[node].push_back(s);
            if (semi == std::string::npos) break;
            spos = semi + 1;
        }
        ++node;
        if (bar == std::string::npos) break;
        pos = bar + 1;
    }
    if (node != strings.size())
        throw std::invalid_argument("encoded rc has too few nodes for rank");
    return from_strings(std::move(strings));
}

} // namespace rigged
