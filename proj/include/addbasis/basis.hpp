#pragma once

// BasisSet: a finite set of group elements proposed as an additive basis,
// tagged with the construction it came from. Basis files are line-oriented
// text: '#' provenance header, then one element per line in the group's
// bit-exact element rendering.

#include "addbasis/group.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace addbasis {

struct BasisProvenance {
    std::string construction;  // e.g. "parabola", "shift2", "hyperbola3", "greedy", "file"
    std::vector<std::pair<std::string, std::string>> params;  // rendered verbatim, in order

    std::string param(const std::string& key) const {
        for (const auto& [k, v] : params)
            if (k == key) return v;
        return {};
    }
};

class BasisSet {
public:
    BasisSet(const Group& group, std::vector<GroupElement> elements, BasisProvenance provenance)
        : group_(&group), elements_(std::move(elements)), provenance_(std::move(provenance)) {
        for (const auto& e : elements_) group.check_elem(e);
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    }

    const Group& group() const { return *group_; }
    const std::vector<GroupElement>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    const BasisProvenance& provenance() const { return provenance_; }

    bool contains(const GroupElement& e) const {
        return std::binary_search(elements_.begin(), elements_.end(), e);
    }

    std::string to_text() const {
        std::ostringstream out;
        out << "# addbasis basis file\n";
        out << "# group: " << group_->spec_string() << "\n";
        out << "# enumeration: " << group_->enumeration_order() << "\n";
        out << "# construction: " << provenance_.construction << "\n";
        for (const auto& [k, v] : provenance_.params) out << "# param " << k << ": " << v << "\n";
        out << "# size: " << elements_.size() << "\n";
        for (const auto& e : elements_) out << group_->render(e) << "\n";
        return out.str();
    }

    void write_file(const std::string& path) const {
        std::ofstream out(path, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write basis file: " + path);
        out << to_text();
        if (!out) throw std::runtime_error("failed writing basis file: " + path);
    }

    static BasisSet from_text(const Group& group, const std::string& text) {
        std::istringstream in(text);
        return read_stream(group, in);
    }

    static BasisSet read_file(const Group& group, const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open basis file: " + path);
        return read_stream(group, in);
    }

private:
    static BasisSet read_stream(const Group& group, std::istream& in) {
        BasisProvenance prov;
        prov.construction = "file";
        std::vector<GroupElement> elems;
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
            if (line.empty()) continue;
            if (line[0] == '#') {
                const std::string c = "# construction: ";
                const std::string p = "# param ";
                if (line.rfind(c, 0) == 0) prov.construction = line.substr(c.size());
                else if (line.rfind(p, 0) == 0) {
                    std::size_t colon = line.find(": ", p.size());
                    if (colon != std::string::npos)
                        prov.params.emplace_back(line.substr(p.size(), colon - p.size()),
                                                 line.substr(colon + 2));
                }
                continue;
            }
            elems.push_back(group.parse_element(line));
        }
        return BasisSet(group, std::move(elems), std::move(prov));
    }

    const Group* group_;
    std::vector<GroupElement> elements_;
    BasisProvenance provenance_;
};

}  // namespace addbasis
