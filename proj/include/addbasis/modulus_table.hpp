#pragma once

// Canonical modulus polynomials for GF(p^k), p in {2,3,5,7}, k <= 16.
// The table is pinned so that constructions and reports are reproducible
// across runs and machines; every report carries its version. The same
// content ships as data/modulus_table.txt, and ADDBASIS_MODULUS_TABLE
// may point at an alternative file with the same line format.

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace addbasis {

inline constexpr const char* kModulusTableVersion = "1";

inline constexpr const char* kBuiltinModulusTable = R"(# addbasis modulus table v1
# p k c0 c1 ... ck  (monic irreducible over GF(p), coefficients low-to-high)
2 1 0 1
2 2 1 1 1
2 3 1 1 0 1
2 4 1 1 0 0 1
2 5 1 0 1 0 0 1
2 6 1 1 0 0 0 0 1
2 7 1 1 0 0 0 0 0 1
2 8 1 1 0 1 1 0 0 0 1
2 9 1 1 0 0 0 0 0 0 0 1
2 10 1 0 0 1 0 0 0 0 0 0 1
2 11 1 0 1 0 0 0 0 0 0 0 0 1
2 12 1 0 0 1 0 0 0 0 0 0 0 0 1
2 13 1 1 0 1 1 0 0 0 0 0 0 0 0 1
2 14 1 0 0 0 0 1 0 0 0 0 0 0 0 0 1
2 15 1 1 0 0 0 0 0 0 0 0 0 0 0 0 0 1
2 16 1 1 0 1 0 1 0 0 0 0 0 0 0 0 0 0 1
3 1 0 1
3 2 1 0 1
3 3 1 2 0 1
3 4 2 1 0 0 1
3 5 1 2 0 0 0 1
3 6 2 1 0 0 0 0 1
3 7 2 0 1 0 0 0 0 1
3 8 2 0 1 0 0 0 0 0 1
3 9 1 0 1 2 0 0 0 0 0 1
3 10 1 0 2 0 0 0 0 0 0 0 1
3 11 2 0 1 0 0 0 0 0 0 0 0 1
3 12 2 0 1 0 0 0 0 0 0 0 0 0 1
3 13 1 2 0 0 0 0 0 0 0 0 0 0 0 1
3 14 2 1 0 0 0 0 0 0 0 0 0 0 0 0 1
3 15 2 0 1 0 0 0 0 0 0 0 0 0 0 0 0 1
3 16 1 0 1 1 0 0 0 0 0 0 0 0 0 0 0 0 1
5 1 0 1
5 2 2 0 1
5 3 1 1 0 1
5 4 2 0 0 0 1
5 5 1 4 0 0 0 1
5 6 2 1 0 0 0 0 1
5 7 1 1 0 0 0 0 0 1
5 8 2 0 0 0 0 0 0 0 1
5 9 3 2 1 0 0 0 0 0 0 1
5 10 3 1 1 0 0 0 0 0 0 0 1
5 11 1 2 0 0 0 0 0 0 0 0 0 1
5 12 4 1 0 0 0 0 0 0 0 0 0 0 1
5 13 2 3 1 0 0 0 0 0 0 0 0 0 0 1
5 14 2 0 3 0 0 0 0 0 0 0 0 0 0 0 1
5 15 2 0 1 0 0 0 0 0 0 0 0 0 0 0 0 1
5 16 2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1
7 1 0 1
7 2 1 0 1
7 3 2 0 0 1
7 4 1 1 0 0 1
7 5 3 1 0 0 0 1
7 6 2 0 0 0 0 0 1
7 7 1 6 0 0 0 0 0 1
7 8 3 1 0 0 0 0 0 0 1
7 9 2 0 0 0 0 0 0 0 0 1
7 10 3 2 0 0 0 0 0 0 0 0 1
7 11 3 1 0 0 0 0 0 0 0 0 0 1
7 12 2 1 1 0 0 0 0 0 0 0 0 0 1
7 13 3 0 1 0 0 0 0 0 0 0 0 0 0 1
7 14 4 1 0 0 0 0 0 0 0 0 0 0 0 0 1
7 15 6 2 1 0 0 0 0 0 0 0 0 0 0 0 0 1
7 16 3 2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1
)";

// One line per (p, k): "p k c0 c1 ... ck" with ck == 1.
inline std::map<std::pair<std::int64_t, int>, std::vector<int>> parse_modulus_table(
    const std::string& text) {
    std::map<std::pair<std::int64_t, int>, std::vector<int>> table;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::int64_t p = 0;
        int k = 0;
        if (!(ls >> p >> k)) throw std::runtime_error("modulus table: bad line: " + line);
        std::vector<int> coeffs;
        int c;
        while (ls >> c) coeffs.push_back(c);
        if (static_cast<int>(coeffs.size()) != k + 1 || coeffs.back() != 1)
            throw std::runtime_error("modulus table: bad entry for p=" + std::to_string(p) +
                                     " k=" + std::to_string(k));
        table[{p, k}] = std::move(coeffs);
    }
    return table;
}

// Active table: the builtin one, unless ADDBASIS_MODULUS_TABLE names a file.
inline const std::map<std::pair<std::int64_t, int>, std::vector<int>>& modulus_table() {
    static const auto table = [] {
        if (const char* path = std::getenv("ADDBASIS_MODULUS_TABLE")) {
            std::ifstream in(path);
            if (!in) throw std::runtime_error(std::string("cannot open modulus table: ") + path);
            std::stringstream ss;
            ss << in.rdbuf();
            return parse_modulus_table(ss.str());
        }
        return parse_modulus_table(kBuiltinModulusTable);
    }();
    return table;
}

inline const std::vector<int>& canonical_modulus(std::int64_t p, int k) {
    const auto& table = modulus_table();
    auto it = table.find({p, k});
    if (it == table.end())
        throw std::invalid_argument("no canonical modulus for p=" + std::to_string(p) +
                                    ", k=" + std::to_string(k));
    return it->second;
}

}  // namespace addbasis
