#pragma once

// Report rendering and run configuration. Reports are byte-identical for
// identical inputs and tool/table versions: keys are emitted in a fixed
// order, integers only, and files are written atomically (temp + rename).

#include "addbasis/verify.hpp"
#include "addbasis/version.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace addbasis {

// A parsed command line in canonical form. The rendering round-trips through
// parse() and is embedded in every report so a run can be reproduced from its
// output alone.
struct RunConfig {
    std::string command;
    std::vector<std::pair<std::string, std::string>> args;  // flag -> value ("" = switch)

    void set(const std::string& key, const std::string& value) { args.emplace_back(key, value); }

    bool has(const std::string& key) const {
        for (const auto& [k, v] : args)
            if (k == key) return true;
        return false;
    }

    std::string get(const std::string& key, const std::string& fallback = {}) const {
        for (const auto& [k, v] : args)
            if (k == key) return v;
        return fallback;
    }

    std::string render() const {
        std::string out = command;
        for (const auto& [k, v] : args) {
            out += " --" + k;
            if (!v.empty()) {
                if (v.find_first_of(" \t\"") != std::string::npos) {
                    out += " \"";
                    for (char c : v) {
                        if (c == '"' || c == '\\') out += '\\';
                        out += c;
                    }
                    out += '"';
                } else {
                    out += " " + v;
                }
            }
        }
        return out;
    }

    static RunConfig parse(const std::string& text) {
        std::vector<std::string> tokens;
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            if (i >= text.size()) break;
            std::string tok;
            if (text[i] == '"') {
                ++i;
                while (i < text.size() && text[i] != '"') {
                    if (text[i] == '\\' && i + 1 < text.size()) ++i;
                    tok += text[i++];
                }
                if (i >= text.size()) throw std::invalid_argument("unterminated quote in run config");
                ++i;
            } else {
                while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
                    tok += text[i++];
            }
            tokens.push_back(std::move(tok));
        }
        if (tokens.empty()) throw std::invalid_argument("empty run config");
        RunConfig cfg;
        cfg.command = tokens[0];
        std::size_t t = 1;
        while (t < tokens.size()) {
            if (tokens[t].rfind("--", 0) != 0)
                throw std::invalid_argument("expected --flag in run config: " + tokens[t]);
            std::string key = tokens[t].substr(2);
            ++t;
            if (t < tokens.size() && tokens[t].rfind("--", 0) != 0) {
                cfg.set(key, tokens[t]);
                ++t;
            } else {
                cfg.set(key, "");
            }
        }
        return cfg;
    }
};

// Core JSON object for a representation report; callers may attach further
// sections (certification, run_config) before writing.
inline nlohmann::ordered_json rep_report_json(const RepReport& rep) {
    nlohmann::ordered_json j;
    j["group"] = rep.group->spec_string();
    j["enumeration"] = rep.group->enumeration_order();
    nlohmann::ordered_json prov;
    prov["construction"] = rep.provenance.construction;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rep.provenance.params) params[k] = v;
    prov["params"] = params;
    j["basis_provenance"] = prov;
    j["mode"] = to_string(rep.mode);
    j["domain"] = rep.whole_group ? "whole-group" : "window";
    nlohmann::ordered_json hist = nlohmann::ordered_json::object();
    for (const auto& [count, n] : rep.histogram) hist[std::to_string(count)] = n;
    j["histogram"] = hist;
    j["max_nonzero"] = rep.max_nonzero;
    j["argmax"] = rep.argmax_nonzero ? nlohmann::ordered_json(rep.group->render(*rep.argmax_nonzero))
                                     : nlohmann::ordered_json(nullptr);
    j["zero_count"] = rep.zero_count;
    j["coverage"] = {{"covered", rep.covered}, {"domain", rep.domain_size}};
    j["tool_version"] = kToolVersion;
    j["modulus_table_version"] = kModulusTableVersion;
    return j;
}

// Per-element CSV: "element,count", domain order.
inline std::string rep_report_csv(const RepReport& rep) {
    std::string out = "element,count\n";
    if (rep.whole_group) {
        for (std::uint64_t i = 0; i < rep.dense.size(); ++i) {
            out += rep.group->render(rep.group->element_at(i));
            out += ',';
            out += std::to_string(rep.dense[i]);
            out += '\n';
        }
    } else {
        for (std::size_t i = 0; i < rep.window.size(); ++i) {
            out += rep.group->render(rep.window[i]);
            out += ',';
            out += std::to_string(rep.window_counts[i]);
            out += '\n';
        }
    }
    return out;
}

inline void write_text_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc | std::ios::binary);
        if (!out) throw std::runtime_error("cannot write file: " + tmp);
        out << content;
        if (!out) throw std::runtime_error("failed writing file: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot move " + tmp + " into place");
}

}  // namespace addbasis
