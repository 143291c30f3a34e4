#ifndef TAME_REPORT_HPP
#define TAME_REPORT_HPP

#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <tame/cutdef.hpp>
#include <tame/engine.hpp>
#include <tame/io.hpp>
#include <tame/ordkit.hpp>
#include <tame/syntax.hpp>

namespace tame
{

using Json = nlohmann::ordered_json;

// 64-bit FNV-1a, printed as 16 hex digits; stable across platforms.
inline std::string digest(const std::string &bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline Json to_json(const Assignment &a)
{
    Json j = Json::object();
    for (const auto &[k, v] : a) {
        j[k] = to_string(v);
    }
    return j;
}

inline Json to_json(const std::vector<Rational> &values)
{
    Json j = Json::array();
    for (const auto &v : values) {
        j.push_back(to_string(v));
    }
    return j;
}

inline Json to_json(const LevelTrace &t)
{
    Json steps = Json::array();
    for (const auto &s : t.steps) {
        steps.push_back({{"atom", s.atom},
                         {"form", s.form},
                         {"quasi_order", s.quasi_order},
                         {"cut", s.cut},
                         {"quotient_dim", s.quotient_dim},
                         {"shape", s.shape},
                         {"omega", s.omega}});
    }
    Json kids = Json::array();
    for (const auto &c : t.children) {
        kids.push_back(to_json(c));
    }
    return {{"m", t.m}, {"steps", steps}, {"children", kids}};
}

inline Json to_json(const CutFrame &f)
{
    return {{"dim", f.dim},
            {"cells", f.cells},
            {"b_size", f.b_size},
            {"b_scales", f.b_scales},
            {"lambda", f.lambda}};
}

inline Json to_json(const QuotientCertificate &c)
{
    return {{"monotone", c.monotone},
            {"into", c.into},
            {"surjective", c.surjective},
            {"fiber_dim", c.fiber_dim},
            {"dim_drop", c.dim_drop}};
}

inline Json map_pieces(const PiecewiseMap &m)
{
    Json j = Json::array();
    for (const auto &p : m.pieces) {
        Json vals = Json::array();
        for (const auto &v : p.values) {
            vals.push_back(print_term(v));
        }
        j.push_back({{"guard", print(p.guard)}, {"values", vals}});
    }
    return j;
}

// The result of one CLI command. Timings are kept out of the report so that
// it is byte-identical for a fixed input and seed.
struct RunReport {
    std::string command;
    std::string input_digest;
    std::vector<std::pair<std::string, std::string>> output; // labelled s-expressions or values
    std::optional<std::vector<Rational>> omega;
    std::vector<std::pair<std::string, bool>> certificates;
    Json trace;
    Json extra = Json::object();

    void add(const std::string &label, const std::string &text)
    {
        output.emplace_back(label, text);
    }
    void certify(const std::string &name, bool ok)
    {
        certificates.emplace_back(name, ok);
    }
    bool certified() const
    {
        for (const auto &[n, ok] : certificates) {
            if (!ok) {
                return false;
            }
        }
        return true;
    }

    Json to_json() const
    {
        Json j;
        j["command"] = command;
        j["input_digest"] = input_digest;
        Json out = Json::object();
        for (const auto &[k, v] : output) {
            out[k] = v;
        }
        j["output"] = out;
        if (omega) {
            j["omega"] = tame::to_json(*omega);
        }
        Json certs = Json::object();
        for (const auto &[k, v] : certificates) {
            certs[k] = v;
        }
        j["certificates"] = certs;
        if (!extra.empty()) {
            j["details"] = extra;
        }
        if (!trace.is_null()) {
            j["trace"] = trace;
        }
        return j;
    }

    std::string to_text() const
    {
        std::string s;
        for (const auto &[k, v] : output) {
            s += k.empty() ? v + "\n" : k + ": " + v + "\n";
        }
        if (omega) {
            s += "omega: " + print_tuple(*omega) + "\n";
        }
        for (const auto &[k, v] : certificates) {
            s += "certificate " + k + ": " + (v ? "pass" : "FAIL") + "\n";
        }
        if (!trace.is_null()) {
            s += "trace: " + trace.dump(2) + "\n";
        }
        return s;
    }
};

} // namespace tame

#endif // TAME_REPORT_HPP
