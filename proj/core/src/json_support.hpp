#ifndef AFFSTR_SRC_JSON_SUPPORT_HPP
#define AFFSTR_SRC_JSON_SUPPORT_HPP

// JSON conversions shared by io.cpp and verify.cpp; not installed.

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "affstr/algebra.hpp"
#include "affstr/error.hpp"

namespace affstr::detail {

using nlohmann::json;

inline json integer_json(const Integer& v)
{
    if (v.fits_slong_p()) {
        return v.get_si();
    }
    return v.get_str();
}

inline Integer integer_from(const json& j, const char* what)
{
    if (j.is_number_integer()) {
        return Integer(j.get<long>());
    }
    if (j.is_number_unsigned()) {
        return Integer(std::to_string(j.get<unsigned long>()));
    }
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw ConfigError(std::string(what) + ": expected an integer, got " + j.dump());
}

inline Rational rational_from(const json& j, const char* what)
{
    if (j.is_string()) {
        try {
            Rational q(j.get<std::string>());
            q.canonicalize();
            if (q.get_den() == 0) {
                throw std::invalid_argument("zero denominator");
            }
            return q;
        } catch (const std::invalid_argument&) {
            throw ConfigError(std::string(what) + ": malformed rational " + j.dump());
        }
    }
    return Rational(integer_from(j, what));
}

inline json rational_json(const Rational& v)
{
    if (is_integer(v)) {
        return integer_json(v.get_num());
    }
    return v.get_str();
}

inline json labels_json(std::span<const Rational> labels)
{
    json out = json::array();
    for (const auto& l : labels) {
        out.push_back(rational_json(l));
    }
    return out;
}

inline std::vector<Rational> labels_from(const json& j, std::size_t rank, const char* what)
{
    if (!j.is_array() || j.size() != rank) {
        throw ConfigError(std::string(what) + ": expected " + std::to_string(rank) + " labels");
    }
    std::vector<Rational> out;
    for (const auto& v : j) {
        out.push_back(rational_from(v, what));
    }
    return out;
}

inline json parse_json(const std::string& text, const char* what)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string(what) + ": " + e.what());
    }
}

inline const json& field(const json& j, const char* key, const char* what)
{
    if (!j.is_object() || !j.contains(key)) {
        throw ConfigError(std::string(what) + ": missing \"" + key + "\"");
    }
    return j.at(key);
}

inline long long_from(const json& j, const char* what)
{
    const Integer v = integer_from(j, what);
    if (!v.fits_slong_p()) {
        throw ConfigError(std::string(what) + ": value out of range");
    }
    return v.get_si();
}

inline std::size_t index_from(const json& j, std::size_t bound, const char* what)
{
    const long v = long_from(j, what);
    if (v < 1 || static_cast<std::size_t>(v) > bound) {
        throw ConfigError(std::string(what) + ": index " + std::to_string(v) + " out of range");
    }
    return static_cast<std::size_t>(v - 1);
}

} // namespace affstr::detail

#endif
