#pragma once

/// Ring description files and element files (JSON, UTF-8).
///
/// Rings:   {"kind":"matrix","size":4,"base":"rational","involution":"transpose"}
///          {"kind":"matrix","size":2,"base":"modular","base_modulus":3,"involution":"transpose"}
///          {"kind":"modular","modulus":4,"involution":"identity"}
///          {"kind":"group_ring","p":3,"group":"klein4","involution":"swap_ab"}
///          {"kind":"product","factor":{...},"involution":"swap"}
///
/// Elements: matrix as a row-major array of scalar strings, residue as a digit
/// string, group-ring as {"e":"2","a":"1","b":"0","c":"0"}, product as a
/// two-element array.

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "ring.hpp"

namespace ringinv {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

namespace detail {

inline std::string involution_name(Involution inv) {
    switch (inv) {
        case Involution::transpose: return "transpose";
        case Involution::conjugate_transpose: return "conjugate_transpose";
        case Involution::identity: return "identity";
        case Involution::swap_ab: return "swap_ab";
        case Involution::swap: return "swap";
    }
    return "?";
}

inline Involution involution_from_name(const std::string& s) {
    if (s == "transpose") return Involution::transpose;
    if (s == "conjugate_transpose") return Involution::conjugate_transpose;
    if (s == "identity") return Involution::identity;
    if (s == "swap_ab") return Involution::swap_ab;
    if (s == "swap") return Involution::swap;
    throw DescriptorError("unknown involution '" + s + "'");
}

inline std::string base_name(ScalarKind k) {
    switch (k) {
        case ScalarKind::rational: return "rational";
        case ScalarKind::integer: return "integer";
        case ScalarKind::gaussian_rational: return "gaussian_rational";
        case ScalarKind::modular: return "modular";
    }
    return "?";
}

inline ScalarKind base_from_name(const std::string& s) {
    if (s == "rational") return ScalarKind::rational;
    if (s == "integer") return ScalarKind::integer;
    if (s == "gaussian_rational") return ScalarKind::gaussian_rational;
    if (s == "modular") return ScalarKind::modular;
    throw DescriptorError("unknown scalar base '" + s + "'");
}

template <class T>
T json_field(const Json& j, const char* key) {
    if (!j.contains(key))
        throw DescriptorError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception&) {
        throw DescriptorError(std::string("field '") + key + "' has the wrong type");
    }
}

} // namespace detail

inline RingDescriptor descriptor_from_json(const Json& j) {
    if (!j.is_object()) throw DescriptorError("ring description must be an object");
    RingDescriptor d;
    const auto kind = detail::json_field<std::string>(j, "kind");
    d.involution = detail::involution_from_name(detail::json_field<std::string>(j, "involution"));
    if (kind == "matrix") {
        d.kind = RingKind::matrix;
        d.size = detail::json_field<std::size_t>(j, "size");
        d.base = detail::base_from_name(detail::json_field<std::string>(j, "base"));
        if (d.base == ScalarKind::modular)
            d.base_modulus = detail::json_field<long long>(j, "base_modulus");
    } else if (kind == "modular") {
        d.kind = RingKind::modular;
        d.modulus = detail::json_field<long long>(j, "modulus");
    } else if (kind == "group_ring") {
        d.kind = RingKind::group_ring;
        d.p = detail::json_field<long long>(j, "p");
        d.group = detail::json_field<std::string>(j, "group");
    } else if (kind == "product") {
        d.kind = RingKind::product;
        if (!j.contains("factor")) throw DescriptorError("missing field 'factor'");
        d.factor = std::make_shared<RingDescriptor>(descriptor_from_json(j.at("factor")));
    } else {
        throw DescriptorError("unknown ring kind '" + kind + "'");
    }
    return d;
}

inline RingPtr ring_from_json(const Json& j) { return Ring::make(descriptor_from_json(j)); }

inline RingPtr ring_from_string(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    return ring_from_json(j);
}

inline OrderedJson descriptor_to_json(const RingDescriptor& d) {
    OrderedJson j;
    switch (d.kind) {
        case RingKind::matrix:
            j["kind"] = "matrix";
            j["size"] = d.size;
            j["base"] = detail::base_name(d.base);
            if (d.base == ScalarKind::modular) j["base_modulus"] = d.base_modulus;
            break;
        case RingKind::modular:
            j["kind"] = "modular";
            j["modulus"] = d.modulus;
            break;
        case RingKind::group_ring:
            j["kind"] = "group_ring";
            j["p"] = d.p;
            j["group"] = d.group;
            break;
        case RingKind::product:
            j["kind"] = "product";
            j["factor"] = descriptor_to_json(*d.factor);
            break;
    }
    j["involution"] = detail::involution_name(d.involution);
    return j;
}

inline RingElement element_from_json(const RingPtr& ring, const Json& j) {
    const RingDescriptor& d = ring->descriptor();
    switch (d.kind) {
        case RingKind::matrix: {
            if (!j.is_array() || j.size() != d.size * d.size)
                throw ParseError("matrix element needs a row-major array of " +
                                     std::to_string(d.size * d.size) + " scalar strings",
                                 0);
            auto texts = [&](std::size_t i) -> std::string {
                if (!j.at(i).is_string())
                    throw ParseError("matrix entries must be scalar strings", i);
                return j.at(i).get<std::string>();
            };
            switch (d.base) {
                case ScalarKind::rational:
                case ScalarKind::integer: {
                    std::vector<Rational> e;
                    for (std::size_t i = 0; i < d.size * d.size; ++i) {
                        if (d.base == ScalarKind::integer)
                            e.emplace_back(parse_integer_text(texts(i)));
                        else
                            e.push_back(parse_rational_text(texts(i)));
                    }
                    return ring->wrap(Matrix<Rational>::from_entries(d.size, d.size, e));
                }
                case ScalarKind::gaussian_rational: {
                    std::vector<GaussianRational> e;
                    for (std::size_t i = 0; i < d.size * d.size; ++i)
                        e.push_back(parse_gaussian_text(texts(i)));
                    return ring->wrap(
                        Matrix<GaussianRational>::from_entries(d.size, d.size, e));
                }
                case ScalarKind::modular: {
                    std::vector<ModularInt> e;
                    for (std::size_t i = 0; i < d.size * d.size; ++i)
                        e.push_back(parse_residue_text(texts(i), d.base_modulus));
                    return ring->wrap(Matrix<ModularInt>::from_entries(d.size, d.size, e));
                }
            }
            throw InternalError("unreachable");
        }
        case RingKind::modular: {
            if (!j.is_string()) throw ParseError("residue element must be a digit string", 0);
            return ring->wrap(parse_residue_text(j.get<std::string>(), d.modulus));
        }
        case RingKind::group_ring: {
            if (!j.is_object())
                throw ParseError("group-ring element must be an object with keys e,a,b,c", 0);
            std::array<long long, 4> c{0, 0, 0, 0};
            const char* keys[4] = {"e", "a", "b", "c"};
            for (int i = 0; i < 4; ++i) {
                if (!j.contains(keys[i])) continue;
                if (!j.at(keys[i]).is_string())
                    throw ParseError("group-ring coefficients must be digit strings", 0);
                c[i] = parse_residue_text(j.at(keys[i]).get<std::string>(), d.p).value();
            }
            return ring->wrap(KleinElem(d.p, c));
        }
        case RingKind::product: {
            if (!j.is_array() || j.size() != 2)
                throw ParseError("product element must be a two-element array", 0);
            return ring->wrap(ProductValue{{element_from_json(ring->factor(), j.at(0)),
                                            element_from_json(ring->factor(), j.at(1))}});
        }
    }
    throw InternalError("unreachable");
}

inline OrderedJson element_to_json(const RingElement& e) {
    return std::visit(
        [&](const auto& x) -> OrderedJson {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ProductValue>) {
                return OrderedJson::array(
                    {element_to_json(x.parts[0]), element_to_json(x.parts[1])});
            } else if constexpr (std::is_same_v<T, ModularInt>) {
                return OrderedJson(x.to_string());
            } else if constexpr (std::is_same_v<T, KleinElem>) {
                OrderedJson j;
                j["e"] = std::to_string(x.coeff(0));
                j["a"] = std::to_string(x.coeff(1));
                j["b"] = std::to_string(x.coeff(2));
                j["c"] = std::to_string(x.coeff(3));
                return j;
            } else {
                OrderedJson arr = OrderedJson::array();
                for (const auto& v : x.entries()) arr.push_back(v.to_string());
                return arr;
            }
        },
        e.payload);
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline RingElement element_from_string(const RingPtr& ring, const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    return element_from_json(ring, j);
}

} // namespace ringinv
