#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <sstream>
#include <string>

#include "decomposition.hpp"

namespace orthotopy {

namespace detail {

// Certificate values all fit in 64 bits for inputs small enough to certify
// at all; the guard keeps serialization honest rather than silently wrapping.
inline std::int64_t to_int64(const Int& x) {
    if (x < std::numeric_limits<std::int64_t>::min() || x > std::numeric_limits<std::int64_t>::max())
        throw OutOfRangeError("certificate serialization: value exceeds 64 bits");
    return static_cast<std::int64_t>(x);
}

inline nlohmann::ordered_json orders_json(const FgAbGroup& g) {
    auto arr = nlohmann::ordered_json::array();
    for (const Int& o : g.orders()) arr.push_back(to_int64(o));
    return arr;
}

inline nlohmann::ordered_json matrix_json(const IntMat& m) {
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_int64(m(i, j)));
        arr.push_back(std::move(row));
    }
    return arr;
}

} // namespace detail

// Field names and their order are a stable contract; golden files compare
// the serialized document byte for byte.
inline nlohmann::ordered_json certificate_to_json(const DecompositionCertificate& cert) {
    nlohmann::ordered_json j;
    j["m"] = cert.problem.m;
    j["n"] = cert.problem.n;
    j["dim_x"] = cert.problem.dim_x;
    j["case"] = to_string(cert.tr.parity);
    j["u"] = detail::to_int64(cert.tr.u);
    j["v"] = detail::to_int64(cert.tr.v);
    j["sign"] = cert.tr.sign;
    j["N"] = detail::to_int64(cert.tr.big_n);
    auto degrees = nlohmann::ordered_json::array();
    for (const DegreeReport& r : cert.degrees) {
        nlohmann::ordered_json dj;
        dj["i"] = r.i;
        dj["i_group"] = r.i_group;
        dj["source_orders"] = detail::orders_json(r.source);
        dj["target_orders"] = detail::orders_json(r.target);
        auto variants = nlohmann::ordered_json::array();
        for (const DegreeVariant& v : r.variants) {
            nlohmann::ordered_json vj;
            auto params = nlohmann::ordered_json::object();
            if (v.params.z) params["z"] = *v.params.z;
            if (v.params.z_prime) params["z'"] = *v.params.z_prime;
            vj["params"] = std::move(params);
            vj["matrix"] = detail::matrix_json(v.map.matrix());
            vj["verdict"] = to_string(v.verdict);
            variants.push_back(std::move(vj));
        }
        dj["variants"] = std::move(variants);
        degrees.push_back(std::move(dj));
    }
    j["degrees"] = std::move(degrees);
    j["connectivity"] = cert.connectivity;
    j["decomposable"] = cert.decomposable;
    return j;
}

inline std::string certificate_json_string(const DecompositionCertificate& cert) {
    return certificate_to_json(cert).dump(2) + "\n";
}

inline std::string certificate_to_text(const DecompositionCertificate& cert) {
    std::ostringstream os;
    os << "certificate: m = " << cert.problem.m << ", n = " << cert.problem.n
       << ", dim_x = " << cert.problem.dim_x << "\n";
    os << "case: " << to_string(cert.tr.parity) << "  (u = " << cert.tr.u << ", v = " << cert.tr.v
       << ", sign = " << (cert.tr.sign > 0 ? "+1" : "-1") << ", N = " << cert.tr.big_n << ")\n";
    for (const DegreeReport& r : cert.degrees) {
        os << "degree " << r.i << " (group degree " << r.i_group
           << "): " << to_string(r.source) << " -> " << to_string(r.target) << "\n";
        for (const DegreeVariant& v : r.variants) {
            os << "  variant";
            const std::string p = to_string(v.params);
            if (!p.empty()) os << " (" << p << ")";
            // Matrices here are a handful of rows; print them inline.
            std::string flat = v.map.matrix().to_string();
            for (char& c : flat)
                if (c == '\n') c = ' ';
            os << ": " << flat << "  -> " << to_string(v.verdict) << "\n";
        }
    }
    os << "connectivity: " << cert.connectivity << "\n";
    os << "decomposable: " << (cert.decomposable ? "true" : "false") << "\n";
    os << "note: " << cert.narrative << "\n";
    return os.str();
}

} // namespace orthotopy
