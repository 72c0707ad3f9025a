#pragma once

// JSON exchange format for operators and state vectors:
//   {"parties": n, "local_dim": d, "entries": [[[re, im], ...], ...]}   (matrix, row-major)
//   {"parties": n, "local_dim": d, "amplitudes": [[re, im], ...]}       (state)

#include <fstream>
#include <string>

#include "entlab/linalg.hpp"

#include "json.hpp"

namespace entlab {

using nlohmann::json;

namespace detail {

inline json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

inline cplx complex_from(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    require(j.is_array() && j.size() == 2, "complex entries are [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline std::vector<int> dims_from(const json& j) {
    require(j.contains("parties") && j.contains("local_dim"), "missing 'parties' or 'local_dim'");
    const int n = j["parties"].get<int>(), d = j["local_dim"].get<int>();
    require(n >= 1 && d >= 1, "'parties' and 'local_dim' must be positive");
    return std::vector<int>(n, d);
}

}  // namespace detail

inline json to_json(const Operator& op) {
    json j;
    j["parties"] = op.parties();
    j["local_dim"] = op.local_dim();
    json rows = json::array();
    for (Eigen::Index r = 0; r < op.matrix().rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < op.matrix().cols(); ++c) row.push_back(detail::complex_json(op.matrix()(r, c)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

inline json to_json(const StateVector& psi) {
    json j;
    j["parties"] = psi.parties();
    j["local_dim"] = psi.local_dim();
    json a = json::array();
    for (Eigen::Index i = 0; i < psi.dim(); ++i) a.push_back(detail::complex_json(psi.amplitudes()(i)));
    j["amplitudes"] = std::move(a);
    return j;
}

inline Operator operator_from_json(const json& j) {
    const auto dims = detail::dims_from(j);
    const long D = detail::dim_product(dims);
    require(j.contains("entries") && j["entries"].is_array() && static_cast<long>(j["entries"].size()) == D,
            "'entries' must hold d^n rows");
    Matrix m(D, D);
    for (long r = 0; r < D; ++r) {
        const auto& row = j["entries"][r];
        require(row.is_array() && static_cast<long>(row.size()) == D, "each row must hold d^n entries");
        for (long c = 0; c < D; ++c) m(r, c) = detail::complex_from(row[c]);
    }
    return Operator(dims, std::move(m));
}

/// Amplitudes are normalized on read.
inline StateVector state_from_json(const json& j) {
    const auto dims = detail::dims_from(j);
    const long D = detail::dim_product(dims);
    require(j.contains("amplitudes") && j["amplitudes"].is_array() &&
                static_cast<long>(j["amplitudes"].size()) == D,
            "'amplitudes' must hold d^n entries");
    Vector v(D);
    for (long i = 0; i < D; ++i) v(i) = detail::complex_from(j["amplitudes"][i]);
    return StateVector::normalized(dims, std::move(v));
}

inline json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw domain_error("cannot open '" + path + "'");
    try {
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw domain_error("'" + path + "' is not valid JSON: " + e.what());
    }
}

}  // namespace entlab
