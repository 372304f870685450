#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "matnorm/linalg.hpp"

namespace matnorm {

/// Raised on malformed input files; the CLI maps it to the usage exit code.
struct ParseError : Error {
    using Error::Error;
};

/// %.17g: enough significant digits that reading the text back reproduces the
/// exact double.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Matrix file schema: {"n": int, "entries": [[[re, im], ...], ...]} row-major.
inline ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw ParseError("matrix file must be an object with \"n\" and \"entries\"");
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1)
        throw ParseError("\"n\" must be a positive integer");
    const int n = j["n"].get<int>();
    const auto& rows = j["entries"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw ParseError("\"entries\" must be an array of n rows");
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError("row " + std::to_string(i) + " must hold n entries");
        for (int jcol = 0; jcol < n; ++jcol) {
            const auto& e = row[static_cast<std::size_t>(jcol)];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw ParseError("entry (" + std::to_string(i) + "," + std::to_string(jcol) +
                                 ") must be a [re, im] pair");
            a(i, jcol) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    }
    if (!a.all_finite()) throw ParseError("matrix entries must be finite");
    return a;
}

inline ComplexMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return matrix_from_json(j);
}

/// Serialize with full round-trip precision.
inline std::string matrix_to_json(const ComplexMatrix& a) {
    std::ostringstream os;
    os << "{\"n\": " << a.dim() << ", \"entries\": [";
    for (int i = 0; i < a.dim(); ++i) {
        if (i) os << ", ";
        os << "[";
        for (int j = 0; j < a.dim(); ++j) {
            if (j) os << ", ";
            os << "[" << format_double(a(i, j).real()) << ", " << format_double(a(i, j).imag()) << "]";
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

inline void write_matrix_file(const std::string& path, const ComplexMatrix& a) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write matrix file: " + path);
    out << matrix_to_json(a) << "\n";
}

} // namespace matnorm
