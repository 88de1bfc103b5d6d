#include "polyent/state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polyent/textio.hpp"

namespace polyent {

namespace {

using nlohmann::json;

json read_json(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open state file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw ParseError("state file '" + path + "': " + e.what());
    }
}

Complex read_complex(const json &entry, const std::string &where) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
        throw ParseError(where + ": expected [re, im] number pair");
    return Complex(entry[0].get<double>(), entry[1].get<double>());
}

void write_text(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot open '" + path + "' for writing");
    out << text;
}

} // namespace

StateVariant load_state(const std::string &path) {
    const json doc = read_json(path);
    if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
        throw ParseError("state file '" + path + "': missing string field 'kind'");
    if (!doc.contains("n_qubits") || !doc["n_qubits"].is_number_integer())
        throw ParseError("state file '" + path + "': missing integer field 'n_qubits'");
    const std::string kind = doc["kind"].get<std::string>();
    const int n = doc["n_qubits"].get<int>();
    if (n < 1 || n > kMaxQubits)
        throw ParseError("state file '" + path + "': n_qubits outside [1, 5]");
    const Eigen::Index d = Eigen::Index(1) << n;

    if (kind == "pure") {
        if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array())
            throw ParseError("state file '" + path + "': missing array field 'amplitudes'");
        const json &amps = doc["amplitudes"];
        if (static_cast<Eigen::Index>(amps.size()) != d)
            throw ParseError("state file '" + path + "': expected " + std::to_string(d) +
                             " amplitudes, found " + std::to_string(amps.size()));
        CVector v(d);
        for (Eigen::Index i = 0; i < d; ++i)
            v[i] = read_complex(amps[static_cast<size_t>(i)],
                                "amplitudes[" + std::to_string(i) + "]");
        return PureState(n, std::move(v));
    }
    if (kind == "mixed") {
        if (!doc.contains("matrix") || !doc["matrix"].is_array())
            throw ParseError("state file '" + path + "': missing array field 'matrix'");
        const json &rows = doc["matrix"];
        if (static_cast<Eigen::Index>(rows.size()) != d)
            throw ParseError("state file '" + path + "': expected " + std::to_string(d) + " rows");
        CMatrix m(d, d);
        for (Eigen::Index i = 0; i < d; ++i) {
            const json &row = rows[static_cast<size_t>(i)];
            if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d)
                throw ParseError("state file '" + path + "': row " + std::to_string(i) +
                                 " must hold " + std::to_string(d) + " entries");
            for (Eigen::Index j = 0; j < d; ++j)
                m(i, j) = read_complex(row[static_cast<size_t>(j)],
                                       "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]");
        }
        return DensityMatrix(n, std::move(m));
    }
    throw ParseError("state file '" + path + "': kind must be \"pure\" or \"mixed\"");
}

void save_state(const PureState &psi, const std::string &path) {
    std::ostringstream out;
    out << "{\n  \"kind\": \"pure\",\n  \"n_qubits\": " << psi.n_qubits()
        << ",\n  \"amplitudes\": [\n";
    for (Eigen::Index i = 0; i < psi.dim(); ++i) {
        const Complex &c = psi.amplitudes()[i];
        out << "    [" << fmt17(c.real()) << ", " << fmt17(c.imag()) << "]"
            << (i + 1 < psi.dim() ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
    write_text(path, out.str());
}

void save_state(const DensityMatrix &rho, const std::string &path) {
    std::ostringstream out;
    const Eigen::Index d = rho.dim();
    out << "{\n  \"kind\": \"mixed\",\n  \"n_qubits\": " << rho.n_qubits()
        << ",\n  \"matrix\": [\n";
    for (Eigen::Index i = 0; i < d; ++i) {
        out << "    [";
        for (Eigen::Index j = 0; j < d; ++j) {
            const Complex &c = rho.matrix()(i, j);
            out << "[" << fmt17(c.real()) << ", " << fmt17(c.imag()) << "]"
                << (j + 1 < d ? ", " : "");
        }
        out << "]" << (i + 1 < d ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
    write_text(path, out.str());
}

} // namespace polyent
