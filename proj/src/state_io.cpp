#include "qcorr/state_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "qcorr/errors.hpp"

namespace qcorr {
namespace {

using nlohmann::json;

double number_at(const json& j, const char* where) {
    if (!j.is_number()) throw BadSetting(std::string("state file: ") + where +
                                         " must be a number");
    return j.get<double>();
}

Mat4c parse_matrix(const json& jm) {
    if (!jm.is_array() || jm.size() != 4)
        throw BadSetting("state file: \"matrix\" must be a 4x4 array");
    Mat4c m;
    for (std::size_t r = 0; r < 4; ++r) {
        const json& row = jm[r];
        if (!row.is_array() || row.size() != 4)
            throw BadSetting("state file: \"matrix\" must be a 4x4 array");
        for (std::size_t c = 0; c < 4; ++c) {
            const json& cell = row[c];
            if (!cell.is_array() || cell.size() != 2)
                throw BadSetting("state file: matrix entries must be [re, im] pairs");
            m(r, c) = {number_at(cell[0], "matrix entry"),
                       number_at(cell[1], "matrix entry")};
        }
    }
    return m;
}

BlochForm parse_bloch(const json& jb) {
    if (!jb.is_object() || !jb.contains("r") || !jb.contains("s") || !jb.contains("T"))
        throw BadSetting("state file: \"bloch\" needs \"r\", \"s\" and \"T\"");
    BlochForm b;
    for (const char* key : {"r", "s"}) {
        const json& v = jb[key];
        if (!v.is_array() || v.size() != 3)
            throw BadSetting(std::string("state file: \"") + key +
                             "\" must have 3 entries");
        Vec3& target = (key[0] == 'r') ? b.r : b.s;
        for (std::size_t i = 0; i < 3; ++i) target[i] = number_at(v[i], key);
    }
    const json& t = jb["T"];
    if (!t.is_array() || t.size() != 3)
        throw BadSetting("state file: \"T\" must be a 3x3 array");
    for (std::size_t r = 0; r < 3; ++r) {
        if (!t[r].is_array() || t[r].size() != 3)
            throw BadSetting("state file: \"T\" must be a 3x3 array");
        for (std::size_t c = 0; c < 3; ++c) b.T[r][c] = number_at(t[r][c], "T entry");
    }
    return b;
}

}  // namespace

DensityMatrix load_state_json(const std::string& text, bool require_physical) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw BadSetting(std::string("state file: ") + e.what());
    }
    if (!j.is_object()) throw BadSetting("state file: top level must be an object");
    const bool has_matrix = j.contains("matrix");
    const bool has_bloch = j.contains("bloch");
    if (has_matrix == has_bloch)
        throw BadSetting("state file: exactly one of \"matrix\" or \"bloch\" required");

    if (has_matrix)
        return DensityMatrix::from_matrix(parse_matrix(j["matrix"]), require_physical);
    DensityMatrix rho = bloch_compose(parse_bloch(j["bloch"]));
    if (require_physical && !rho.physical())
        throw NotDensityMatrix("state file: bloch form is not positive semidefinite");
    return rho;
}

DensityMatrix load_state_file(const std::string& path, bool require_physical) {
    std::ifstream in(path);
    if (!in) throw BadSetting("state file: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_state_json(buf.str(), require_physical);
}

std::string state_to_json(const DensityMatrix& rho) {
    json rows = json::array();
    for (std::size_t r = 0; r < 4; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < 4; ++c) {
            const Complex& z = rho.matrix()(r, c);
            row.push_back(json::array({z.real(), z.imag()}));
        }
        rows.push_back(row);
    }
    return json{{"matrix", rows}}.dump(2);
}

}  // namespace qcorr
