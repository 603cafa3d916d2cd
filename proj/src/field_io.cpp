#include "tvdlab/field_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "tvdlab/errors.hpp"

namespace tvd {

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) {
        return "nan";
    }
    return std::string(buf, ptr);
}

void write_field(std::ostream& out, const CellField& field) {
    const Bounds& b = field.grid.bounds();
    out << "# n=" << field.n() << " xmin=" << format_double(b.xmin) << " xmax=" << format_double(b.xmax)
        << " ymin=" << format_double(b.ymin) << " ymax=" << format_double(b.ymax) << '\n';
    for (std::size_t i = 0; i < field.n(); ++i) {
        for (std::size_t j = 0; j < field.n(); ++j) {
            out << i + 1 << ',' << j + 1 << ',' << format_double(field(i, j)) << '\n';
        }
    }
}

void write_field(const std::filesystem::path& path, const CellField& field) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot open '" + path.string() + "' for writing");
    }
    write_field(out, field);
}

namespace {

double parse_number(const std::string& text, const std::string& what) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ConfigError("field file: bad " + what + " '" + text + "'");
    }
    return value;
}

}  // namespace

CellField read_field(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || header.rfind("#", 0) != 0) {
        throw ConfigError("field file: missing '# n=...' header");
    }
    std::map<std::string, std::string> keys;
    std::istringstream hs(header.substr(1));
    std::string token;
    while (hs >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("field file: bad header token '" + token + "'");
        }
        keys[token.substr(0, eq)] = token.substr(eq + 1);
    }
    for (const char* k : {"n", "xmin", "xmax", "ymin", "ymax"}) {
        if (!keys.contains(k)) {
            throw ConfigError(std::string("field file: header lacks '") + k + "'");
        }
    }
    const double nd = parse_number(keys["n"], "n");
    if (nd < 2 || nd != std::floor(nd)) {
        throw ConfigError("field file: n must be an integer >= 2");
    }
    const auto n = static_cast<std::size_t>(nd);
    const Bounds bounds{parse_number(keys["xmin"], "xmin"), parse_number(keys["xmax"], "xmax"),
                        parse_number(keys["ymin"], "ymin"), parse_number(keys["ymax"], "ymax")};
    std::optional<Grid> grid;
    try {
        grid.emplace(make_grid(n, bounds));
    } catch (const ShapeError& e) {
        throw ConfigError(std::string("field file: ") + e.what());
    }
    CellField field(*grid);
    std::vector<bool> seen(n * n, false);
    std::size_t count = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
        if (c2 == std::string::npos) {
            throw ConfigError("field file: expected 'i,j,value', got '" + line + "'");
        }
        const double id = parse_number(line.substr(0, c1), "i");
        const double jd = parse_number(line.substr(c1 + 1, c2 - c1 - 1), "j");
        std::string vs = line.substr(c2 + 1);
        while (!vs.empty() && (vs.back() == '\r' || vs.back() == ' ')) {
            vs.pop_back();
        }
        const double v = parse_number(vs, "value");
        if (id < 1 || jd < 1 || id > nd || jd > nd || id != std::floor(id) || jd != std::floor(jd)) {
            throw ConfigError("field file: cell index out of range in '" + line + "'");
        }
        const auto i = static_cast<std::size_t>(id) - 1;
        const auto j = static_cast<std::size_t>(jd) - 1;
        if (seen[i * n + j]) {
            throw ConfigError("field file: duplicate cell in '" + line + "'");
        }
        if (!std::isfinite(v)) {
            throw ConfigError("field file: non-finite value in '" + line + "'");
        }
        seen[i * n + j] = true;
        field(i, j) = v;
        ++count;
    }
    if (count != n * n) {
        throw ConfigError("field file: expected " + std::to_string(n * n) + " cells, found " +
                          std::to_string(count));
    }
    return field;
}

CellField read_field(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open field file '" + path.string() + "'");
    }
    return read_field(in);
}

}  // namespace tvd
