#include "eiko/field_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "eiko/util.hpp"

namespace eiko {

namespace {

GridSpec parse_header(const std::string& line, const std::string& expected_tag) {
    std::istringstream is(line);
    std::string tag;
    GridSpec g;
    if (!(is >> tag >> g.nx >> g.ny >> g.x0 >> g.y0 >> g.h))
        throw ValidationError("malformed field header: " + line);
    if (tag != expected_tag)
        throw ValidationError("expected header tag " + expected_tag + ", got " + tag);
    g.validate();
    return g;
}

} // namespace

void write_field(const GridField2& u, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ValidationError("cannot open for writing: " + path);
    const GridSpec& g = u.spec;
    os << "EIKO1 " << g.nx << ' ' << g.ny << ' ' << format_g17(g.x0) << ' ' << format_g17(g.y0)
       << ' ' << format_g17(g.h) << '\n';
    for (std::int64_t n = 0; n < g.count(); ++n)
        os << format_g17(u.values(n, 0)) << ' ' << format_g17(u.values(n, 1)) << '\n';
    if (!os) throw ValidationError("write failed: " + path);
}

GridField2 read_field(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ValidationError("cannot open field file: " + path);
    std::string line;
    if (!std::getline(is, line)) throw ValidationError("empty field file: " + path);
    GridField2 u;
    u.spec = parse_header(line, "EIKO1");
    u.values.resize(u.spec.count(), 2);
    std::int64_t n = 0;
    double a, b;
    while (n < u.spec.count() && (is >> a >> b)) {
        u.values(n, 0) = a;
        u.values(n, 1) = b;
        ++n;
    }
    if (n != u.spec.count())
        throw ValidationError("value count mismatch in " + path);
    return u;
}

void write_scalar(const GridScalar& s, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ValidationError("cannot open for writing: " + path);
    const GridSpec& g = s.spec;
    os << "EIKS1 " << g.nx << ' ' << g.ny << ' ' << format_g17(g.x0) << ' ' << format_g17(g.y0)
       << ' ' << format_g17(g.h) << '\n';
    for (std::int64_t n = 0; n < g.count(); ++n) os << format_g17(s.values[n]) << '\n';
    if (!os) throw ValidationError("write failed: " + path);
}

GridScalar read_scalar(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ValidationError("cannot open scalar file: " + path);
    std::string line;
    if (!std::getline(is, line)) throw ValidationError("empty scalar file: " + path);
    GridScalar s;
    s.spec = parse_header(line, "EIKS1");
    s.values.resize(s.spec.count());
    std::int64_t n = 0;
    double a;
    while (n < s.spec.count() && (is >> a)) s.values[n++] = a;
    if (n != s.spec.count())
        throw ValidationError("value count mismatch in " + path);
    return s;
}

std::string field_file_tag(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ValidationError("cannot open file: " + path);
    std::string tag;
    is >> tag;
    return tag;
}

} // namespace eiko
