#include "sllg/io.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "sllg/errors.hpp"

namespace sllg {

static_assert(std::endian::native == std::endian::little,
              "snapshot writer assumes a little-endian host");

namespace {
constexpr char kMagic[4] = {'S', 'L', 'L', 'G'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& os, std::uint32_t x) {
    os.write(reinterpret_cast<const char*>(&x), 4);
}

std::uint32_t get_u32(std::istream& is) {
    std::uint32_t x = 0;
    is.read(reinterpret_cast<char*>(&x), 4);
    return x;
}
}  // namespace

void write_fields_bin(const std::string& path, const std::vector<const ScalarField*>& fields) {
    if (fields.empty()) throw BadParamsError("write_fields_bin: no fields");
    std::ofstream os(path, std::ios::binary);
    if (!os) throw SimError("cannot open for writing: " + path);
    os.write(kMagic, 4);
    put_u32(os, kVersion);
    put_u32(os, std::uint32_t(fields[0]->grid.n));
    put_u32(os, std::uint32_t(fields.size()));
    for (const ScalarField* f : fields) {
        if (f->grid != fields[0]->grid) throw GridMismatchError();
        os.write(reinterpret_cast<const char*>(f->v.data()), sizeof(double) * f->v.size());
    }
}

void write_field_bin(const std::string& path, const ScalarField& f) {
    write_fields_bin(path, {&f});
}

void write_field_bin(const std::string& path, const VectorField3& u) {
    write_fields_bin(path, {&u.c[0], &u.c[1], &u.c[2]});
}

std::vector<ScalarField> read_fields_bin(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw SimError("cannot open: " + path);
    char magic[4];
    is.read(magic, 4);
    if (std::memcmp(magic, kMagic, 4) != 0) throw SimError(path + ": bad magic");
    const std::uint32_t ver = get_u32(is);
    if (ver != kVersion) throw SimError(path + ": unsupported snapshot version");
    const std::uint32_t n = get_u32(is);
    const std::uint32_t ncomp = get_u32(is);
    Grid g(int(n));
    std::vector<ScalarField> out;
    for (std::uint32_t c = 0; c < ncomp; ++c) {
        ScalarField f(g);
        is.read(reinterpret_cast<char*>(f.v.data()), sizeof(double) * f.v.size());
        if (!is) throw SimError(path + ": truncated snapshot");
        out.push_back(std::move(f));
    }
    return out;
}

std::string format_g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string field_to_csv(const ScalarField& f) {
    std::ostringstream os;
    for (int i1 = 0; i1 < f.grid.n; ++i1) {
        for (int i2 = 0; i2 < f.grid.n; ++i2) {
            if (i2) os << ',';
            os << format_g17(f(i1, i2));
        }
        os << '\n';
    }
    return os.str();
}

void write_field_csv(const std::string& path, const ScalarField& f) {
    write_text(path, field_to_csv(f));
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw SimError("cannot open for writing: " + path);
    os.write(content.data(), std::streamsize(content.size()));
}

std::string read_text(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw SimError("cannot open: " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

void append_record_csv(std::string& out, const TrajectoryRecord& rec, int traj_id) {
    const std::size_t nrows = rec.rows();
    const std::size_t ncols = rec.columns.size();
    for (std::size_t r = 0; r < nrows; ++r) {
        const double t = rec.data[r * ncols];  // column 0 is always t
        for (std::size_t c = 1; c < ncols; ++c) {
            out += std::to_string(traj_id);
            out += ',';
            out += format_g17(t);
            out += ',';
            out += rec.columns[c];
            out += ',';
            out += format_g17(rec.data[r * ncols + c]);
            out += '\n';
        }
    }
}

}  // namespace sllg
