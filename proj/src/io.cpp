#include "mbo/io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mbo {

namespace {

void grid_dims(const DiscreteGeometry& geom, int& width, int& height) {
    if (!geom.has_positions()) throw std::invalid_argument("PGM I/O requires a grid geometry");
    width = geom.side_count();
    height = (geom.dim() == 2) ? geom.side_count() : 1;
}

// next whitespace-delimited token, skipping '#' comment lines
std::string next_token(std::istream& in) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            std::string line;
            std::getline(in, line);
            continue;
        }
        if (!std::isspace(c)) {
            tok.push_back(static_cast<char>(c));
            while ((c = in.get()) != EOF && !std::isspace(c)) tok.push_back(static_cast<char>(c));
            return tok;
        }
    }
    throw std::runtime_error("unexpected end of PGM header");
}

}  // namespace

void write_label_pgm(const std::string& path, const DiscreteGeometry& geom, const PhaseField& u) {
    int w, h;
    grid_dims(geom, w, h);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << "P5\n" << w << " " << h << "\n255\n";
    std::vector<uint8_t> bytes(static_cast<size_t>(w) * h);
    for (int v = 0; v < geom.n_vertices(); ++v)
        bytes[v] = static_cast<uint8_t>(u.argmax_phase(v));
    out.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
    if (!out) throw std::runtime_error("failed writing " + path);
}

std::vector<int> read_label_pgm(const std::string& path, const DiscreteGeometry& geom) {
    int w, h;
    grid_dims(geom, w, h);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    if (next_token(in) != "P5") throw std::runtime_error(path + ": not a binary PGM (P5)");
    int fw = std::stoi(next_token(in));
    int fh = std::stoi(next_token(in));
    int maxval = std::stoi(next_token(in));
    if (fw != w || fh != h)
        throw std::invalid_argument(path + ": PGM dimensions do not match the grid");
    if (maxval != 255) throw std::runtime_error(path + ": expected maxval 255");
    std::vector<uint8_t> bytes(static_cast<size_t>(w) * h);
    in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
    if (in.gcount() != static_cast<std::streamsize>(bytes.size()))
        throw std::runtime_error(path + ": truncated PGM payload");
    return std::vector<int>(bytes.begin(), bytes.end());
}

void write_raw_field(const std::string& path, const PhaseField& u) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << "MBOF1 " << u.n_phases() << " " << u.n_vertices() << "\n";
    static_assert(sizeof(double) == 8);
    out.write(reinterpret_cast<const char*>(u.data().data()),
              static_cast<std::streamsize>(u.data().size() * sizeof(double)));
    if (!out) throw std::runtime_error("failed writing " + path);
}

PhaseField read_raw_field(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string header;
    std::getline(in, header);
    std::istringstream hs(header);
    std::string magic;
    int P = 0, n = 0;
    hs >> magic >> P >> n;
    if (magic != "MBOF1" || P <= 0 || n <= 0)
        throw std::runtime_error(path + ": bad raw field header");
    PhaseField u(P, n);
    in.read(reinterpret_cast<char*>(u.data().data()),
            static_cast<std::streamsize>(u.data().size() * sizeof(double)));
    if (in.gcount() != static_cast<std::streamsize>(u.data().size() * sizeof(double)))
        throw std::runtime_error(path + ": truncated raw field payload");
    return u;
}

std::vector<double> read_csv_reals(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<double> vals;
    std::string cell;
    while (std::getline(in, cell)) {
        std::istringstream line(cell);
        std::string tok;
        while (std::getline(line, tok, ',')) {
            if (tok.find_first_not_of(" \t\r") == std::string::npos) continue;
            vals.push_back(std::stod(tok));
        }
    }
    return vals;
}

}  // namespace mbo
