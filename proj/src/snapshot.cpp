#include "swdv/snapshot.hpp"

#include <bit>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace swdv {

static_assert(std::endian::native == std::endian::little,
              "snapshot payload assumes a little-endian host");

void write_snapshot(const std::string& path, const ScalarField& f, const std::string& name,
                    double t) {
    nlohmann::json header;
    header["n"] = f.grid().n;
    header["box_length"] = f.grid().box_length;
    header["name"] = name;
    header["t"] = t;

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_snapshot: cannot open " + path);
    out << header.dump() << '\n';
    out.write(reinterpret_cast<const char*>(f.data()),
              static_cast<std::streamsize>(f.size() * sizeof(double)));
    if (!out) throw std::runtime_error("write_snapshot: short write to " + path);
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_snapshot: cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("read_snapshot: missing header line");
    nlohmann::json header = nlohmann::json::parse(line);

    Grid2D grid(header.at("n").get<int>(), header.at("box_length").get<double>());
    ScalarField f(grid);
    in.read(reinterpret_cast<char*>(f.data()),
            static_cast<std::streamsize>(f.size() * sizeof(double)));
    if (static_cast<std::size_t>(in.gcount()) != f.size() * sizeof(double))
        throw std::runtime_error("read_snapshot: truncated payload in " + path);

    return {std::move(f), header.at("name").get<std::string>(), header.at("t").get<double>()};
}

} // namespace swdv
