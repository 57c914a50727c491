#pragma once

#include <string>

#include "swdv/field.hpp"

namespace swdv {

/// Field snapshot file: one-line UTF-8 JSON header
/// {"n":..., "box_length":..., "name":..., "t":...} terminated by a newline,
/// followed by n^2 little-endian IEEE-754 float64 samples, row-major.
void write_snapshot(const std::string& path, const ScalarField& f, const std::string& name,
                    double t);

struct Snapshot {
    ScalarField field;
    std::string name;
    double t = 0.0;
};

Snapshot read_snapshot(const std::string& path);

} // namespace swdv
