#pragma once

#include <iosfwd>
#include <string>

#include "elsim/field.hpp"

namespace elsim {

// Plain-text field snapshot format.  One comma-separated header line:
//   dim, nodes per axis (dim entries), extent per axis (dim entries),
//   component count, time
// followed by one line per node in lexicographic order with the node's
// component values, comma-separated.  Values are written with 17 significant
// digits, which round-trips doubles exactly.

void write_snapshot(std::ostream& out, const Field& f, double time);
void write_snapshot(const std::string& path, const Field& f, double time);

struct Snapshot {
    Field field;
    double time;
};

Snapshot read_snapshot(std::istream& in);
Snapshot read_snapshot(const std::string& path);

}  // namespace elsim
