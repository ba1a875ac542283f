// cli.hpp - command line entry point (subcommands: layout, bench, render).

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sgdlayout/stress.hpp"

namespace sgdlayout {

// argv-style interface; args[0] is the program name. Returns the process exit
// status: 0 on success, 1 on runtime errors, 2 on usage errors.
int cli_main(const std::vector<std::string>& args);

// Coordinate file helpers shared by `layout --coords` and `render`.
void write_coords(std::ostream& out, const Layout& layout);
Layout read_coords(std::istream& in);

}  // namespace sgdlayout
