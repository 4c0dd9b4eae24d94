#pragma once

#include "surfgen/embedded_map.hpp"
#include "surfgen/surface.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfgen {

// Line-oriented text format for maps:
//
//   # comment lines allowed
//   map <name>
//   surface chi=<int> orientable=<0|1>
//   vertex <v>: <n1> <n2> ... <nk>      # neighbors in rotation order, 0-based
//   ...
//   twisted: <u>-<v> <u>-<v> ...        # edges with signature -1, u<v; optional
//   end
//
// Multiple maps per stream; all unlisted edges have signature +1.

struct SmtRecord {
    std::string name;
    SurfaceClass declared_surface;
    EmbeddedMap map;
};

class SmtParseError : public std::runtime_error {
  public:
    SmtParseError(int line, int column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

std::vector<SmtRecord> read_smt(std::istream& in);
std::vector<SmtRecord> read_smt_file(const std::string& path);

void write_smt(std::ostream& out, const EmbeddedMap& m, const SurfaceClass& surface,
               const std::string& name);

} // namespace surfgen
