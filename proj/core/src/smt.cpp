#include "surfgen/smt.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace surfgen {

namespace {

struct PendingMap {
    std::string name;
    bool has_surface = false;
    SurfaceClass surface;
    std::vector<std::pair<Vertex, std::vector<Vertex>>> rows;
    std::vector<std::pair<Vertex, Vertex>> twisted;
};

int column_of(const std::string& line, std::size_t offset) {
    return static_cast<int>(offset) + 1;
}

SmtRecord finish(PendingMap& p, int line_no) {
    if (!p.has_surface) throw SmtParseError(line_no, 1, "map block without surface line");
    if (p.rows.empty()) throw SmtParseError(line_no, 1, "map block without vertex lines");
    Vertex maxid = -1;
    for (auto& [v, row] : p.rows) maxid = std::max(maxid, v);
    std::vector<std::vector<Vertex>> rots(maxid + 1);
    std::vector<bool> seen(maxid + 1, false);
    for (auto& [v, row] : p.rows) {
        if (seen[v]) throw SmtParseError(line_no, 1, "duplicate vertex " + std::to_string(v));
        seen[v] = true;
        rots[v] = std::move(row);
    }
    for (Vertex v = 0; v <= maxid; ++v)
        if (!seen[v]) throw SmtParseError(line_no, 1, "missing vertex " + std::to_string(v));
    SmtRecord rec{std::move(p.name), p.surface, EmbeddedMap::from_rotations(rots, p.twisted)};
    p = PendingMap{};
    return rec;
}

} // namespace

std::vector<SmtRecord> read_smt(std::istream& in) {
    std::vector<SmtRecord> out;
    PendingMap pending;
    bool in_map = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ss(line);
        std::string word;
        ss >> word;
        if (word == "map") {
            if (in_map)
                throw SmtParseError(line_no, column_of(line, first), "nested map block");
            in_map = true;
            pending = PendingMap{};
            if (!(ss >> pending.name))
                throw SmtParseError(line_no, column_of(line, first), "map line needs a name");
        } else if (word == "surface") {
            if (!in_map)
                throw SmtParseError(line_no, column_of(line, first), "surface outside map block");
            std::string a, b;
            int chi = 0, orient = -1;
            while (ss >> a) {
                if (a.rfind("chi=", 0) == 0) chi = std::stoi(a.substr(4));
                else if (a.rfind("orientable=", 0) == 0) orient = std::stoi(a.substr(11));
                else throw SmtParseError(line_no, column_of(line, line.find(a)),
                                         "unknown surface field '" + a + "'");
            }
            if (orient != 0 && orient != 1)
                throw SmtParseError(line_no, column_of(line, first),
                                    "surface needs orientable=0|1");
            try {
                pending.surface = SurfaceClass::make(chi, orient == 1);
            } catch (const std::invalid_argument& e) {
                throw SmtParseError(line_no, column_of(line, first), e.what());
            }
            pending.has_surface = true;
        } else if (word == "vertex") {
            if (!in_map)
                throw SmtParseError(line_no, column_of(line, first), "vertex outside map block");
            std::string idtok;
            if (!(ss >> idtok) || idtok.back() != ':')
                throw SmtParseError(line_no, column_of(line, first),
                                    "vertex line needs '<id>:'");
            Vertex v;
            try {
                v = std::stoi(idtok.substr(0, idtok.size() - 1));
            } catch (const std::exception&) {
                throw SmtParseError(line_no, column_of(line, line.find(idtok)),
                                    "bad vertex id '" + idtok + "'");
            }
            std::vector<Vertex> row;
            std::string tok;
            while (ss >> tok) {
                try {
                    row.push_back(std::stoi(tok));
                } catch (const std::exception&) {
                    throw SmtParseError(line_no, column_of(line, line.find(tok)),
                                        "bad neighbor id '" + tok + "'");
                }
            }
            if (v < 0)
                throw SmtParseError(line_no, column_of(line, first), "negative vertex id");
            pending.rows.emplace_back(v, std::move(row));
        } else if (word == "twisted:") {
            if (!in_map)
                throw SmtParseError(line_no, column_of(line, first), "twisted outside map block");
            std::string tok;
            while (ss >> tok) {
                std::size_t dash = tok.find('-');
                if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size())
                    throw SmtParseError(line_no, column_of(line, line.find(tok)),
                                        "twisted entry needs '<u>-<v>'");
                try {
                    Vertex u = std::stoi(tok.substr(0, dash));
                    Vertex v = std::stoi(tok.substr(dash + 1));
                    pending.twisted.emplace_back(u, v);
                } catch (const std::exception&) {
                    throw SmtParseError(line_no, column_of(line, line.find(tok)),
                                        "bad twisted entry '" + tok + "'");
                }
            }
        } else if (word == "end") {
            if (!in_map)
                throw SmtParseError(line_no, column_of(line, first), "end outside map block");
            try {
                out.push_back(finish(pending, line_no));
            } catch (const std::invalid_argument& e) {
                throw SmtParseError(line_no, 1, e.what());
            }
            in_map = false;
        } else {
            throw SmtParseError(line_no, column_of(line, first),
                                "unknown directive '" + word + "'");
        }
    }
    if (in_map) throw SmtParseError(line_no, 1, "unterminated map block");
    return out;
}

std::vector<SmtRecord> read_smt_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_smt(in);
}

void write_smt(std::ostream& out, const EmbeddedMap& m, const SurfaceClass& surface,
               const std::string& name) {
    out << "map " << name << "\n";
    out << "surface chi=" << surface.chi << " orientable=" << (surface.orientable ? 1 : 0)
        << "\n";
    auto rots = m.rotations();
    for (Vertex v = 0; v < m.vertex_count(); ++v) {
        out << "vertex " << v << ":";
        for (Vertex u : rots[v]) out << " " << u;
        out << "\n";
    }
    auto twisted = m.twisted_edges();
    if (!twisted.empty()) {
        out << "twisted:";
        for (auto [u, v] : twisted) {
            if (u > v) std::swap(u, v);
            out << " " << u << "-" << v;
        }
        out << "\n";
    }
    out << "end\n";
}

} // namespace surfgen
