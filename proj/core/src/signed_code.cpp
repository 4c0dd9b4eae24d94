#include "surfgen/signed_code.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

namespace surfgen {

std::vector<std::uint8_t> signed_code_bytes(const EmbeddedMap& m) {
    const int n = m.vertex_count();
    if (n > 127)
        throw std::runtime_error("signed_code: vertex count " + std::to_string(n) +
                                 " exceeds 127");
    std::vector<std::uint8_t> out;
    out.reserve(1 + m.dart_count() + n);
    out.push_back(static_cast<std::uint8_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        for (int i = 0; i < m.degree(v); ++i) {
            Dart d = m.rotation_dart(v, i);
            std::uint8_t b = static_cast<std::uint8_t>(m.head_of(d) + 1);
            if (m.sign(m.edge_of(d)) < 0) b |= 0x80;
            out.push_back(b);
        }
        out.push_back(0);
    }
    return out;
}

void write_signed_code_header(std::ostream& out) {
    out.write(kSignedCodeHeader, sizeof(kSignedCodeHeader) - 1);
}

void write_signed_code(std::ostream& out, const EmbeddedMap& m) {
    auto bytes = signed_code_bytes(m);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

EmbeddedMap map_from_signed_code_bytes(const std::uint8_t* data, std::size_t size) {
    if (size == 0) throw std::runtime_error("signed_code: empty payload");
    const int n = data[0];
    std::size_t pos = 1;
    std::vector<std::vector<Vertex>> rots(n);
    std::vector<std::pair<Vertex, Vertex>> twisted;
    for (Vertex v = 0; v < n; ++v) {
        for (;;) {
            if (pos >= size) throw std::runtime_error("signed_code: truncated payload");
            std::uint8_t b = data[pos++];
            if (b == 0) break;
            Vertex u = (b & 0x7f) - 1;
            if (u < 0 || u >= n) throw std::runtime_error("signed_code: bad neighbor id");
            rots[v].push_back(u);
            if ((b & 0x80) && v < u) twisted.emplace_back(v, u);
        }
    }
    return EmbeddedMap::from_rotations(rots, twisted);
}

std::vector<EmbeddedMap> read_signed_code(std::istream& in) {
    char header[sizeof(kSignedCodeHeader) - 1];
    if (!in.read(header, sizeof(header)) ||
        std::string(header, sizeof(header)) != kSignedCodeHeader)
        throw std::runtime_error("signed_code: missing stream header");

    std::vector<EmbeddedMap> maps;
    int c;
    while ((c = in.get()) != std::char_traits<char>::eof()) {
        const int n = c;
        if (n <= 0) throw std::runtime_error("signed_code: bad vertex count byte");
        std::vector<std::vector<Vertex>> rots(n);
        std::vector<std::pair<Vertex, Vertex>> twisted;
        for (Vertex v = 0; v < n; ++v) {
            for (;;) {
                int b = in.get();
                if (b == std::char_traits<char>::eof())
                    throw std::runtime_error("signed_code: truncated map payload");
                if (b == 0) break;
                Vertex u = (b & 0x7f) - 1;
                if (u < 0 || u >= n)
                    throw std::runtime_error("signed_code: neighbor id out of range");
                rots[v].push_back(u);
                if ((b & 0x80) && v < u) twisted.emplace_back(v, u);
            }
        }
        maps.push_back(EmbeddedMap::from_rotations(rots, twisted));
    }
    return maps;
}

} // namespace surfgen
