#include "tessella/patch_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace tessella {

namespace {

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint32_t parse_id(const std::string& token, std::size_t line) {
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, "expected a non-negative id, got '" + token + "'");
    return value;
}

} // namespace

TessellationPatch load_patch(std::string_view text) {
    TessellationPatch::FaceMap faces;
    std::set<VertexId> all_vertices;
    bool header_seen = false;
    bool vertices_all = false, faces_all = false;
    bool vertices_seen = false, faces_seen = false;
    std::set<VertexId> complete_vertices;
    std::set<FaceId> complete_faces;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line[0] == '#') continue;

        auto tokens = split_ws(line);
        if (tokens.empty()) continue;

        if (!header_seen) {
            if (tokens.size() != 2 || tokens[0] != "tess" || tokens[1] != "1")
                throw ParseError(line_no, "expected header 'tess 1'");
            header_seen = true;
            continue;
        }

        if (tokens[0] == "face") {
            if (tokens.size() < 2 || tokens[1].size() < 2 || tokens[1].back() != ':')
                throw ParseError(line_no, "expected 'face <fid>: <v0> <v1> ...'");
            const FaceId fid = parse_id(tokens[1].substr(0, tokens[1].size() - 1), line_no);
            if (faces.count(fid))
                throw ParseError(line_no, "duplicate face id " + std::to_string(fid));
            std::vector<VertexId> cycle;
            std::set<VertexId> seen;
            for (std::size_t i = 2; i < tokens.size(); ++i) {
                const VertexId v = parse_id(tokens[i], line_no);
                if (!seen.insert(v).second)
                    throw ParseError(line_no, "non-simple cycle (vertex " + std::to_string(v) +
                                                  " repeats)");
                cycle.push_back(v);
            }
            if (cycle.size() < 2)
                throw ParseError(line_no, "face cycle needs at least two vertices");
            for (const VertexId v : cycle) all_vertices.insert(v);
            faces.emplace(fid, std::move(cycle));
        } else if (tokens[0] == "complete_vertices:") {
            if (vertices_seen) throw ParseError(line_no, "complete_vertices given twice");
            vertices_seen = true;
            if (tokens.size() == 2 && tokens[1] == "all")
                vertices_all = true;
            else
                for (std::size_t i = 1; i < tokens.size(); ++i)
                    complete_vertices.insert(parse_id(tokens[i], line_no));
        } else if (tokens[0] == "complete_faces:") {
            if (faces_seen) throw ParseError(line_no, "complete_faces given twice");
            faces_seen = true;
            if (tokens.size() == 2 && tokens[1] == "all")
                faces_all = true;
            else
                for (std::size_t i = 1; i < tokens.size(); ++i)
                    complete_faces.insert(parse_id(tokens[i], line_no));
        } else {
            throw ParseError(line_no, "unrecognized line '" + std::string(line) + "'");
        }
    }

    if (!header_seen) throw ParseError(1, "missing header 'tess 1'");
    if (!vertices_seen) throw ParseError(line_no, "missing complete_vertices line");
    if (!faces_seen) throw ParseError(line_no, "missing complete_faces line");

    if (vertices_all) complete_vertices = all_vertices;
    if (faces_all)
        for (const auto& [fid, cycle] : faces) complete_faces.insert(fid);

    for (const VertexId v : complete_vertices)
        if (!all_vertices.count(v))
            throw ParseError(line_no, "complete vertex " + std::to_string(v) + " occurs in no face");
    for (const FaceId f : complete_faces)
        if (!faces.count(f))
            throw ParseError(line_no, "complete face " + std::to_string(f) + " is not a face");

    return TessellationPatch::build(std::move(faces), std::move(complete_vertices),
                                    std::move(complete_faces));
}

std::string save_patch(const TessellationPatch& patch) {
    std::ostringstream out;
    out << "tess 1\n";
    for (const auto& [fid, cycle] : patch.faces()) {
        out << "face " << fid << ":";
        for (const VertexId v : cycle) out << ' ' << v;
        out << '\n';
    }
    const auto all_vertices = patch.vertices();
    const bool vertices_all = patch.complete_vertices().size() == all_vertices.size();
    out << "complete_vertices:";
    if (vertices_all && !all_vertices.empty())
        out << " all";
    else
        for (const VertexId v : patch.complete_vertices()) out << ' ' << v;
    out << '\n';
    const bool faces_all =
        patch.complete_faces().size() == patch.face_count() && patch.face_count() > 0;
    out << "complete_faces:";
    if (faces_all)
        out << " all";
    else
        for (const FaceId f : patch.complete_faces()) out << ' ' << f;
    out << '\n';
    return out.str();
}

bool patch_equal(const TessellationPatch& a, const TessellationPatch& b) {
    if (a.face_count() != b.face_count()) return false;
    for (const auto& [fid, ca] : a.faces()) {
        if (!b.has_face(fid)) return false;
        const auto& cb = b.face_cycle(fid);
        if (ca.size() != cb.size()) return false;
        const auto start = std::find(cb.begin(), cb.end(), ca.front());
        if (start == cb.end()) return false;
        const std::size_t off = static_cast<std::size_t>(start - cb.begin());
        for (std::size_t i = 0; i < ca.size(); ++i)
            if (ca[i] != cb[(off + i) % cb.size()]) return false;
    }
    return a.complete_vertices() == b.complete_vertices() &&
           a.complete_faces() == b.complete_faces();
}

} // namespace tessella
