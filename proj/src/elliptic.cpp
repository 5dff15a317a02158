#include "tessella/elliptic.hpp"

#include <random>
#include <sstream>

namespace tessella {

namespace {

const Rational kZero{};

/// Unbiased draw from [0, n) via rejection; keeps operator sampling
/// bit-reproducible across standard library implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % n;
}

} // namespace

EllipticOperator EllipticOperator::from_entries(
    const TessellationPatch& patch, std::map<std::pair<VertexId, VertexId>, Rational> entries) {
    for (auto it = entries.begin(); it != entries.end();) {
        const auto [v, w] = it->first;
        if (!patch.has_vertex(v) || !patch.has_vertex(w))
            throw InputError("operator entry on unknown vertex");
        if (v != w && !patch.has_edge(v, w))
            throw InputError("operator entry (" + std::to_string(v) + "," + std::to_string(w) +
                             ") is off the adjacency pattern");
        if (it->second == 0 && v != w)
            it = entries.erase(it);
        else
            ++it;
    }
    for (const auto& [a, b] : patch.edges()) {
        if (!patch.vertex_complete(a) || !patch.vertex_complete(b)) continue;
        if (!entries.count({a, b}) || !entries.count({b, a}))
            throw InputError("operator is not elliptic: zero entry on edge {" + std::to_string(a) +
                             "," + std::to_string(b) + "}");
    }
    EllipticOperator op;
    op.patch_ = &patch;
    op.entries_ = std::move(entries);
    return op;
}

const Rational& EllipticOperator::entry(VertexId v, VertexId w) const {
    const auto it = entries_.find({v, w});
    return it == entries_.end() ? kZero : it->second;
}

EllipticOperator nearest_neighbour_laplacian(const TessellationPatch& patch) {
    std::map<std::pair<VertexId, VertexId>, Rational> entries;
    for (const VertexId v : patch.vertices()) {
        entries[{v, v}] = Rational(static_cast<long>(patch.neighbors(v).size()));
        for (const VertexId w : patch.neighbors(v)) entries[{v, w}] = 1;
    }
    return EllipticOperator::from_entries(patch, std::move(entries));
}

EllipticOperator adjacency_operator(const TessellationPatch& patch) {
    std::map<std::pair<VertexId, VertexId>, Rational> entries;
    for (const VertexId v : patch.vertices())
        for (const VertexId w : patch.neighbors(v)) entries[{v, w}] = 1;
    return EllipticOperator::from_entries(patch, std::move(entries));
}

EllipticOperator random_elliptic(const TessellationPatch& patch, std::uint64_t seed,
                                 unsigned magnitude) {
    if (magnitude < 1) throw InputError("magnitude must be >= 1");
    std::mt19937_64 rng(seed);
    const std::uint64_t m = magnitude;
    std::map<std::pair<VertexId, VertexId>, Rational> entries;
    for (const VertexId v : patch.vertices()) {
        const long dn = static_cast<long>(uniform_below(rng, 2 * m + 1)) - static_cast<long>(m);
        const long dd = static_cast<long>(uniform_below(rng, m)) + 1;
        if (dn != 0) entries[{v, v}] = Rational(dn, dd);
        for (const VertexId w : patch.neighbors(v)) {
            const long n = static_cast<long>(uniform_below(rng, m)) + 1;
            const long d = static_cast<long>(uniform_below(rng, m)) + 1;
            const bool negative = uniform_below(rng, 2) == 1;
            entries[{v, w}] = Rational(negative ? -n : n, d);
        }
    }
    return EllipticOperator::from_entries(patch, std::move(entries));
}

EllipticOperator scaled(const EllipticOperator& op, const Rational& c) {
    if (c == 0) throw InputError("scaling an elliptic operator by zero");
    auto entries = op.entries();
    for (auto& [key, value] : entries) value *= c;
    return EllipticOperator::from_entries(op.patch(), std::move(entries));
}

Rational apply_at(const EllipticOperator& op, const VertexFunction& u, VertexId v) {
    if (!op.patch().vertex_complete(v))
        throw CompletenessError("operator application at incomplete vertex " + std::to_string(v));
    auto value = [&](VertexId w) -> Rational {
        const auto it = u.find(w);
        return it == u.end() ? Rational(0) : it->second;
    };
    Rational acc = op.entry(v, v) * value(v);
    for (const VertexId w : op.patch().neighbors(v)) acc += op.entry(v, w) * value(w);
    return acc;
}

std::string save_operator(const EllipticOperator& op) {
    std::ostringstream out;
    out << "op 1\n";
    for (const auto& [key, value] : op.entries())
        out << "entry " << key.first << ' ' << key.second << ' ' << fraction_string(value) << '\n';
    return out.str();
}

EllipticOperator load_operator(const TessellationPatch& patch, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    std::map<std::pair<VertexId, VertexId>, Rational> entries;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (!header) {
            std::string tag;
            int version = 0;
            if (!(ls >> tag >> version) || tag != "op" || version != 1)
                throw ParseError(line_no, "expected header 'op 1'");
            header = true;
            continue;
        }
        std::string tag, value;
        unsigned long v = 0, w = 0;
        if (!(ls >> tag >> v >> w >> value) || tag != "entry")
            throw ParseError(line_no, "expected 'entry <v> <w> <num>/<den>'");
        entries[{static_cast<VertexId>(v), static_cast<VertexId>(w)}] = parse_fraction(value);
    }
    if (!header) throw ParseError(1, "missing header 'op 1'");
    return EllipticOperator::from_entries(patch, std::move(entries));
}

} // namespace tessella
