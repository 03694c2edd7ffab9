#include "brsc/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "brsc/errors.hpp"

namespace brsc {

using nlohmann::json;

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

ParsedInput parse_input_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::string mode;
    std::vector<std::string> bit_rows;
    std::vector<std::vector<std::string>> face_lines;
    std::vector<std::string> declared_vertices;

    while (std::getline(in, line)) {
        auto toks = tokenize(line);
        if (toks.empty() || toks[0].starts_with("#")) continue;
        if (toks[0] == "matrix" || toks[0] == "faces") {
            if (!mode.empty()) throw ParseError("duplicate section header");
            mode = toks[0];
            continue;
        }
        if (toks[0] == "vertices") {
            declared_vertices.assign(toks.begin() + 1, toks.end());
            continue;
        }
        if (mode == "matrix") {
            if (toks.size() != 1) throw ParseError("matrix row must be a single 0/1 string");
            bit_rows.push_back(toks[0]);
        } else if (mode == "faces") {
            face_lines.push_back(toks);
        } else {
            throw ParseError("input must start with a `matrix` or `faces` line");
        }
    }
    if (mode.empty()) throw ParseError("input must contain a `matrix` or `faces` section");

    ParsedInput out;
    if (mode == "matrix") {
        BoolMatrix m = BoolMatrix::from_bit_rows(bit_rows, declared_vertices);
        BoolMatrix red = m.make_reduced();
        out.complex = red.to_complex();
        out.matrix = std::move(red);
        out.from_matrix = true;
        return out;
    }

    // Face list: vertex order from the optional `vertices` line, otherwise
    // order of first appearance.
    std::vector<std::string> names = declared_vertices;
    auto index_of = [&](const std::string& v) {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == v) return static_cast<int>(i);
        return -1;
    };
    for (const auto& face : face_lines)
        for (const auto& v : face)
            if (index_of(v) < 0) {
                if (!declared_vertices.empty())
                    throw ParseError("face uses undeclared vertex: " + v);
                names.push_back(v);
            }
    const int n = static_cast<int>(names.size());
    std::vector<VertexSet> gens;
    for (const auto& face : face_lines) {
        VertexSet f(n);
        for (const auto& v : face) f.set(index_of(v));
        if (f.count() != static_cast<int>(face.size()))
            throw ParseError("face lists a vertex twice");
        gens.push_back(f);
    }
    out.complex = SimplicialComplex::from_generators(std::move(names), gens);
    return out;
}

ParsedInput load_input_file(const std::string& path) { return parse_input_text(read_file(path)); }

std::string write_face_list(const SimplicialComplex& c) {
    std::string out = "faces\n";
    std::string vline = "vertices";
    for (const auto& v : c.vertex_names()) vline += " " + v;
    out += vline + "\n";
    for (const VertexSet& f : c.facets()) {
        std::string fl;
        for (int v = f.first(); v >= 0; v = f.next(v)) {
            if (!fl.empty()) fl += " ";
            fl += c.vertex_names()[static_cast<size_t>(v)];
        }
        out += fl + "\n";
    }
    return out;
}

std::string write_matrix(const BoolMatrix& m) {
    std::string out = "matrix\n";
    for (int r = 0; r < m.row_count(); ++r) {
        std::string line;
        for (int c = 0; c < m.col_count(); ++c) line += m.at(r, c) ? '1' : '0';
        out += line + "\n";
    }
    std::string vline = "vertices";
    for (const auto& v : m.col_labels()) vline += " " + v;
    out += vline + "\n";
    return out;
}

namespace {

// Flat name: `{}`, `V`, a whitespace/comma separated vertex list, or a
// concatenation of single-character vertex names ("12").
VertexSet parse_flat_name(const std::string& raw, const FlatLattice& l) {
    const int n = l.universe();
    std::string s;
    for (char ch : raw) s += (ch == ',') ? ' ' : ch;
    auto toks = tokenize(s);
    if (toks.size() == 1 && toks[0] == "{}") return VertexSet(n);
    if (toks.size() == 1 && toks[0] == "V") return VertexSet::full(n);
    auto vertex_index = [&](const std::string& v) {
        for (int i = 0; i < n; ++i)
            if (l.vertex_names[static_cast<size_t>(i)] == v) return i;
        return -1;
    };
    VertexSet f(n);
    for (const auto& t : toks) {
        int i = vertex_index(t);
        if (i >= 0) {
            f.set(i);
            continue;
        }
        // Concatenated single-character names.
        for (char ch : t) {
            int j = vertex_index(std::string(1, ch));
            if (j < 0) throw ParseError("unknown vertex in flat name: " + t);
            f.set(j);
        }
    }
    return f;
}

}  // namespace

ELLabeling parse_labeling_text(const std::string& text, const FlatLattice& l) {
    ELLabeling xi;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (tokenize(line).empty() || line.starts_with("#")) continue;
        auto arrow = line.find("->");
        auto colon = line.rfind(':');
        if (arrow == std::string::npos || colon == std::string::npos || colon < arrow)
            throw ParseError("labeling line must look like `F -> G : k`");
        VertexSet lo = parse_flat_name(line.substr(0, arrow), l);
        VertexSet hi = parse_flat_name(line.substr(arrow + 2, colon - arrow - 2), l);
        long long k = 0;
        try {
            k = std::stoll(line.substr(colon + 1));
        } catch (const std::exception&) {
            throw ParseError("labeling line has a non-integer label");
        }
        int li = l.index_of(lo), hi_i = l.index_of(hi);
        if (li < 0 || hi_i < 0) throw ParseError("labeling names a set that is not a flat");
        xi.label[{li, hi_i}] = k;
    }
    return xi;
}

ELLabeling load_labeling_file(const std::string& path, const FlatLattice& l) {
    return parse_labeling_text(read_file(path), l);
}

namespace {

json flat_as_json(const FlatLattice& l, int i) {
    json arr = json::array();
    for (int v = l.flats[static_cast<size_t>(i)].first(); v >= 0;
         v = l.flats[static_cast<size_t>(i)].next(v))
        arr.push_back(l.vertex_names[static_cast<size_t>(v)]);
    return arr;
}

}  // namespace

std::string lattice_to_json(const FlatLattice& l) {
    json j;
    j["schema"] = 1;
    j["flats"] = json::array();
    for (int i = 0; i < l.size(); ++i) j["flats"].push_back(flat_as_json(l, i));
    j["covers"] = json::array();
    for (const auto& [lo, hi] : l.covers) j["covers"].push_back(json::array({lo, hi}));
    return j.dump(2);
}

std::string graph_to_json(const LabeledGraph& g, const ComponentReport* report) {
    json j;
    j["schema"] = 1;
    j["vertices"] = g.vertex_names;
    j["edges"] = json::array();
    for (const auto& [a, b] : g.edges())
        j["edges"].push_back(json::array(
            {g.vertex_names[static_cast<size_t>(a)], g.vertex_names[static_cast<size_t>(b)]}));
    if (report) {
        j["components"] = json::array();
        for (size_t i = 0; i < report->components.size(); ++i) {
            json comp;
            comp["vertices"] = json::array();
            for (int v = report->components[i].first(); v >= 0; v = report->components[i].next(v))
                comp["vertices"].push_back(g.vertex_names[static_cast<size_t>(v)]);
            comp["nontrivial"] = static_cast<bool>(report->nontrivial[i]);
            j["components"].push_back(comp);
        }
    }
    return j.dump(2);
}

std::string homology_to_json(const HomologyReport& h) {
    json j;
    j["schema"] = 1;
    j["betti"] = h.betti;
    j["torsion"] = json::array();
    for (const auto& t : h.torsion) {
        json dim = json::array();
        for (const BigInt& f : t) dim.push_back(f.str());
        j["torsion"].push_back(dim);
    }
    return j.dump(2);
}

std::string shelling_to_json(const SimplicialComplex& c, const Shelling& s) {
    json j;
    j["schema"] = 1;
    j["order"] = json::array();
    for (const VertexSet& f : s.order) {
        json face = json::array();
        for (int v = f.first(); v >= 0; v = f.next(v))
            face.push_back(c.vertex_names()[static_cast<size_t>(v)]);
        j["order"].push_back(face);
    }
    j["homology_facets"] = s.homology_facets;
    return j.dump(2);
}

std::string order_complex_to_json(const FlatLattice& l, const OrderComplexResult& ord) {
    json j;
    j["schema"] = 1;
    j["vertices"] = json::array();
    for (int f : ord.flat_of_vertex) j["vertices"].push_back(l.flat_label(f));
    j["facets"] = json::array();
    if (ord.complex.vertex_count() > 0) {
        for (const VertexSet& f : ord.complex.facets()) {
            json chain = json::array();
            for (int v = f.first(); v >= 0; v = f.next(v))
                chain.push_back(ord.complex.vertex_names()[static_cast<size_t>(v)]);
            j["facets"].push_back(chain);
        }
    }
    return j.dump(2);
}

}  // namespace brsc
