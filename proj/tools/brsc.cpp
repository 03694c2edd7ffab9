// brsc: analyze boolean representable simplicial complexes from the command
// line. Input files carry either a `matrix` or a `faces` section; results are
// printed as JSON (schema 1). Exit codes: 0 success, 1 domain error, 2 parse
// error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "brsc/analysis.hpp"
#include "brsc/errors.hpp"
#include "brsc/flats.hpp"
#include "brsc/gamma.hpp"
#include "brsc/homology.hpp"
#include "brsc/homotopy.hpp"
#include "brsc/instances.hpp"
#include "brsc/io.hpp"
#include "brsc/order_complex.hpp"
#include "brsc/shelling.hpp"

using nlohmann::json;
using namespace brsc;

namespace {

struct Options {
    std::string input;
    std::string labeling;
    std::string out;
    std::string emit;
    std::string example_name;
    int t = 3;
    uint64_t seed = 1;
    int max_n = 160;
    int dim = 2;
    double timeout_ms = 0;
};

void write_output(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(opt.out);
    if (!f) throw DomainError("cannot write output file: " + opt.out);
    f << text << "\n";
}

json face_array(const SimplicialComplex& c, const std::vector<VertexSet>& faces) {
    json arr = json::array();
    for (const VertexSet& f : faces) {
        json one = json::array();
        for (int v = f.first(); v >= 0; v = f.next(v))
            one.push_back(c.vertex_names()[static_cast<size_t>(v)]);
        arr.push_back(one);
    }
    return arr;
}

json profile_json(const ComplexProfile& p) {
    json j;
    j["dimension"] = p.dimension;
    j["simple"] = p.simple;
    j["pure"] = p.pure;
    j["connected"] = p.connected;
    j["facet_count"] = p.facet_count;
    return j;
}

std::string cmd_faces(const ParsedInput& in) {
    json j;
    j["schema"] = 1;
    j["vertices"] = in.complex.vertex_names();
    j["dimension"] = in.complex.dim();
    j["face_count"] = in.complex.face_count();
    j["facets"] = face_array(in.complex, in.complex.facets());
    return j.dump(2);
}

std::string cmd_pi1(const ParsedInput& in) {
    Pi1Report r = pi1_rank(in.complex);
    json j;
    j["schema"] = 1;
    j["rank"] = r.rank;
    if (in.complex.dim() >= 2) {
        j["nontrivial_components"] = r.s;
        j["trivial_sizes"] = r.trivial_sizes;
    }
    return j.dump(2);
}

std::string cmd_shellable(const ParsedInput& in, const Options& opt) {
    ShellabilityDecision dec = decide_shellability(in.complex, SearchLimits{0, opt.timeout_ms});
    json j;
    j["schema"] = 1;
    j["shellable"] = dec.shellable;
    j["method"] = dec.search_based ? "search" : "component-criterion";
    return j.dump(2);
}

std::string cmd_shelling(const ParsedInput& in, const Options& opt) {
    auto s = find_shelling(in.complex, SearchLimits{0, opt.timeout_ms});
    if (!s) throw DomainError("complex is not shellable");
    return shelling_to_json(in.complex, *s);
}

std::string cmd_betti(const ParsedInput& in, const Options& opt) {
    auto s = find_shelling(in.complex, SearchLimits{0, opt.timeout_ms});
    if (!s) throw DomainError("complex is not shellable; use `homology` instead");
    json j;
    j["schema"] = 1;
    j["betti"] = betti_from_shelling(in.complex, *s);
    j["source"] = "shelling";
    return j.dump(2);
}

std::string cmd_graph_of_flats(const ParsedInput& in) {
    LabeledGraph g = graph_of_flats(in.complex);
    ComponentReport r = component_report(in.complex, g);
    return graph_to_json(g, &r);
}

std::string cmd_order_complex(const ParsedInput& in) {
    FlatLattice l = flat_lattice(in.complex);
    return order_complex_to_json(l, order_complex(l));
}

std::string cmd_el_check(const ParsedInput& in, const Options& opt) {
    FlatLattice l = flat_lattice(in.complex);
    ELLabeling xi = load_labeling_file(opt.labeling, l);
    auto fail = verify_el_labeling(l, xi);
    json j;
    j["schema"] = 1;
    j["accepted"] = !fail.has_value();
    if (fail) {
        j["failure"]["interval"] = json::array({l.flat_label(fail->a), l.flat_label(fail->b)});
        j["failure"]["reason"] = fail->reason;
    }
    return j.dump(2);
}

std::string cmd_analyze(const ParsedInput& in) {
    AnalysisReport rep = analyze(in.complex);
    json j;
    j["schema"] = 1;
    j["profile"] = profile_json(rep.profile);
    j["boolean_representable"] = rep.boolean_representable;
    j["flat_count"] = rep.flat_count;
    if (rep.pi1) {
        j["pi1_rank"] = rep.pi1->rank;
        j["trivial_sizes"] = rep.pi1->trivial_sizes;
        j["nontrivial_components"] = rep.pi1->s;
    }
    if (rep.shellable) {
        j["shellable"] = *rep.shellable;
        j["shellability_method"] = rep.shellability_search_based ? "search" : "component-criterion";
    }
    if (rep.homology) {
        j["betti"] = rep.homology->betti;
        json torsion = json::array();
        for (const auto& t : rep.homology->torsion) {
            json dim = json::array();
            for (const BigInt& f : t) dim.push_back(f.str());
            torsion.push_back(dim);
        }
        j["torsion"] = torsion;
    }
    if (rep.shelling_betti) j["shelling_betti"] = *rep.shelling_betti;
    if (rep.scm) j["sequentially_cohen_macaulay"] = *rep.scm;
    j["timings_ms"] = rep.stage_ms;
    return j.dump(2);
}

std::string cmd_example(const Options& opt) {
    SimplicialComplex c = example_complex(opt.example_name, opt.t);
    std::ofstream f(opt.emit);
    if (!f) throw DomainError("cannot write file: " + opt.emit);
    f << write_face_list(c);
    json j;
    j["schema"] = 1;
    j["written"] = opt.emit;
    j["vertices"] = c.vertex_count();
    j["facets"] = c.facets().size();
    return j.dump(2);
}

std::string cmd_bench(const Options& opt) {
    if (opt.dim != 2)
        throw DomainError("bench: only the dimension-2 decision has a fast path");
    std::vector<int> sizes;
    for (int n : {40, 60, 80, 120, 160})
        if (n <= opt.max_n) sizes.push_back(n);
    if (sizes.empty()) sizes.push_back(opt.max_n);
    BenchReport rep = bench_shellability(sizes, 9, opt.seed);
    json j;
    j["schema"] = 1;
    j["points"] = json::array();
    for (const BenchPoint& p : rep.points) {
        json one;
        one["n"] = p.n;
        one["median_ms"] = p.median_ms;
        one["samples"] = p.samples;
        j["points"].push_back(one);
    }
    j["loglog_slope"] = rep.loglog_slope;
    return j.dump(2);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"boolean representable simplicial complex toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", opt.input, "input file (matrix or faces section)")->required();
        cmd->add_option("--out", opt.out, "write JSON to this file instead of stdout");
        cmd->add_option("--timeout-ms", opt.timeout_ms, "budget for search-based operations");
    };

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "full report for one complex");
    add_input(analyze_cmd);
    CLI::App* faces_cmd = app.add_subcommand("faces", "facets and profile");
    add_input(faces_cmd);
    CLI::App* flats_cmd = app.add_subcommand("flats", "lattice of flats as JSON");
    add_input(flats_cmd);
    CLI::App* gof_cmd = app.add_subcommand("graph-of-flats", "graph of flats with components");
    add_input(gof_cmd);
    CLI::App* pi1_cmd = app.add_subcommand("pi1", "free rank of the fundamental group");
    add_input(pi1_cmd);
    CLI::App* shellable_cmd = app.add_subcommand("shellable", "shellability decision");
    add_input(shellable_cmd);
    CLI::App* shelling_cmd = app.add_subcommand("shelling", "construct a shelling");
    add_input(shelling_cmd);
    CLI::App* betti_cmd = app.add_subcommand("betti", "Betti numbers from a shelling");
    add_input(betti_cmd);
    CLI::App* homology_cmd =
        app.add_subcommand("homology", "reduced homology via Smith normal form");
    add_input(homology_cmd);
    CLI::App* ord_cmd =
        app.add_subcommand("order-complex", "order complex of the lattice of flats");
    add_input(ord_cmd);
    CLI::App* el_cmd =
        app.add_subcommand("el-check", "verify an EL-labeling of the lattice of flats");
    add_input(el_cmd);
    el_cmd->add_option("labeling", opt.labeling, "labeling file, lines `F -> G : k`")->required();

    CLI::App* example_cmd = app.add_subcommand("example", "emit a catalog example as a face list");
    example_cmd->add_option("name", opt.example_name, "occur | chhs | noel | yesel")->required();
    example_cmd->add_option("--t", opt.t, "parameter for occur");
    example_cmd->add_option("--emit", opt.emit, "output file")->required();
    example_cmd->add_option("--out", opt.out, "write the JSON summary to this file");

    CLI::App* bench_cmd = app.add_subcommand("bench", "time the shellability decision");
    bench_cmd->add_option("--seed", opt.seed, "random seed");
    bench_cmd->add_option("--max-n", opt.max_n, "largest vertex count");
    bench_cmd->add_option("--dim", opt.dim, "complex dimension (2)");
    bench_cmd->add_option("--out", opt.out, "write JSON to this file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        std::string result;
        if (example_cmd->parsed()) {
            result = cmd_example(opt);
        } else if (bench_cmd->parsed()) {
            result = cmd_bench(opt);
        } else {
            ParsedInput in = load_input_file(opt.input);
            if (analyze_cmd->parsed()) result = cmd_analyze(in);
            else if (faces_cmd->parsed()) result = cmd_faces(in);
            else if (flats_cmd->parsed()) result = lattice_to_json(flat_lattice(in.complex));
            else if (gof_cmd->parsed()) result = cmd_graph_of_flats(in);
            else if (pi1_cmd->parsed()) result = cmd_pi1(in);
            else if (shellable_cmd->parsed()) result = cmd_shellable(in, opt);
            else if (shelling_cmd->parsed()) result = cmd_shelling(in, opt);
            else if (betti_cmd->parsed()) result = cmd_betti(in, opt);
            else if (homology_cmd->parsed())
                result = homology_to_json(reduced_homology(in.complex));
            else if (ord_cmd->parsed()) result = cmd_order_complex(in);
            else if (el_cmd->parsed()) result = cmd_el_check(in, opt);
        }
        write_output(opt, result);
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
