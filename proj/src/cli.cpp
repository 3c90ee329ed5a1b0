#include "k25/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "k25/json_io.hpp"

namespace k25::cli {

namespace {

using nlohmann::json;

Graph family_from_spec(const std::string& spec) {
    if (spec == "petersen") return petersen();
    if (spec == "prism") return prism();
    if (spec == "q3") return cube();
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw Error("unknown family spec '" + spec +
                    "' (expected c:<n>, c2:<n>, p:<n>, k:<n>, k:<s>,<t>, petersen, prism, q3)");
    const std::string head = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    try {
        const auto comma = rest.find(',');
        if (head == "k" && comma != std::string::npos)
            return complete_bipartite(std::stoi(rest.substr(0, comma)),
                                      std::stoi(rest.substr(comma + 1)));
        if (comma != std::string::npos) throw Error("family '" + head + "' takes one parameter");
        const int n = std::stoi(rest);
        if (head == "c") return cycle(n);
        if (head == "c2") return cycle_square(n);
        if (head == "p") return path(n);
        if (head == "k") return complete(n);
    } catch (const std::invalid_argument&) {
        throw Error("malformed family parameter in '" + spec + "'");
    } catch (const std::out_of_range&) {
        throw Error("family parameter out of range in '" + spec + "'");
    }
    throw Error("unknown family spec '" + spec + "'");
}

Graph pattern_from_spec(const std::string& spec) {
    if (spec.size() < 2 || spec[0] != 'k')
        throw Error("unknown pattern spec '" + spec + "' (expected k<n> or k<s>,<t>)");
    const std::string rest = spec.substr(1);
    try {
        const auto comma = rest.find(',');
        if (comma != std::string::npos)
            return complete_bipartite(std::stoi(rest.substr(0, comma)),
                                      std::stoi(rest.substr(comma + 1)));
        return complete(std::stoi(rest));
    } catch (const std::invalid_argument&) {
        throw Error("malformed pattern spec '" + spec + "'");
    } catch (const std::out_of_range&) {
        throw Error("pattern parameter out of range in '" + spec + "'");
    }
}

Graph read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open edge list file '" + path + "'");
    std::vector<std::pair<int, int>> edges;
    int max_vertex = -1;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        int u, v;
        if (!(ss >> u)) continue; // blank line
        if (!(ss >> v)) throw Error("edge list line " + std::to_string(line_no) +
                                    ": expected two vertex indices");
        if (u < 0 || v < 0)
            throw Error("edge list line " + std::to_string(line_no) + ": negative vertex index");
        edges.emplace_back(u, v);
        max_vertex = std::max({max_vertex, u, v});
    }
    if (max_vertex >= Graph::max_vertices)
        throw Error("edge list vertex " + std::to_string(max_vertex) + " exceeds the 64-vertex cap");
    return Graph::from_edges(max_vertex + 1, edges);
}

struct InputOptions {
    std::string graph6;
    std::string edges_path;
    std::string family;

    Graph load() const {
        const int given = !graph6.empty() + !edges_path.empty() + !family.empty();
        if (given != 1) throw Error("exactly one of --graph6, --edges, --family is required");
        if (!graph6.empty()) return parse_graph6(graph6);
        if (!edges_path.empty()) return read_edge_list(edges_path);
        return family_from_spec(family);
    }
};

void add_input_flags(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--graph6", in.graph6, "graph as a graph6 line");
    cmd->add_option("--edges", in.edges_path, "path to a 'u v' per line edge list (0-based)");
    cmd->add_option("--family", in.family,
                    "family spec: c:<n>, c2:<n>, p:<n>, k:<n>, k:<s>,<t>, petersen, prism, q3");
}

struct Emitter {
    std::ostream& fallback;
    std::string out_path;

    void line(const std::string& text) const {
        if (out_path.empty()) {
            fallback << text << '\n';
            return;
        }
        std::ofstream f(out_path);
        if (!f) throw Error("cannot open output file '" + out_path + "'");
        f << text << '\n';
    }

    void doc(const json& j) const { line(j.dump()); }
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks* hooks) {
    CLI::App app{"graph-minor toolkit for squared cycles and K_{2,5}-free graphs"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "write the result document here instead of stdout");

    InputOptions check_in;
    auto* check = app.add_subcommand("check", "classify a graph (PropertyReport JSON)");
    add_input_flags(check, check_in);

    InputOptions minor_in;
    std::string pattern_spec;
    auto* minor = app.add_subcommand("minor", "search for a minor model");
    add_input_flags(minor, minor_in);
    minor->add_option("--pattern", pattern_spec, "pattern spec: k<n> or k<s>,<t>")->required();

    std::string gen_family;
    auto* gen = app.add_subcommand("gen", "emit a named graph as graph6");
    gen->add_option("--family", gen_family, "family spec")->required();

    std::string embed_family;
    auto* embed = app.add_subcommand("embed", "emit the squared-cycle embedding (face list JSON)");
    embed->add_option("--family", embed_family, "family spec, must be c2:<even n>")->required();

    int max_n = 0;
    std::string stream_path;
    int jobs = 1;
    auto* verify = app.add_subcommand("verify",
                                      "check the even-squared-cycle characterization over all "
                                      "small graphs or a graph6 stream");
    verify->add_option("--max-n", max_n, "exhaustive internal enumeration up to this n (<= 8)");
    verify->add_option("--stream", stream_path, "path to a graph6 stream ('-' for stdin)");
    verify->add_option("--jobs", jobs, "worker threads for the internal enumeration")
        ->default_val(1);

    int which_lemma = 0;
    InputOptions lemma_in;
    auto* lemma = app.add_subcommand("lemma", "run a structural checker (1 or 4)");
    lemma->add_option("which", which_lemma, "1: closed neighborhoods are not cut sets; "
                                            "4: K_{2,5} model in a cubic line graph")
        ->required();
    add_input_flags(lemma, lemma_in);

    try {
        std::vector<const char*> argv;
        argv.push_back("k25");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    const Emitter emit{out, out_path};
    try {
        if (*check) {
            emit.doc(json(classify(check_in.load())));
            return 0;
        }
        if (*minor) {
            const Graph host = minor_in.load();
            const Graph pattern = pattern_from_spec(pattern_spec);
            std::optional<MinorModel> model;
            // K_{2,t} and K_{3,t} queries go through the singleton fast path.
            if (pattern_spec.find(',') != std::string::npos) {
                const auto comma = pattern_spec.find(',');
                const int s = std::stoi(pattern_spec.substr(1, comma - 1));
                const int t = std::stoi(pattern_spec.substr(comma + 1));
                if ((s == 2 || s == 3) && t >= s)
                    model = find_complete_bipartite_minor(host, s, t);
                else
                    model = find_minor(host, pattern);
            } else {
                model = find_minor(host, pattern);
            }
            json j;
            if (model) {
                j = json{{"found", true}, {"model", *model}};
            } else {
                j = json{{"found", false}};
            }
            emit.doc(j);
            return 0;
        }
        if (*gen) {
            emit.line(emit_graph6(family_from_spec(gen_family)));
            return 0;
        }
        if (*embed) {
            if (embed_family.rfind("c2:", 0) != 0)
                throw Error("embed requires a c2:<n> family spec");
            const int n = std::stoi(embed_family.substr(3));
            emit.doc(json(squared_cycle_embedding(n)));
            return 0;
        }
        if (*verify) {
            if ((max_n > 0) == !stream_path.empty())
                throw Error("verify requires exactly one of --max-n, --stream");
            VerificationReport report;
            const ClassifyFn hook = hooks ? hooks->classify : ClassifyFn{};
            if (max_n > 0) {
                report = verify_main_theorem(max_n, jobs, hook);
            } else if (stream_path == "-") {
                report = verify_main_theorem_stream(std::cin, hook);
            } else {
                std::ifstream f(stream_path);
                if (!f) throw Error("cannot open stream file '" + stream_path + "'");
                report = verify_main_theorem_stream(f, hook);
            }
            emit.doc(json(report));
            return report.verified() ? 0 : 2;
        }
        if (*lemma) {
            const Graph g = lemma_in.load();
            if (which_lemma == 1) {
                const Lemma1Report report = lemma1_check(g);
                emit.doc(json(report));
                return report.holds() ? 0 : 2;
            }
            if (which_lemma == 4) {
                try {
                    emit.doc(json(lemma4_witness(g)));
                    return 0;
                } catch (const NotApplicableError& e) {
                    emit.doc(json{{"lemma", 4}, {"applicable", false}, {"reason", e.what()}});
                    return 0;
                } catch (const ClaimViolationError& e) {
                    err << "claim violation: " << e.what() << '\n';
                    return 2;
                }
            }
            throw Error("lemma checker must be 1 or 4");
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

} // namespace k25::cli
