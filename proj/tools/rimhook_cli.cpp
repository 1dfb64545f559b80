// Command line front end for the rim-hook insertion library.
//
// Exit codes: 0 success, 1 domain negative (a hook that does not insert, a
// verification that found a disagreement), 2 usage or parse errors, 3 internal
// invariant failures.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rimhook/extraction.hpp"
#include "rimhook/insertion.hpp"
#include "rimhook/io.hpp"
#include "rimhook/verify.hpp"

namespace {

using nlohmann::json;
using namespace rimhook;

std::string read_source(const std::string& src) {
    if (src == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(src);
    if (file) {
        std::ostringstream buffer;
        buffer << file.rdbuf();
        return buffer.str();
    }
    return src;  // inline payload
}

ReversePlanePartition load_rpp(const std::string& src) {
    return io::parse_rpp(read_source(src));
}

int thread_budget() {
    if (const char* env = std::getenv("RIMHOOK_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return std::min(n, 64);
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min(hw == 0 ? 1u : hw, 4u));
}

json cell_json(Cell u) { return json::array({u.row, u.col}); }

json path_json(const std::vector<Cell>& cells) {
    json out = json::array();
    for (Cell u : cells) out.push_back(cell_json(u));
    return out;
}

json rpp_to_json(const ReversePlanePartition& rpp) {
    json j;
    j["shape"] = rpp.shape().parts();
    j["rows"] = rpp.rows();
    return j;
}

std::string cells_text(const std::vector<Cell>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out += ' ';
        out += to_string(cells[i]);
    }
    return out;
}

std::vector<Cell> corners_of(const std::vector<RimHook>& hooks) {
    std::vector<Cell> out;
    out.reserve(hooks.size());
    for (const RimHook& h : hooks) out.push_back(h.corner());
    return out;
}

int run_hooks(const std::string& shape_text, bool as_json) {
    const Partition shape = Partition::parse(shape_text);
    const std::vector<RimHook> hooks = all_rim_hooks(shape);
    if (as_json) {
        json out;
        out["shape"] = shape.parts();
        out["hooks"] = json::array();
        for (std::size_t i = 0; i < hooks.size(); ++i) {
            json h;
            h["rank"] = i + 1;
            h["corner"] = cell_json(hooks[i].corner());
            h["hook_length"] = hooks[i].cell_count();
            h["cells"] = path_json(hooks[i].path().cells());
            out["hooks"].push_back(h);
        }
        std::cout << out.dump() << "\n";
    } else {
        for (std::size_t i = 0; i < hooks.size(); ++i) {
            std::cout << "rank " << i + 1 << ": cell " << to_string(hooks[i].corner())
                      << " hook " << hooks[i].cell_count() << " rim "
                      << cells_text(hooks[i].path().cells()) << "\n";
        }
    }
    return 0;
}

int run_insert(const std::string& rpp_src, const std::string& hook_text, bool as_json) {
    const ReversePlanePartition rpp = load_rpp(rpp_src);
    const Cell corner = io::parse_cell(hook_text);
    if (!rpp.shape().contains(corner)) {
        throw std::invalid_argument("hook cell " + to_string(corner) +
                                    " is outside shape " + rpp.shape().str());
    }
    const InsertionOutcome outcome = insert(RimHook(rpp.shape(), corner), rpp);
    if (as_json) {
        json out;
        out["status"] = InsertionOutcome::failure_name(outcome.failure);
        if (outcome.inserted()) {
            out["path"] = path_json(outcome.path->cells_north_east());
            out["result"] = rpp_to_json(*outcome.result);
        } else {
            out["cell"] = outcome.offending ? cell_json(*outcome.offending) : json();
        }
        std::cout << out.dump() << "\n";
    } else if (outcome.inserted()) {
        std::cout << io::rpp_text(*outcome.result);
    } else {
        std::cout << InsertionOutcome::failure_name(outcome.failure);
        if (outcome.offending) std::cout << " (" << to_string(*outcome.offending) << ")";
        std::cout << "\n";
    }
    return outcome.inserted() ? 0 : 1;
}

int run_factorize(const std::string& rpp_src, bool steps, bool as_json) {
    const ReversePlanePartition rpp = load_rpp(rpp_src);

    json json_steps = json::array();
    if (steps || as_json) {
        ReversePlanePartition current = rpp;
        while (!current.is_zero()) {
            const std::vector<Cell> cand = candidates(current);
            const ExtractionStep step = extract_min(current);
            if (as_json) {
                json s;
                s["candidates"] = path_json(cand);
                s["extracted"] = cell_json(step.candidate);
                s["path"] = path_json(step.path.cells());
                s["hook"] = cell_json(step.hook.corner());
                s["reduced"] = rpp_to_json(step.reduced);
                json_steps.push_back(s);
            } else if (steps) {
                std::cout << "candidates: " << cells_text(cand) << "\n";
                std::cout << "extract " << to_string(step.candidate) << " along "
                          << cells_text(step.path.cells()) << " -> hook "
                          << to_string(step.hook.corner()) << "\n";
                std::cout << io::render_grid(step.reduced) << "\n";
            }
            current = step.reduced;
        }
    }

    const std::vector<RimHook> factors = lex_factorize(rpp);
    if (as_json) {
        json out;
        out["shape"] = rpp.shape().parts();
        out["factors"] = path_json(corners_of(factors));
        if (steps) out["steps"] = json_steps;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << io::cell_list_text(corners_of(factors)) << "\n";
    }
    return 0;
}

int run_build(const std::string& shape_text, const std::string& hooks_text, bool as_json) {
    const Partition shape = Partition::parse(shape_text);
    std::vector<RimHook> hooks;
    for (Cell corner : io::parse_cell_list(hooks_text)) {
        if (!shape.contains(corner)) {
            throw std::invalid_argument("hook cell " + to_string(corner) +
                                        " is outside shape " + shape.str());
        }
        hooks.emplace_back(shape, corner);
    }
    const ReversePlanePartition rpp = build_rpp(shape, std::move(hooks));
    if (as_json) {
        std::cout << io::rpp_json(rpp) << "\n";
    } else {
        std::cout << io::rpp_text(rpp);
    }
    return 0;
}

int run_verify(const std::string& shape_text, int max_size, bool with_trace, bool as_json) {
    const Partition shape = Partition::parse(shape_text);
    const std::vector<CheckReport> reports =
        verify_shape(shape, max_size, with_trace, thread_budget());
    bool all_ok = true;
    if (as_json) {
        json out = json::array();
        for (const CheckReport& r : reports) {
            out.push_back(json::parse(io::report_json(r)));
            all_ok = all_ok && r.ok;
        }
        std::cout << out.dump() << "\n";
    } else {
        for (const CheckReport& r : reports) {
            std::cout << r.text() << "\n";
            all_ok = all_ok && r.ok;
        }
    }
    return all_ok ? 0 : 1;
}

int run_enumerate(const std::string& shape_text, int size, bool as_json) {
    const Partition shape = Partition::parse(shape_text);
    if (size < 0) throw std::invalid_argument("--size must be nonnegative");
    bool first = true;
    enumerate_rpp(shape, size, [&](const ReversePlanePartition& rpp) {
        if (as_json) {
            std::cout << io::rpp_json(rpp) << "\n";
        } else {
            if (!first) std::cout << "\n";
            std::cout << io::rpp_text(rpp);
        }
        first = false;
    });
    return 0;
}

int run_render(const std::string& rpp_src, const std::string& path_text, bool as_json) {
    const ReversePlanePartition rpp = load_rpp(rpp_src);
    const std::vector<Cell> marked = io::parse_cell_list(path_text);
    for (Cell u : marked) {
        if (!rpp.shape().contains(u)) {
            throw std::invalid_argument("path cell " + to_string(u) + " is outside shape " +
                                        rpp.shape().str());
        }
    }
    if (as_json) {
        json out;
        out["rpp"] = rpp_to_json(rpp);
        out["path"] = path_json(marked);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << io::render_grid(rpp, marked);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rim-hook insertion and factorization for reverse plane partitions"};
    app.require_subcommand(1);

    std::string shape_text;
    std::string rpp_src;
    std::string hook_text;
    std::string hooks_text;
    std::string path_text;
    int size = 0;
    int max_size = 8;
    bool with_trace = false;
    bool steps = false;
    bool as_json = false;

    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", as_json, "machine-readable output"); };

    CLI::App* hooks = app.add_subcommand("hooks", "list the rim-hooks of a shape");
    hooks->add_option("shape", shape_text, "partition, e.g. 4,3,1")->required();
    add_json(hooks);

    CLI::App* ins = app.add_subcommand("insert", "insert a rim-hook into a filling");
    ins->add_option("--rpp", rpp_src, "filling: file, '-' for stdin, or inline")->required();
    ins->add_option("--hook", hook_text, "corner cell i,j of the hook")->required();
    add_json(ins);

    CLI::App* fact = app.add_subcommand("factorize", "factor a filling into rim-hooks");
    fact->add_option("--rpp", rpp_src, "filling: file, '-' for stdin, or inline")->required();
    fact->add_flag("--steps", steps, "also print candidates, paths and intermediate fillings");
    add_json(fact);

    CLI::App* build = app.add_subcommand("build", "assemble a filling from rim-hooks");
    build->add_option("--shape", shape_text, "partition, e.g. 4,3,1")->required();
    build->add_option("--hooks", hooks_text, "corner cells, e.g. '1,4 1,3 2,2*2'")->required();
    add_json(build);

    CLI::App* verify = app.add_subcommand("verify", "check the generating identities on a shape");
    verify->add_option("--shape", shape_text, "partition, e.g. 4,3,1")->required();
    verify->add_option("--max-size", max_size, "size bound (default 8)");
    verify->add_flag("--trace", with_trace, "also check the trace identity");
    add_json(verify);

    CLI::App* enumerate = app.add_subcommand("enumerate", "stream the fillings of a given size");
    enumerate->add_option("--shape", shape_text, "partition, e.g. 4,3,1")->required();
    enumerate->add_option("--size", size, "entry sum")->required();
    add_json(enumerate);

    CLI::App* render = app.add_subcommand("render", "pretty-print a filling");
    render->add_option("--rpp", rpp_src, "filling: file, '-' for stdin, or inline")->required();
    render->add_option("--path", path_text, "cells to highlight, e.g. '3,1 2,1 2,2'");
    add_json(render);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (hooks->parsed()) return run_hooks(shape_text, as_json);
        if (ins->parsed()) return run_insert(rpp_src, hook_text, as_json);
        if (fact->parsed()) return run_factorize(rpp_src, steps, as_json);
        if (build->parsed()) return run_build(shape_text, hooks_text, as_json);
        if (verify->parsed()) return run_verify(shape_text, max_size, with_trace, as_json);
        if (enumerate->parsed()) return run_enumerate(shape_text, size, as_json);
        if (render->parsed()) return run_render(rpp_src, path_text, as_json);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const RppError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
