// Command-line driver: gen, run, verify, metrics.
//
// Exit codes: 0 success, 1 parse error, 2 semantic error, 3 budget exhausted, 4 verification failed.

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "sasm/constructions.hpp"
#include "sasm/dsl.hpp"
#include "sasm/render.hpp"
#include "sasm/verify.hpp"

using namespace sasm;

namespace {

enum Exit { kOk = 0, kParse = 1, kSemantic = 2, kBudget = 3, kVerify = 4 };

struct Failure {
    int code;
    std::string message;
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw Failure{kParse, "cannot read " + path};
    return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Failure{kSemantic, "cannot write " + path};
    out << text;
}

StagedSystem load_system(const std::string& path) {
    auto parsed = parse_system(read_input(path));
    if (parsed.ok()) return *parsed.system;
    std::string message;
    int code = kSemantic;
    for (const auto& d : parsed.diagnostics) {
        if (d.kind == ParseErrorKind::Syntax) code = kParse;
        message += path + ":" + d.format() + "\n";
    }
    if (!message.empty()) message.pop_back();
    throw Failure{code, message};
}

Shape load_shape(const std::string& path) {
    auto parsed = parse_shape(read_input(path));
    if (parsed.shape) return *parsed.shape;
    std::string message;
    for (const auto& d : parsed.diagnostics) message += path + ":" + d.format() + "\n";
    if (!message.empty()) message.pop_back();
    throw Failure{kParse, message};
}

ClosureBudget budget_of(std::size_t size, std::size_t count) {
    ClosureBudget b;
    if (size > 0) b.max_supertile_size = size;
    if (count > 0) b.max_distinct_supertiles = count;
    return b;
}

ExecutionResult run_system(const StagedSystem& sys, const ClosureBudget& budget) {
    auto ex = execute(sys, budget);
    if (ex.status == ExecutionStatus::Invalid) {
        std::string message;
        for (const auto& d : ex.diagnostics) message += std::string(to_string(d.kind)) + ": " + d.message + "\n";
        if (!message.empty()) message.pop_back();
        throw Failure{kSemantic, message};
    }
    if (ex.status == ExecutionStatus::Aborted) {
        std::string where = ex.diverged ? " in bin " + ex.diverged->name + " of stage " + std::to_string(ex.diverged->stage) : "";
        const char* dim = ex.diverged_dimension == BudgetDimension::SupertileSize ? "supertile size" : "supertile count";
        throw Failure{kBudget, std::string("budget exhausted (") + dim + ")" + where};
    }
    return ex;
}

std::string trace_text(const ExecutionResult& ex) {
    std::ostringstream out;
    for (const auto& stage : ex.stages)
        for (const auto& bin : stage)
            out << "stage " << bin.ref.stage << " bin " << bin.ref.name << " produced=" << bin.result.produced.size()
                << " terminal=" << bin.result.terminal.size() << " complete=" << (bin.result.complete ? "yes" : "no")
                << "\n";
    for (const auto& t : ex.terminals())
        for (const auto& e : witness_derivation(ex, t))
            out << "attach " << e.left.size() << "+" << e.right.size() << " at (" << e.offset.x << "," << e.offset.y
                << ") -> " << e.result.size() << "\n";
    return out.str();
}

TileSystem tile_system_of(const StagedSystem& sys) {
    TileSystem t;
    t.glues = sys.glues;
    t.tiles = sys.tiles;
    t.temperature = sys.temperature;
    return t;
}

struct GenArgs {
    std::string out_path, shape_path, system_path, bits;
    int n = 0, k = 0, bins = 0;
};

void add_gen(CLI::App& app, GenArgs& a, std::function<int()>& action) {
    auto* gen = app.add_subcommand("gen", "Write the DSL of a construction");
    gen->require_subcommand(1);
    gen->add_option("-o,--output", a.out_path, "Output file (default stdout)");

    GenArgs* p = &a;
    auto emit = [p, &action](std::function<StagedSystem()> make) {
        action = [p, make] {
            write_output(p->out_path, serialize_system(make()));
            return kOk;
        };
    };

    auto* line = gen->add_subcommand("line", "1 x n line");
    line->add_option("--n", a.n)->required();
    line->callback([=] { emit([=] { return gen_line(p->n); }); });

    auto* pow2 = gen->add_subcommand("line-pow2", "1 x 2^k line");
    pow2->add_option("--k", a.k)->required();
    pow2->callback([=] { emit([=] { return gen_line_pow2(p->k); }); });

    auto* square = gen->add_subcommand("square-jigsaw", "n x n square");
    square->add_option("--n", a.n)->required();
    square->callback([=] { emit([=] { return gen_square_jigsaw(p->n); }); });

    auto* spanning = gen->add_subcommand("spanning-tree", "shape with two glues");
    spanning->add_option("--shape", a.shape_path)->required();
    spanning->callback([=] { emit([=] { return gen_spanning_tree(load_shape(p->shape_path)); }); });

    auto* scale2 = gen->add_subcommand("scale2", "shape at scale factor 2");
    scale2->add_option("--shape", a.shape_path)->required();
    scale2->callback([=] { emit([=] { return gen_scale2(load_shape(p->shape_path)); }); });

    auto* monotone = gen->add_subcommand("monotone", "monotone shape");
    monotone->add_option("--shape", a.shape_path)->required();
    monotone->callback([=] { emit([=] { return gen_monotone(load_shape(p->shape_path)); }); });

    auto* simulation = gen->add_subcommand("simulation", "macro-block simulation of a one-stage system");
    simulation->add_option("--system", a.system_path, "DSL file whose glues and tiles form the system")->required();
    simulation->callback([=] { emit([=] { return gen_simulation(tile_system_of(load_system(p->system_path))); }); });

    auto* crazy = gen->add_subcommand("crazy-string", "bit string within a bin budget");
    crazy->add_option("--bits", a.bits)->required();
    crazy->add_option("--bins", a.bins)->required();
    crazy->callback([=] { emit([=] { return gen_crazy_string(p->bits, p->bins); }); });

    auto* counter = gen->add_subcommand("counter", "binary counter over 2^k-bit rows");
    counter->add_option("--k", a.k)->required();
    counter->callback([=] { emit([=] { return gen_counter(p->k); }); });

    for (auto* sub : gen->get_subcommands({})) sub->fallthrough();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Staged two-handed tile assembly"};
    app.require_subcommand(1);
    std::function<int()> action;
    GenArgs gen_args;
    add_gen(app, gen_args, action);

    std::string file;
    std::size_t budget_size = 0, budget_count = 0;
    std::string trace_path;
    auto* run = app.add_subcommand("run", "Execute a system and print its terminal shapes");
    run->add_option("file", file, "DSL file, or - for stdin")->required();
    run->add_option("--budget-size", budget_size, "Largest supertile allowed");
    run->add_option("--budget-count", budget_count, "Most distinct supertiles per bin");
    run->add_option("--trace", trace_path, "Write per-bin counts and attachment events");
    run->callback([&] {
        action = [&] {
            const auto ex = run_system(load_system(file), budget_of(budget_size, budget_count));
            if (!trace_path.empty()) write_output(trace_path, trace_text(ex));
            const auto terminals = ex.terminals();
            for (const auto& t : terminals) std::cout << render_ascii(Shape::of(t)) << "\n";
            std::cout << "terminals=" << terminals.size() << " unique=" << (ex.unique() ? "yes" : "no")
                      << " complete=" << (ex.output.complete ? "yes" : "no") << "\n";
            return kOk;
        };
    });

    std::string target_path, connectivity;
    int scale = 1;
    bool planar = false;
    auto* verify = app.add_subcommand("verify", "Check that a system uniquely assembles a target shape");
    verify->add_option("file", file, "DSL file, or - for stdin")->required();
    verify->add_option("--target", target_path, "Shape file")->required();
    verify->add_option("--scale", scale, "Scale factor of the assembly relative to the target")->check(CLI::PositiveNumber);
    verify->add_option("--connectivity", connectivity, "full: every adjacent pair bonds; partial: no requirement")
        ->check(CLI::IsMember({"full", "partial"}));
    verify->add_option("--budget-size", budget_size);
    verify->add_option("--budget-count", budget_count);
    verify->add_flag("--planar", planar, "Require every attachment of a derivation to be planar");
    verify->callback([&] {
        action = [&] {
            const Shape target = load_shape(target_path);
            const auto sys = load_system(file);
            ClosureBudget budget = budget_of(budget_size, budget_count);
            if (budget_size == 0) {
                const std::size_t cells = target.size() * static_cast<std::size_t>(scale) * scale;
                budget.max_supertile_size = std::max(budget.max_supertile_size, 4 * cells);
            }
            const auto ex = run_system(sys, budget);
            std::vector<std::string> failed;
            const auto terminals = ex.terminals();
            if (!ex.unique() || terminals.size() != 1) {
                failed.push_back("not uniquely produced (" + std::to_string(terminals.size()) + " terminals)");
            } else {
                const auto& t = terminals.front();
                if (!shape_equals(target, Shape::of(t), scale)) failed.push_back("terminal shape differs from target");
                if (connectivity == "full" && !is_fully_connected(t, ex.tiles)) failed.push_back("not fully connected");
                if (planar && !is_planar_system(witness_derivation(ex, t))) failed.push_back("nonplanar attachment");
            }
            for (const auto& f : failed) std::cerr << "verify: " << f << "\n";
            if (!failed.empty()) return kVerify;
            std::cout << "ok\n";
            return kOk;
        };
    });

    auto* metrics_cmd = app.add_subcommand("metrics", "Print glue, tile, stage and bin counts");
    metrics_cmd->add_option("file", file, "DSL file, or - for stdin")->required();
    metrics_cmd->callback([&] {
        action = [&] {
            const auto m = metrics(load_system(file));
            std::cout << "glues=" << m.glue_count << " tiles=" << m.tile_count << " stages=" << m.stage_count
                      << " bins=" << m.bin_count << " temperature=" << m.temperature << "\n";
            return kOk;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }
    try {
        return action ? action() : kOk;
    } catch (const Failure& f) {
        std::cerr << f.message << "\n";
        return f.code;
    } catch (const ConstructionError& e) {
        std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
        return kSemantic;
    } catch (const AssemblyError& e) {
        std::cerr << e.what() << "\n";
        return kSemantic;
    }
}
