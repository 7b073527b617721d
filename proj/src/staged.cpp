#include "sasm/staged.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace sasm {

const BinDecl* StagedSystem::find_bin(const BinRef& ref) const {
    if (ref.stage < 1 || ref.stage > stage_count()) return nullptr;
    for (const auto& b : stages[ref.stage - 1])
        if (b.name == ref.name) return &b;
    return nullptr;
}

namespace {

template <typename T>
std::vector<T> sorted(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

bool structurally_equal(const StagedSystem& a, const StagedSystem& b) {
    if (a.name != b.name || a.temperature != b.temperature || !(a.glues == b.glues)) return false;
    auto tiles_of = [](const StagedSystem& s) {
        std::vector<std::pair<std::string, std::array<std::string, 4>>> v;
        for (const auto& t : s.tiles) v.emplace_back(t.id, t.glues);
        return sorted(std::move(v));
    };
    if (tiles_of(a) != tiles_of(b)) return false;
    if (a.stages.size() != b.stages.size()) return false;
    for (std::size_t i = 0; i < a.stages.size(); ++i) {
        auto norm = [](const std::vector<BinDecl>& bins) {
            std::vector<std::tuple<std::string, std::vector<BinRef>, std::vector<std::string>>> v;
            for (const auto& bin : bins) v.emplace_back(bin.name, sorted(bin.from), sorted(bin.add));
            return sorted(std::move(v));
        };
        if (norm(a.stages[i]) != norm(b.stages[i])) return false;
    }
    return sorted(a.output) == sorted(b.output);
}

const char* to_string(DiagnosticKind kind) {
    switch (kind) {
    case DiagnosticKind::InvalidEdge: return "InvalidEdge";
    case DiagnosticKind::UnknownBin: return "UnknownBin";
    case DiagnosticKind::UnknownGlue: return "UnknownGlue";
    case DiagnosticKind::UnknownTile: return "UnknownTile";
    case DiagnosticKind::DuplicateName: return "DuplicateName";
    case DiagnosticKind::InvalidStrength: return "InvalidStrength";
    case DiagnosticKind::InvalidTemperature: return "InvalidTemperature";
    case DiagnosticKind::MissingOutput: return "MissingOutput";
    }
    return "Unknown";
}

std::vector<Diagnostic> validate(const StagedSystem& system) {
    std::vector<Diagnostic> out;
    auto report = [&](DiagnosticKind k, int stage, std::string bin, std::string msg) {
        out.push_back(Diagnostic{k, stage, std::move(bin), std::move(msg)});
    };

    if (system.temperature < 1)
        report(DiagnosticKind::InvalidTemperature, 0, "", "temperature must be a positive integer");
    for (const auto& label : system.glues.labels()) {
        const int s = system.glues.strength(label);
        if (s > system.temperature)
            report(DiagnosticKind::InvalidStrength, 0, "",
                   "glue '" + label + "' has strength " + std::to_string(s) + " above temperature");
    }

    std::set<std::string> tile_ids;
    for (const auto& t : system.tiles) {
        if (!tile_ids.insert(t.id).second)
            report(DiagnosticKind::DuplicateName, 0, "", "tile '" + t.id + "' declared twice");
        for (Side s : kSides)
            if (!system.glues.contains(t.glue(s)))
                report(DiagnosticKind::UnknownGlue, 0, "", "tile '" + t.id + "' uses undeclared glue '" + t.glue(s) + "'");
    }

    for (int i = 1; i <= system.stage_count(); ++i) {
        std::set<std::string> names;
        for (const auto& bin : system.stages[i - 1]) {
            if (!names.insert(bin.name).second)
                report(DiagnosticKind::DuplicateName, i, bin.name, "bin declared twice in stage");
            for (const auto& ref : bin.from) {
                if (ref.stage != i - 1)
                    report(DiagnosticKind::InvalidEdge, i, bin.name,
                           "edge from stage " + std::to_string(ref.stage) + " into stage " + std::to_string(i));
                else if (!system.find_bin(ref))
                    report(DiagnosticKind::UnknownBin, i, bin.name, "unknown predecessor bin '" + ref.name + "'");
            }
            for (const auto& id : bin.add)
                if (!tile_ids.contains(id))
                    report(DiagnosticKind::UnknownTile, i, bin.name, "unknown tile '" + id + "'");
        }
    }

    if (system.output.empty()) report(DiagnosticKind::MissingOutput, 0, "", "output node has no incoming edge");
    for (const auto& ref : system.output) {
        if (ref.stage != system.stage_count())
            report(DiagnosticKind::InvalidEdge, ref.stage, ref.name, "output edge must come from the last stage");
        else if (!system.find_bin(ref))
            report(DiagnosticKind::UnknownBin, ref.stage, ref.name, "unknown output bin '" + ref.name + "'");
    }
    return out;
}

Metrics metrics(const StagedSystem& system) {
    Metrics m;
    std::set<std::string> used_tiles;
    for (const auto& stage : system.stages) {
        int active = 0;
        for (const auto& bin : stage) {
            if (!bin.from.empty() || !bin.add.empty()) ++active;
            used_tiles.insert(bin.add.begin(), bin.add.end());
        }
        m.bin_count = std::max(m.bin_count, active);
    }
    std::set<std::string> glues;
    for (const auto& t : system.tiles) {
        if (!used_tiles.contains(t.id)) continue;
        for (Side s : kSides)
            if (t.glue(s) != kNullGlue) glues.insert(t.glue(s));
    }
    m.tile_count = static_cast<int>(used_tiles.size());
    m.glue_count = static_cast<int>(glues.size());
    m.stage_count = system.stage_count();
    m.temperature = system.stages.empty() ? 0 : system.temperature;
    return m;
}

const BinRecord* ExecutionResult::find(const BinRef& ref) const {
    if (ref.stage < 1 || ref.stage > static_cast<int>(stages.size())) return nullptr;
    for (const auto& r : stages[ref.stage - 1])
        if (r.ref == ref) return &r;
    return nullptr;
}

ExecutionResult execute(const StagedSystem& system, const ClosureBudget& budget) {
    ExecutionResult ex;
    ex.diagnostics = validate(system);
    if (!ex.diagnostics.empty()) {
        ex.status = ExecutionStatus::Invalid;
        return ex;
    }
    ex.tiles = TileSet(system.glues, system.tiles);

    // Bins with a path to the output node.
    std::set<BinRef> feeds_output(system.output.begin(), system.output.end());
    for (int i = system.stage_count(); i >= 1; --i)
        for (const auto& bin : system.stages[i - 1])
            if (feeds_output.contains(BinRef{i, bin.name}))
                feeds_output.insert(bin.from.begin(), bin.from.end());

    auto terminals_of = [&](const BinRef& ref, std::vector<Supertile>& seeds) {
        const BinRecord* rec = ex.find(ref);
        if (!rec || !rec->executed) return;
        for (std::size_t t : rec->result.terminal) seeds.push_back(rec->result.produced[t]);
    };
    auto dedupe = [](std::vector<Supertile>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };

    for (int i = 1; i <= system.stage_count(); ++i) {
        auto& records = ex.stages.emplace_back();
        for (const auto& bin : system.stages[i - 1]) {
            BinRecord rec;
            rec.ref = BinRef{i, bin.name};
            rec.from = bin.from;
            std::vector<Supertile> seeds;
            for (const auto& ref : bin.from) terminals_of(ref, seeds);
            for (const auto& id : bin.add) seeds.push_back(Supertile::single(*ex.tiles.find(id)));
            dedupe(seeds);
            if (!seeds.empty()) {
                rec.executed = true;
                rec.result = produce_closure(seeds, system.temperature, ex.tiles, budget);
            }
            records.push_back(std::move(rec));
        }
        for (const auto& rec : records) {
            if (rec.executed && !rec.result.complete && feeds_output.contains(rec.ref)) {
                ex.status = ExecutionStatus::Aborted;
                ex.diverged = rec.ref;
                ex.diverged_dimension = rec.result.exceeded;
                return ex;
            }
        }
    }

    ex.output_from = system.output;
    std::vector<Supertile> seeds;
    for (const auto& ref : system.output) terminals_of(ref, seeds);
    dedupe(seeds);
    ex.output = produce_closure(seeds, system.temperature, ex.tiles, budget);
    if (!ex.output.complete) {
        ex.status = ExecutionStatus::Aborted;
        ex.diverged_dimension = ex.output.exceeded;
    }
    return ex;
}

std::vector<AttachmentEvent> witness_derivation(const ExecutionResult& execution, const Supertile& terminal) {
    std::vector<AttachmentEvent> events;
    std::function<void(const BinResult&, const std::vector<BinRef>&, std::size_t)> walk;
    walk = [&](const BinResult& bin, const std::vector<BinRef>& preds, std::size_t index) {
        if (const auto& w = bin.witness[index]) {
            walk(bin, preds, w->left);
            walk(bin, preds, w->right);
            events.push_back(AttachmentEvent{bin.produced[w->left], bin.produced[w->right], w->offset,
                                             bin.produced[index]});
            return;
        }
        // A seed came from a predecessor's terminal set or is a tile added to this bin.
        for (const auto& ref : preds) {
            const BinRecord* rec = execution.find(ref);
            if (!rec || !rec->executed) continue;
            if (auto j = rec->result.index_of(bin.produced[index])) {
                walk(rec->result, rec->from, *j);
                return;
            }
        }
    };

    if (auto idx = execution.output.index_of(terminal)) walk(execution.output, execution.output_from, *idx);
    return events;
}

}  // namespace sasm
