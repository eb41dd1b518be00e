#include "corpus.hpp"

#include "dags.hpp"
#include "generators.hpp"
#include "mutations.hpp"
#include "scenarios.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <stdexcept>

#ifndef EVENTF_CORPUS_DIR
#define EVENTF_CORPUS_DIR "corpus"
#endif

namespace eventf::testing {

namespace {

std::string& dir_storage() {
    static std::string dir = EVENTF_CORPUS_DIR;
    return dir;
}

Graph random_mix(std::uint64_t seed, int patterns) {
    Rng rng(seed);
    World w = random_world(rng, 16, 10);
    for (int i = 0; i < patterns; ++i) build_random(rng, w, static_cast<PatternKind>(i % 6));
    return w.store.graph();
}

} // namespace

const std::string& corpus_dir() { return dir_storage(); }
void set_corpus_dir(std::string dir) { dir_storage() = std::move(dir); }

std::vector<std::string> corpus_files() {
    std::vector<std::string> out;
    for (const auto& entry : std::filesystem::directory_iterator(corpus_dir())) {
        std::string name = entry.path().filename().string();
        if (entry.is_regular_file() && name.size() > 6 && name.ends_with(".f.ttl")) out.push_back(name);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string read_corpus_file(const std::string& name) {
    std::ifstream in(std::filesystem::path(corpus_dir()) / name, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read corpus file " + name);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

std::vector<std::pair<std::string, Graph>> corpus_sources() {
    std::vector<std::pair<std::string, Graph>> out;
    out.emplace_back("fig-g.f.ttl", build_fig_g().store.graph());
    out.emplace_back("emergency.f.ttl", build_emergency().graph());

    auto single = [&](const char* name, auto build) {
        Store s = scenario_store();
        build(s);
        out.emplace_back(name, s.graph());
    };
    single("req1-participation.f.ttl", [](Store& s) { req1_participation(s); });
    single("req2-time.f.ttl", [](Store& s) { req2_time(s); });
    single("req3-space.f.ttl", [](Store& s) { req3_space(s); });
    single("req4-structure.f.ttl", [](Store& s) { req4_structure(s); });
    single("req5-documentation.f.ttl", [](Store& s) { req5_documentation(s); });
    single("req6-interpretations.f.ttl", [](Store& s) { req6_interpretations(s); });

    out.emplace_back("mutation-base.f.ttl", mutation_base().graph());
    out.emplace_back("random-mix-1.f.ttl", random_mix(101, 12));
    out.emplace_back("random-mix-2.f.ttl", random_mix(202, 18));
    out.emplace_back("random-mix-3.f.ttl", random_mix(303, 24));

    // first seeds giving a DAG with at least 12 events and 12 edges
    auto rich = [](auto make, std::uint64_t seed) {
        for (;; ++seed) {
            Rng rng(seed);
            DagCase c = make(rng, 20);
            std::size_t edges = 0;
            for (const auto& row : c.adj) edges += static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
            if (c.size >= 12 && edges >= 12) return c.store.graph();
        }
    };
    out.emplace_back("composition-dag.f.ttl", rich(random_composition_dag, 404));
    out.emplace_back("causal-dag.f.ttl", rich(random_causal_dag, 505));
    return out;
}

} // namespace eventf::testing
