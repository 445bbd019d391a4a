#include "kspect/reconstruct.hpp"

#include <algorithm>

namespace kspect {

uint64_t DeBruijnMultigraph::total_multiplicity() const {
    uint64_t total = 0;
    for (const Edge& e : edges) total += e.multiplicity;
    return total;
}

DeBruijnMultigraph build_graph(const KSpectrum& spec) {
    if (spec.empty()) throw std::invalid_argument("cannot build a graph from an empty spectrum");
    DeBruijnMultigraph graph;
    graph.k = spec.k();
    const uint32_t overlap = graph.k - 1;

    for (const auto& [word, count] : spec) {
        graph.nodes.push_back(word.prefix(overlap));
        graph.nodes.push_back(word.suffix(overlap));
    }
    std::sort(graph.nodes.begin(), graph.nodes.end());
    graph.nodes.erase(std::unique(graph.nodes.begin(), graph.nodes.end()), graph.nodes.end());

    auto node_index = [&](const Word& w) {
        return static_cast<uint32_t>(
            std::lower_bound(graph.nodes.begin(), graph.nodes.end(), w) - graph.nodes.begin());
    };

    graph.out_edges.resize(graph.nodes.size());
    graph.out_minus_in.assign(graph.nodes.size(), 0);
    for (const auto& [word, count] : spec) {
        DeBruijnMultigraph::Edge edge;
        edge.word = word;
        edge.from = node_index(word.prefix(overlap));
        edge.to = node_index(word.suffix(overlap));
        edge.multiplicity = count;
        graph.out_minus_in[edge.from] += static_cast<int64_t>(count);
        graph.out_minus_in[edge.to] -= static_cast<int64_t>(count);
        graph.out_edges[edge.from].push_back(static_cast<uint32_t>(graph.edges.size()));
        graph.edges.push_back(std::move(edge));
    }
    return graph;
}

namespace {

// Depth-first walk over edge instances, branching over distinct edge words in
// lexicographic order: two walks that diverge pick differently-ending words
// from the same node, so every completed walk spells a distinct string and
// the emission order is lexicographic.
struct Enumerator {
    const DeBruijnMultigraph& graph;
    uint64_t limit;
    uint64_t total;
    std::vector<uint64_t> edge_left;   // remaining instances per edge
    std::vector<uint64_t> node_out;    // remaining out instances per node
    std::vector<Word> results;
    Word current;
    uint64_t used = 0;

    Enumerator(const DeBruijnMultigraph& g, uint64_t lim)
        : graph(g), limit(lim), total(g.total_multiplicity()) {
        edge_left.reserve(graph.edges.size());
        for (const auto& e : graph.edges) edge_left.push_back(e.multiplicity);
        node_out.assign(graph.nodes.size(), 0);
        for (const auto& e : graph.edges) node_out[e.from] += e.multiplicity;
    }

    // Returns false once the limit is reached.
    bool walk(uint32_t node) {
        if (used == total) {
            results.push_back(current);
            return results.size() < limit;
        }
        for (uint32_t ei : graph.out_edges[node]) {
            if (edge_left[ei] == 0) continue;
            const auto& edge = graph.edges[ei];
            --edge_left[ei];
            --node_out[edge.from];
            ++used;
            // Dead-end check: a stop at a node with no way out only works
            // when every instance has been used.
            const bool viable = used == total || node_out[edge.to] > 0;
            bool keep_going = true;
            if (viable) {
                current.push_back(edge.word.back());
                keep_going = walk(edge.to);
                current.pop_back();
            }
            ++edge_left[ei];
            ++node_out[edge.from];
            --used;
            if (!keep_going) return false;
        }
        return true;
    }

    void run_from(uint32_t start) {
        current = graph.nodes[start];
        walk(start);
    }
};

} // namespace

std::vector<Word> enumerate_genomes(const KSpectrum& spec, uint64_t limit, uint64_t guard) {
    if (spec.total() > guard) throw EnumerationGuardExceeded(spec.total(), guard);
    if (limit == 0) return {};
    const DeBruijnMultigraph graph = build_graph(spec);

    // Edge-exhausting walks exist only when at most one node has positive
    // out-surplus and it is exactly +1 (start there), or all nodes are
    // balanced (any node can start).
    std::vector<uint32_t> starts;
    uint32_t plus = 0, minus = 0;
    bool impossible = false;
    for (size_t i = 0; i < graph.nodes.size(); ++i) {
        const int64_t d = graph.out_minus_in[i];
        if (d == 0) continue;
        if (d == 1) {
            ++plus;
            starts.assign(1, static_cast<uint32_t>(i));
        } else if (d == -1) {
            ++minus;
        } else {
            impossible = true;
        }
    }
    if (impossible || plus > 1 || minus > 1 || plus != minus) return {};
    if (plus == 0) {
        starts.resize(graph.nodes.size());
        for (uint32_t i = 0; i < starts.size(); ++i) starts[i] = i;
    }

    Enumerator enumerator(graph, limit);
    for (uint32_t start : starts) {
        enumerator.run_from(start);
        if (enumerator.results.size() >= limit) break;
    }
    return std::move(enumerator.results);
}

bool is_k_univocal(const Genome& g, uint32_t k, uint64_t guard) {
    if (g.masked_count() > 0) {
        throw std::invalid_argument("genome '" + g.name() +
                                    "' has masked positions; univocality is defined for a "
                                    "single contiguous string");
    }
    const KSpectrum spec = compute_spectrum(g, k);
    return enumerate_genomes(spec, 2, guard).size() == 1;
}

} // namespace kspect
