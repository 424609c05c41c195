#pragma once

#include "arckit/runtime/seeds.hpp"
#include "arckit/synth/descriptions.hpp"
#include "arckit/synth/model_client.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace arckit::synth {

inline double cosine_similarity(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("cosine_similarity: dimension mismatch");
    double dot = 0, na = 0, nb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0 || nb == 0) return 0;
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

/// Embeddings of seed descriptions, index-aligned with `ids`.
struct EmbeddingIndex {
    std::vector<std::string> ids;
    std::vector<std::vector<double>> vectors;

    std::size_t size() const { return ids.size(); }

    void add(std::string id, std::vector<double> v) {
        if (!vectors.empty() && v.size() != vectors.front().size())
            throw std::invalid_argument("embedding dimension differs from the index");
        ids.push_back(std::move(id));
        vectors.push_back(std::move(v));
    }

    /// Positions of the k most similar entries: cosine descending, ties by id.
    std::vector<std::size_t> nearest(const std::vector<double>& query, std::size_t k) const {
        if (ids.empty()) throw std::invalid_argument("retrieval from an empty index");
        std::vector<double> sim(ids.size());
        for (std::size_t i = 0; i < ids.size(); ++i) sim[i] = cosine_similarity(query, vectors[i]);
        std::vector<std::size_t> order(ids.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (sim[a] != sim[b]) return sim[a] > sim[b];
            return ids[a] < ids[b];
        });
        order.resize(std::min(k, order.size()));
        return order;
    }
};

/// Text embedded for retrieval: the formatted comment header.
inline std::string embedding_text(const ProblemDescription& d) { return format_header(d); }

inline EmbeddingIndex build_seed_index(const std::vector<runtime::SeedProgram>& seeds, ModelClient& client) {
    std::vector<std::string> texts;
    for (const auto& s : seeds) texts.push_back(embedding_text(seed_description(s)));
    auto vectors = client.embed(texts);
    EmbeddingIndex index;
    for (std::size_t i = 0; i < seeds.size(); ++i) index.add(seeds[i].id, std::move(vectors[i]));
    return index;
}

/// The k seeds whose descriptions are closest to `desc`.
inline std::vector<const runtime::SeedProgram*> retrieve_similar_seeds(const ProblemDescription& desc, std::size_t k,
                                                                      const EmbeddingIndex& index,
                                                                      const std::vector<runtime::SeedProgram>& seeds,
                                                                      ModelClient& client) {
    if (index.size() == 0) throw std::invalid_argument("retrieval from an empty index");
    const auto query = client.embed({embedding_text(desc)}).at(0);
    std::vector<const runtime::SeedProgram*> out;
    for (std::size_t i : index.nearest(query, k)) {
        auto it = std::find_if(seeds.begin(), seeds.end(), [&](const auto& s) { return s.id == index.ids[i]; });
        if (it == seeds.end()) throw std::invalid_argument("index entry without a seed: " + index.ids[i]);
        out.push_back(&*it);
    }
    return out;
}

} // namespace arckit::synth
